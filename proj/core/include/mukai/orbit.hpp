#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mukai/divisor.hpp"
#include "mukai/params.hpp"

namespace mukai {

inline constexpr std::size_t kDefaultOrbitLimit = 10'000'000;

// A Weyl orbit: the smallest set containing `seed` and closed under all
// simple reflections. Elements are kept sorted lexicographically, which is
// the order used for serialization and iteration everywhere.
struct OrbitSet {
  Params params;
  DivisorClass seed;
  std::vector<DivisorClass> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const DivisorClass& d) const;
};

// Breadth-first closure under the simple reflections. Refuses non-Mori-dream
// parameters (the orbit may be infinite) and throws limit_exceeded instead
// of returning a truncated set.
OrbitSet orbit(const DivisorClass& seed, const Params& p,
               std::size_t limit = kDefaultOrbitLimit, unsigned threads = 1);

// The (-1)-divisors: the orbit of the last exceptional class E_{b+c}.
// Every element has (D,D) = -1 and deg(D) = 1 (checked on return).
OrbitSet minus_one_divisors(const Params& p,
                            std::size_t limit = kDefaultOrbitLimit,
                            unsigned threads = 1);

struct ClassCount {
  DivisorClass representative; // canonical form
  std::size_t count = 0;
};

// Groups orbit elements by canonical form: multiplicities sorted descending,
// and also the factor degrees sorted descending when include_factor_symmetry
// is set. Representatives come back in lexicographic order.
std::vector<ClassCount> classes_up_to_point_symmetry(const OrbitSet& s,
                                                     bool include_factor_symmetry);

// Canonical form of a single class under the same symmetry.
DivisorClass symmetry_canonical_form(const DivisorClass& d, bool include_factor_symmetry);

// True iff d lies in the orbit of an exceptional class.
bool is_minus_one(const DivisorClass& d, const Params& p,
                  std::size_t limit = kDefaultOrbitLimit);

// Lattice-level comparison of (a,b,c) with (c,b,a): equal (-1)-divisor
// counts and equal self-pairing histograms.
struct DualityReport {
  Params params;
  Params swapped;
  std::size_t count = 0;
  std::size_t count_swapped = 0;
  std::map<int64_t, std::size_t> self_pairing_hist;
  std::map<int64_t, std::size_t> self_pairing_hist_swapped;
  bool ok = false;
};

DualityReport verify_sqm_duality(const Params& p,
                                 std::size_t limit = kDefaultOrbitLimit,
                                 unsigned threads = 1);

// Cache file: a header line "# orbit a=.. b=.. c=.. seed=<divisor> count=N"
// followed by one divisor per line in lexicographic order.
void write_orbit_file(std::ostream& os, const OrbitSet& s);
// Returns the orbit if the file is intact and matches (p, seed); otherwise
// returns nullopt and stores a reason.
std::optional<OrbitSet> read_orbit_file(std::istream& is, const Params& p,
                                        const DivisorClass& seed, std::string* why);

} // namespace mukai
