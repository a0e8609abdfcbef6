#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mukai/divisor.hpp"
#include "mukai/orbit.hpp"
#include "mukai/params.hpp"
#include "mukai/rational.hpp"

namespace mukai {

// Coordinates of a divisor class as a rational vector (h then m).
RatVec divisor_coords(const DivisorClass& d);

// Outcome of an exact cone-membership test. Exactly one certificate is
// populated, and it has been re-substituted before being returned:
//   member:  coefficients with sum(lambda_i G_i) = target, lambda >= 0
//   else:    separator s with s.G_i >= 0 for all i and s.target < 0
struct MembershipCertificate {
  bool member = false;
  RatVec coefficients;
  RatVec separator;
};

std::string certificate_to_json(const MembershipCertificate& cert);

MembershipCertificate lp_member(const std::vector<DivisorClass>& generators,
                                const RatVec& target, const Params& p);
MembershipCertificate lp_member(const std::vector<DivisorClass>& generators,
                                const DivisorClass& target, const Params& p);

// A finitely generated cone in Pic; extremal_only records whether redundant
// generators have been pruned.
struct GeneratedCone {
  Params params;
  std::vector<DivisorClass> generators;
  bool extremal_only = false;
};

// Deduplicates, then removes every generator expressible over the others.
// Span-preserving and idempotent.
GeneratedCone extremal_generators(const GeneratedCone& cone);

// The effective cone of X_{a,b,c}, generated by the (-1)-divisors. Owns the
// orbit enumeration and the (lazy) extremal pruning so repeated queries do
// not recompute them.
class EffectiveCone {
public:
  explicit EffectiveCone(const Params& p, std::size_t limit = kDefaultOrbitLimit,
                         unsigned threads = 1);
  // Uses an existing (-1)-divisor enumeration, e.g. one loaded from cache.
  EffectiveCone(const Params& p, OrbitSet minus_ones);

  const Params& params() const { return params_; }
  const std::vector<DivisorClass>& generators() const { return generators_; }
  const std::vector<DivisorClass>& extremal() ;
  // Generators discarded by the pruning pass (empty in every known case).
  const std::vector<DivisorClass>& pruned_away();

  MembershipCertificate member(const DivisorClass& d) const;

  // Interior point test: 2*rank feasibility problems pushing D along +-e_k.
  // Requires the generators to span the full lattice.
  bool is_big(const DivisorClass& d);

  // D lies in every deleted-generator subcone Cone(G \ {G_i}) over the
  // extremal generators. When D is fixed by the coordinate symmetries and
  // check_all is false, one representative i per symmetry class is tested.
  bool in_movable(const DivisorClass& d, bool check_all = false,
                  unsigned threads = 1);

  // Sum of all generators as an exact positive multiple of -K.
  Rat orbit_sum_multiple() const;

private:
  void ensure_extremal();

  Params params_;
  std::vector<DivisorClass> generators_;
  std::optional<std::vector<DivisorClass>> extremal_;
  std::vector<DivisorClass> pruned_away_;
};

// Convenience wrappers matching the one-shot call shape. Each builds the
// effective cone from scratch; use EffectiveCone directly in loops.
bool in_effective_cone(const DivisorClass& d, const Params& p);
bool is_big(const DivisorClass& d, const Params& p);
bool in_movable_cone(const DivisorClass& d, const Params& p);
Rat orbit_sum_multiple(const Params& p);

} // namespace mukai
