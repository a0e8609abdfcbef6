#include "mukai/orbit.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "mukai/lattice.hpp"
#include "mukai/parallel.hpp"
#include "mukai/roots.hpp"

namespace mukai {

bool OrbitSet::contains(const DivisorClass& d) const {
  return std::binary_search(elements.begin(), elements.end(), d);
}

OrbitSet orbit(const DivisorClass& seed, const Params& p, std::size_t limit,
               unsigned threads) {
  check_compatible(seed, p, "orbit");
  if (!is_mori_dream(p)) {
    throw not_mori_dream("orbit: " + to_string(p) +
                         " has an infinite Weyl group; refusing to enumerate");
  }
  const RootSystem rs = simple_roots(p);

  std::unordered_set<DivisorClass, DivisorHash> seen;
  seen.insert(seed);
  std::vector<DivisorClass> frontier = {seed};

  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    // Expand the whole frontier batch into per-slot buckets, then merge in
    // slot order; the closure is a set, so the final result is independent
    // of the schedule either way.
    std::vector<std::vector<DivisorClass>> buckets(frontier.size());
    parallel_for(frontier.size(), threads, [&](std::size_t i) {
      for (const DivisorClass& alpha : rs.simple_roots) {
        DivisorClass image = reflect(frontier[i], alpha, p);
        if (image != frontier[i]) buckets[i].push_back(std::move(image));
      }
    });
    std::vector<DivisorClass> next;
    for (auto& bucket : buckets) {
      for (auto& image : bucket) {
        if (seen.insert(image).second) {
          next.push_back(std::move(image));
          if (seen.size() > limit) {
            std::ostringstream os;
            os << "orbit of " << format_divisor(seed, p) << " on " << to_string(p)
               << " exceeded limit " << limit;
            throw limit_exceeded(os.str());
          }
        }
      }
    }
    frontier = std::move(next);
  }

  OrbitSet out;
  out.params = p;
  out.seed = seed;
  out.elements.assign(seen.begin(), seen.end());
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

OrbitSet minus_one_divisors(const Params& p, std::size_t limit, unsigned threads) {
  OrbitSet s = orbit(DivisorClass::exceptional(p, p.num_points()), p, limit, threads);
  for (const DivisorClass& d : s.elements) {
    if (self_pairing(d, p) != -1 || anticanonical_degree(d, p) != 1) {
      throw invariant_violation("minus_one_divisors: orbit element " +
                                format_divisor(d, p) +
                                " is not a (-1)-class on " + to_string(p));
    }
  }
  return s;
}

DivisorClass symmetry_canonical_form(const DivisorClass& d, bool include_factor_symmetry) {
  DivisorClass canon = d;
  std::sort(canon.m.begin(), canon.m.end(), std::greater<>());
  if (include_factor_symmetry) {
    std::sort(canon.h.begin(), canon.h.end(), std::greater<>());
  }
  return canon;
}

std::vector<ClassCount> classes_up_to_point_symmetry(const OrbitSet& s,
                                                     bool include_factor_symmetry) {
  std::map<DivisorClass, std::size_t> counts;
  for (const DivisorClass& d : s.elements) {
    ++counts[symmetry_canonical_form(d, include_factor_symmetry)];
  }
  std::vector<ClassCount> out;
  out.reserve(counts.size());
  for (auto& [rep, count] : counts) out.push_back({rep, count});
  return out;
}

bool is_minus_one(const DivisorClass& d, const Params& p, std::size_t limit) {
  check_compatible(d, p, "is_minus_one");
  // Cheap invariant screen before the orbit membership test.
  if (self_pairing(d, p) != -1 || anticanonical_degree(d, p) != 1) return false;
  return minus_one_divisors(p, limit).contains(d);
}

DualityReport verify_sqm_duality(const Params& p, std::size_t limit, unsigned threads) {
  DualityReport report;
  report.params = p;
  report.swapped = p.swapped();
  OrbitSet ours = minus_one_divisors(p, limit, threads);
  OrbitSet theirs = minus_one_divisors(report.swapped, limit, threads);
  report.count = ours.size();
  report.count_swapped = theirs.size();
  for (const DivisorClass& d : ours.elements) {
    ++report.self_pairing_hist[self_pairing(d, p)];
  }
  for (const DivisorClass& d : theirs.elements) {
    ++report.self_pairing_hist_swapped[self_pairing(d, report.swapped)];
  }
  report.ok = report.count == report.count_swapped &&
              report.self_pairing_hist == report.self_pairing_hist_swapped;
  if (!report.ok) {
    throw invariant_violation("sqm duality failed: |minus-one(" + to_string(p) +
                              ")| = " + std::to_string(report.count) + " vs |minus-one(" +
                              to_string(report.swapped) +
                              ")| = " + std::to_string(report.count_swapped));
  }
  return report;
}

void write_orbit_file(std::ostream& os, const OrbitSet& s) {
  os << "# orbit a=" << s.params.a << " b=" << s.params.b << " c=" << s.params.c
     << " seed=" << format_divisor(s.seed, s.params) << " count=" << s.size() << "\n";
  for (const DivisorClass& d : s.elements) {
    os << format_divisor(d, s.params) << "\n";
  }
}

std::optional<OrbitSet> read_orbit_file(std::istream& is, const Params& p,
                                        const DivisorClass& seed, std::string* why) {
  auto fail = [&](const std::string& reason) -> std::optional<OrbitSet> {
    if (why) *why = reason;
    return std::nullopt;
  };
  std::string header;
  if (!std::getline(is, header)) return fail("empty cache file");
  std::ostringstream expected;
  expected << "# orbit a=" << p.a << " b=" << p.b << " c=" << p.c
           << " seed=" << format_divisor(seed, p) << " count=";
  if (header.rfind(expected.str(), 0) != 0) {
    return fail("cache header does not match params/seed");
  }
  std::size_t count = 0;
  try {
    count = std::stoull(header.substr(expected.str().size()));
  } catch (const std::exception&) {
    return fail("cache header has a malformed count");
  }
  OrbitSet s;
  s.params = p;
  s.seed = seed;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    try {
      s.elements.push_back(parse_divisor(line, p));
    } catch (const parse_error& e) {
      return fail(std::string("cache line unreadable: ") + e.what());
    }
  }
  if (s.elements.size() != count) {
    return fail("cache count mismatch: header says " + std::to_string(count) +
                ", file has " + std::to_string(s.elements.size()));
  }
  if (!std::is_sorted(s.elements.begin(), s.elements.end())) {
    return fail("cache lines out of order");
  }
  if (std::adjacent_find(s.elements.begin(), s.elements.end()) != s.elements.end()) {
    return fail("cache contains duplicates");
  }
  return s;
}

} // namespace mukai
