#include "mukai/cones.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>

#include <json.hpp>

#include "mukai/lattice.hpp"
#include "mukai/parallel.hpp"
#include "mukai/simplex.hpp"

namespace mukai {

RatVec divisor_coords(const DivisorClass& d) {
  RatVec v;
  v.reserve(d.h.size() + d.m.size());
  for (int64_t x : d.h) v.emplace_back(x);
  for (int64_t x : d.m) v.emplace_back(x);
  return v;
}

std::string certificate_to_json(const MembershipCertificate& cert) {
  nlohmann::json j;
  j["member"] = cert.member;
  if (cert.member) {
    auto& arr = j["coefficients"] = nlohmann::json::array();
    for (const Rat& r : cert.coefficients) arr.push_back(rat_to_string(r));
  } else {
    auto& arr = j["separator"] = nlohmann::json::array();
    for (const Rat& r : cert.separator) arr.push_back(rat_to_string(r));
  }
  return j.dump();
}

namespace {

Rat dot(const RatVec& x, const RatVec& y) {
  Rat acc(0);
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

// Columns are generator coordinates; rows span the Picard rank.
RatMat generator_matrix(const std::vector<DivisorClass>& generators, std::size_t rho) {
  RatMat a(rho, RatVec(generators.size(), Rat(0)));
  for (std::size_t g = 0; g < generators.size(); ++g) {
    RatVec coords = divisor_coords(generators[g]);
    for (std::size_t i = 0; i < rho; ++i) a[i][g] = coords[i];
  }
  return a;
}

void verify_certificate(const std::vector<DivisorClass>& generators, const RatVec& target,
                        const MembershipCertificate& cert) {
  if (cert.member) {
    RatVec combo(target.size(), Rat(0));
    for (std::size_t g = 0; g < generators.size(); ++g) {
      if (cert.coefficients[g] < 0) {
        throw invariant_violation("lp_member produced a negative coefficient");
      }
      if (cert.coefficients[g] == 0) continue;
      RatVec coords = divisor_coords(generators[g]);
      for (std::size_t i = 0; i < combo.size(); ++i) {
        combo[i] += cert.coefficients[g] * coords[i];
      }
    }
    if (combo != target) {
      throw invariant_violation("lp_member coefficients do not reproduce the target");
    }
  } else {
    for (const DivisorClass& g : generators) {
      if (dot(cert.separator, divisor_coords(g)) < 0) {
        throw invariant_violation("lp_member separator is negative on a generator");
      }
    }
    if (dot(cert.separator, target) >= 0) {
      throw invariant_violation("lp_member separator does not separate the target");
    }
  }
}

} // namespace

MembershipCertificate lp_member(const std::vector<DivisorClass>& generators,
                                const RatVec& target, const Params& p) {
  const std::size_t rho = static_cast<std::size_t>(p.rank());
  if (target.size() != rho) {
    throw dimension_mismatch("lp_member: target has wrong coordinate count");
  }
  for (const DivisorClass& g : generators) check_compatible(g, p, "lp_member");

  FeasibilityResult lp = solve_feasibility(generator_matrix(generators, rho), target);
  MembershipCertificate cert;
  cert.member = lp.feasible;
  if (lp.feasible) {
    cert.coefficients = std::move(lp.x);
  } else {
    cert.separator.resize(rho);
    for (std::size_t i = 0; i < rho; ++i) cert.separator[i] = -lp.farkas[i];
  }
  verify_certificate(generators, target, cert);
  return cert;
}

MembershipCertificate lp_member(const std::vector<DivisorClass>& generators,
                                const DivisorClass& target, const Params& p) {
  check_compatible(target, p, "lp_member");
  return lp_member(generators, divisor_coords(target), p);
}

GeneratedCone extremal_generators(const GeneratedCone& cone) {
  if (cone.generators.empty()) {
    throw std::invalid_argument("extremal_generators: empty generator list");
  }
  std::vector<DivisorClass> gens = cone.generators;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Remove one redundant generator at a time; survivors still span.
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<DivisorClass> rest;
    rest.reserve(gens.size() - 1);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k != i) rest.push_back(gens[k]);
    }
    if (!rest.empty() && lp_member(rest, gens[i], cone.params).member) {
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return GeneratedCone{cone.params, std::move(gens), true};
}

EffectiveCone::EffectiveCone(const Params& p, std::size_t limit, unsigned threads)
    : EffectiveCone(p, minus_one_divisors(p, limit, threads)) {}

EffectiveCone::EffectiveCone(const Params& p, OrbitSet minus_ones) : params_(p) {
  generators_ = std::move(minus_ones.elements);
}

void EffectiveCone::ensure_extremal() {
  if (extremal_) return;
  GeneratedCone pruned = extremal_generators({params_, generators_, false});
  std::vector<DivisorClass> away;
  std::set_difference(generators_.begin(), generators_.end(), pruned.generators.begin(),
                      pruned.generators.end(), std::back_inserter(away));
  pruned_away_ = std::move(away);
  extremal_ = std::move(pruned.generators);
}

const std::vector<DivisorClass>& EffectiveCone::extremal() {
  ensure_extremal();
  return *extremal_;
}

const std::vector<DivisorClass>& EffectiveCone::pruned_away() {
  ensure_extremal();
  return pruned_away_;
}

MembershipCertificate EffectiveCone::member(const DivisorClass& d) const {
  return lp_member(generators_, d, params_);
}

bool EffectiveCone::is_big(const DivisorClass& d) {
  check_compatible(d, params_, "is_big");
  const std::size_t rho = static_cast<std::size_t>(params_.rank());

  // Full-dimensionality: exact rank of the generator matrix.
  {
    RatMat a = generator_matrix(generators_, rho);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a[0].size() && rank < rho; ++col) {
      std::size_t piv = rank;
      while (piv < rho && a[piv][col] == 0) ++piv;
      if (piv == rho) continue;
      std::swap(a[piv], a[rank]);
      for (std::size_t i = rank + 1; i < rho; ++i) {
        if (a[i][col] == 0) continue;
        const Rat f = a[i][col] / a[rank][col];
        for (std::size_t j = col; j < a[i].size(); ++j) a[i][j] -= f * a[rank][j];
      }
      ++rank;
    }
    if (rank != rho) {
      throw std::domain_error("is_big: effective cone is not full-dimensional");
    }
  }

  // D interior iff some cross-polytope neighborhood D +- t e_k stays inside.
  const RatVec target = divisor_coords(d);
  RatMat base = generator_matrix(generators_, rho);
  for (std::size_t k = 0; k < rho; ++k) {
    for (int dir : {+1, -1}) {
      // columns: lambda..., t, cap slack u; rows: coords then t + u = 1
      RatMat a(rho + 1, RatVec(generators_.size() + 2, Rat(0)));
      RatVec b(rho + 1, Rat(0));
      for (std::size_t i = 0; i < rho; ++i) {
        for (std::size_t g = 0; g < generators_.size(); ++g) a[i][g] = base[i][g];
        b[i] = target[i];
      }
      a[k][generators_.size()] = dir; // sum(lambda G) + dir * t e_k = D
      a[rho][generators_.size()] = 1;
      a[rho][generators_.size() + 1] = 1;
      b[rho] = 1;
      RatVec objective(generators_.size() + 2, Rat(0));
      objective[generators_.size()] = 1;
      OptimizeResult best = maximize(a, b, objective);
      if (!best.feasible || best.unbounded || best.objective <= 0) return false;
    }
  }
  return true;
}

bool EffectiveCone::in_movable(const DivisorClass& d, bool check_all, unsigned threads) {
  check_compatible(d, params_, "in_movable");
  ensure_extremal();
  const std::vector<DivisorClass>& gens = *extremal_;

  // Indices of deleted generators to test. For a fully symmetric target the
  // coordinate symmetries permute the deleted-generator subcones, so one
  // representative per symmetry class decides them all.
  std::vector<std::size_t> probes;
  const bool symmetric_target =
      std::adjacent_find(d.h.begin(), d.h.end(), std::not_equal_to<>()) == d.h.end() &&
      std::adjacent_find(d.m.begin(), d.m.end(), std::not_equal_to<>()) == d.m.end();
  if (!check_all && symmetric_target) {
    std::map<DivisorClass, std::size_t> reps;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      reps.emplace(symmetry_canonical_form(gens[i], true), i);
    }
    for (const auto& [canon, i] : reps) probes.push_back(i);
  } else {
    probes.resize(gens.size());
    for (std::size_t i = 0; i < probes.size(); ++i) probes[i] = i;
  }

  std::atomic<bool> inside{true};
  parallel_for(probes.size(), threads, [&](std::size_t pi) {
    if (!inside.load(std::memory_order_relaxed)) return;
    std::vector<DivisorClass> rest;
    rest.reserve(gens.size() - 1);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k != probes[pi]) rest.push_back(gens[k]);
    }
    if (!lp_member(rest, d, params_).member) {
      inside.store(false, std::memory_order_relaxed);
    }
  });
  return inside.load();
}

Rat EffectiveCone::orbit_sum_multiple() const {
  DivisorClass total = DivisorClass::zero(params_);
  for (const DivisorClass& g : generators_) total += g;
  const DivisorClass antik = anticanonical(params_);

  const Rat lambda = Rat(total.h[0]) / Rat(antik.h[0]);
  RatVec lhs = divisor_coords(total);
  RatVec rhs = divisor_coords(antik);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] != lambda * rhs[i]) {
      throw invariant_violation("generator sum is not proportional to -K on " +
                                to_string(params_));
    }
  }
  if (lambda <= 0) {
    throw invariant_violation("generator sum is a non-positive multiple of -K on " +
                              to_string(params_));
  }
  return lambda;
}

bool in_effective_cone(const DivisorClass& d, const Params& p) {
  return EffectiveCone(p).member(d).member;
}

bool is_big(const DivisorClass& d, const Params& p) { return EffectiveCone(p).is_big(d); }

bool in_movable_cone(const DivisorClass& d, const Params& p) {
  return EffectiveCone(p).in_movable(d);
}

Rat orbit_sum_multiple(const Params& p) { return EffectiveCone(p).orbit_sum_multiple(); }

} // namespace mukai
