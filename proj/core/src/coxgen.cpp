#include "mukai/coxgen.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "mukai/lattice.hpp"
#include "mukai/simplex.hpp"

namespace mukai {

namespace {

struct Box {
  int64_t h_lo = 0, h_hi = 0;
  int64_t m_lo = 0, m_hi = 0;
};

Box generator_box(const std::vector<DivisorClass>& gens) {
  Box box;
  bool first_h = true, first_m = true;
  for (const DivisorClass& g : gens) {
    for (int64_t v : g.h) {
      box.h_lo = first_h ? v : std::min(box.h_lo, v);
      box.h_hi = first_h ? v : std::max(box.h_hi, v);
      first_h = false;
    }
    for (int64_t v : g.m) {
      box.m_lo = first_m ? v : std::min(box.m_lo, v);
      box.m_hi = first_m ? v : std::max(box.m_hi, v);
      first_m = false;
    }
  }
  return box;
}

// Non-increasing sequences of `len` values in [lo, hi] with the given sum.
void enumerate_sorted(int64_t len, int64_t lo, int64_t hi, int64_t sum, int64_t prev,
                      std::vector<int64_t>& prefix,
                      const std::function<void(const std::vector<int64_t>&)>& emit) {
  if (len == 0) {
    if (sum == 0) emit(prefix);
    return;
  }
  const int64_t top = std::min(hi, prev);
  for (int64_t v = top; v >= lo; --v) {
    const int64_t rest = sum - v;
    if (rest < (len - 1) * lo || rest > (len - 1) * std::min(hi, v)) continue;
    prefix.push_back(v);
    enumerate_sorted(len - 1, lo, hi, rest, v, prefix, emit);
    prefix.pop_back();
  }
}

// Membership of target in the k-fold dilate of the convex hull of the
// generators: sum(lambda_i G_i) = target with lambda >= 0, sum(lambda_i) = k.
bool in_dilated_hull(const std::vector<DivisorClass>& gens, const DivisorClass& target,
                     int64_t k, const Params& p) {
  const std::size_t rho = static_cast<std::size_t>(p.rank());
  RatMat a(rho + 1, RatVec(gens.size(), Rat(0)));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    RatVec coords = divisor_coords(gens[g]);
    for (std::size_t i = 0; i < rho; ++i) a[i][g] = coords[i];
    a[rho][g] = 1;
  }
  RatVec b = divisor_coords(target);
  b.emplace_back(k);
  return solve_feasibility(a, b).feasible;
}

std::vector<std::vector<int64_t>> distinct_permutations(std::vector<int64_t> values) {
  std::sort(values.begin(), values.end());
  std::vector<std::vector<int64_t>> out;
  do {
    out.push_back(values);
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

// Canonical slice classes (h and m both sorted descending) of anticanonical
// degree k inside the k-dilate of the generator hull.
std::vector<DivisorClass> canonical_slice_classes(const Params& p,
                                                  const std::vector<DivisorClass>& gens,
                                                  int64_t k, std::size_t candidate_cap) {
  const Box base = generator_box(gens);
  const Box box{base.h_lo * k, base.h_hi * k, base.m_lo * k, base.m_hi * k};
  const int64_t nf = p.num_factors();
  const int64_t np = p.num_points();
  const int64_t h_lo = std::max<int64_t>(box.h_lo, 0);

  std::size_t candidates = 0;
  std::vector<DivisorClass> found;
  for (int64_t hsum = h_lo * nf; hsum <= box.h_hi * nf; ++hsum) {
    const int64_t msum = p.c * hsum - k; // deg(D) = c*sum(h) - sum(m)
    if (msum < box.m_lo * np || msum > box.m_hi * np) continue;
    std::vector<int64_t> hprefix;
    enumerate_sorted(nf, h_lo, box.h_hi, hsum, box.h_hi, hprefix,
                     [&](const std::vector<int64_t>& hs) {
                       std::vector<int64_t> mprefix;
                       enumerate_sorted(np, box.m_lo, box.m_hi, msum, box.m_hi, mprefix,
                                        [&](const std::vector<int64_t>& ms) {
                                          if (++candidates > candidate_cap) {
                                            throw limit_exceeded(
                                                "slice enumeration exceeded candidate cap");
                                          }
                                          DivisorClass cand(hs, ms);
                                          if (in_dilated_hull(gens, cand, k, p)) {
                                            found.push_back(std::move(cand));
                                          }
                                        });
                     });
  }
  std::sort(found.begin(), found.end());
  return found;
}

uint64_t mix_seed(uint64_t seed, int k) { return seed + 0x9E3779B97F4A7C15ull * k; }

} // namespace

DegreeOneSet degree_one_effectives(const Params& p, const InterpConfig& cfg,
                                   EffectiveCone* cone, int seeds) {
  if (!is_mori_dream(p)) {
    throw not_mori_dream("degree_one_effectives: " + to_string(p) +
                         " is not a Mori dream space");
  }
  std::optional<EffectiveCone> local;
  if (!cone) local.emplace(p);
  EffectiveCone& eff = cone ? *cone : *local;

  // (-1)-classes are effective by construction; only extra lattice points
  // of the slice need the numeric check.
  std::unordered_set<DivisorClass, DivisorHash> known(eff.generators().begin(),
                                                      eff.generators().end());

  std::vector<DivisorClass> out;
  for (const DivisorClass& canon :
       canonical_slice_classes(p, eff.generators(), 1, kDefaultDecompositionCap)) {
    const bool effective =
        known.contains(canon) || h0_multiseed(p, canon, cfg, seeds).value > 0;
    if (!effective) continue;
    for (const auto& hs : distinct_permutations(canon.h)) {
      for (const auto& ms : distinct_permutations(canon.m)) {
        out.emplace_back(hs, ms);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());

  for (const DivisorClass& g : eff.generators()) {
    if (!std::binary_search(out.begin(), out.end(), g)) {
      throw invariant_violation("degree_one_effectives missed a (-1)-class on " +
                                to_string(p));
    }
  }
  return DegreeOneSet{p, std::move(out)};
}

std::vector<Decomposition> decompositions(const DivisorClass& target, const DegreeOneSet& s,
                                          std::size_t cap) {
  check_compatible(target, s.params, "decompositions");
  const int64_t degree = anticanonical_degree(target, s.params);
  if (degree < 1) {
    throw std::invalid_argument("decompositions: target must have degree >= 1");
  }
  const auto& classes = s.classes;
  const std::size_t n = classes.size();
  if (n == 0) return {};
  const std::size_t rho = static_cast<std::size_t>(s.params.rank());

  auto coords_of = [&](const DivisorClass& d) {
    std::vector<int64_t> coords = d.h;
    coords.insert(coords.end(), d.m.begin(), d.m.end());
    return coords;
  };

  // coordinate extremes over the index prefix classes[0..i]
  std::vector<std::vector<int64_t>> pre_lo(n), pre_hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int64_t> coords = coords_of(classes[i]);
    if (i == 0) {
      pre_lo[0] = coords;
      pre_hi[0] = coords;
    } else {
      pre_lo[i] = pre_lo[i - 1];
      pre_hi[i] = pre_hi[i - 1];
      for (std::size_t c = 0; c < rho; ++c) {
        pre_lo[i][c] = std::min(pre_lo[i][c], coords[c]);
        pre_hi[i][c] = std::max(pre_hi[i][c], coords[c]);
      }
    }
  }

  std::vector<Decomposition> out;
  std::vector<std::size_t> stack;
  // remaining -> largest max-index known to yield nothing; implies failure
  // for every smaller max-index as well
  std::unordered_map<DivisorClass, std::size_t, DivisorHash> dead;

  std::function<bool(const DivisorClass&, int64_t, std::size_t)> recurse =
      [&](const DivisorClass& remaining, int64_t slots, std::size_t max_idx) -> bool {
    if (slots == 1) {
      auto end = classes.begin() + static_cast<std::ptrdiff_t>(max_idx) + 1;
      auto it = std::lower_bound(classes.begin(), end, remaining);
      if (it == end || *it != remaining) return false;
      if (out.size() >= cap) {
        throw limit_exceeded("decompositions: more than " + std::to_string(cap) +
                             " representations of " + format_divisor(target, s.params));
      }
      stack.push_back(static_cast<std::size_t>(it - classes.begin()));
      out.push_back({target, stack});
      stack.pop_back();
      return true;
    }
    if (auto it = dead.find(remaining); it != dead.end() && max_idx <= it->second) {
      return false;
    }
    const auto rem = coords_of(remaining);
    bool found = false;
    for (std::size_t i = max_idx + 1; i-- > 0;) {
      // the prefix box only shrinks as i decreases, so the first violation
      // rules out every smaller index too
      bool plausible = true;
      for (std::size_t c = 0; c < rho && plausible; ++c) {
        if (rem[c] < slots * pre_lo[i][c] || rem[c] > slots * pre_hi[i][c]) {
          plausible = false;
        }
      }
      if (!plausible) break;
      stack.push_back(i);
      if (recurse(remaining - classes[i], slots - 1, i)) found = true;
      stack.pop_back();
    }
    if (!found) {
      auto [it, inserted] = dead.emplace(remaining, max_idx);
      if (!inserted) it->second = std::max(it->second, max_idx);
    }
    return found;
  };

  recurse(target, degree, n - 1);
  std::sort(out.begin(), out.end(), [](const Decomposition& x, const Decomposition& y) {
    return x.parts < y.parts;
  });
  return out;
}

int64_t multiplication_image_rank(const Params& p, const DivisorClass& d,
                                  const std::vector<Decomposition>& decomps,
                                  const DegreeOneSet& s, const InterpConfig& cfg) {
  check_compatible(d, p, "multiplication_image_rank");
  const int64_t dim = h0(p, d, cfg);
  if (decomps.empty()) return 0;
  const PrimeField f(cfg.prime);

  const std::size_t n_eval = static_cast<std::size_t>(dim) + 8;
  const std::vector<FPoint> blown_up = interp_points(p, cfg);

  // ambient evaluation points: affine coordinates nonzero and distinct from
  // every blown-up point
  std::mt19937_64 rng(cfg.seed ^ 0x5eC7104Eu);
  std::vector<FPoint> eval_points;
  while (eval_points.size() < n_eval) {
    FPoint pt(p.num_factors(), std::vector<uint64_t>(p.c - 1, 0));
    for (auto& aff : pt) {
      for (auto& v : aff) v = 1 + rng() % (cfg.prime - 1);
    }
    if (std::find(blown_up.begin(), blown_up.end(), pt) == blown_up.end()) {
      eval_points.push_back(std::move(pt));
    }
  }

  // evaluations of every needed part section at every evaluation point
  std::unordered_map<std::size_t, std::vector<std::vector<uint64_t>>> part_eval;
  for (const Decomposition& dec : decomps) {
    for (std::size_t idx : dec.parts) {
      if (part_eval.contains(idx)) continue;
      const SectionBasis basis = section_basis(p, s.classes[idx], cfg);
      std::vector<std::vector<uint64_t>> rows;
      for (const auto& coeffs : basis.basis) {
        std::vector<uint64_t> values(n_eval);
        for (std::size_t e = 0; e < n_eval; ++e) {
          values[e] = evaluate_form(basis.monomials, coeffs, eval_points[e], f);
        }
        rows.push_back(std::move(values));
      }
      part_eval.emplace(idx, std::move(rows));
    }
  }

  // all products taking one basis section per part; repeated parts range
  // over multisets of basis choices
  std::vector<std::vector<uint64_t>> products;
  for (const Decomposition& dec : decomps) {
    std::vector<std::vector<uint64_t>> acc = {std::vector<uint64_t>(n_eval, 1)};
    std::size_t at = 0;
    while (at < dec.parts.size() && !acc.empty()) {
      std::size_t run = at;
      while (run < dec.parts.size() && dec.parts[run] == dec.parts[at]) ++run;
      const std::size_t reps = run - at;
      const auto& sections = part_eval.at(dec.parts[at]);
      if (sections.empty()) {
        acc.clear();
        break;
      }
      std::vector<std::vector<uint64_t>> next;
      std::vector<std::size_t> choice(reps, 0);
      bool exhausted = false;
      while (!exhausted) {
        for (const auto& base : acc) {
          std::vector<uint64_t> prod = base;
          for (std::size_t r = 0; r < reps; ++r) {
            const auto& sec = sections[choice[r]];
            for (std::size_t e = 0; e < n_eval; ++e) prod[e] = f.mul(prod[e], sec[e]);
          }
          next.push_back(std::move(prod));
        }
        // next non-decreasing choice vector
        std::size_t bump = reps;
        while (true) {
          if (bump == 0) {
            exhausted = true;
            break;
          }
          --bump;
          if (++choice[bump] < sections.size()) {
            for (std::size_t r = bump + 1; r < reps; ++r) choice[r] = choice[bump];
            break;
          }
        }
      }
      acc = std::move(next);
      at = run;
    }
    for (auto& row : acc) products.push_back(std::move(row));
  }

  GfMatrix eval;
  eval.rows = products.size();
  eval.cols = n_eval;
  eval.data.reserve(eval.rows * eval.cols);
  for (const auto& row : products) {
    eval.data.insert(eval.data.end(), row.begin(), row.end());
  }
  const auto rank = static_cast<int64_t>(gf_rank(std::move(eval), f));
  if (rank > dim) {
    throw invariant_violation("multiplication image rank exceeds h0 for " +
                              format_divisor(d, p));
  }
  return rank;
}

bool generated_in_degree(const Params& p, const DivisorClass& d, const InterpConfig& cfg) {
  DegreeOneSet s = degree_one_effectives(p, cfg);
  const int64_t dim = h0(p, d, cfg);
  if (dim == 0) return true; // nothing to generate
  auto decomps = decompositions(d, s);
  return multiplication_image_rank(p, d, decomps, s, cfg) == dim;
}

int64_t generator_degree_bound(const Params& p) {
  if (!is_mori_dream(p)) {
    throw not_mori_dream("generator_degree_bound: " + to_string(p));
  }
  return p.b * (p.a - 1) * (p.c - 1) - 2;
}

int64_t regularity(const Params& p) {
  if (!is_mori_dream(p)) {
    throw not_mori_dream("regularity: " + to_string(p));
  }
  return p.b * (p.a - 1) * (p.c - 1) - 1;
}

std::vector<DivisorClass> effective_classes_up_to_degree(const Params& p, int64_t k,
                                                         const InterpConfig& cfg,
                                                         EffectiveCone* cone, int seeds) {
  if (k < 1) throw std::invalid_argument("effective_classes_up_to_degree: k must be >= 1");
  if (!is_mori_dream(p)) {
    throw not_mori_dream("effective_classes_up_to_degree: " + to_string(p));
  }
  std::optional<EffectiveCone> local;
  if (!cone) local.emplace(p);
  EffectiveCone& eff = cone ? *cone : *local;

  std::vector<DivisorClass> reps;
  for (const DivisorClass& canon :
       canonical_slice_classes(p, eff.generators(), k, kDefaultDecompositionCap)) {
    if (h0_multiseed(p, canon, cfg, seeds).value <= 0) continue;
    // expand factor permutations; m stays canonical for point symmetry
    for (const auto& hs : distinct_permutations(canon.h)) {
      reps.emplace_back(hs, canon.m);
    }
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

CoxReport cox_generation_report(const Params& p, int64_t max_degree, const InterpConfig& cfg,
                                int seeds, int64_t budget_ms) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started)
        .count();
  };

  CoxReport report;
  report.params = p;
  report.max_degree = max_degree;
  report.prime = cfg.prime;
  report.seed = cfg.seed;
  report.seeds = seeds;

  EffectiveCone cone(p);
  DegreeOneSet ones = degree_one_effectives(p, cfg, &cone, seeds);

  report.all_generated = true;
  for (int64_t k = 2; k <= max_degree; ++k) {
    for (const DivisorClass& d : effective_classes_up_to_degree(p, k, cfg, &cone, seeds)) {
      if (budget_ms > 0 && elapsed_ms() > budget_ms) {
        report.partial = true;
        return report;
      }
      const auto row_started = Clock::now();
      CoxReportRow row;
      row.divisor = d;
      row.degree = k;

      auto decomps = decompositions(d, ones);
      row.n_decompositions = decomps.size();
      bool first = true;
      bool all_same = true;
      bool all_generated = true;
      for (int sidx = 0; sidx < seeds; ++sidx) {
        const InterpConfig scfg = cfg.with_seed(mix_seed(cfg.seed, sidx));
        const int64_t dim = h0(p, d, scfg);
        const int64_t rank = multiplication_image_rank(p, d, decomps, ones, scfg);
        const bool ok = rank == dim;
        if (first) {
          row.h0 = dim;
          row.image_rank = rank;
          first = false;
        } else if (dim != row.h0 || rank != row.image_rank) {
          all_same = false;
        }
        all_generated = all_generated && ok;
      }
      row.seeds_agree = all_same;
      row.generated = all_generated;
      row.wall_time_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - row_started)
              .count();
      report.all_generated = report.all_generated && row.generated && row.seeds_agree;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string cox_report_csv(const CoxReport& report) {
  std::ostringstream os;
  os << "params,class,degree,h0,image_rank,decompositions,generated,seeds_agree,"
        "wall_time_ms\n";
  for (const CoxReportRow& row : report.rows) {
    os << "\"" << to_string(report.params) << "\",\""
       << format_divisor(row.divisor, report.params) << "\"," << row.degree << "," << row.h0
       << "," << row.image_rank << "," << row.n_decompositions << ","
       << (row.generated ? "true" : "false") << "," << (row.seeds_agree ? "true" : "false")
       << "," << row.wall_time_ms << "\n";
  }
  return os.str();
}

std::string cox_report_json(const CoxReport& report) {
  nlohmann::json j;
  j["params"] = {{"a", report.params.a}, {"b", report.params.b}, {"c", report.params.c}};
  j["max_degree"] = report.max_degree;
  j["prime"] = report.prime;
  j["seed"] = report.seed;
  j["seeds"] = report.seeds;
  j["all_generated"] = report.all_generated;
  j["partial"] = report.partial;
  auto& rows = j["rows"] = nlohmann::json::array();
  for (const CoxReportRow& row : report.rows) {
    rows.push_back({{"class", format_divisor(row.divisor, report.params)},
                    {"degree", row.degree},
                    {"h0", row.h0},
                    {"image_rank", row.image_rank},
                    {"decompositions", row.n_decompositions},
                    {"generated", row.generated},
                    {"seeds_agree", row.seeds_agree},
                    {"wall_time_ms", row.wall_time_ms}});
  }
  return j.dump(2);
}

} // namespace mukai
