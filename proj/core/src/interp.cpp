#include "mukai/interp.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "mukai/lattice.hpp"

namespace mukai {

namespace {

void validate_prime(uint64_t prime) {
  if (prime <= 1'000'000) {
    throw interp_error("interpolation prime must exceed 10^6, got " + std::to_string(prime));
  }
  PrimeField check(prime); // throws when composite or oversized
  (void)check;
}

// All multi-indices over `vars` slots with total degree <= cap, lex order.
void enumerate_bounded(int64_t vars, int64_t cap, std::vector<int32_t>& prefix,
                       std::vector<std::vector<int32_t>>& out) {
  if (static_cast<int64_t>(prefix.size()) == vars) {
    out.push_back(prefix);
    return;
  }
  int64_t used = 0;
  for (int32_t v : prefix) used += v;
  for (int32_t e = 0; e <= cap - used; ++e) {
    prefix.push_back(e);
    enumerate_bounded(vars, cap, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int32_t>> bounded_exponents(int64_t vars, int64_t cap) {
  std::vector<std::vector<int32_t>> out;
  std::vector<int32_t> prefix;
  enumerate_bounded(vars, cap, prefix, out);
  return out;
}

// Pascal triangle mod p up to row `top`.
std::vector<std::vector<uint64_t>> binomials_mod(int64_t top, const PrimeField& f) {
  std::vector<std::vector<uint64_t>> c(top + 1);
  for (int64_t i = 0; i <= top; ++i) {
    c[i].assign(i + 1, 1);
    for (int64_t j = 1; j < i; ++j) c[i][j] = f.add(c[i - 1][j - 1], c[i - 1][j]);
  }
  return c;
}

} // namespace

std::vector<FPoint> interp_points(const Params& p, const InterpConfig& cfg) {
  validate_prime(cfg.prime);
  const auto factors = static_cast<std::size_t>(p.num_factors());
  const auto vars = static_cast<std::size_t>(p.c - 1);
  const auto count = static_cast<std::size_t>(p.num_points());

  if (cfg.points) {
    const auto& pts = *cfg.points;
    if (pts.size() != count) {
      throw interp_error("explicit point list has wrong length for " + to_string(p));
    }
    for (const FPoint& pt : pts) {
      if (pt.size() != factors) throw interp_error("explicit point has wrong factor count");
      for (const auto& aff : pt) {
        if (aff.size() != vars) throw interp_error("explicit point has wrong coordinate count");
        for (uint64_t v : aff) {
          if (v >= cfg.prime) throw interp_error("explicit point coordinate >= prime");
        }
      }
    }
    return pts;
  }

  std::mt19937_64 rng(cfg.seed);
  std::vector<FPoint> pts;
  pts.reserve(count);
  while (pts.size() < count) {
    FPoint pt(factors, std::vector<uint64_t>(vars, 0));
    for (auto& aff : pt) {
      for (auto& v : aff) v = rng() % cfg.prime;
    }
    if (std::find(pts.begin(), pts.end(), pt) == pts.end()) pts.push_back(std::move(pt));
  }
  return pts;
}

MonomialIndex monomial_index(const Params& p, const std::vector<int64_t>& multidegree) {
  if (multidegree.size() != static_cast<std::size_t>(p.num_factors())) {
    throw dimension_mismatch("monomial_index: wrong multidegree length");
  }
  for (int64_t d : multidegree) {
    if (d < 0) throw interp_error("monomial_index: negative degree");
  }
  MonomialIndex index;
  index.multidegree = multidegree;
  index.vars_per_factor = p.c - 1;

  std::vector<std::vector<std::vector<int32_t>>> per_factor;
  per_factor.reserve(multidegree.size());
  for (int64_t d : multidegree) {
    per_factor.push_back(bounded_exponents(p.c - 1, d));
  }
  std::vector<std::size_t> cursor(per_factor.size(), 0);
  while (true) {
    std::vector<int32_t> flat;
    flat.reserve(static_cast<std::size_t>(p.dim()));
    for (std::size_t i = 0; i < per_factor.size(); ++i) {
      const auto& e = per_factor[i][cursor[i]];
      flat.insert(flat.end(), e.begin(), e.end());
    }
    index.columns.push_back(std::move(flat));
    // odometer, last factor fastest
    std::size_t k = per_factor.size();
    while (k > 0) {
      --k;
      if (++cursor[k] < per_factor[k].size()) break;
      cursor[k] = 0;
      if (k == 0) return index;
    }
  }
}

GfMatrix condition_matrix(const Params& p, const DivisorClass& d, const InterpConfig& cfg) {
  check_compatible(d, p, "condition_matrix");
  validate_prime(cfg.prime);
  for (int64_t di : d.h) {
    if (di < 0) throw interp_error("condition_matrix: negative multidegree");
  }
  int64_t max_mult = 0;
  for (int64_t mj : d.m) {
    if (mj < 0) throw interp_error("condition_matrix: negative multiplicity");
    max_mult = std::max(max_mult, mj);
  }
  if (static_cast<uint64_t>(max_mult) >= cfg.prime) {
    throw interp_error("prime too small for multiplicity " + std::to_string(max_mult));
  }

  const PrimeField f(cfg.prime);
  const MonomialIndex index = monomial_index(p, d.h);
  const std::vector<FPoint> points = interp_points(p, cfg);
  const auto n = static_cast<std::size_t>(p.dim());

  int64_t max_exp = 0;
  for (int64_t di : d.h) max_exp = std::max(max_exp, di);
  const auto binom = binomials_mod(max_exp, f);

  // rows: (point, derivative multi-index gamma with |gamma| < m_j)
  std::vector<std::pair<std::size_t, std::vector<int32_t>>> conditions;
  for (std::size_t j = 0; j < points.size(); ++j) {
    const int64_t mult = d.m[j];
    if (mult <= 0) continue;
    for (auto& gamma : bounded_exponents(static_cast<int64_t>(n), mult - 1)) {
      conditions.emplace_back(j, std::move(gamma));
    }
  }

  GfMatrix out;
  out.rows = conditions.size();
  out.cols = index.size();
  out.data.assign(out.rows * out.cols, 0);

  // flattened affine coordinates and their power tables, per point
  std::vector<std::vector<std::vector<uint64_t>>> powers(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    powers[j].resize(n);
    std::size_t k = 0;
    for (const auto& aff : points[j]) {
      for (uint64_t coord : aff) {
        auto& tab = powers[j][k++];
        tab.resize(max_exp + 1);
        tab[0] = 1;
        for (int64_t t = 1; t <= max_exp; ++t) tab[t] = f.mul(tab[t - 1], coord % cfg.prime);
      }
    }
  }

  for (std::size_t r = 0; r < conditions.size(); ++r) {
    const auto& [j, gamma] = conditions[r];
    for (std::size_t col = 0; col < index.columns.size(); ++col) {
      const auto& expo = index.columns[col];
      uint64_t entry = 1;
      for (std::size_t k = 0; k < n && entry != 0; ++k) {
        const int32_t e = expo[k];
        const int32_t g = gamma[k];
        if (g > e) {
          entry = 0;
          break;
        }
        entry = f.mul(entry, binom[e][g]);
        entry = f.mul(entry, powers[j][k][e - g]);
      }
      out.at(r, col) = entry;
    }
  }
  return out;
}

std::size_t gf_rank(GfMatrix m, const PrimeField& f) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    }
    const uint64_t inv = f.inv(m.at(rank, col));
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      const uint64_t factor = f.mul(m.at(i, col), inv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < m.cols; ++j) {
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(rank, j)));
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<uint64_t>> gf_kernel_basis(GfMatrix m, const PrimeField& f) {
  // reduced row echelon form
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    }
    const uint64_t inv = f.inv(m.at(rank, col));
    for (std::size_t j = col; j < m.cols; ++j) m.at(rank, j) = f.mul(m.at(rank, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == rank || m.at(i, col) == 0) continue;
      const uint64_t factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) {
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(rank, j)));
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<uint64_t>> kernel;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<uint64_t> vec(m.cols, 0);
    vec[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
      vec[pivot_col[r]] = f.neg(m.at(r, free));
    }
    kernel.push_back(std::move(vec));
  }
  return kernel;
}

int64_t h0(const Params& p, const DivisorClass& d, const InterpConfig& cfg) {
  check_compatible(d, p, "h0");
  for (int64_t di : d.h) {
    if (di < 0) return 0;
  }
  DivisorClass clamped = d;
  for (auto& mj : clamped.m) mj = std::max<int64_t>(mj, 0);
  GfMatrix m = condition_matrix(p, clamped, cfg);
  const PrimeField f(cfg.prime);
  return static_cast<int64_t>(m.cols) - static_cast<int64_t>(gf_rank(std::move(m), f));
}

MultiSeedValue h0_multiseed(const Params& p, const DivisorClass& d, const InterpConfig& cfg,
                            int seeds) {
  if (seeds < 1) throw std::invalid_argument("h0_multiseed: need at least one seed");
  MultiSeedValue out;
  for (int k = 0; k < seeds; ++k) {
    out.values.push_back(h0(p, d, cfg.with_seed(cfg.seed + 0x9E3779B97F4A7C15ull * k)));
  }
  std::map<int64_t, int> votes;
  for (int64_t v : out.values) ++votes[v];
  int best = 0;
  for (const auto& [value, n] : votes) {
    if (n > best) {
      best = n;
      out.value = value;
    }
  }
  out.unanimous = votes.size() == 1;
  return out;
}

SectionBasis section_basis(const Params& p, const DivisorClass& d, const InterpConfig& cfg) {
  check_compatible(d, p, "section_basis");
  SectionBasis out;
  out.divisor = d;
  out.prime = cfg.prime;
  for (int64_t di : d.h) {
    if (di < 0) return out; // no sections in negative degree
  }
  DivisorClass clamped = d;
  for (auto& mj : clamped.m) mj = std::max<int64_t>(mj, 0);

  out.monomials = monomial_index(p, clamped.h);
  GfMatrix m = condition_matrix(p, clamped, cfg);
  const PrimeField f(cfg.prime);
  out.basis = gf_kernel_basis(m, f);

  // re-check every basis vector against every condition row
  for (const auto& vec : out.basis) {
    for (std::size_t r = 0; r < m.rows; ++r) {
      uint64_t acc = 0;
      for (std::size_t c = 0; c < m.cols; ++c) acc = f.add(acc, f.mul(m.at(r, c), vec[c]));
      if (acc != 0) {
        throw invariant_violation("section_basis: kernel vector fails a condition row");
      }
    }
  }
  return out;
}

bool is_effective_numeric(const Params& p, const DivisorClass& d, const InterpConfig& cfg) {
  return h0(p, d, cfg) > 0;
}

uint64_t evaluate_form(const MonomialIndex& index, const std::vector<uint64_t>& coeffs,
                       const FPoint& at, const PrimeField& f) {
  if (coeffs.size() != index.size()) {
    throw dimension_mismatch("evaluate_form: coefficient/monomial mismatch");
  }
  std::vector<uint64_t> flat;
  for (const auto& aff : at) flat.insert(flat.end(), aff.begin(), aff.end());

  int64_t max_exp = 0;
  for (int64_t d : index.multidegree) max_exp = std::max(max_exp, d);
  std::vector<std::vector<uint64_t>> powers(flat.size());
  for (std::size_t k = 0; k < flat.size(); ++k) {
    powers[k].resize(max_exp + 1);
    powers[k][0] = 1;
    for (int64_t t = 1; t <= max_exp; ++t) powers[k][t] = f.mul(powers[k][t - 1], flat[k]);
  }

  uint64_t acc = 0;
  for (std::size_t col = 0; col < coeffs.size(); ++col) {
    if (coeffs[col] == 0) continue;
    uint64_t term = coeffs[col];
    const auto& expo = index.columns[col];
    for (std::size_t k = 0; k < expo.size(); ++k) term = f.mul(term, powers[k][expo[k]]);
    acc = f.add(acc, term);
  }
  return acc;
}

std::string section_basis_to_json(const SectionBasis& basis, const Params& p) {
  nlohmann::json j;
  j["divisor"] = format_divisor(basis.divisor, p);
  j["prime"] = basis.prime;
  j["dimension"] = basis.basis.size();
  auto& monomials = j["monomials"] = nlohmann::json::array();
  for (const auto& flat : basis.monomials.columns) {
    // projective exponents per factor: leading exponent is the slack
    nlohmann::json factors = nlohmann::json::array();
    std::size_t k = 0;
    for (std::size_t i = 0; i < basis.monomials.multidegree.size(); ++i) {
      nlohmann::json expo = nlohmann::json::array();
      int64_t used = 0;
      for (int64_t v = 0; v < basis.monomials.vars_per_factor; ++v) used += flat[k + v];
      expo.push_back(basis.monomials.multidegree[i] - used);
      for (int64_t v = 0; v < basis.monomials.vars_per_factor; ++v) expo.push_back(flat[k + v]);
      k += static_cast<std::size_t>(basis.monomials.vars_per_factor);
      factors.push_back(std::move(expo));
    }
    monomials.push_back(std::move(factors));
  }
  auto& rows = j["basis"] = nlohmann::json::array();
  for (const auto& vec : basis.basis) {
    nlohmann::json row = nlohmann::json::array();
    for (uint64_t v : vec) row.push_back(std::to_string(v));
    rows.push_back(std::move(row));
  }
  return j.dump(2);
}

std::string condition_matrix_to_json(const GfMatrix& m, const Params& p,
                                     const DivisorClass& d, const InterpConfig& cfg) {
  nlohmann::json j;
  j["params"] = {{"a", p.a}, {"b", p.b}, {"c", p.c}};
  j["divisor"] = format_divisor(d, p);
  j["prime"] = cfg.prime;
  j["seed"] = cfg.seed;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  auto& rows = j["matrix"] = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return j.dump();
}

} // namespace mukai
