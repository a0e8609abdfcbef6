#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mukai/divisor.hpp"
#include "mukai/gf.hpp"
#include "mukai/params.hpp"

namespace mukai {

// A point of (P^{c-1})^{a-1} over F_p in chart-normalized form: per factor
// the c-1 affine coordinates (leading projective coordinate fixed to 1).
using FPoint = std::vector<std::vector<uint64_t>>;

inline constexpr uint64_t kDefaultPrime = 2147483647;

// Setup for interpolation at b+c points: either explicit coordinates or a
// deterministic draw from (prime, seed). Random points stand in for general
// ones; generality failures have probability O(1/prime) and are caught by
// cross-seed comparison.
struct InterpConfig {
  uint64_t prime = kDefaultPrime;
  uint64_t seed = 1;
  std::optional<std::vector<FPoint>> points;

  InterpConfig with_seed(uint64_t s) const {
    InterpConfig c = *this;
    c.seed = s;
    return c;
  }
};

// The blown-up points for (p, cfg): explicit ones when provided, otherwise
// drawn from the seed. Depends only on (prime, seed, p), never on a divisor,
// so every section space in one run lives over the same configuration.
std::vector<FPoint> interp_points(const Params& p, const InterpConfig& cfg);

// Column index of the space of multihomogeneous forms of multidegree d:
// per factor, affine exponent vectors of total degree <= d_i, combined
// factor-major. Size = prod C(c-1+d_i, c-1).
struct MonomialIndex {
  std::vector<int64_t> multidegree;
  int64_t vars_per_factor = 0;
  // Flattened affine exponents, length (a-1)(c-1) each.
  std::vector<std::vector<int32_t>> columns;

  std::size_t size() const { return columns.size(); }
};

MonomialIndex monomial_index(const Params& p, const std::vector<int64_t>& multidegree);

// Dense matrix over F_p, row-major.
struct GfMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<uint64_t> data;

  uint64_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  uint64_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

std::size_t gf_rank(GfMatrix m, const PrimeField& f);
// Basis of the right kernel, one vector per row, in reduced echelon order.
std::vector<std::vector<uint64_t>> gf_kernel_basis(GfMatrix m, const PrimeField& f);

// Fat-point condition matrix: one row per (point j, derivative order < m_j),
// one column per monomial of multidegree d. Entries are Taylor coefficients
// of the translated monomials, exact over F_p for any characteristic.
// Requires d >= 0 and m >= 0 componentwise and prime > max m_j.
GfMatrix condition_matrix(const Params& p, const DivisorClass& d, const InterpConfig& cfg);

// h0 = #monomials - rank(conditions). Negative multidegrees short-circuit
// to 0; negative multiplicities (classes containing exceptional components)
// are clamped to 0 before building conditions.
int64_t h0(const Params& p, const DivisorClass& d, const InterpConfig& cfg);

struct MultiSeedValue {
  int64_t value = 0; // majority value
  bool unanimous = false;
  std::vector<int64_t> values;
};

// h0 across `seeds` derived seeds; majority value plus agreement flag.
MultiSeedValue h0_multiseed(const Params& p, const DivisorClass& d, const InterpConfig& cfg,
                            int seeds = 3);

struct SectionBasis {
  DivisorClass divisor;
  uint64_t prime = 0;
  MonomialIndex monomials;
  std::vector<std::vector<uint64_t>> basis; // coefficient rows, kernel of conditions
};

// Kernel basis of the condition matrix; every basis vector is re-checked
// against all conditions before returning.
SectionBasis section_basis(const Params& p, const DivisorClass& d, const InterpConfig& cfg);

bool is_effective_numeric(const Params& p, const DivisorClass& d, const InterpConfig& cfg);

// Value of a coefficient vector at a chart-normalized point.
uint64_t evaluate_form(const MonomialIndex& index, const std::vector<uint64_t>& coeffs,
                       const FPoint& at, const PrimeField& f);

std::string section_basis_to_json(const SectionBasis& basis, const Params& p);
std::string condition_matrix_to_json(const GfMatrix& m, const Params& p,
                                     const DivisorClass& d, const InterpConfig& cfg);

} // namespace mukai
