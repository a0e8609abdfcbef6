#pragma once

#include <cstdint>
#include <string>

#include "mukai/errors.hpp"

namespace mukai {

enum class CaseLabel {
  DelPezzoSurface, // X_{2,b,3}, a blown-up projective plane
  TwoExtraPoints,  // X_{2,2,c}
  OneExtraPoint,   // X_{a,1,c}
  Sporadic,        // one of the five isolated triples
};

std::string to_string(CaseLabel label);

// The triple (a,b,c) describing the blow-up of (P^{c-1})^{a-1} at b+c
// general points, together with the constants derived from it.
//
// Constraints: a >= 2, c >= 2, b >= 1, and a > 2 whenever c = 2.
struct Params {
  int64_t a = 0;
  int64_t b = 0;
  int64_t c = 0;

  Params() = default;
  Params(int64_t a_, int64_t b_, int64_t c_);

  // Picard rank (a-1) + (b+c).
  int64_t rank() const { return (a - 1) + b + c; }
  // Dimension of the variety, (a-1)(c-1).
  int64_t dim() const { return (a - 1) * (c - 1); }
  // Degree normalizer ac - a - c; equals dim() - 1.
  int64_t kappa() const { return a * c - a - c; }
  int64_t num_factors() const { return a - 1; }
  int64_t num_points() const { return b + c; }

  // The coordinate swap (a,b,c) <-> (c,b,a).
  Params swapped() const { return Params(c, b, a); }

  friend bool operator==(const Params&, const Params&) = default;
};

// Exact test of 1/a + 1/b + 1/c > 1 (integer cross-multiplication).
bool is_mori_dream(const Params& p);

// Places p in the four-way classification. Swaps (a,b,c) <-> (c,b,a)
// so that a <= c before matching. Requires is_mori_dream(p).
CaseLabel classify_case(const Params& p);

std::string to_string(const Params& p);

} // namespace mukai
