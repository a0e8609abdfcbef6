#pragma once

#include <cstdint>
#include <vector>

#include "mukai/divisor.hpp"
#include "mukai/params.hpp"

namespace mukai {

// Gram matrix of the Mukai pairing in the basis (H_1..H_{a-1}, E_1..E_{b+c}):
// H-block (c-1) - delta_ij, E-block -identity, cross blocks zero.
std::vector<std::vector<int64_t>> mukai_gram(const Params& p);

// The symmetric bilinear form (H_i,H_j) = (c-1) - delta_ij,
// (E_i,E_j) = -delta_ij, (H_i,E_j) = 0, extended bilinearly.
int64_t mukai_pairing(const DivisorClass& x, const DivisorClass& y, const Params& p);

// Self-pairing (D,D).
int64_t self_pairing(const DivisorClass& d, const Params& p);

// -K = c * sum(H_i) - kappa * sum(E_j). Orthogonal to every simple root.
DivisorClass anticanonical(const Params& p);

// deg(D) = (D,-K) / kappa. Always an exact integer for integral D:
// (H_i,-K) = c*kappa and (E_j,-K) = kappa.
int64_t anticanonical_degree(const DivisorClass& d, const Params& p);

} // namespace mukai
