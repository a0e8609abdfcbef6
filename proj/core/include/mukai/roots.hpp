#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mukai/divisor.hpp"
#include "mukai/lattice.hpp"
#include "mukai/params.hpp"

namespace mukai {

// Classification of the T-shaped diagram with legs a, b, c.
struct DynkinType {
  char family = '?'; // 'A', 'D', 'E', or '?' when not finite
  int64_t rank = 0;  // subscript; 0 when not finite

  bool finite() const { return family != '?'; }
  std::string name() const;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

// Simple roots of the orthogonal complement of -K, in a fixed order:
// the chain E_j - E_{j+1} (j = 1..b+c-1), the branch root
// H_1 - E_1 - ... - E_c, then the factor chain H_{i+1} - H_i (i = 1..a-2).
//
// Every root has self-pairing -2 and is orthogonal to -K. The factor chain
// carries the sign that makes all Cartan off-diagonal entries land in
// {0,-1}; reflections are insensitive to the sign of a root.
struct RootSystem {
  Params params;
  std::vector<DivisorClass> simple_roots;
  std::vector<std::vector<int64_t>> cartan; // A_ij = -(alpha_i, alpha_j)
};

RootSystem simple_roots(const Params& p);

std::vector<std::vector<int64_t>> cartan_matrix(const RootSystem& rs);

// Sorted legs (1,q,r) -> A_{q+r-1}; (2,2,r) -> D_{r+2}; (2,3,3/4/5) -> E_6/7/8;
// everything else is not finite.
DynkinType dynkin_type(const Params& p);

// Exact positive-definiteness via leading principal minors (integer
// determinants, no floating point).
bool cartan_positive_definite(const RootSystem& rs);

// s_alpha(D) = D + (D, alpha) * alpha. Requires (alpha, alpha) = -2.
DivisorClass reflect(const DivisorClass& d, const DivisorClass& alpha, const Params& p);

// Leg lengths of the adjacency tree measured from the unique degree-3
// vertex, each counting that vertex, sorted ascending. Returns an empty
// vector when the diagram is a path (some leg has length 1). Throws if the
// adjacency graph is not a tree of the expected shape.
std::vector<int64_t> adjacency_tree_legs(const RootSystem& rs);

// Cartan matrix as CSV (integers, row order = root order).
std::string cartan_csv(const RootSystem& rs);

} // namespace mukai
