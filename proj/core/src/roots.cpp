#include "mukai/roots.hpp"

#include <algorithm>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace mukai {

using BigInt = boost::multiprecision::cpp_int;

std::string DynkinType::name() const {
  if (!finite()) return "NOT-FINITE";
  std::ostringstream os;
  os << family << "_" << rank;
  return os.str();
}

RootSystem simple_roots(const Params& p) {
  RootSystem rs;
  rs.params = p;
  const int64_t points = p.num_points();
  for (int64_t j = 1; j < points; ++j) {
    DivisorClass alpha = DivisorClass::zero(p);
    alpha.m[j - 1] = -1; // E_j - E_{j+1} has multiplicities (-1, +1) at (j, j+1)
    alpha.m[j] = 1;
    rs.simple_roots.push_back(std::move(alpha));
  }
  DivisorClass branch = DivisorClass::zero(p);
  branch.h[0] = 1;
  for (int64_t j = 0; j < p.c; ++j) branch.m[j] = 1;
  rs.simple_roots.push_back(std::move(branch));
  for (int64_t i = 1; i <= p.a - 2; ++i) {
    DivisorClass alpha = DivisorClass::zero(p);
    alpha.h[i] = 1; // H_{i+1} - H_i
    alpha.h[i - 1] = -1;
    rs.simple_roots.push_back(std::move(alpha));
  }

  const auto n = rs.simple_roots.size();
  rs.cartan.assign(n, std::vector<int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      int64_t entry = -mukai_pairing(rs.simple_roots[i], rs.simple_roots[j], p);
      rs.cartan[i][j] = entry;
      rs.cartan[j][i] = entry;
    }
  }
  return rs;
}

std::vector<std::vector<int64_t>> cartan_matrix(const RootSystem& rs) {
  return rs.cartan;
}

DynkinType dynkin_type(const Params& p) {
  std::vector<int64_t> legs = {p.a, p.b, p.c};
  std::sort(legs.begin(), legs.end());
  const int64_t vertices = p.a + p.b + p.c - 2;
  if (legs[0] == 1) return {'A', vertices};
  if (legs[0] == 2 && legs[1] == 2) return {'D', vertices};
  if (legs[0] == 2 && legs[1] == 3 && legs[2] >= 3 && legs[2] <= 5) {
    return {'E', vertices};
  }
  return {};
}

bool cartan_positive_definite(const RootSystem& rs) {
  // Leading principal minors, exact fraction-free elimination.
  const std::size_t n = rs.cartan.size();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rs.cartan[i][j];

  // Bareiss elimination: after processing column k, a[k][k] holds the
  // (k+1)-st leading principal minor.
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return true;
}

DivisorClass reflect(const DivisorClass& d, const DivisorClass& alpha, const Params& p) {
  check_compatible(d, p, "reflect");
  if (self_pairing(alpha, p) != -2) {
    throw std::invalid_argument("reflect: (alpha,alpha) must be -2, got " +
                                std::to_string(self_pairing(alpha, p)));
  }
  return d + mukai_pairing(d, alpha, p) * alpha;
}

std::vector<int64_t> adjacency_tree_legs(const RootSystem& rs) {
  const std::size_t n = rs.cartan.size();
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rs.cartan[i][j] != 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
      }
    }
  }
  if (edges != n - 1) {
    throw invariant_violation("root adjacency graph is not a tree");
  }
  std::size_t branch = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 3) throw invariant_violation("root adjacency vertex of degree > 3");
    if (adj[i].size() == 3) {
      if (branch != n) throw invariant_violation("more than one degree-3 vertex");
      branch = i;
    }
  }
  if (branch == n) return {}; // path
  std::vector<int64_t> legs;
  for (std::size_t start : adj[branch]) {
    int64_t len = 1;
    std::size_t prev = branch, cur = start;
    while (true) {
      ++len;
      std::size_t next = n;
      for (std::size_t nb : adj[cur]) {
        if (nb != prev) {
          if (next != n) throw invariant_violation("branching inside a leg");
          next = nb;
        }
      }
      if (next == n) break;
      prev = cur;
      cur = next;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  return legs;
}

std::string cartan_csv(const RootSystem& rs) {
  std::ostringstream os;
  for (const auto& row : rs.cartan) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ",";
      os << row[j];
    }
    os << "\n";
  }
  return os.str();
}

} // namespace mukai
