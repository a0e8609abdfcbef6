#include "mukai/lattice.hpp"

#include <sstream>

namespace mukai {

std::vector<std::vector<int64_t>> mukai_gram(const Params& p) {
  const int64_t rho = p.rank();
  const int64_t nf = p.num_factors();
  std::vector<std::vector<int64_t>> g(rho, std::vector<int64_t>(rho, 0));
  for (int64_t i = 0; i < nf; ++i) {
    for (int64_t j = 0; j < nf; ++j) {
      g[i][j] = (p.c - 1) - (i == j ? 1 : 0);
    }
  }
  for (int64_t j = nf; j < rho; ++j) g[j][j] = -1;
  return g;
}

int64_t mukai_pairing(const DivisorClass& x, const DivisorClass& y, const Params& p) {
  check_compatible(x, p, "mukai_pairing");
  check_compatible(y, p, "mukai_pairing");
  // (x,y) = (c-1)*(sum h)(sum h') - sum h_i h'_i - sum m_j m'_j
  int64_t sx = 0, sy = 0;
  for (int64_t v : x.h) sx = checked_add(sx, v);
  for (int64_t v : y.h) sy = checked_add(sy, v);
  int64_t acc = checked_mul(p.c - 1, checked_mul(sx, sy));
  for (std::size_t i = 0; i < x.h.size(); ++i) {
    acc = checked_sub(acc, checked_mul(x.h[i], y.h[i]));
  }
  for (std::size_t j = 0; j < x.m.size(); ++j) {
    acc = checked_sub(acc, checked_mul(x.m[j], y.m[j]));
  }
  return acc;
}

int64_t self_pairing(const DivisorClass& d, const Params& p) {
  return mukai_pairing(d, d, p);
}

DivisorClass anticanonical(const Params& p) {
  return DivisorClass(std::vector<int64_t>(p.num_factors(), p.c),
                      std::vector<int64_t>(p.num_points(), p.kappa()));
}

int64_t anticanonical_degree(const DivisorClass& d, const Params& p) {
  const int64_t pairing = mukai_pairing(d, anticanonical(p), p);
  const int64_t kappa = p.kappa();
  if (pairing % kappa != 0) {
    std::ostringstream os;
    os << "anticanonical_degree: (D,-K) = " << pairing << " not divisible by kappa = "
       << kappa << " for " << format_divisor(d, p);
    throw invariant_violation(os.str());
  }
  return pairing / kappa;
}

} // namespace mukai
