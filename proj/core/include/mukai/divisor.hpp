#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mukai/errors.hpp"
#include "mukai/params.hpp"

namespace mukai {

// All coordinate arithmetic is exact: int64 with overflow detection.
// Reflections can grow coordinates, and a silent wraparound would corrupt
// every orbit downstream, so overflow throws instead.
int64_t checked_add(int64_t x, int64_t y);
int64_t checked_sub(int64_t x, int64_t y);
int64_t checked_mul(int64_t x, int64_t y);

// An integral divisor class sum(h_i H_i) - sum(m_j E_j) on X_{a,b,c}.
// h has length a-1, m has length b+c; m_j is the multiplicity at point j.
struct DivisorClass {
  std::vector<int64_t> h;
  std::vector<int64_t> m;

  DivisorClass() = default;
  DivisorClass(std::vector<int64_t> h_, std::vector<int64_t> m_)
      : h(std::move(h_)), m(std::move(m_)) {}

  // The zero class for p.
  static DivisorClass zero(const Params& p);
  // The hyperplane class H_i (1-based factor index).
  static DivisorClass hyperplane(const Params& p, int64_t i);
  // The exceptional class E_j (1-based point index); its m_j entry is -1.
  static DivisorClass exceptional(const Params& p, int64_t j);

  bool compatible_with(const Params& p) const {
    return static_cast<int64_t>(h.size()) == p.num_factors() &&
           static_cast<int64_t>(m.size()) == p.num_points();
  }

  bool is_zero() const;

  DivisorClass& operator+=(const DivisorClass& rhs);
  DivisorClass& operator-=(const DivisorClass& rhs);
  DivisorClass& operator*=(int64_t scalar);

  friend DivisorClass operator+(DivisorClass lhs, const DivisorClass& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend DivisorClass operator-(DivisorClass lhs, const DivisorClass& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend DivisorClass operator*(int64_t s, DivisorClass d) {
    d *= s;
    return d;
  }
  friend DivisorClass operator-(DivisorClass d) {
    d *= -1;
    return d;
  }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  // Lexicographic on (h, m); fixes serialization order everywhere.
  friend std::strong_ordering operator<=>(const DivisorClass& x, const DivisorClass& y);
};

void check_compatible(const DivisorClass& d, const Params& p, const char* where);

struct DivisorHash {
  std::size_t operator()(const DivisorClass& d) const noexcept;
};

// Text format "[h1,...,h_{a-1} | m1,...,m_{b+c}]".
std::string format_divisor(const DivisorClass& d, const Params& p);
DivisorClass parse_divisor(const std::string& text, const Params& p);

} // namespace mukai
