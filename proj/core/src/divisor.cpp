#include "mukai/divisor.hpp"

#include <charconv>
#include <sstream>

namespace mukai {

namespace {

[[noreturn]] void overflow(const char* op) {
  throw std::overflow_error(std::string("int64 overflow in divisor ") + op);
}

} // namespace

int64_t checked_add(int64_t x, int64_t y) {
  int64_t r;
  if (__builtin_add_overflow(x, y, &r)) overflow("add");
  return r;
}

int64_t checked_sub(int64_t x, int64_t y) {
  int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) overflow("sub");
  return r;
}

int64_t checked_mul(int64_t x, int64_t y) {
  int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) overflow("mul");
  return r;
}

DivisorClass DivisorClass::zero(const Params& p) {
  return DivisorClass(std::vector<int64_t>(p.num_factors(), 0),
                      std::vector<int64_t>(p.num_points(), 0));
}

DivisorClass DivisorClass::hyperplane(const Params& p, int64_t i) {
  if (i < 1 || i > p.num_factors()) {
    throw dimension_mismatch("hyperplane index out of range");
  }
  DivisorClass d = zero(p);
  d.h[i - 1] = 1;
  return d;
}

DivisorClass DivisorClass::exceptional(const Params& p, int64_t j) {
  if (j < 1 || j > p.num_points()) {
    throw dimension_mismatch("exceptional index out of range");
  }
  DivisorClass d = zero(p);
  d.m[j - 1] = -1;
  return d;
}

bool DivisorClass::is_zero() const {
  for (int64_t v : h)
    if (v != 0) return false;
  for (int64_t v : m)
    if (v != 0) return false;
  return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& rhs) {
  if (h.size() != rhs.h.size() || m.size() != rhs.m.size()) {
    throw dimension_mismatch("divisor addition: mismatched coordinate lengths");
  }
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = checked_add(h[i], rhs.h[i]);
  for (std::size_t j = 0; j < m.size(); ++j) m[j] = checked_add(m[j], rhs.m[j]);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& rhs) {
  if (h.size() != rhs.h.size() || m.size() != rhs.m.size()) {
    throw dimension_mismatch("divisor subtraction: mismatched coordinate lengths");
  }
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = checked_sub(h[i], rhs.h[i]);
  for (std::size_t j = 0; j < m.size(); ++j) m[j] = checked_sub(m[j], rhs.m[j]);
  return *this;
}

DivisorClass& DivisorClass::operator*=(int64_t scalar) {
  for (auto& v : h) v = checked_mul(v, scalar);
  for (auto& v : m) v = checked_mul(v, scalar);
  return *this;
}

std::strong_ordering operator<=>(const DivisorClass& x, const DivisorClass& y) {
  if (auto c = x.h <=> y.h; c != 0) return c;
  return x.m <=> y.m;
}

void check_compatible(const DivisorClass& d, const Params& p, const char* where) {
  if (!d.compatible_with(p)) {
    std::ostringstream os;
    os << where << ": divisor has " << d.h.size() << "+" << d.m.size()
       << " coordinates, expected " << p.num_factors() << "+" << p.num_points()
       << " for " << to_string(p);
    throw dimension_mismatch(os.str());
  }
}

std::size_t DivisorHash::operator()(const DivisorClass& d) const noexcept {
  // FNV-1a over the coordinate words.
  std::size_t hash = 1469598103934665603ull;
  auto mix = [&hash](int64_t v) {
    auto u = static_cast<uint64_t>(v);
    for (int k = 0; k < 8; ++k) {
      hash ^= (u >> (8 * k)) & 0xffu;
      hash *= 1099511628211ull;
    }
  };
  for (int64_t v : d.h) mix(v);
  for (int64_t v : d.m) mix(v);
  return hash;
}

std::string format_divisor(const DivisorClass& d, const Params& p) {
  check_compatible(d, p, "format_divisor");
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < d.h.size(); ++i) {
    if (i) os << ",";
    os << d.h[i];
  }
  os << " | ";
  for (std::size_t j = 0; j < d.m.size(); ++j) {
    if (j) os << ",";
    os << d.m[j];
  }
  os << "]";
  return os.str();
}

namespace {

std::vector<int64_t> parse_int_list(std::string_view s, const std::string& text) {
  std::vector<int64_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - pos);
    // trim blanks
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    if (tok.empty()) throw parse_error("empty coordinate in divisor text: " + text);
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw parse_error("bad integer '" + std::string(tok) + "' in divisor text: " + text);
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

} // namespace

DivisorClass parse_divisor(const std::string& text, const Params& p) {
  std::string_view s(text);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw parse_error("divisor text must look like \"[h1,... | m1,...]\": " + text);
  }
  s = s.substr(1, s.size() - 2);
  std::size_t bar = s.find('|');
  if (bar == std::string_view::npos) {
    throw parse_error("divisor text missing '|' separator: " + text);
  }
  DivisorClass d(parse_int_list(s.substr(0, bar), text),
                 parse_int_list(s.substr(bar + 1), text));
  if (!d.compatible_with(p)) {
    std::ostringstream os;
    os << "divisor text has " << d.h.size() << "+" << d.m.size()
       << " coordinates, expected " << p.num_factors() << "+" << p.num_points()
       << " for " << to_string(p) << ": " << text;
    throw parse_error(os.str());
  }
  return d;
}

} // namespace mukai
