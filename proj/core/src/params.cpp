#include "mukai/params.hpp"

#include <array>
#include <sstream>

namespace mukai {

Params::Params(int64_t a_, int64_t b_, int64_t c_) : a(a_), b(b_), c(c_) {
  if (a < 2 || c < 2 || b < 1) {
    throw invalid_params("require a >= 2, c >= 2, b >= 1; got " + to_string(*this));
  }
  if (c == 2 && a <= 2) {
    throw invalid_params("c = 2 requires a > 2; got " + to_string(*this));
  }
}

bool is_mori_dream(const Params& p) {
  // 1/a + 1/b + 1/c > 1  <=>  bc + ac + ab > abc, exactly in integers.
  return p.b * p.c + p.a * p.c + p.a * p.b > p.a * p.b * p.c;
}

CaseLabel classify_case(const Params& p) {
  if (!is_mori_dream(p)) {
    throw not_mori_dream("classify_case: " + to_string(p) + " is not a Mori dream space");
  }
  Params q = p.a <= p.c ? p : p.swapped();
  // One extra point first: X_{a,1,c} overlaps the del Pezzo row at (2,1,3),
  // and the single-point description is the one reported for b = 1.
  if (q.b == 1) return CaseLabel::OneExtraPoint;
  if (q.a == 2 && q.c == 3) return CaseLabel::DelPezzoSurface;
  if (q.a == 2 && q.b == 2) return CaseLabel::TwoExtraPoints;
  static constexpr std::array<std::array<int64_t, 3>, 5> kSporadic = {{
      {2, 3, 4}, {2, 3, 5}, {3, 2, 3}, {3, 2, 4}, {3, 2, 5}}};
  for (const auto& s : kSporadic) {
    if (q.a == s[0] && q.b == s[1] && q.c == s[2]) return CaseLabel::Sporadic;
  }
  throw invariant_violation("classify_case: Mori dream triple " + to_string(p) +
                            " missing from the classification");
}

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::DelPezzoSurface: return "del-pezzo-surface";
    case CaseLabel::TwoExtraPoints: return "two-extra-points";
    case CaseLabel::OneExtraPoint: return "one-extra-point";
    case CaseLabel::Sporadic: return "sporadic";
  }
  return "?";
}

std::string to_string(const Params& p) {
  std::ostringstream os;
  os << "(" << p.a << "," << p.b << "," << p.c << ")";
  return os.str();
}

} // namespace mukai
