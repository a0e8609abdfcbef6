#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mukai {

// Exact arbitrary-precision rationals; cpp_rational keeps values in
// canonical reduced form.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline std::string rat_to_string(const Rat& r) { return r.str(); }

Rat rat_from_string(const std::string& text);

} // namespace mukai
