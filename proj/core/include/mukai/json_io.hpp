#pragma once

#include <string>

#include "mukai/divisor.hpp"
#include "mukai/params.hpp"

namespace mukai {

// JSON counterparts of the text formats: {"a":..,"b":..,"c":..} for Params
// and {"h":[...],"m":[...]} for divisor classes.
std::string params_to_json(const Params& p);
Params params_from_json(const std::string& text);

std::string divisor_to_json(const DivisorClass& d, const Params& p);
DivisorClass divisor_from_json(const std::string& text, const Params& p);

} // namespace mukai
