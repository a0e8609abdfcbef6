#pragma once

#include <stdexcept>
#include <string>

namespace mukai {

// Thrown when (a,b,c) violates the parameter constraints.
class invalid_params : public std::invalid_argument {
public:
  explicit invalid_params(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a divisor's coordinate lengths do not match the Params.
class dimension_mismatch : public std::invalid_argument {
public:
  explicit dimension_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown by operations that require a finite Weyl group (1/a + 1/b + 1/c > 1).
class not_mori_dream : public std::domain_error {
public:
  explicit not_mori_dream(const std::string& what) : std::domain_error(what) {}
};

// Orbit or enumeration grew past the configured cap.
class limit_exceeded : public std::runtime_error {
public:
  explicit limit_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical invariant that should be unconditionally true failed.
// Seeing this means a bug, not a bad input.
class invariant_violation : public std::logic_error {
public:
  explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

// Malformed divisor text or JSON.
class parse_error : public std::invalid_argument {
public:
  explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

// Bad interpolation setup (prime too small, composite prime, ...).
class interp_error : public std::invalid_argument {
public:
  explicit interp_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace mukai
