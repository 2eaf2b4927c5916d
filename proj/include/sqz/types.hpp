#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace sqz {

using cplx = std::complex<double>;

// Error categories map one-to-one onto the C API status codes and the CLI
// exit codes: domain -> 1, numeric -> 2, io -> 3.
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Overflow, series non-convergence, poles of an evaluation route, and
// truncation budgets blown by a too-small cutoff all land here.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline bool is_finite(cplx v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

}  // namespace sqz
