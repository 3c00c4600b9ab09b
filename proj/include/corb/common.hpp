// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>

namespace corb {

// Error taxonomy mirrors the CLI exit codes: usage=1, data=2, numerical=3.
class Error : public std::runtime_error {
 public:
  enum class Kind { kUsage = 1, kData = 2, kNumerical = 3 };

  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  Kind kind_;
};

[[noreturn]] inline void usage_error(const std::string& msg) {
  throw Error(Error::Kind::kUsage, msg);
}
[[noreturn]] inline void data_error(const std::string& msg) {
  throw Error(Error::Kind::kData, msg);
}
[[noreturn]] inline void numerical_error(const std::string& msg) {
  throw Error(Error::Kind::kNumerical, msg);
}

inline void require(bool cond, Error::Kind kind, const std::string& msg) {
  if (!cond) throw Error(kind, msg);
}

// Rejects NaN/Inf right where they appear instead of letting them propagate.
template <typename T>
void ensure_finite(std::span<const T> values, const char* op_name) {
  constexpr T kMax = std::numeric_limits<T>::max();
  const T* p = values.data();
  const size_t n = values.size();
  for (size_t i = 0; i < n; ++i) {
    if (!(std::fabs(p[i]) <= kMax)) {
      std::ostringstream os;
      os << op_name << ": non-finite value at flat index " << i;
      numerical_error(os.str());
    }
  }
}

// Number of threads the BLAS backend may use. 1 (the default) pins a fixed
// reduction order, which is what deterministic mode requires.
void set_blas_threads(int n);
int blas_threads();

}  // namespace corb
