// Copyright 2026 The hamred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HAMRED_CORE_COMMON_HPP
#define HAMRED_CORE_COMMON_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hamred {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

enum class ErrorCode {
    InvalidArgument,
    Schema,
    CapExceeded,
    Precondition,
    NotCertified,
    SearchExhausted,
    Internal,
};

const char *error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto hamred_status values.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string &what);

inline void require(bool condition, ErrorCode code, const std::string &what) {
    if (!condition) fail(code, what);
}

namespace tol {
/// Structural checks: Hermiticity, unitarity, orthonormality.
inline constexpr double structural = 1e-10;
/// Spectral checks scale with the operator: 1e-8 * (1 + ||H||).
inline constexpr double spectral = 1e-8;
/// Default slack when comparing an eigenvalue against a threshold.
inline constexpr double slack = 1e-9;
/// Default null-space cut, applied relative to max(1, ||H||).
inline constexpr double null = 1e-9;
}  // namespace tol

/// Largest dense dimension eig() accepts. Defaults to 8192, or HAMRED_DIM_CAP
/// when that variable is set at first use.
std::size_t dim_cap();
void set_dim_cap(std::size_t cap);

inline bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

inline std::size_t next_power_of_two(std::size_t v) {
    std::size_t p = 1;
    while (p < v) p <<= 1;
    return p;
}

inline int log2_exact(std::size_t v) {
    int k = 0;
    while ((std::size_t{1} << k) < v) ++k;
    return k;
}

}  // namespace hamred

#endif  // HAMRED_CORE_COMMON_HPP
