// Copyright 2026 The mirrorchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Shared numeric aliases, error types and small helpers used by every
 * mirrorchain module.
 */
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mirrorchain {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad argument: wrong dimension, out-of-range site, invalid parameter.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// A numerical procedure left its trusted regime (e.g. integrator drift).
class NumericalError : public Error {
  public:
    using Error::Error;
};

inline void require(bool cond, const std::string &msg) {
    if (!cond) {
        throw InvalidArgument(msg);
    }
}

/// Non-negative remainder of v modulo m (m > 0).
constexpr std::int64_t mod_floor(std::int64_t v, std::int64_t m) {
    const std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

/// Integer power d^n with overflow guard for the sizes used here.
inline std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > (std::size_t{1} << 40) / base) {
            throw InvalidArgument("dimension overflow in ipow");
        }
        r *= base;
    }
    return r;
}

/// Largest entrywise modulus of a - b.
template <class A, class B> double max_abs_diff(const A &a, const B &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

/// || U^dag U - I ||_max
inline double unitarity_defect(const CMatrix &u) {
    return max_abs_diff(u.adjoint() * u, CMatrix::Identity(u.cols(), u.cols()));
}

} // namespace mirrorchain
