// Copyright 2026 The cvd Authors
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

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <type_traits>
#include <variant>

#include "cvd/error.hpp"
#include "cvd/types.hpp"

namespace cvd {

/// Default tolerance on max |S Omega S^T - Omega|.
inline constexpr double kSymplecticTol = 1e-9;

/// exp[r(a_i a_j - a_i^dag a_j^dag)/2]; a_i -> a_i cosh(r/2) - a_j^dag sinh(r/2).
struct TwoModeSqueezer {
    int i = 0;
    int j = 1;
    double r = 0.0;
};

/// exp[r(a^2 - a^dag^2)/2]; x -> e^{-r} x, p -> e^{r} p.
struct SingleModeSqueezer {
    int i = 0;
    double r = 0.0;
};

/// exp[theta(a_i^dag a_j - a_i a_j^dag)]; a_i -> a_i cos + a_j sin, a_j -> a_j cos - a_i sin.
struct Beamsplitter {
    int i = 0;
    int j = 1;
    double theta = 0.0;
};

/// exp(i w x_i x_j / 2); p_i -> p_i + w x_j, p_j -> p_j + w x_i.
struct ControlledZ {
    int i = 0;
    int j = 1;
    double weight = 1.0;
};

/// Phase-space translation by d (length 2m, quadrature units).
struct Displacement {
    Vector d;
};

using CircuitElement =
    std::variant<TwoModeSqueezer, SingleModeSqueezer, Beamsplitter, ControlledZ, Displacement>;

/// Heisenberg action of a Gaussian unitary: beta -> S beta + shift.
struct AffineSymplectic {
    Matrix S;
    Vector shift;
};

inline Matrix symplectic_form(int m) {
    if (m < 1) {
        throw Error(ErrorCode::InvalidArgument, "mode count must be positive");
    }
    Matrix omega = Matrix::Zero(2 * m, 2 * m);
    omega.topRightCorner(m, m).setIdentity();
    omega.bottomLeftCorner(m, m) = -Matrix::Identity(m, m);
    return omega;
}

inline double symplectic_residual(const Matrix &S) {
    if (S.rows() != S.cols() || S.rows() % 2 != 0) {
        throw Error(ErrorCode::InvalidArgument, "symplectic matrices are square of even size");
    }
    Matrix omega = symplectic_form(static_cast<int>(S.rows() / 2));
    return (S * omega * S.transpose() - omega).cwiseAbs().maxCoeff();
}

inline bool is_symplectic(const Matrix &S, double tol = kSymplecticTol) {
    return symplectic_residual(S) <= tol && std::abs(S.determinant() - 1.0) <= 1e-6;
}

/// Quadrature shift that displaces mode `mode` by the ladder amplitude alpha.
inline Displacement displacement_on(int m, int mode, Complex alpha) {
    Vector d = Vector::Zero(2 * m);
    if (mode < 0 || mode >= m) {
        throw Error(ErrorCode::IndexOutOfRange, "displaced mode " + std::to_string(mode));
    }
    d(x_index(m, mode)) = 2.0 * alpha.real();
    d(p_index(m, mode)) = 2.0 * alpha.imag();
    return Displacement{std::move(d)};
}

namespace detail {

inline void check_mode(int mode, int m) {
    if (mode < 0 || mode >= m) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "mode " + std::to_string(mode) + " outside [0, " + std::to_string(m) + ")");
    }
}

inline void check_pair(int i, int j, int m) {
    check_mode(i, m);
    check_mode(j, m);
    if (i == j) {
        throw Error(ErrorCode::IndexOutOfRange, "two-mode element needs distinct modes");
    }
}

}  // namespace detail

inline AffineSymplectic element_to_symplectic(const CircuitElement &elem, int m) {
    AffineSymplectic out{Matrix::Identity(2 * m, 2 * m), Vector::Zero(2 * m)};
    Matrix &S = out.S;
    std::visit(
        [&](const auto &e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, TwoModeSqueezer>) {
                detail::check_pair(e.i, e.j, m);
                const double c = std::cosh(e.r / 2), s = std::sinh(e.r / 2);
                const int xi = e.i, xj = e.j, pi = m + e.i, pj = m + e.j;
                S(xi, xi) = c;
                S(xi, xj) = -s;
                S(xj, xj) = c;
                S(xj, xi) = -s;
                S(pi, pi) = c;
                S(pi, pj) = s;
                S(pj, pj) = c;
                S(pj, pi) = s;
            } else if constexpr (std::is_same_v<T, SingleModeSqueezer>) {
                detail::check_mode(e.i, m);
                S(e.i, e.i) = std::exp(-e.r);
                S(m + e.i, m + e.i) = std::exp(e.r);
            } else if constexpr (std::is_same_v<T, Beamsplitter>) {
                detail::check_pair(e.i, e.j, m);
                const double c = std::cos(e.theta), s = std::sin(e.theta);
                for (int off : {0, m}) {
                    const int a = off + e.i, b = off + e.j;
                    S(a, a) = c;
                    S(a, b) = s;
                    S(b, b) = c;
                    S(b, a) = -s;
                }
            } else if constexpr (std::is_same_v<T, ControlledZ>) {
                detail::check_pair(e.i, e.j, m);
                S(m + e.i, e.j) = e.weight;
                S(m + e.j, e.i) = e.weight;
            } else {
                if (e.d.size() != 2 * m) {
                    throw Error(ErrorCode::IndexOutOfRange, "displacement vector must have length 2m");
                }
                out.shift = e.d;
            }
        },
        elem);
    return out;
}

/// Elements are listed in temporal order; the result maps the input state's
/// moments as cov -> S cov S^T, mean -> S mean + shift.
inline AffineSymplectic compose(std::span<const CircuitElement> elements, int m) {
    AffineSymplectic total{Matrix::Identity(2 * m, 2 * m), Vector::Zero(2 * m)};
    for (const auto &elem : elements) {
        AffineSymplectic step = element_to_symplectic(elem, m);
        total.S = step.S * total.S;
        total.shift = step.S * total.shift + step.shift;
    }
    return total;
}

/// Orthogonal symplectic matrix of a Haar-random passive unitary U(m).
inline Matrix random_orthogonal_symplectic(int m, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix z(m, m);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            z(r, c) = Complex(normal(rng), normal(rng));
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ();
    for (int c = 0; c < m; ++c) {
        const Complex d = qr.matrixQR()(c, c);
        const double mag = std::abs(d);
        q.col(c) *= mag > 0 ? d / mag : Complex(1.0);
    }
    Matrix O(2 * m, 2 * m);
    O.topLeftCorner(m, m) = q.real();
    O.topRightCorner(m, m) = -q.imag();
    O.bottomLeftCorner(m, m) = q.imag();
    O.bottomRightCorner(m, m) = q.real();
    return O;
}

/// Passive x squeeze x passive with log-squeezing uniform in [-bound, bound].
inline Matrix random_symplectic(int m, std::uint64_t seed, double squeeze_bound) {
    if (m < 1) {
        throw Error(ErrorCode::InvalidArgument, "mode count must be positive");
    }
    if (!(squeeze_bound >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "squeeze bound must be non-negative");
    }
    std::mt19937_64 rng(seed);
    Matrix left = random_orthogonal_symplectic(m, rng);
    Matrix right = random_orthogonal_symplectic(m, rng);
    std::uniform_real_distribution<double> uniform(-squeeze_bound, squeeze_bound);
    Vector diag(2 * m);
    for (int i = 0; i < m; ++i) {
        const double s = squeeze_bound > 0 ? uniform(rng) : 0.0;
        diag(i) = std::exp(s);
        diag(m + i) = std::exp(-s);
    }
    return left * diag.asDiagonal() * right;
}

}  // namespace cvd
