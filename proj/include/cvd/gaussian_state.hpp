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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvd/error.hpp"
#include "cvd/symplectic.hpp"
#include "cvd/types.hpp"

namespace cvd {

/// Smallest admissible symplectic eigenvalue is 1 - kPhysicalTol.
inline constexpr double kPhysicalTol = 1e-9;
/// A global state counts as pure when its purity is at least 1 - kPureTol.
inline constexpr double kPureTol = 1e-6;

/// Gaussian state in shot-noise units: first moments and covariance matrix.
struct GaussianState {
    Vector mean;
    Matrix cov;

    int modes() const {
        return static_cast<int>(mean.size() / 2);
    }
};

/// Sorted set of modes spanning a subsystem, together with the column
/// selection matrices that embed its phase space in the global one.
class SubsystemBasis {
   public:
    SubsystemBasis(int global_modes, std::vector<int> modes) : m_(global_modes), modes_(std::move(modes)) {
        if (modes_.empty()) {
            throw Error(ErrorCode::EmptySubsystem, "subsystem needs at least one mode");
        }
        std::sort(modes_.begin(), modes_.end());
        if (std::adjacent_find(modes_.begin(), modes_.end()) != modes_.end()) {
            throw Error(ErrorCode::InvalidArgument, "duplicate mode in subsystem");
        }
        for (int mode : modes_) {
            detail::check_mode(mode, m_);
        }
    }

    /// Bit i of mask set means mode i belongs to the subsystem.
    static SubsystemBasis from_mask(int global_modes, std::uint64_t mask) {
        std::vector<int> modes;
        for (int i = 0; i < global_modes; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                modes.push_back(i);
            }
        }
        if (global_modes < 64 && (mask >> global_modes) != 0) {
            throw Error(ErrorCode::IndexOutOfRange, "mask selects modes beyond the system");
        }
        return SubsystemBasis(global_modes, std::move(modes));
    }

    int global_modes() const {
        return m_;
    }
    int size() const {
        return static_cast<int>(modes_.size());
    }
    const std::vector<int> &modes() const {
        return modes_;
    }
    bool contains(int mode) const {
        return std::binary_search(modes_.begin(), modes_.end(), mode);
    }
    bool is_full() const {
        return size() == m_;
    }

    int local_index(int mode) const {
        auto it = std::lower_bound(modes_.begin(), modes_.end(), mode);
        if (it == modes_.end() || *it != mode) {
            throw Error(ErrorCode::IndexOutOfRange, "mode " + std::to_string(mode) + " not in subsystem");
        }
        return static_cast<int>(it - modes_.begin());
    }

    std::uint64_t mask() const {
        std::uint64_t mask = 0;
        for (int mode : modes_) {
            mask |= std::uint64_t{1} << mode;
        }
        return mask;
    }

    std::optional<SubsystemBasis> complement() const {
        std::vector<int> rest;
        for (int i = 0; i < m_; ++i) {
            if (!contains(i)) {
                rest.push_back(i);
            }
        }
        if (rest.empty()) {
            return std::nullopt;
        }
        return SubsystemBasis(m_, std::move(rest));
    }

    /// Global quadrature indices in subsystem layout order (x's, then p's).
    std::vector<int> quadrature_indices() const {
        std::vector<int> idx;
        idx.reserve(2 * modes_.size());
        for (int mode : modes_) {
            idx.push_back(x_index(m_, mode));
        }
        for (int mode : modes_) {
            idx.push_back(p_index(m_, mode));
        }
        return idx;
    }

    /// The 2m x 2m_A matrix A whose columns are the subsystem's basis vectors.
    Matrix a_matrix() const {
        const auto idx = quadrature_indices();
        Matrix A = Matrix::Zero(2 * m_, static_cast<Eigen::Index>(idx.size()));
        for (std::size_t c = 0; c < idx.size(); ++c) {
            A(idx[c], static_cast<Eigen::Index>(c)) = 1.0;
        }
        return A;
    }

   private:
    int m_;
    std::vector<int> modes_;
};

/// The 2m x 2 matrix G selecting the quadratures of mode g.
inline Matrix mode_selector(int m, int g) {
    detail::check_mode(g, m);
    Matrix G = Matrix::Zero(2 * m, 2);
    G(x_index(m, g), 0) = 1.0;
    G(p_index(m, g), 1) = 1.0;
    return G;
}

inline GaussianState vacuum(int m) {
    if (m < 1) {
        throw Error(ErrorCode::InvalidArgument, "mode count must be positive");
    }
    return GaussianState{Vector::Zero(2 * m), Matrix::Identity(2 * m, 2 * m)};
}

/// Product of thermal modes with cov diag(nu, nu).
inline GaussianState thermal_state(std::span<const double> nu) {
    const int m = static_cast<int>(nu.size());
    GaussianState state = vacuum(m);
    for (int i = 0; i < m; ++i) {
        if (!(nu[i] >= 1.0 - kPhysicalTol)) {
            throw Error(ErrorCode::UnphysicalState, "thermal occupation below shot noise");
        }
        state.cov(i, i) = nu[i];
        state.cov(m + i, m + i) = nu[i];
    }
    return state;
}

inline GaussianState evolve(const GaussianState &state, std::span<const CircuitElement> elements) {
    const AffineSymplectic map = compose(elements, state.modes());
    return GaussianState{map.S * state.mean + map.shift, map.S * state.cov * map.S.transpose()};
}

inline GaussianState evolve(const GaussianState &state, const CircuitElement &element) {
    return evolve(state, std::span<const CircuitElement>(&element, 1));
}

/// Marginal on the subsystem: V_A = A^T V A, mean_A = A^T mean.
inline GaussianState reduce(const GaussianState &state, const SubsystemBasis &subsystem) {
    if (subsystem.global_modes() != state.modes()) {
        throw Error(ErrorCode::InvalidArgument, "subsystem built for a different mode count");
    }
    const auto idx = subsystem.quadrature_indices();
    const auto n = static_cast<Eigen::Index>(idx.size());
    GaussianState out{Vector(n), Matrix(n, n)};
    for (Eigen::Index r = 0; r < n; ++r) {
        out.mean(r) = state.mean(idx[r]);
        for (Eigen::Index c = 0; c < n; ++c) {
            out.cov(r, c) = state.cov(idx[r], idx[c]);
        }
    }
    return out;
}

/// tr(rho^2) = 1 / sqrt(det V).
inline double purity(const GaussianState &state) {
    Eigen::LLT<Matrix> llt(state.cov);
    if (llt.info() != Eigen::Success) {
        throw Error(ErrorCode::UnphysicalState, "covariance matrix is not positive definite");
    }
    // det V = prod(diag L)^2, so 1/sqrt(det V) = 1/prod(diag L).
    double log_det_half = 0.0;
    for (Eigen::Index i = 0; i < state.cov.rows(); ++i) {
        log_det_half += std::log(llt.matrixLLT()(i, i));
    }
    const double mu = std::exp(-log_det_half);
    if (mu > 1.0 + kPhysicalTol) {
        throw Error(ErrorCode::UnphysicalState, "purity exceeds one");
    }
    return std::min(mu, 1.0);
}

/// V = S diag(nu, nu) S^T with symplectic S; nu sorted descending.
struct WilliamsonDecomposition {
    Matrix S;
    Vector nu;
    Vector mean;

    int modes() const {
        return static_cast<int>(nu.size());
    }
};

/// Normal-mode decomposition from the Hermitian eigenproblem of
/// i V^{-1/2} Omega V^{-1/2}. Its positive eigenvalues are 1/nu_j; the real and
/// imaginary parts of the eigenvectors give an orthogonal O with
/// O^T M O = [[0, D^-1], [-D^-1, 0]], and S = V^{1/2} O diag(nu, nu)^{-1/2}.
/// Degenerate spectra are handled by the solver returning an orthonormal
/// basis of each eigenspace, which stays orthogonal after splitting.
inline WilliamsonDecomposition williamson(const GaussianState &state) {
    const int m = state.modes();
    const Matrix &V = state.cov;
    if ((V - V.transpose()).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, V.cwiseAbs().maxCoeff())) {
        throw Error(ErrorCode::UnphysicalState, "covariance matrix is not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> sym(0.5 * (V + V.transpose()));
    if (sym.info() != Eigen::Success) {
        throw Error(ErrorCode::NumericalFailure, "covariance eigen-decomposition failed");
    }
    const Vector w = sym.eigenvalues();
    if (w.minCoeff() <= 0.0) {
        throw Error(ErrorCode::UnphysicalState, "covariance matrix is not positive definite");
    }
    const Matrix &U = sym.eigenvectors();
    const Matrix sqrt_v = U * w.cwiseSqrt().asDiagonal() * U.transpose();
    const Matrix inv_sqrt_v = U * w.cwiseSqrt().cwiseInverse().asDiagonal() * U.transpose();
    const Matrix M = inv_sqrt_v * symplectic_form(m) * inv_sqrt_v;

    const CMatrix H = Complex(0.0, 1.0) * M.cast<Complex>();
    Eigen::SelfAdjointEigenSolver<CMatrix> herm(H);
    if (herm.info() != Eigen::Success) {
        throw Error(ErrorCode::NumericalFailure, "symplectic eigen-decomposition failed");
    }
    // Eigenvalues ascend; the upper half are +1/nu_j, i.e. nu descending.
    Matrix O(2 * m, 2 * m);
    Vector nu(m);
    for (int j = 0; j < m; ++j) {
        const double lambda = herm.eigenvalues()(m + j);
        if (!(lambda > 0.0)) {
            throw Error(ErrorCode::NumericalFailure, "symplectic spectrum lost its +/- pairing");
        }
        nu(j) = 1.0 / lambda;
        const CVector v = herm.eigenvectors().col(m + j);
        O.col(j) = std::sqrt(2.0) * v.imag();
        O.col(m + j) = std::sqrt(2.0) * v.real();
    }
    if (nu.minCoeff() < 1.0 - kPhysicalTol) {
        throw Error(ErrorCode::UnphysicalState,
                    "symplectic eigenvalue " + std::to_string(nu.minCoeff()) + " below shot noise");
    }
    Vector scale(2 * m);
    scale << nu.cwiseSqrt().cwiseInverse(), nu.cwiseSqrt().cwiseInverse();
    WilliamsonDecomposition out{sqrt_v * O * scale.asDiagonal(), nu, state.mean};

    Vector diag(2 * m);
    diag << nu, nu;
    const double recon = (out.S * diag.asDiagonal() * out.S.transpose() - V).norm() / V.norm();
    if (!(recon < 1e-6)) {
        throw Error(ErrorCode::NumericalFailure, "Williamson reconstruction error " + std::to_string(recon));
    }
    return out;
}

/// One row of the Bogoliubov map a_g -> k . a^dag + l . a + alpha_g taken
/// from the normal-mode frame of a Williamson decomposition.
struct BogoliubovRow {
    CVector k;
    CVector l;
    Complex alpha_g;
};

inline BogoliubovRow bogoliubov_row(const WilliamsonDecomposition &decomp, int g) {
    const int m = decomp.modes();
    detail::check_mode(g, m);
    const Matrix &S = decomp.S;
    BogoliubovRow row{CVector(m), CVector(m), Complex(decomp.mean(g), decomp.mean(m + g)) / 2.0};
    const Complex I(0.0, 1.0);
    for (int j = 0; j < m; ++j) {
        // a_g = (x_g + i p_g)/2 with x_g = sum S(g,.) beta, p_g = sum S(m+g,.) beta.
        const Complex u = Complex(S(g, j), S(m + g, j));
        const Complex v = Complex(S(g, m + j), S(m + g, m + j));
        row.k(j) = 0.5 * (u + I * v);
        row.l(j) = 0.5 * (u - I * v);
    }
    return row;
}

/// -log tr(rho_A^2) for a pure global state.
inline double renyi2_entanglement_pure(const GaussianState &global, const SubsystemBasis &subsystem) {
    if (purity(global) < 1.0 - kPureTol) {
        throw Error(ErrorCode::GlobalStateNotPure, "entanglement needs a pure global state");
    }
    return -std::log(purity(reduce(global, subsystem)));
}

}  // namespace cvd
