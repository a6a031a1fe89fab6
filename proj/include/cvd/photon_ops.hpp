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

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "cvd/error.hpp"
#include "cvd/gaussian_state.hpp"
#include "cvd/types.hpp"

namespace cvd {

enum class PhotonOp { Subtract, Add };

inline const char *to_string(PhotonOp op) {
    return op == PhotonOp::Subtract ? "subtract" : "add";
}

/// Mean photon numbers below this make a_g rho a_g^dag numerically zero.
inline constexpr double kVacuumThreshold = 1e-10;
/// V_A with a larger condition number is rejected by the Wigner path.
inline constexpr double kMaxCondition = 1e12;

/// Reduced Wigner function of a photon-subtracted Gaussian state,
///   W(beta) = [y^T Q y + q^T y + c] / norm * W_G(beta),  y = beta - mean_A,
/// where W_G is the Gaussian marginal held in `base`.
struct SubtractedReducedState {
    GaussianState base;
    Matrix poly_Q;
    Vector poly_q;
    double poly_c = 0.0;
    double norm = 1.0;

    /// Integral of W over phase space, from the Gaussian moments of W_G.
    double total_weight() const {
        return ((poly_Q * base.cov).trace() + poly_c) / norm;
    }

    double wigner(const Vector &beta) const {
        const Vector y = beta - base.mean;
        const Eigen::LLT<Matrix> llt(base.cov);
        const double quad = y.dot(llt.solve(y));
        const double sqrt_det = llt.matrixL().toDenseMatrix().diagonal().prod();
        const double gauss = std::exp(-0.5 * quad) /
                             (std::pow(2.0 * std::numbers::pi, base.modes()) * sqrt_det);
        return (y.dot(poly_Q * y) + poly_q.dot(y) + poly_c) / norm * gauss;
    }
};

/// Subtract a photon from mode g of `global` and keep subsystem A (g in A).
/// The polynomial prefactor expands
///   |X V_A^{-1} y - alpha_g|^2 + tr(V_g - X V_A^{-1} X^T) - 2
/// with X = G^T (V - 1) A, over the normalisation |alpha_g|^2 + tr V_g - 2.
inline SubtractedReducedState subtract_reduced_wigner(const GaussianState &global, int g,
                                                      const SubsystemBasis &subsystem) {
    const int m = global.modes();
    detail::check_mode(g, m);
    if (!subsystem.contains(g)) {
        throw Error(ErrorCode::InvalidArgument, "subtraction mode must lie in the kept subsystem");
    }
    const Matrix G = mode_selector(m, g);
    const Matrix A = subsystem.a_matrix();
    const Vector alpha_g = G.transpose() * global.mean;
    const Matrix V_g = G.transpose() * global.cov * G;

    const double norm = alpha_g.squaredNorm() + V_g.trace() - 2.0;
    if (!(norm > kVacuumThreshold)) {
        throw Error(ErrorCode::VacuumModeSubtraction,
                    "mode " + std::to_string(g) + " carries no photons to subtract");
    }

    GaussianState base = reduce(global, subsystem);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(base.cov, Eigen::EigenvaluesOnly);
    const double lo = eig.eigenvalues().minCoeff(), hi = eig.eigenvalues().maxCoeff();
    if (!(lo > 0.0) || hi / lo > kMaxCondition) {
        throw Error(ErrorCode::SingularCovariance, "reduced covariance too ill-conditioned to invert");
    }
    const Matrix X = G.transpose() * (global.cov - Matrix::Identity(2 * m, 2 * m)) * A;
    const Eigen::LLT<Matrix> llt(base.cov);
    const Matrix M = llt.solve(X.transpose()).transpose();  // X V_A^{-1}

    SubtractedReducedState out;
    out.poly_Q = M.transpose() * M;
    out.poly_q = -2.0 * M.transpose() * alpha_g;
    out.poly_c = alpha_g.squaredNorm() + (V_g - M * X.transpose()).trace() - 2.0;
    out.norm = norm;
    out.base = std::move(base);
    return out;
}

/// (4 pi)^{m_A} int W^2. W_G^2 is proportional to a Gaussian with covariance
/// V_A / 2, so the integral reduces to E[P(y)^2] under N(0, V_A / 2), which
/// Isserlis' theorem gives in closed form:
///   E[(y^T Q y)^2] = (tr QS)^2 + 2 tr(QSQS),  E[(q^T y)^2] = q^T S q.
inline double purity_of_subtracted(const SubtractedReducedState &state) {
    const Matrix sigma = 0.5 * state.base.cov;
    const Matrix qs = state.poly_Q * sigma;
    const double tr_qs = qs.trace();
    const double second_moment = tr_qs * tr_qs + 2.0 * (qs * qs).trace() +
                                 state.poly_q.dot(sigma * state.poly_q) +
                                 state.poly_c * state.poly_c + 2.0 * state.poly_c * tr_qs;
    return purity(state.base) * second_moment / (state.norm * state.norm);
}

/// mu^-/mu (or mu^+/mu) from thermal occupations and one Bogoliubov row:
///   1/2 + [ (sum Nt_i/n_i)^2/2 + |alpha|^4/2 + |sum k_i l_i (n_i^2-1)/(2n_i)|^2
///           + 2 Re(conj(alpha)^2 sum k_i l_i (n_i^2-1)/(2n_i)) + |alpha|^2 sum N_i ]
///         / (sum N_i + |alpha|^2)^2
/// with N_i = |k_i|^2 (n_i+1)/2 + |l_i|^2 (n_i-1)/2 and Nt_i the same with a
/// minus sign. Addition swaps k <-> l and alpha <-> conj(alpha).
inline double relative_purity_closed_form(const WilliamsonDecomposition &decomp, const BogoliubovRow &row,
                                          PhotonOp op) {
    const Eigen::Index m = decomp.nu.size();
    if (row.k.size() != m || row.l.size() != m) {
        throw Error(ErrorCode::InvalidArgument, "Bogoliubov row does not match the decomposition");
    }
    const bool add = op == PhotonOp::Add;
    const CVector &k = add ? row.l : row.k;
    const CVector &l = add ? row.k : row.l;
    const Complex alpha = add ? std::conj(row.alpha_g) : row.alpha_g;

    double sum_n = 0.0, sum_nt = 0.0;
    Complex sum_kl = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
        const double n = decomp.nu(i);
        const double kk = std::norm(k(i)), ll = std::norm(l(i));
        sum_n += kk * (n + 1) / 2 + ll * (n - 1) / 2;
        sum_nt += (kk * (n + 1) / 2 - ll * (n - 1) / 2) / n;
        sum_kl += k(i) * l(i) * (n * n - 1) / (2 * n);
    }
    const double a2 = std::norm(alpha);
    const double denom = sum_n + a2;
    if (!(denom > kVacuumThreshold)) {
        throw Error(ErrorCode::VacuumModeSubtraction, "photon-subtraction probability vanishes");
    }
    const double numer = 0.5 * sum_nt * sum_nt + 0.5 * a2 * a2 + std::norm(sum_kl) +
                         2.0 * (std::conj(alpha) * std::conj(alpha) * sum_kl).real() + a2 * sum_n;
    return 0.5 + numer / (denom * denom);
}

/// Renyi-2 entanglement of a pure global state before and after the operation.
struct EntanglementChange {
    double before = 0.0;
    double after = 0.0;
    double delta = 0.0;
};

/// Entanglement across the cut (A, complement) gained by subtracting or adding
/// a photon in mode g. If g lies outside A the complement is used instead,
/// which is equivalent for pure global states. Subtraction goes through the
/// reduced Wigner function; addition through the closed form.
inline EntanglementChange entanglement_increase(const GaussianState &global, const SubsystemBasis &subsystem,
                                                int g, PhotonOp op) {
    detail::check_mode(g, global.modes());
    if (purity(global) < 1.0 - kPureTol) {
        throw Error(ErrorCode::GlobalStateNotPure, "entanglement increase needs a pure global state");
    }
    const SubsystemBasis side = subsystem.contains(g) ? subsystem : *subsystem.complement();
    const GaussianState reduced = reduce(global, side);
    const double mu = purity(reduced);

    double ratio = 0.0;
    if (op == PhotonOp::Subtract) {
        ratio = purity_of_subtracted(subtract_reduced_wigner(global, g, side)) / mu;
    } else {
        const WilliamsonDecomposition decomp = williamson(reduced);
        ratio = relative_purity_closed_form(decomp, bogoliubov_row(decomp, side.local_index(g)), op);
    }
    EntanglementChange out;
    out.before = -std::log(mu);
    out.delta = -std::log(ratio);
    out.after = out.before + out.delta;
    return out;
}

/// Thermal-state traces with rho = diag(n, n) in shot-noise units:
/// t[0]=tr(a rho a^dag), t[1]=tr(a^dag rho a), t[2]=tr(a rho a^dag a rho a^dag),
/// t[3]=tr(a^dag rho a a^dag rho a), t[4]=tr(a^dag rho a a rho a^dag),
/// t[5]=tr(rho^2 a^dag a), t[6]=tr(rho^2 a a^dag), t[7]=tr(rho a^dag rho a).
struct ThermalTraceSet {
    double n = 1.0;
    std::array<double, 8> t{};
};

inline ThermalTraceSet thermal_traces(double n) {
    if (!(n >= 1.0)) {
        throw Error(ErrorCode::InvalidOccupation, "thermal occupation must be at least 1");
    }
    const double sub = (n - 1) / 2, add = (n + 1) / 2;
    const double pur = (1 + n * n) / (2 * n * n * n);
    ThermalTraceSet out;
    out.n = n;
    out.t = {sub,
             add,
             pur * sub * sub,
             pur * add * add,
             (n * n - 1) * (n * n - 1) / (8 * n * n * n),
             (n - 1) * (n - 1) / (4 * n * n),
             (n + 1) * (n + 1) / (4 * n * n),
             (n + 1) * (n - 1) / (4 * n * n)};
    return out;
}

}  // namespace cvd
