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

// Brute-force truncated Fock-space simulator. It shares nothing with the
// phase-space code except the CircuitElement descriptions: gates are matrix
// exponentials of their ladder-operator generators, subtraction is the
// literal action of a_g, and purities are tr(rho^2) of explicit density
// matrices.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "cvd/error.hpp"
#include "cvd/gaussian_state.hpp"
#include "cvd/photon_ops.hpp"
#include "cvd/symplectic.hpp"
#include "cvd/types.hpp"

namespace cvd {

inline constexpr int kMaxFockModes = 4;
inline constexpr double kDefaultLeakTol = 1e-8;

/// Pure state on m modes, each truncated to `cutoff` levels. Mode 0 is the
/// most significant index. `leakage` accumulates the relative norm that gates
/// pushed above the cutoff.
struct FockState {
    int modes = 1;
    int cutoff = 1;
    std::vector<Complex> amp;
    double leakage = 0.0;

    static FockState vacuum(int m, int cutoff) {
        if (m < 1 || m > kMaxFockModes) {
            throw Error(ErrorCode::TooManyModes, "Fock oracle supports 1 to 4 modes");
        }
        if (cutoff < 2) {
            throw Error(ErrorCode::InvalidArgument, "cutoff must be at least 2");
        }
        FockState s;
        s.modes = m;
        s.cutoff = cutoff;
        std::size_t dim = 1;
        for (int i = 0; i < m; ++i) {
            dim *= static_cast<std::size_t>(cutoff);
        }
        s.amp.assign(dim, Complex(0.0));
        s.amp[0] = 1.0;
        return s;
    }

    static FockState basis(int cutoff, const std::vector<int> &occupation) {
        FockState s = vacuum(static_cast<int>(occupation.size()), cutoff);
        s.amp[0] = 0.0;
        s.amp[s.index(occupation)] = 1.0;
        return s;
    }

    std::size_t stride(int mode) const {
        std::size_t st = 1;
        for (int k = mode + 1; k < modes; ++k) {
            st *= static_cast<std::size_t>(cutoff);
        }
        return st;
    }

    std::size_t index(const std::vector<int> &occupation) const {
        std::size_t idx = 0;
        for (int k = 0; k < modes; ++k) {
            if (occupation[k] < 0 || occupation[k] >= cutoff) {
                throw Error(ErrorCode::IndexOutOfRange, "occupation outside the cutoff");
            }
            idx = idx * static_cast<std::size_t>(cutoff) + static_cast<std::size_t>(occupation[k]);
        }
        return idx;
    }

    int occupation(std::size_t idx, int mode) const {
        return static_cast<int>((idx / stride(mode)) % static_cast<std::size_t>(cutoff));
    }

    double norm_squared() const {
        double s = 0.0;
        for (const auto &a : amp) {
            s += std::norm(a);
        }
        return s;
    }
};

/// Density matrix on `modes` modes with the same index convention.
struct FockDensity {
    int modes = 1;
    int cutoff = 1;
    CMatrix rho;

    double trace() const {
        return rho.trace().real();
    }
};

namespace detail {

/// exp(-i H) for Hermitian H.
inline CMatrix exp_minus_i(const CMatrix &H) {
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(H);
    if (eig.info() != Eigen::Success) {
        throw Error(ErrorCode::NumericalFailure, "generator diagonalisation failed");
    }
    CVector phases(eig.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
        phases(i) = std::exp(Complex(0.0, -eig.eigenvalues()(i)));
    }
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

/// Occupations (n_1, ..., n_arity) and the amplitude of generator G acting on them.
using LocalOcc = std::array<int, 2>;
struct Transition {
    LocalOcc to;
    Complex coeff;
};

/// exp(G) on `arity` modes, computed on a padded space of `padded` levels per
/// mode and restricted to the first `cutoff` levels for inputs and outputs.
/// G commutes with `charge`, so each charge sector is exponentiated alone.
template <class Generator, class Charge>
CMatrix local_unitary(int cutoff, int padded, int arity, Generator generator, Charge charge) {
    const int pdim = arity == 1 ? padded : padded * padded;
    auto occ_of = [&](int idx) {
        return arity == 1 ? LocalOcc{idx, 0} : LocalOcc{idx / padded, idx % padded};
    };
    auto pidx = [&](const LocalOcc &o) { return arity == 1 ? o[0] : o[0] * padded + o[1]; };
    auto inside = [&](const LocalOcc &o, int lim) {
        return o[0] >= 0 && o[0] < lim && (arity == 1 || (o[1] >= 0 && o[1] < lim));
    };
    auto cidx = [&](const LocalOcc &o) { return arity == 1 ? o[0] : o[0] * cutoff + o[1]; };

    std::map<int, std::vector<int>> sectors;
    for (int idx = 0; idx < pdim; ++idx) {
        sectors[charge(occ_of(idx))].push_back(idx);
    }
    const int cdim = arity == 1 ? cutoff : cutoff * cutoff;
    CMatrix U = CMatrix::Zero(cdim, cdim);
    std::vector<int> position(static_cast<std::size_t>(pdim), -1);
    for (const auto &[q, members] : sectors) {
        const auto n = static_cast<Eigen::Index>(members.size());
        for (Eigen::Index c = 0; c < n; ++c) {
            position[static_cast<std::size_t>(members[c])] = static_cast<int>(c);
        }
        CMatrix G = CMatrix::Zero(n, n);
        for (Eigen::Index c = 0; c < n; ++c) {
            for (const Transition &t : generator(occ_of(members[c]))) {
                if (!inside(t.to, padded)) {
                    continue;
                }
                G(position[static_cast<std::size_t>(pidx(t.to))], c) += t.coeff;
            }
        }
        // G is anti-Hermitian, so exp(G) = exp(-i H) with H = i G.
        const CMatrix block = exp_minus_i(Complex(0.0, 1.0) * G);
        for (Eigen::Index c = 0; c < n; ++c) {
            const LocalOcc in = occ_of(members[c]);
            if (!inside(in, cutoff)) {
                continue;
            }
            for (Eigen::Index r = 0; r < n; ++r) {
                const LocalOcc out = occ_of(members[r]);
                if (inside(out, cutoff)) {
                    U(cidx(out), cidx(in)) = block(r, c);
                }
            }
        }
    }
    return U;
}

/// exp(i c x_1 x_2) with x = a + a^dag, through the eigenbasis of the padded x.
inline CMatrix cz_unitary(int cutoff, int padded, double c) {
    Matrix X = Matrix::Zero(padded, padded);
    for (int n = 0; n + 1 < padded; ++n) {
        X(n, n + 1) = X(n + 1, n) = std::sqrt(static_cast<double>(n + 1));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(X);
    const Vector &lam = eig.eigenvalues();
    const Matrix phi = eig.eigenvectors().topRows(cutoff);  // cutoff x padded
    CMatrix U = CMatrix::Zero(cutoff * cutoff, cutoff * cutoff);
    for (int s = 0; s < padded; ++s) {
        CVector phase(padded);
        for (int t = 0; t < padded; ++t) {
            phase(t) = std::exp(Complex(0.0, c * lam(s) * lam(t)));
        }
        const CMatrix T = phi.cast<Complex>() * phase.asDiagonal() * phi.transpose().cast<Complex>();
        for (int a = 0; a < cutoff; ++a) {
            for (int ap = 0; ap < cutoff; ++ap) {
                const double p = phi(a, s) * phi(ap, s);
                if (p == 0.0) {
                    continue;
                }
                U.block(a * cutoff, ap * cutoff, cutoff, cutoff) += p * T;
            }
        }
    }
    return U;
}

inline int padded_cutoff(int cutoff) {
    return 2 * cutoff + 16;
}

/// Apply a dense single- or two-mode operator to the listed modes in place.
inline void apply_local(FockState &state, const CMatrix &U, std::span<const int> targets) {
    const int d = state.cutoff;
    const std::size_t dim = state.amp.size();
    if (targets.size() == 1) {
        const std::size_t st = state.stride(targets[0]);
        CVector v(d);
        for (std::size_t base = 0; base < dim; ++base) {
            if (state.occupation(base, targets[0]) != 0) {
                continue;
            }
            for (int a = 0; a < d; ++a) {
                v(a) = state.amp[base + a * st];
            }
            const CVector w = U * v;
            for (int a = 0; a < d; ++a) {
                state.amp[base + a * st] = w(a);
            }
        }
        return;
    }
    const std::size_t si = state.stride(targets[0]), sj = state.stride(targets[1]);
    CVector v(d * d);
    for (std::size_t base = 0; base < dim; ++base) {
        if (state.occupation(base, targets[0]) != 0 || state.occupation(base, targets[1]) != 0) {
            continue;
        }
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                v(a * d + b) = state.amp[base + a * si + b * sj];
            }
        }
        const CVector w = U * v;
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                state.amp[base + a * si + b * sj] = w(a * d + b);
            }
        }
    }
}

inline void record_leakage(FockState &state, double norm_before, double leak_tol) {
    const double lost = std::max(0.0, (norm_before - state.norm_squared()) / norm_before);
    state.leakage += lost;
    if (state.leakage > leak_tol) {
        throw Error(ErrorCode::CutoffTooSmall, "Fock cutoff " + std::to_string(state.cutoff) +
                                                   " leaks " + std::to_string(state.leakage) + " of the norm");
    }
}

}  // namespace detail

/// Apply one circuit element through the exponential of its generator.
inline FockState apply_gate_fock(const FockState &input, const CircuitElement &elem,
                                 double leak_tol = kDefaultLeakTol) {
    FockState state = input;
    const int d = state.cutoff, D = detail::padded_cutoff(d), m = state.modes;
    const double before = state.norm_squared();
    using detail::LocalOcc;
    using detail::Transition;
    auto sq = [](int n) { return std::sqrt(static_cast<double>(n)); };

    std::visit(
        [&](const auto &e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, TwoModeSqueezer>) {
                detail::check_pair(e.i, e.j, m);
                const double h = e.r / 2;
                auto gen = [&](LocalOcc o) {
                    const auto [a, b] = o;
                    return std::vector<Transition>{{{a - 1, b - 1}, h * sq(a * b)},
                                                   {{a + 1, b + 1}, -h * sq((a + 1) * (b + 1))}};
                };
                const CMatrix U = detail::local_unitary(d, D, 2, gen, [](LocalOcc o) { return o[0] - o[1]; });
                const std::array<int, 2> t{e.i, e.j};
                detail::apply_local(state, U, t);
            } else if constexpr (std::is_same_v<T, Beamsplitter>) {
                detail::check_pair(e.i, e.j, m);
                auto gen = [&](LocalOcc o) {
                    const auto [a, b] = o;
                    return std::vector<Transition>{{{a + 1, b - 1}, e.theta * sq((a + 1) * b)},
                                                   {{a - 1, b + 1}, -e.theta * sq(a * (b + 1))}};
                };
                const CMatrix U = detail::local_unitary(d, D, 2, gen, [](LocalOcc o) { return o[0] + o[1]; });
                const std::array<int, 2> t{e.i, e.j};
                detail::apply_local(state, U, t);
            } else if constexpr (std::is_same_v<T, SingleModeSqueezer>) {
                detail::check_mode(e.i, m);
                const double h = e.r / 2;
                auto gen = [&](LocalOcc o) {
                    const int n = o[0];
                    return std::vector<Transition>{{{n - 2, 0}, h * sq(n * (n - 1))},
                                                   {{n + 2, 0}, -h * sq((n + 1) * (n + 2))}};
                };
                const CMatrix U = detail::local_unitary(d, D, 1, gen, [](LocalOcc o) { return o[0] % 2; });
                const std::array<int, 1> t{e.i};
                detail::apply_local(state, U, t);
            } else if constexpr (std::is_same_v<T, ControlledZ>) {
                detail::check_pair(e.i, e.j, m);
                const CMatrix U = detail::cz_unitary(d, D, e.weight / 2);
                const std::array<int, 2> t{e.i, e.j};
                detail::apply_local(state, U, t);
            } else {
                if (e.d.size() != 2 * m) {
                    throw Error(ErrorCode::IndexOutOfRange, "displacement vector must have length 2m");
                }
                for (int mode = 0; mode < m; ++mode) {
                    const Complex alpha(e.d(mode) / 2, e.d(m + mode) / 2);
                    if (alpha == Complex(0.0)) {
                        continue;
                    }
                    // G = alpha a^dag - conj(alpha) a
                    auto gen = [&](LocalOcc o) {
                        const int n = o[0];
                        return std::vector<Transition>{{{n + 1, 0}, alpha * sq(n + 1)},
                                                       {{n - 1, 0}, -std::conj(alpha) * sq(n)}};
                    };
                    const CMatrix U = detail::local_unitary(d, D, 1, gen, [](LocalOcc) { return 0; });
                    const std::array<int, 1> t{mode};
                    detail::apply_local(state, U, t);
                }
            }
        },
        elem);
    detail::record_leakage(state, before, leak_tol);
    return state;
}

inline FockState apply_circuit_fock(FockState state, std::span<const CircuitElement> elements,
                                    double leak_tol = kDefaultLeakTol) {
    for (const auto &elem : elements) {
        state = apply_gate_fock(state, elem, leak_tol);
    }
    return state;
}

/// Unnormalised result of a ladder operator; norm_squared is relative to the
/// input norm, i.e. <a^dag a> for annihilation and <a a^dag> for creation.
struct LadderResult {
    FockState state;
    double norm_squared = 0.0;
};

inline LadderResult annihilate(const FockState &input, int g) {
    detail::check_mode(g, input.modes);
    FockState out = input;
    std::fill(out.amp.begin(), out.amp.end(), Complex(0.0));
    const std::size_t st = input.stride(g);
    for (std::size_t idx = 0; idx < input.amp.size(); ++idx) {
        const int n = input.occupation(idx, g);
        if (n > 0) {
            out.amp[idx - st] = std::sqrt(static_cast<double>(n)) * input.amp[idx];
        }
    }
    const double rel = out.norm_squared() / input.norm_squared();
    if (!(rel > 1e-14)) {
        throw Error(ErrorCode::ZeroNorm, "annihilation on an empty mode");
    }
    return {std::move(out), rel};
}

inline LadderResult create(const FockState &input, int g, double leak_tol = kDefaultLeakTol) {
    detail::check_mode(g, input.modes);
    FockState out = input;
    std::fill(out.amp.begin(), out.amp.end(), Complex(0.0));
    const std::size_t st = input.stride(g);
    double lost = 0.0;
    for (std::size_t idx = 0; idx < input.amp.size(); ++idx) {
        const int n = input.occupation(idx, g);
        const double w = std::sqrt(static_cast<double>(n + 1));
        if (n + 1 < input.cutoff) {
            out.amp[idx + st] = w * input.amp[idx];
        } else {
            lost += std::norm(w * input.amp[idx]);
        }
    }
    const double kept = out.norm_squared();
    out.leakage += lost / (kept + lost);
    if (out.leakage > leak_tol) {
        throw Error(ErrorCode::CutoffTooSmall, "creation pushed norm above the cutoff");
    }
    return {std::move(out), (kept + lost) / input.norm_squared()};
}

namespace detail {

/// Matrix M with rows indexed by the kept modes and columns by the rest, so
/// that rho_kept = M M^dag (up to normalisation).
inline CMatrix split_amplitudes(const FockState &state, const std::vector<int> &kept) {
    std::vector<int> rest;
    for (int k = 0; k < state.modes; ++k) {
        if (std::find(kept.begin(), kept.end(), k) == kept.end()) {
            rest.push_back(k);
        }
    }
    auto dim_of = [&](std::size_t count) {
        Eigen::Index dim = 1;
        for (std::size_t i = 0; i < count; ++i) {
            dim *= state.cutoff;
        }
        return dim;
    };
    CMatrix M(dim_of(kept.size()), dim_of(rest.size()));
    for (std::size_t idx = 0; idx < state.amp.size(); ++idx) {
        Eigen::Index r = 0, c = 0;
        for (int k : kept) {
            r = r * state.cutoff + state.occupation(idx, k);
        }
        for (int k : rest) {
            c = c * state.cutoff + state.occupation(idx, k);
        }
        M(r, c) = state.amp[idx];
    }
    return M;
}

inline std::vector<int> checked_modes(std::vector<int> modes, int m) {
    if (modes.empty()) {
        throw Error(ErrorCode::EmptySubsystem, "subsystem needs at least one mode");
    }
    std::sort(modes.begin(), modes.end());
    modes.erase(std::unique(modes.begin(), modes.end()), modes.end());
    for (int k : modes) {
        check_mode(k, m);
    }
    return modes;
}

}  // namespace detail

/// Normalised reduced density matrix of a (possibly unnormalised) pure state.
inline FockDensity reduce_density(const FockState &state, std::vector<int> modes) {
    modes = detail::checked_modes(std::move(modes), state.modes);
    const CMatrix M = detail::split_amplitudes(state, modes);
    return FockDensity{static_cast<int>(modes.size()), state.cutoff, M * M.adjoint() / state.norm_squared()};
}

/// Partial trace of a density matrix onto `modes`.
inline FockDensity reduce_density(const FockDensity &density, std::vector<int> modes) {
    modes = detail::checked_modes(std::move(modes), density.modes);
    const int d = density.cutoff, m = density.modes;
    const auto kdim = static_cast<Eigen::Index>(std::pow(d, modes.size()));
    CMatrix out = CMatrix::Zero(kdim, kdim);
    auto occ = [&](Eigen::Index idx, int mode) {
        Eigen::Index st = 1;
        for (int k = mode + 1; k < m; ++k) {
            st *= d;
        }
        return static_cast<int>((idx / st) % d);
    };
    for (Eigen::Index i = 0; i < density.rho.rows(); ++i) {
        for (Eigen::Index j = 0; j < density.rho.cols(); ++j) {
            bool same_rest = true;
            for (int k = 0; k < m && same_rest; ++k) {
                if (std::find(modes.begin(), modes.end(), k) == modes.end() && occ(i, k) != occ(j, k)) {
                    same_rest = false;
                }
            }
            if (!same_rest) {
                continue;
            }
            Eigen::Index r = 0, c = 0;
            for (int k : modes) {
                r = r * d + occ(i, k);
                c = c * d + occ(j, k);
            }
            out(r, c) += density.rho(i, j);
        }
    }
    return FockDensity{static_cast<int>(modes.size()), d, std::move(out)};
}

inline double purity_fock(const FockDensity &density) {
    const double tr = density.trace();
    return density.rho.cwiseAbs2().sum() / (tr * tr);
}

inline double renyi2_fock(const FockDensity &density) {
    return -std::log(purity_fock(density));
}

/// tr(rho_A^2) of a pure state without forming the larger of the two
/// reduced density matrices.
inline double reduced_purity(const FockState &state, std::vector<int> modes) {
    modes = detail::checked_modes(std::move(modes), state.modes);
    const CMatrix M = detail::split_amplitudes(state, modes);
    const CMatrix gram = M.rows() <= M.cols() ? CMatrix(M * M.adjoint()) : CMatrix(M.adjoint() * M);
    const double n2 = state.norm_squared();
    return gram.cwiseAbs2().sum() / (n2 * n2);
}

/// Bose-Einstein state with cov diag(n, n): mean photon number (n - 1)/2.
inline FockDensity thermal_density(double n, int cutoff) {
    if (!(n >= 1.0)) {
        throw Error(ErrorCode::InvalidOccupation, "thermal occupation must be at least 1");
    }
    const double x = (n - 1) / (n + 1);
    CMatrix rho = CMatrix::Zero(cutoff, cutoff);
    double total = 0.0, p = 1.0;
    for (int k = 0; k < cutoff; ++k) {
        rho(k, k) = p;
        total += p;
        p *= x;
    }
    return FockDensity{1, cutoff, rho / total};
}

/// The eight traces of ThermalTraceSet evaluated on thermal_density(n, cutoff).
inline ThermalTraceSet thermal_traces_fock(double n, int cutoff) {
    const FockDensity th = thermal_density(n, cutoff);
    const int D = cutoff + 2;  // room for a^dag acting on the top level
    CMatrix rho = CMatrix::Zero(D, D);
    rho.topLeftCorner(cutoff, cutoff) = th.rho;
    CMatrix a = CMatrix::Zero(D, D);
    for (int k = 1; k < D; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    const CMatrix ad = a.adjoint();
    const CMatrix sub = a * rho * ad, add = ad * rho * a, rho2 = rho * rho;
    ThermalTraceSet out;
    out.n = n;
    out.t = {sub.trace().real(),
             add.trace().real(),
             (sub * sub).trace().real(),
             (add * add).trace().real(),
             (add * sub).trace().real(),
             (rho2 * ad * a).trace().real(),
             (rho2 * a * ad).trace().real(),
             (rho * ad * rho * a).trace().real()};
    return out;
}

/// Quadrature first and second moments of a pure Fock state, in the same
/// layout and units as GaussianState.
inline GaussianState fock_moments(const FockState &state) {
    const int m = state.modes;
    const double n2 = state.norm_squared();
    auto inner = [](const FockState &u, const FockState &v) {
        Complex s = 0.0;
        for (std::size_t i = 0; i < u.amp.size(); ++i) {
            s += std::conj(u.amp[i]) * v.amp[i];
        }
        return s;
    };
    auto lower = [](const FockState &s, int g) {
        FockState out = s;
        std::fill(out.amp.begin(), out.amp.end(), Complex(0.0));
        const std::size_t st = s.stride(g);
        for (std::size_t idx = 0; idx < s.amp.size(); ++idx) {
            const int n = s.occupation(idx, g);
            if (n > 0) {
                out.amp[idx - st] = std::sqrt(static_cast<double>(n)) * s.amp[idx];
            }
        }
        return out;
    };
    std::vector<FockState> lowered;
    CVector mean_a(m);
    for (int i = 0; i < m; ++i) {
        lowered.push_back(lower(state, i));
        mean_a(i) = inner(state, lowered[i]) / n2;
    }
    CMatrix aa(m, m), ada(m, m);  // <a_i a_j>, <a_i^dag a_j>
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            ada(i, j) = inner(lowered[i], lowered[j]) / n2;
            aa(i, j) = inner(state, lower(lowered[j], i)) / n2;
        }
    }
    const Complex I(0.0, 1.0);
    auto coeff = [&](int k) { return k < m ? Complex(1.0) : -I; };  // R_k = c a + conj(c) a^dag
    auto mode_of = [&](int k) { return k % m; };
    GaussianState out{Vector(2 * m), Matrix(2 * m, 2 * m)};
    for (int k = 0; k < 2 * m; ++k) {
        out.mean(k) = 2.0 * (coeff(k) * mean_a(mode_of(k))).real();
    }
    for (int k = 0; k < 2 * m; ++k) {
        for (int l = 0; l < 2 * m; ++l) {
            const int i = mode_of(k), j = mode_of(l);
            const Complex ck = coeff(k), cl = coeff(l);
            const Complex a_adj = (i == j ? 1.0 : 0.0) + ada(j, i);  // <a_i a_j^dag>
            const Complex rr = ck * cl * aa(i, j) + ck * std::conj(cl) * a_adj +
                               std::conj(ck) * cl * ada(i, j) + std::conj(ck) * std::conj(cl) * std::conj(aa(i, j));
            out.cov(k, l) = rr.real() - out.mean(k) * out.mean(l);
        }
    }
    return out;
}

/// max(20, ceil(10 (<n> + 1))) levels per mode.
inline int suggested_cutoff(double mean_photons) {
    return std::max(20, static_cast<int>(std::ceil(10.0 * (mean_photons + 1.0))));
}

}  // namespace cvd
