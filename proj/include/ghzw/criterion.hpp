// Copyright 2026 The ghzw Authors
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

// The GHZ/W criterion: a state is flagged when some GHZ(phi)-witness or some
// W(gamma, beta)-witness has negative expectation on it. Each family is
// minimized over its phases. A "not detected" verdict says nothing about
// whether the state is genuinely tripartite entangled.

#include <limits>
#include <numbers>
#include <optional>
#include <tuple>
#include <utility>

#include "ghzw/witness.hpp"

namespace ghzw {

/// Detection requires the minimum to fall strictly below -tol.
inline constexpr double kDetectionTol = 1e-12;

struct GhzMinimum {
    double value;
    double phi;
};

struct WMinimum {
    double value;
    double gamma;
    double beta;
};

struct CriterionVerdict {
    double ghz_min = 0;
    double ghz_opt_phi = 0;
    double w_min = 0;
    double w_opt_gamma = 0;
    double w_opt_beta = 0;
    bool detected_by_ghz = false;
    bool detected_by_w = false;
    bool detected = false;
};

namespace detail {

/// arg(num) - arg(den), or 0 when either amplitude vanishes.
inline double relative_phase(Complex num, Complex den) {
    if (num == Complex{} || den == Complex{}) return 0.0;
    return wrap_phase(std::arg(num) - std::arg(den));
}

}  // namespace detail

/// Closed-form minimum over phi of <W_GHZ(phi)> for a pure state.
inline GhzMinimum min_ghz_expectation_pure(const PureState &psi) {
    const double s = std::abs(psi.amp(0)) + std::abs(psi.amp(7));
    return {0.5 - 0.5 * s * s, detail::relative_phase(psi.amp(7), psi.amp(0))};
}

/// Closed-form minimum over (gamma, beta) of <W_W(gamma, beta)> for a pure state.
inline WMinimum min_w_expectation_pure(const PureState &psi) {
    const double s = std::abs(psi.amp(1)) + std::abs(psi.amp(2)) + std::abs(psi.amp(4));
    return {2.0 / 3.0 - s * s / 3.0, detail::relative_phase(psi.amp(2), psi.amp(1)),
            detail::relative_phase(psi.amp(4), psi.amp(1))};
}

/// (lambda0 + lambda4)^2 > 1.
inline bool ghz_condition(const AcinParams &p) {
    p.validate();
    const double s = p.lambda[0] + p.lambda[4];
    return s * s > 1.0;
}

/// (lambda1 + lambda2 + lambda3)^2 > 2.
inline bool w_condition(const AcinParams &p) {
    p.validate();
    const double s = p.lambda[1] + p.lambda[2] + p.lambda[3];
    return s * s > 2.0;
}

/// <GHZ(phi)|rho|GHZ(phi)> = (rho_00 + rho_77 + 2 Re(e^{i phi} rho_07)) / 2,
/// maximized at phi = -arg(rho_07).
inline GhzMinimum min_ghz_expectation_mixed(const DensityMatrix &rho) {
    const Complex r07 = rho(0, 7);
    const double overlap = 0.5 * (rho(0, 0).real() + rho(7, 7).real() + 2.0 * std::abs(r07));
    const double phi = r07 == Complex{} ? 0.0 : wrap_phase(-std::arg(r07));
    return {0.5 - overlap, phi};
}

namespace detail {

/// Coherent part of 3<W(g,b)|rho|W(g,b)>:
///   f(g, b) = 2 Re(e^{ig} r12) + 2 Re(e^{ib} r14) + 2 Re(e^{i(b-g)} r24).
struct WCoherence {
    Complex r12, r14, r24;

    double value(double g, double b) const {
        return 2.0 * ((std::polar(1.0, g) * r12).real() + (std::polar(1.0, b) * r14).real() +
                      (std::polar(1.0, b - g) * r24).real());
    }

    // Newton ascent on f with a backtracking line search; gradient steps when
    // the Hessian is not negative definite.
    std::pair<double, double> refine(double g, double b) const {
        double f = value(g, b);
        for (int iter = 0; iter < 100; ++iter) {
            const Complex t1 = std::polar(1.0, g) * r12;
            const Complex t2 = std::polar(1.0, b) * r14;
            const Complex t3 = std::polar(1.0, b - g) * r24;
            // d/dx Re(e^{ix} r) = -Im(e^{ix} r), d2/dx2 = -Re(e^{ix} r).
            const double dg = 2.0 * (-t1.imag() + t3.imag());
            const double db = 2.0 * (-t2.imag() - t3.imag());
            const double hgg = 2.0 * (-t1.real() - t3.real());
            const double hbb = 2.0 * (-t2.real() - t3.real());
            const double hgb = 2.0 * t3.real();
            double sg = dg;
            double sb = db;
            const double det = hgg * hbb - hgb * hgb;
            if (hgg < 0 && det > 0) {
                sg = -(hbb * dg - hgb * db) / det;
                sb = -(-hgb * dg + hgg * db) / det;
            }
            double step = 1.0;
            bool improved = false;
            for (int ls = 0; ls < 60; ++ls) {
                const double ng = g + step * sg;
                const double nb = b + step * sb;
                const double nf = value(ng, nb);
                if (nf >= f) {
                    improved = nf > f;
                    g = ng;
                    b = nb;
                    f = nf;
                    break;
                }
                step *= 0.5;
            }
            if (!improved || std::abs(step * sg) + std::abs(step * sb) < 1e-14) break;
        }
        return {g, b};
    }
};

}  // namespace detail

inline constexpr int kWPhaseGrid = 256;

/// Minimum over (gamma, beta) of <W_W(gamma, beta)> for a mixed state.
///
/// Scans a 256x256 phase grid (ties go to the smaller gamma, then the smaller
/// beta) and polishes the best grid point with Newton steps on the
/// trigonometric objective.
inline WMinimum min_w_expectation_mixed(const DensityMatrix &rho) {
    const detail::WCoherence coh{rho(1, 2), rho(1, 4), rho(2, 4)};
    const double diag = rho(1, 1).real() + rho(2, 2).real() + rho(4, 4).real();

    std::array<Complex, kWPhaseGrid> ph{};
    for (int k = 0; k < kWPhaseGrid; ++k) ph[k] = std::polar(1.0, 2 * std::numbers::pi * k / kWPhaseGrid);

    double best = -std::numeric_limits<double>::infinity();
    int best_g = 0;
    int best_b = 0;
    for (int ig = 0; ig < kWPhaseGrid; ++ig) {
        const double f1 = (ph[ig] * coh.r12).real();
        for (int ib = 0; ib < kWPhaseGrid; ++ib) {
            const int diff = (ib - ig + kWPhaseGrid) % kWPhaseGrid;
            const double f = 2.0 * (f1 + (ph[ib] * coh.r14).real() + (ph[diff] * coh.r24).real());
            if (f > best) {
                best = f;
                best_g = ig;
                best_b = ib;
            }
        }
    }

    double g = 2 * std::numbers::pi * best_g / kWPhaseGrid;
    double b = 2 * std::numbers::pi * best_b / kWPhaseGrid;
    if (coh.r12 != Complex{} || coh.r14 != Complex{} || coh.r24 != Complex{}) {
        std::tie(g, b) = coh.refine(g, b);
    }
    const double overlap = (diag + coh.value(g, b)) / 3.0;
    return {2.0 / 3.0 - overlap, wrap_phase(g), wrap_phase(b)};
}

inline CriterionVerdict make_verdict(const GhzMinimum &ghz, const WMinimum &w, double tol = kDetectionTol) {
    CriterionVerdict v;
    v.ghz_min = ghz.value;
    v.ghz_opt_phi = ghz.phi;
    v.w_min = w.value;
    v.w_opt_gamma = w.gamma;
    v.w_opt_beta = w.beta;
    v.detected_by_ghz = ghz.value < -tol;
    v.detected_by_w = w.value < -tol;
    v.detected = v.detected_by_ghz || v.detected_by_w;
    return v;
}

inline CriterionVerdict ghzw_criterion(const PureState &psi, double tol = kDetectionTol) {
    return make_verdict(min_ghz_expectation_pure(psi), min_w_expectation_pure(psi), tol);
}

namespace detail {

/// The ket of a rank-one density matrix, read off its largest-diagonal column.
inline std::optional<PureState> as_pure(const DensityMatrix &rho) {
    const Operator &m = rho.op();
    double purity = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) purity += std::norm(m(i, j));
    if (std::abs(purity - 1.0) > 1e-12) return std::nullopt;
    int col = 0;
    for (int i = 1; i < 8; ++i)
        if (m(i, i).real() > m(col, col).real()) col = i;
    const double scale = std::sqrt(m(col, col).real());
    std::array<Complex, 8> a{};
    for (int i = 0; i < 8; ++i) a[i] = m(i, col) / scale;
    return PureState::normalize(Ket(a));
}

}  // namespace detail

/// Rank-one inputs use the pure-state closed forms; anything else goes
/// through the mixed-state minimizers.
inline CriterionVerdict ghzw_criterion(const DensityMatrix &rho, double tol = kDetectionTol) {
    if (auto psi = detail::as_pure(rho)) return ghzw_criterion(*psi, tol);
    return make_verdict(min_ghz_expectation_mixed(rho), min_w_expectation_mixed(rho), tol);
}

}  // namespace ghzw
