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

// Witness operators of the form  lambda*I - |psi><psi|.
//
// The constant lambda is the largest squared overlap of |psi> with the
// biseparable set (states product across at least one of the cuts A|BC,
// B|AC, C|AB). Two independent routes compute it: reduced-state spectra
// (exact) and an alternating hill climb over product kets (stochastic).

#include <cstdint>

#include "ghzw/states.hpp"

namespace ghzw {

class Witness {
   public:
    Witness(PureState reference, double lambda_const) : reference_(std::move(reference)), lambda_(lambda_const) {
        if (!(lambda_ >= 0 && lambda_ <= 1)) {
            throw ValidationError("witness constant " + std::to_string(lambda_) + " outside [0, 1]");
        }
    }

    const PureState &reference() const { return reference_; }
    double lambda_const() const { return lambda_; }

    /// lambda*I - |ref><ref|
    Operator matrix() const { return Complex(lambda_) * Operator::identity(8) - outer(reference_.ket()); }

   private:
    PureState reference_;
    double lambda_;
};

inline Witness ghz_witness(double phi) { return Witness(make_ghz(phi), 0.5); }

inline Witness w_witness(double gamma, double beta) { return Witness(make_w(gamma, beta), 2.0 / 3.0); }

/// Tr(W rho) = lambda - <ref|rho|ref>.
inline double expectation(const Witness &w, const DensityMatrix &rho) {
    return w.lambda_const() - sandwich(w.reference().ket(), rho.op()).real();
}

inline double expectation(const Witness &w, const PureState &psi) {
    return w.lambda_const() - std::norm(inner(w.reference().ket(), psi.ket()));
}

/// Largest eigenvalue of the reduced state of `cut.solo`, i.e. the largest
/// squared Schmidt coefficient across the cut.
inline double max_overlap_across_cut(const PureState &psi, BipartitionCut cut) {
    return hermitian_eigs(partial_trace(outer(psi.ket()), cut.solo)).back();
}

/// max over biseparable sigma of |<sigma|psi>|^2, from reduced-state spectra.
inline double lambda_bound_analytic(const PureState &psi) {
    double best = 0;
    for (BipartitionCut cut : kAllCuts) best = std::max(best, max_overlap_across_cut(psi, cut));
    return best;
}

namespace detail {

/// psi reshaped as a 2x4 matrix: solo index by pair index (pair bits in A, B, C order).
inline std::array<std::array<Complex, 4>, 2> unfold(const PureState &psi, BipartitionCut cut) {
    std::array<std::array<Complex, 4>, 2> m{};
    for (int k = 0; k < 8; ++k) {
        int p = 0;
        for (Qubit q : kAllQubits) {
            if (q == cut.solo) continue;
            p = 2 * p + bit_of(k, q);
        }
        m[bit_of(k, cut.solo)][p] = psi.amp(k);
    }
    return m;
}

}  // namespace detail

/// Hill climb of |<x (x) y|psi>|^2 over product kets across every cut.
///
/// Each half step is the exact conditional optimum (x given y, then y given
/// x), so a single restart is monotone. Restart r draws its starting pair
/// ket from a generator seeded with seed + r.
inline double lambda_bound_stochastic(const PureState &psi, std::uint64_t seed, int restarts, int iters) {
    if (restarts < 1 || iters < 1) throw ValidationError("restarts and iters must both be at least 1");
    std::array<std::array<std::array<Complex, 4>, 2>, 3> unfolded{};
    for (BipartitionCut cut : kAllCuts) unfolded[slot(cut.solo)] = detail::unfold(psi, cut);

    double best = 0;
    for (int r = 0; r < restarts; ++r) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(r));
        for (BipartitionCut cut : kAllCuts) {
            const auto &m = unfolded[slot(cut.solo)];
            const Ket start = random_gaussian_ket(4, rng);
            std::array<Complex, 4> y{start[0], start[1], start[2], start[3]};
            for (int it = 0; it < iters; ++it) {
                // x proportional to M conj(y).
                std::array<Complex, 2> x{};
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 4; ++j) x[i] += m[i][j] * std::conj(y[j]);
                const double nx = std::sqrt(std::norm(x[0]) + std::norm(x[1]));
                if (nx == 0) break;
                for (auto &xi : x) xi /= nx;
                // y proportional to M^T conj(x); the overlap is then |w|^2.
                std::array<Complex, 4> w{};
                double nw2 = 0;
                for (int j = 0; j < 4; ++j) {
                    for (int i = 0; i < 2; ++i) w[j] += std::conj(x[i]) * m[i][j];
                    nw2 += std::norm(w[j]);
                }
                best = std::max(best, nw2);
                if (nw2 == 0) break;
                const double nw = std::sqrt(nw2);
                for (int j = 0; j < 4; ++j) y[j] = w[j] / nw;
            }
        }
    }
    return best;
}

/// The optimal witness of the form lambda - |psi><psi| for the biseparable set.
inline Witness custom_witness(const PureState &psi) {
    return Witness(psi, std::clamp(lambda_bound_analytic(psi), 0.0, 1.0));
}

}  // namespace ghzw
