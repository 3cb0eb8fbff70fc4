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

#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "ghzw/qcore.hpp"

namespace ghzw {

inline constexpr double kPureNormTol = 1e-12;
inline constexpr double kDensityTol = 1e-10;

/// Reduces a phase to (-pi, pi].
inline double wrap_phase(double phase) {
    double r = std::remainder(phase, 2 * std::numbers::pi);
    if (r <= -std::numbers::pi) r += 2 * std::numbers::pi;
    return r;
}

inline Complex unit_phase(double phase) { return std::polar(1.0, wrap_phase(phase)); }

/// Unit-norm three-qubit ket.
class PureState {
   public:
    explicit PureState(Ket ket) : ket_(std::move(ket)) {
        if (ket_.dim() != 8) throw ValidationError("a pure state needs 8 amplitudes, got " + std::to_string(ket_.dim()));
        const double defect = std::abs(ket_.norm_sq() - 1.0);
        if (defect > kPureNormTol) {
            throw ValidationError("state norm^2 = " + std::to_string(ket_.norm_sq()) + " deviates from 1 by " +
                                  std::to_string(defect));
        }
    }

    static PureState normalize(const Ket &ket) { return PureState(ket.normalized()); }

    const Ket &ket() const { return ket_; }
    Complex amp(int k) const { return ket_[k]; }

   private:
    Ket ket_;
};

/// Hermitian, positive semidefinite, unit-trace 8x8 operator.
class DensityMatrix {
   public:
    explicit DensityMatrix(Operator op) : op_(std::move(op)) {
        if (op_.dim() != 8) throw ValidationError("a density matrix must be 8x8");
        const double herm = hermiticity_defect(op_);
        if (herm > kDensityTol) throw ValidationError("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
        const double tr = trace(op_).real();
        if (std::abs(tr - 1.0) > kDensityTol) throw ValidationError("density matrix trace is " + std::to_string(tr));
        const double min_eig = hermitian_eigs(op_).front();
        if (min_eig < -kDensityTol) {
            throw ValidationError("density matrix has negative eigenvalue " + std::to_string(min_eig));
        }
    }

    static DensityMatrix from_pure(const PureState &psi) { return DensityMatrix(outer(psi.ket()), Trusted{}); }

    static DensityMatrix maximally_mixed() { return DensityMatrix(Complex(1.0 / 8) * Operator::identity(8), Trusted{}); }

    const Operator &op() const { return op_; }
    Complex operator()(int r, int c) const { return op_(r, c); }

   private:
    struct Trusted {};
    DensityMatrix(Operator op, Trusted) : op_(std::move(op)) {}

    Operator op_;
};

/// Five non-negative magnitudes and one phase of the five-term canonical form.
struct AcinParams {
    std::array<double, 5> lambda{};
    double alpha = 0;

    void validate() const {
        double s = 0;
        for (int i = 0; i < 5; ++i) {
            if (!(lambda[i] >= 0) || !std::isfinite(lambda[i])) {
                throw ValidationError("lambda" + std::to_string(i) + " must be a finite non-negative number");
            }
            s += lambda[i] * lambda[i];
        }
        if (std::abs(s - 1.0) > 1e-10) throw ValidationError("sum of lambda^2 is " + std::to_string(s) + ", expected 1");
        if (!(alpha >= 0 && alpha <= std::numbers::pi)) {
            throw ValidationError("alpha = " + std::to_string(alpha) + " outside [0, pi]");
        }
    }
};

/// Which five basis states carry the canonical-form amplitudes.
///
/// `ghz_w` spans {000, 001, 010, 100, 111} with the phase on 001: the GHZ
/// sector plus the W sector. `generalized_schmidt` spans
/// {000, 100, 101, 110, 111} with the phase on 100; it is the support that
/// the local-unitary decomposition in canonical.hpp produces.
enum class AcinSupport { ghz_w, generalized_schmidt };

inline constexpr std::array<int, 5> support_indices(AcinSupport s) {
    return s == AcinSupport::ghz_w ? std::array<int, 5>{0, 1, 2, 4, 7} : std::array<int, 5>{0, 4, 5, 6, 7};
}

inline const char *support_name(AcinSupport s) {
    return s == AcinSupport::ghz_w ? "ghz_w" : "generalized_schmidt";
}

struct SuperpositionParams {
    Complex a{1.0};
    Complex b{0.0};
    double phi = 0;
    double gamma = 0;
    double beta = 0;

    void validate() const {
        const double s = std::norm(a) + std::norm(b);
        if (std::abs(s - 1.0) > kPureNormTol) {
            throw ValidationError("|a|^2 + |b|^2 = " + std::to_string(s) + ", expected 1");
        }
    }
};

struct MixtureComponent {
    double weight;
    PureState state;
};

struct MixtureSpec {
    std::vector<MixtureComponent> components;

    void validate() const {
        if (components.empty()) throw ValidationError("mixture has no components");
        double s = 0;
        for (size_t i = 0; i < components.size(); ++i) {
            const double p = components[i].weight;
            if (!(p >= 0) || !std::isfinite(p)) {
                throw ValidationError("mixture weight " + std::to_string(i) + " is negative or not finite");
            }
            s += p;
        }
        if (std::abs(s - 1.0) > kPureNormTol) throw ValidationError("mixture weights sum to " + std::to_string(s));
    }
};

inline PureState make_basis_state(int index) { return PureState(Ket::basis(8, index)); }

/// (|000> + e^{i phi}|111>)/sqrt(2).
inline PureState make_ghz(double phi) {
    std::array<Complex, 8> a{};
    a[0] = std::numbers::sqrt2 / 2;
    a[7] = unit_phase(phi) * (std::numbers::sqrt2 / 2);
    return PureState(Ket(a));
}

/// (|001> + e^{i gamma}|010> + e^{i beta}|100>)/sqrt(3).
inline PureState make_w(double gamma, double beta) {
    const double s = 1.0 / std::sqrt(3.0);
    std::array<Complex, 8> a{};
    a[1] = s;
    a[2] = unit_phase(gamma) * s;
    a[4] = unit_phase(beta) * s;
    return PureState(Ket(a));
}

inline PureState make_acin(const AcinParams &p, AcinSupport support = AcinSupport::ghz_w) {
    p.validate();
    const auto idx = support_indices(support);
    std::array<Complex, 8> a{};
    for (int i = 0; i < 5; ++i) a[idx[i]] = p.lambda[i];
    a[idx[1]] *= std::polar(1.0, p.alpha);
    return PureState(Ket(a));
}

/// Equal-weight superposition of the five GHZ/W-sector basis states.
inline PureState make_xi() {
    const double s = 1.0 / std::sqrt(5.0);
    std::array<Complex, 8> a{};
    for (int k : {0, 1, 2, 4, 7}) a[k] = s;
    return PureState(Ket(a));
}

/// a|GHZ(phi)> + b|W(gamma, beta)>.
inline PureState make_superposition(const SuperpositionParams &s) {
    s.validate();
    return PureState(s.a * make_ghz(s.phi).ket() + s.b * make_w(s.gamma, s.beta).ket());
}

/// Superposition with real non-negative b and |a|^2 = a_sq; `rel_phase` is the phase of a.
inline SuperpositionParams superposition_params(double a_sq, double rel_phase = 0, double phi = 0, double gamma = 0,
                                                double beta = 0) {
    if (!(a_sq >= 0 && a_sq <= 1)) throw ValidationError("|a|^2 = " + std::to_string(a_sq) + " outside [0, 1]");
    return SuperpositionParams{std::polar(std::sqrt(a_sq), rel_phase), std::sqrt(1.0 - a_sq), phi, gamma, beta};
}

/// (|01> + |10>)/sqrt(2) on qubits A and B, tensored with |0> on C.
inline PureState make_bell_ab_zero() {
    const Complex h = std::numbers::sqrt2 / 2;
    const Ket bell{0.0, h, h, 0.0};
    return PureState(tensor(bell, Ket::basis(2, 0)));
}

/// Places a solo-qubit ket and a pair ket on the slots named by `cut`.
/// The pair ket is ordered by the remaining qubits in A, B, C order.
inline Ket embed_biseparable(const Ket &solo, const Ket &pair, BipartitionCut cut) {
    if (solo.dim() != 2 || pair.dim() != 4) throw ValidationError("embed_biseparable needs a dim-2 and a dim-4 ket");
    std::array<Complex, 8> a{};
    for (int k = 0; k < 8; ++k) {
        const int s = detail::bit_of(k, cut.solo);
        int p = 0;
        for (Qubit q : kAllQubits) {
            if (q == cut.solo) continue;
            p = 2 * p + detail::bit_of(k, q);
        }
        a[k] = solo[s] * pair[p];
    }
    return Ket(a);
}

inline Ket random_gaussian_ket(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::array<Complex, 8> a{};
    for (int k = 0; k < dim; ++k) {
        const double re = g(rng);
        const double im = g(rng);
        a[k] = Complex(re, im);
    }
    return Ket(std::span<const Complex>(a.data(), dim)).normalized();
}

/// Haar-distributed pure state; deterministic per seed.
inline PureState haar_random_pure(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return PureState(random_gaussian_ket(8, rng));
}

inline Operator haar_random_unitary2(std::mt19937_64 &rng) {
    // Random unit column completed to an SU(2) matrix, then a random global phase.
    const Ket col = random_gaussian_ket(2, rng);
    std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
    const Complex ph = std::polar(1.0, u(rng));
    Operator m(2);
    m(0, 0) = ph * col[0];
    m(1, 0) = ph * col[1];
    m(0, 1) = -ph * std::conj(col[1]);
    m(1, 1) = ph * std::conj(col[0]);
    return m;
}

/// Sum_i p_i |psi_i><psi_i|.
inline DensityMatrix mix(const MixtureSpec &m) {
    m.validate();
    Operator acc(8);
    for (const auto &c : m.components) acc = acc + Complex(c.weight) * outer(c.state.ket());
    return DensityMatrix(acc);
}

}  // namespace ghzw
