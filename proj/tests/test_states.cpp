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

#include "ghzw/states.hpp"

#include <numbers>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace ghzw;

namespace {

constexpr double kPi = std::numbers::pi;

void expect_amps(const PureState &psi, const std::array<Complex, 8> &want, double tol = 1e-15) {
    for (int k = 0; k < 8; ++k) EXPECT_NEAR(std::abs(psi.amp(k) - want[k]), 0.0, tol) << "index " << k;
}

}  // namespace

TEST(states, ghz_amplitudes) {
    const double r = 1 / std::sqrt(2.0);
    expect_amps(make_ghz(0), {r, 0, 0, 0, 0, 0, 0, r});
    expect_amps(make_ghz(kPi), {r, 0, 0, 0, 0, 0, 0, -r});
    // Phases are taken modulo 2 pi.
    expect_amps(make_ghz(0.4 + 6 * kPi), {r, 0, 0, 0, 0, 0, 0, std::polar(r, 0.4)}, 1e-14);
}

TEST(states, ghz_overlaps) {
    for (double p : {0.0, 0.3, 2.0}) {
        for (double q : {0.0, -1.1, 4.0}) {
            const Complex got = inner(make_ghz(p).ket(), make_ghz(q).ket());
            const Complex want = (1.0 + std::polar(1.0, q - p)) / 2.0;
            EXPECT_NEAR(std::abs(got - want), 0.0, 1e-15);
        }
    }
}

TEST(states, w_amplitudes_and_norm) {
    const double t = 1 / std::sqrt(3.0);
    expect_amps(make_w(0, 0), {0, t, t, 0, t, 0, 0, 0});
    for (double g : {0.0, 1.0, -2.5})
        for (double b : {0.0, 0.7, 3.0}) {
            EXPECT_NEAR(make_w(g, b).ket().norm_sq(), 1.0, 1e-15);
            EXPECT_NEAR(std::abs(inner(make_ghz(g - b).ket(), make_w(g, b).ket())), 0.0, 1e-16);
        }
}

TEST(states, acin_reductions) {
    const double r = 1 / std::sqrt(2.0);
    const double t = 1 / std::sqrt(3.0);
    const double f = 1 / std::sqrt(5.0);
    expect_amps(make_acin({{r, 0, 0, 0, r}, 0}), {r, 0, 0, 0, 0, 0, 0, r});
    expect_amps(make_acin({{0, t, t, t, 0}, 0}), {0, t, t, 0, t, 0, 0, 0});
    expect_amps(make_acin({{f, f, f, f, f}, 0}), {f, f, f, 0, f, 0, 0, f});
    expect_amps(make_xi(), {f, f, f, 0, f, 0, 0, f});

    // Phase sits on |001>, zeros on 011, 101, 110.
    const PureState a = make_acin({{0.5, 0.5, 0.5, 0.5, 0}, 1.0});
    EXPECT_NEAR(std::arg(a.amp(1)), 1.0, 1e-15);
    for (int k : {3, 5, 6}) EXPECT_EQ(a.amp(k), Complex(0.0));
}

TEST(states, acin_generalized_schmidt_support) {
    const PureState a = make_acin({{0.5, 0.5, 0.5, 0.5, 0}, 1.0}, AcinSupport::generalized_schmidt);
    EXPECT_NEAR(a.amp(0).real(), 0.5, 1e-15);
    EXPECT_NEAR(std::arg(a.amp(4)), 1.0, 1e-15);
    EXPECT_NEAR(a.amp(5).real(), 0.5, 1e-15);
    EXPECT_NEAR(a.amp(6).real(), 0.5, 1e-15);
    for (int k : {1, 2, 3, 7}) EXPECT_EQ(a.amp(k), Complex(0.0));
}

TEST(states, acin_rejects_bad_params) {
    EXPECT_THROW(make_acin({{1, 1, 0, 0, 0}, 0}), ValidationError);
    EXPECT_THROW(make_acin({{-1, 0, 0, 0, 0}, 0}), ValidationError);
    EXPECT_THROW(make_acin({{1, 0, 0, 0, 0}, 3.5}), ValidationError);
    EXPECT_THROW(make_acin({{1, 0, 0, 0, 0}, -0.1}), ValidationError);
    EXPECT_NO_THROW(make_acin({{1, 0, 0, 0, 0}, kPi}));
}

TEST(states, acin_round_trip_reads_back_params) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 200; ++t) {
        const AcinParams p = oracle::random_acin(rng);
        const PureState psi = make_acin(p);
        const auto idx = support_indices(AcinSupport::ghz_w);
        for (int i = 0; i < 5; ++i) EXPECT_NEAR(std::abs(psi.amp(idx[i])), p.lambda[i], 1e-15);
        EXPECT_NEAR(std::arg(psi.amp(1)), p.alpha, 1e-14);
    }
}

TEST(states, superposition_limits_and_linearity) {
    const SuperpositionParams g{1.0, 0.0, 0.7, 0.1, 0.2};
    expect_amps(make_superposition(g), {make_ghz(0.7).amp(0), 0, 0, 0, 0, 0, 0, make_ghz(0.7).amp(7)});
    const PureState w = make_superposition({0.0, 1.0, 0.7, 0.1, 0.2});
    for (int k = 0; k < 8; ++k) EXPECT_NEAR(std::abs(w.amp(k) - make_w(0.1, 0.2).amp(k)), 0.0, 1e-15);

    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        const SuperpositionParams s = superposition_params(u(rng), 6 * u(rng), 6 * u(rng), 6 * u(rng), 6 * u(rng));
        const PureState psi = make_superposition(s);
        const PureState gs = make_ghz(s.phi);
        const PureState ws = make_w(s.gamma, s.beta);
        for (int k = 0; k < 8; ++k) EXPECT_NEAR(std::abs(psi.amp(k) - (s.a * gs.amp(k) + s.b * ws.amp(k))), 0.0, 1e-15);
    }
}

TEST(states, superposition_third_weight_on_ghz) {
    const PureState psi = make_superposition(superposition_params(1.0 / 3));
    EXPECT_NEAR(std::norm(inner(make_ghz(0).ket(), psi.ket())), 1.0 / 3, 1e-15);
    EXPECT_THROW(make_superposition({1.0, 1.0, 0, 0, 0}), ValidationError);
    EXPECT_THROW(superposition_params(1.5), ValidationError);
}

TEST(states, pure_state_enforces_normalization) {
    EXPECT_THROW(PureState(Ket::basis(4, 0)), ValidationError);
    EXPECT_THROW(PureState(Complex(1.0 + 1e-11) * Ket::basis(8, 0)), ValidationError);
    EXPECT_NO_THROW(PureState(Complex(1.0 + 1e-13) * Ket::basis(8, 0)));
    try {
        PureState(Complex(2.0) * Ket::basis(8, 3));
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_NE(std::string(e.what()).find("norm"), std::string::npos);
    }
}

TEST(states, haar_random_is_deterministic_and_normalized) {
    const PureState a = haar_random_pure(1234);
    const PureState b = haar_random_pure(1234);
    const PureState c = haar_random_pure(1235);
    for (int k = 0; k < 8; ++k) EXPECT_EQ(a.amp(k), b.amp(k));
    EXPECT_GT(std::abs(a.amp(0) - c.amp(0)), 0.0);
    for (std::uint64_t s = 0; s < 200; ++s) EXPECT_NEAR(haar_random_pure(s).ket().norm_sq(), 1.0, 1e-12);
}

TEST(states, haar_marginal_mean) {
    double mean = 0;
    const int n = 10000;
    for (int s = 0; s < n; ++s) mean += std::norm(haar_random_pure(s).amp(0));
    mean /= n;
    EXPECT_NEAR(mean, 1.0 / 8, 0.01);
}

TEST(states, mix_examples) {
    const DensityMatrix single = mix({{{1.0, make_xi()}}});
    EXPECT_LE(max_abs_diff(single.op(), outer(make_xi().ket())), 1e-15);

    const DensityMatrix half = mix({{{0.5, make_ghz(0)}, {0.5, make_w(0, 0)}}});
    EXPECT_NEAR(trace(half.op()).real(), 1.0, 1e-15);
    const auto e = hermitian_eigs(half.op());
    int rank = 0;
    for (double x : e) rank += x > 1e-12;
    EXPECT_EQ(rank, 2);
    EXPECT_NEAR(e[7], 0.5, 1e-12);
    EXPECT_NEAR(e[6], 0.5, 1e-12);
}

TEST(states, mix_rejects_bad_weights) {
    EXPECT_THROW(mix({{{1.2, make_xi()}, {-0.2, make_ghz(0)}}}), ValidationError);
    EXPECT_THROW(mix({{{0.5, make_xi()}, {0.4, make_ghz(0)}}}), ValidationError);
    EXPECT_THROW(mix({}), ValidationError);
}

TEST(states, random_mixtures_are_valid_density_matrices) {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        MixtureSpec m;
        double s = 0;
        std::vector<double> w(1 + t % 5);
        for (double &x : w) s += (x = u(rng));
        for (size_t i = 0; i < w.size(); ++i) m.components.push_back({w[i] / s, haar_random_pure(1000 + 10 * t + i)});
        // Renormalize the last weight exactly.
        double acc = 0;
        for (size_t i = 0; i + 1 < w.size(); ++i) acc += m.components[i].weight;
        m.components.back().weight = 1.0 - acc;
        const DensityMatrix rho = mix(m);
        EXPECT_GE(hermitian_eigs(rho.op()).front(), -1e-12);
    }
}

TEST(states, density_matrix_validation) {
    EXPECT_THROW(DensityMatrix(Operator::identity(8)), ValidationError);  // trace 8
    Operator neg = Operator::diagonal(std::array<double, 8>{1.5, -0.5, 0, 0, 0, 0, 0, 0});
    EXPECT_THROW(DensityMatrix{neg}, ValidationError);
    Operator nh = Complex(1.0 / 8) * Operator::identity(8);
    nh(0, 1) = 0.01;
    EXPECT_THROW(DensityMatrix{nh}, ValidationError);
    EXPECT_NO_THROW(DensityMatrix(Complex(1.0 / 8) * Operator::identity(8)));
}

TEST(states, embed_biseparable_places_slots) {
    // |1>_B (x) |00>_AC has index 2.
    const Ket k = embed_biseparable(Ket::basis(2, 1), Ket::basis(4, 0), BipartitionCut{Qubit::B});
    EXPECT_EQ(k[2], Complex(1.0));
    // |1>_C (x) |10>_AB has index 4 + 1 = 5.
    const Ket k2 = embed_biseparable(Ket::basis(2, 1), Ket::basis(4, 2), BipartitionCut{Qubit::C});
    EXPECT_EQ(k2[5], Complex(1.0));
    // Solo A matches the plain tensor product.
    std::mt19937_64 rng(53);
    const Ket x = random_gaussian_ket(2, rng);
    const Ket y = random_gaussian_ket(4, rng);
    const Ket e = embed_biseparable(x, y, BipartitionCut{Qubit::A});
    const Ket t = tensor(x, y);
    for (int i = 0; i < 8; ++i) EXPECT_EQ(e[i], t[i]);
}
