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

// Five-term normal form of a three-qubit pure state under local unitaries:
//
//   (U_A (x) U_B (x) U_C)|psi> = l0|000> + l1 e^{i alpha}|100> + l2|101> + l3|110> + l4|111>
//
// with every l_i >= 0 and alpha in [0, pi].
//
// Construction. Slice the amplitudes by qubit A into 2x2 matrices T0, T1
// (rows B, columns C). A rotation of A whose first row (u0, u1) makes
// det(u0 T0 + u1 T1) = 0 leaves a rank-one A=0 block, which singular vectors
// of B and C turn into a single corner entry. Local phases then make every
// amplitude real except the one on |100>. The determinant condition is a
// homogeneous quadratic with two roots; generically exactly one of them ends
// with alpha in [0, pi], which makes the form unique.
//
// The GHZ/W support {000, 001, 010, 100, 111} is not a relabeling of this one
// (no bit flip maps one support onto the other), so results carry their
// support explicitly.

#include <optional>
#include <sstream>

#include "ghzw/classify.hpp"

namespace ghzw {

struct LocalUnitaries {
    Operator u_a{Operator::identity(2)};
    Operator u_b{Operator::identity(2)};
    Operator u_c{Operator::identity(2)};

    Operator combined() const { return kron(kron(u_a, u_b), u_c); }
};

struct CanonicalResult {
    AcinParams params;
    AcinSupport support = AcinSupport::generalized_schmidt;
    LocalUnitaries unitaries;
    double residual = 0;
};

inline constexpr double kCanonicalResidualTol = 1e-8;

struct LuInvariants {
    std::array<std::array<double, 2>, 3> spectra{};  // ascending, indexed by slot
    double three_tangle = 0;
};

/// Reduced single-qubit spectra and the three-tangle; equal for states related by local unitaries.
inline LuInvariants local_unitary_invariants(const PureState &psi) {
    LuInvariants inv;
    for (BipartitionCut cut : kAllCuts) {
        const SchmidtPair s = bipartition_schmidt(psi, cut);
        inv.spectra[slot(cut.solo)] = {s.second, s.first};
    }
    inv.three_tangle = three_tangle(psi);
    return inv;
}

inline double max_invariant_gap(const LuInvariants &x, const LuInvariants &y) {
    double m = std::abs(x.three_tangle - y.three_tangle);
    for (int q = 0; q < 3; ++q)
        for (int i = 0; i < 2; ++i) m = std::max(m, std::abs(x.spectra[q][i] - y.spectra[q][i]));
    return m;
}

namespace detail {

using Mat2 = std::array<std::array<Complex, 2>, 2>;
using Vec2 = std::array<Complex, 2>;

inline constexpr double kAmpZero = 1e-14;

inline Complex det2(const Mat2 &m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

inline Vec2 unit2(Complex x, Complex y) {
    const double n = std::sqrt(std::norm(x) + std::norm(y));
    return {x / n, y / n};
}

/// Unitary whose first row is `row` (a unit vector).
inline Operator unitary_with_row(const Vec2 &row) {
    Operator u(2);
    u(0, 0) = row[0];
    u(0, 1) = row[1];
    u(1, 0) = -std::conj(row[1]);
    u(1, 1) = std::conj(row[0]);
    return u;
}

/// Both projective roots (u0 : u1) of c0 u0^2 + c1 u0 u1 + c2 u1^2 = 0, as unit vectors.
inline std::array<Vec2, 2> homogeneous_roots(Complex c0, Complex c1, Complex c2) {
    auto quad = [](Complex a, Complex b, Complex c) -> std::pair<Complex, Complex> {
        // a x^2 + b x + c = 0 with a != 0, cancellation-free.
        const Complex disc = std::sqrt(b * b - 4.0 * a * c);
        const Complex q = -0.5 * (b + ((std::conj(b) * disc).real() >= 0 ? disc : -disc));
        if (q == Complex{}) return {Complex{}, Complex{}};
        return {q / a, c / q};
    };
    if (c0 == Complex{} && c2 == Complex{}) return {Vec2{1.0, 0.0}, Vec2{0.0, 1.0}};
    if (std::abs(c2) >= std::abs(c0)) {
        const auto [r1, r2] = quad(c2, c1, c0);  // r = u1/u0
        return {unit2(1.0, r1), unit2(1.0, r2)};
    }
    const auto [t1, t2] = quad(c0, c1, c2);  // t = u0/u1
    return {unit2(t1, 1.0), unit2(t2, 1.0)};
}

struct Svd2 {
    Vec2 left0, left1;    // left singular vectors, descending singular value
    Vec2 right0, right1;  // right singular vectors
};

/// SVD of a 2x2 matrix via the eigensystem of M M^dagger.
inline Svd2 svd2(const Mat2 &raw) {
    const double scale =
        std::sqrt(std::norm(raw[0][0]) + std::norm(raw[0][1]) + std::norm(raw[1][0]) + std::norm(raw[1][1]));
    Mat2 m = raw;
    if (scale > 0)
        for (auto &row : m)
            for (Complex &z : row) z /= scale;
    Operator mmh(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) mmh(i, j) = m[i][0] * std::conj(m[j][0]) + m[i][1] * std::conj(m[j][1]);
    const EigenSystem es = hermitian_eigensystem(mmh);
    Svd2 s;
    s.left0 = {es.vectors(0, 1), es.vectors(1, 1)};
    s.left1 = {es.vectors(0, 0), es.vectors(1, 0)};
    // right_k = M^dagger left_k / sigma_k
    auto right_of = [&](const Vec2 &u) -> std::optional<Vec2> {
        Vec2 v{std::conj(m[0][0]) * u[0] + std::conj(m[1][0]) * u[1],
               std::conj(m[0][1]) * u[0] + std::conj(m[1][1]) * u[1]};
        const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
        if (n <= kAmpZero) return std::nullopt;
        return Vec2{v[0] / n, v[1] / n};
    };
    s.right0 = right_of(s.left0).value_or(Vec2{1.0, 0.0});
    s.right1 = {-std::conj(s.right0[1]), std::conj(s.right0[0])};
    return s;
}

/// Finishes the decomposition for one choice of the first row of U_A,
/// diagonalizing the A=0 block or, with `second_block`, the A=1 block.
inline CanonicalResult finish_branch(const PureState &psi, const Vec2 &row_a, bool second_block) {
    Mat2 t0{}, t1{};
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            t0[j][k] = psi.amp(2 * j + k);
            t1[j][k] = psi.amp(4 + 2 * j + k);
        }
    Operator ua = unitary_with_row(row_a);
    Mat2 r0{}, r1{};
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            r0[j][k] = ua(0, 0) * t0[j][k] + ua(0, 1) * t1[j][k];
            r1[j][k] = ua(1, 0) * t0[j][k] + ua(1, 1) * t1[j][k];
        }

    const Svd2 s = second_block ? svd2(r1) : svd2(r0);
    Operator ub(2), uc(2);
    ub(0, 0) = std::conj(s.left0[0]);
    ub(0, 1) = std::conj(s.left0[1]);
    ub(1, 0) = std::conj(s.left1[0]);
    ub(1, 1) = std::conj(s.left1[1]);
    uc(0, 0) = s.right0[0];
    uc(0, 1) = s.right0[1];
    uc(1, 0) = s.right1[0];
    uc(1, 1) = s.right1[1];
    // Rows of U_B are left singular vectors^dagger, rows of U_C are right
    // singular vectors, so U_B M U_C^T = diag(sigma).

    const Ket rotated = kron(kron(ua, ub), uc) * psi.ket();
    auto th = [&](int k) { return std::arg(rotated[k]); };
    auto present = [&](int k) { return std::abs(rotated[k]) > kAmpZero; };

    // Phase offsets: g on |0>_A, ap = g + a on |1>_A, b on |1>_B, c on |1>_C.
    const double g = present(0) ? -th(0) : 0.0;
    double ap = 0, b = 0, c = 0;
    if (present(5) && present(6) && present(7)) {
        ap = th(7) - th(5) - th(6);
        c = -th(5) - ap;
        b = -th(6) - ap;
    } else {
        ap = present(4) ? -th(4) : 0.0;
        std::optional<double> bo, co;
        if (present(5)) co = -th(5) - ap;
        if (present(6)) bo = -th(6) - ap;
        if (present(7)) {
            if (bo && !co) co = -th(7) - ap - *bo;
            if (co && !bo) bo = -th(7) - ap - *co;
            if (!bo && !co) {
                bo = 0.0;
                co = -th(7) - ap;
            }
        }
        b = bo.value_or(0.0);
        c = co.value_or(0.0);
    }
    Operator pa(2), pb(2), pc(2);
    pa(0, 0) = std::polar(1.0, g);
    pa(1, 1) = std::polar(1.0, ap);
    pb(0, 0) = 1.0;
    pb(1, 1) = std::polar(1.0, b);
    pc(0, 0) = 1.0;
    pc(1, 1) = std::polar(1.0, c);

    CanonicalResult out;
    out.unitaries.u_a = pa * ua;
    out.unitaries.u_b = pb * ub;
    out.unitaries.u_c = pc * uc;
    const Ket fin = out.unitaries.combined() * psi.ket();

    const auto idx = support_indices(AcinSupport::generalized_schmidt);
    double sum = 0;
    for (int i = 0; i < 5; ++i) {
        out.params.lambda[i] = std::abs(fin[idx[i]]);
        sum += out.params.lambda[i] * out.params.lambda[i];
    }
    if (sum > 0) {
        for (double &l : out.params.lambda) l /= std::sqrt(sum);
    } else {
        out.params.lambda = {1, 0, 0, 0, 0};
    }
    double alpha = present(4) ? std::arg(fin[4]) : 0.0;
    if (alpha < 0) alpha += 2 * std::numbers::pi;
    if (2 * std::numbers::pi - alpha < 1e-12) alpha = 0;
    out.params.alpha = alpha;
    return out;
}

inline double reconstruction_residual(const PureState &psi, const CanonicalResult &r) {
    AcinParams p = r.params;
    p.alpha = std::clamp(p.alpha, 0.0, std::numbers::pi);
    return norm(r.unitaries.combined() * psi.ket() - make_acin(p, r.support).ket());
}

}  // namespace detail

/// Local-unitary normal form of `psi` on the generalized Schmidt support.
///
/// Throws std::runtime_error if no root branch reaches the residual
/// tolerance; the form exists for every state, so that indicates a bug.
inline CanonicalResult acin_decompose(const PureState &psi) {
    using namespace detail;
    Mat2 t0{}, t1{};
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            t0[j][k] = psi.amp(2 * j + k);
            t1[j][k] = psi.amp(4 + 2 * j + k);
        }
    // det(u0 T0 + u1 T1) = c0 u0^2 + c1 u0 u1 + c2 u1^2
    const Complex c0 = det2(t0);
    const Complex c2 = det2(t1);
    const Complex c1 = t0[0][0] * t1[1][1] + t1[0][0] * t0[1][1] - t0[0][1] * t1[1][0] - t1[0][1] * t0[1][0];

    std::vector<Vec2> rows;
    constexpr double kCoefZero = 1e-14;
    if (std::abs(c0) <= kCoefZero && std::abs(c1) <= kCoefZero && std::abs(c2) <= kCoefZero) {
        // Every combination is singular: the state is a product across B or C
        // (or across all cuts). Take the combination with the largest A=0 block.
        const EigenSystem es = hermitian_eigensystem(partial_trace(outer(psi.ket()), Qubit::A));
        rows.push_back({std::conj(es.vectors(0, 1)), std::conj(es.vectors(1, 1))});
    } else {
        for (const Vec2 &r : homogeneous_roots(c0, c1, c2)) rows.push_back(r);
    }
    // A product A|BC leaves an (almost) vanishing A=0 block, whose singular
    // vectors are noise; the A=1 block then carries the state.
    std::vector<std::pair<Vec2, bool>> branches;
    for (const Vec2 &r : rows) {
        branches.emplace_back(r, false);
        branches.emplace_back(r, true);
    }

    std::optional<CanonicalResult> best;
    std::ostringstream diag;
    for (const auto &[row, second_block] : branches) {
        CanonicalResult cand = finish_branch(psi, row, second_block);
        cand.residual = reconstruction_residual(psi, cand);
        const bool in_range = cand.params.alpha <= std::numbers::pi + 1e-12;
        diag << " [lambda0=" << cand.params.lambda[0] << " alpha=" << cand.params.alpha
             << " residual=" << cand.residual << "]";
        if (!in_range || !(cand.residual <= kCanonicalResidualTol)) continue;
        cand.params.alpha = std::min(cand.params.alpha, std::numbers::pi);
        if (!best) {
            best = cand;
            continue;
        }
        const double dl = cand.params.lambda[0] - best->params.lambda[0];
        if (dl > 1e-12 || (std::abs(dl) <= 1e-12 && cand.params.alpha < best->params.alpha)) best = cand;
    }
    if (!best) throw std::runtime_error("canonical decomposition failed on every root branch:" + diag.str());
    return *best;
}

}  // namespace ghzw
