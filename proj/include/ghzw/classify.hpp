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

// Entanglement certification for pure three-qubit states.

#include <vector>

#include "ghzw/states.hpp"

namespace ghzw {

inline constexpr double kBiseparableTol = 1e-9;

struct SchmidtPair {
    double first;   // larger
    double second;  // smaller
};

struct EntanglementReport {
    std::array<SchmidtPair, 3> schmidt_by_cut{};  // indexed by slot(cut.solo)
    bool genuinely_entangled = false;
    std::vector<Qubit> biseparable_cuts;
    double three_tangle = 0;
};

/// Squared Schmidt coefficients across `cut`, descending.
inline SchmidtPair bipartition_schmidt(const PureState &psi, BipartitionCut cut) {
    const auto eig = hermitian_eigs(partial_trace(outer(psi.ket()), cut.solo));
    return {std::clamp(eig[1], 0.0, 1.0), std::clamp(eig[0], 0.0, 1.0)};
}

/// 4 |Cayley hyperdeterminant of the amplitude tensor|.
inline double three_tangle(const PureState &psi) {
    auto c = [&](int k) { return psi.amp(k); };
    const Complex d1 = c(0) * c(0) * c(7) * c(7) + c(1) * c(1) * c(6) * c(6) + c(2) * c(2) * c(5) * c(5) +
                       c(4) * c(4) * c(3) * c(3);
    const Complex d2 = c(0) * c(7) * c(3) * c(4) + c(0) * c(7) * c(5) * c(2) + c(0) * c(7) * c(6) * c(1) +
                       c(3) * c(4) * c(5) * c(2) + c(3) * c(4) * c(6) * c(1) + c(5) * c(2) * c(6) * c(1);
    const Complex d3 = c(0) * c(6) * c(5) * c(3) + c(7) * c(1) * c(2) * c(4);
    return std::clamp(4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3), 0.0, 1.0);
}

/// A cut counts as biseparable when its smaller Schmidt value is <= tol.
inline EntanglementReport is_genuinely_entangled_pure(const PureState &psi, double tol = kBiseparableTol) {
    if (!(tol > 0)) throw ValidationError("biseparability tolerance must be positive");
    EntanglementReport r;
    for (BipartitionCut cut : kAllCuts) {
        const SchmidtPair s = bipartition_schmidt(psi, cut);
        r.schmidt_by_cut[slot(cut.solo)] = s;
        if (s.second <= tol) r.biseparable_cuts.push_back(cut.solo);
    }
    r.genuinely_entangled = r.biseparable_cuts.empty();
    r.three_tangle = three_tangle(psi);
    return r;
}

/// Smallest eigenvalue of the partial transpose on `cut.solo`. Negative
/// values certify entanglement across the cut.
inline double ppt_min_eigenvalue(const DensityMatrix &rho, BipartitionCut cut) {
    return hermitian_eigs(partial_transpose(rho.op(), cut.solo)).front();
}

}  // namespace ghzw
