// Copyright 2026 The ghzcat Authors
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

#ifndef GHZCAT_DYNAMICS_H
#define GHZCAT_DYNAMICS_H

#include <cstddef>
#include <vector>

#include "ghzcat/dicke.h"
#include "ghzcat/full_oracle.h"

namespace ghzcat {

/// Eigenvalue of S+S- on the symmetric Dicke state with k excitations: k (N - k + 1).
inline double spsm_eigenvalue(std::size_t n, std::size_t k) {
    return static_cast<double>(k) * static_cast<double>(n - k + 1);
}

/// Maps an angle to (-pi, pi].
double wrap_phase(double radians);

/// e^{-i tau S+S-} applied in the Dicke basis: c_k -> e^{-i tau k(N-k+1)} c_k.
DickeState propagate(const DickeState &s, ScaledTime tau);

/// prod_j (|g_j> + i|e_j>) / sqrt(2) in the Dicke basis.
DickeState zheng_initial(AtomCount n);

/// The two-branch atomic cat state
///
///   e^{-iN pi/2} / sqrt(2) [ e^{i pi/4} |theta, phi - pi(N-1)/2> + e^{-i pi/4} |theta, phi - pi(N-3)/2> ]
///
/// with both branches built by coherent_dicke. The branch overlap is
/// (-1)^N cos^N(theta), which is real, so the superposition has unit norm for
/// every theta; a norm off by more than 1e-9 throws NormalizationError.
DickeState cat_state(AtomCount n, CoherentParams p);

/// The two Dicke-basis branches of cat_state, without prefactors.
struct CatBranches {
    DickeState first;   // |theta, phi - pi(N-1)/2>
    DickeState second;  // |theta, phi - pi(N-3)/2>
};
CatBranches cat_branches(AtomCount n, CoherentParams p);

/// The GHZ state reached from zheng_initial at tau = pi/2, built in the product space:
///
///   e^{i pi/4} / sqrt(2) { prod_j (|g_j> + (-i)^N |e_j>)/sqrt(2) - i prod_j (|g_j> - (-i)^N |e_j>)/sqrt(2) }
///
/// Throws CapacityError above kMaxFullAtoms.
FullState ghz_state(AtomCount n);

struct EquivalenceReport {
    std::size_t n = 0;
    double fidelity_prop_vs_cat = 0;
    double fidelity_prop_vs_ghz = 0;
    double fidelity_cat_vs_ghz = 0;
    /// arg <ghz|cat>, in (-pi, pi].
    double phase_cat_over_ghz = 0;
    /// -N pi/2 mapped to (-pi, pi].
    double expected_phase = 0;
    /// arg <cat|propagated>. Recorded, not asserted.
    double phase_prop_over_cat = 0;
    /// Max over the three pairs of || x - e^{i arg<y|x>} y ||_inf.
    double max_residual = 0;

    /// |wrap(phase_cat_over_ghz - expected_phase)|.
    double phase_error() const;
    /// All fidelities within `tolerance` of 1, residual and phase error below `tolerance`.
    bool passes(double tolerance) const;
};

/// Compares propagate(zheng_initial(n), pi/2), cat_state(n, pi/2, -pi/2) and ghz_state(n).
EquivalenceReport equivalence_report(AtomCount n);

/// equivalence_report for n = 1..max_n, computed in parallel; element i holds n = i + 1.
std::vector<EquivalenceReport> equivalence_sweep(std::size_t max_n);

}  // namespace ghzcat

#endif
