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

#ifndef GHZCAT_RAMSEY_H
#define GHZCAT_RAMSEY_H

// Detection signal of a two-zone Ramsey setup around the cavity. The first
// zone prepares |theta, phi>, the cavity applies e^{-i tau S+S-}, and the
// second zone with field parameters (alpha, beta) followed by an all-ground
// measurement is equivalent to projecting onto the coherent state
// <alpha, beta|. The signal is P(beta) = |<alpha, beta|psi>|^2.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ghzcat/dicke.h"

namespace ghzcat {

struct RamseyParams {
    double alpha = 0;
    double beta = 0;
};

/// Half-open uniform grid: beta_i = min + i (max - min) / steps, i = 0..steps-1.
struct BetaGrid {
    double min = -kPi;
    double max = kPi;
    std::size_t steps = 256;

    /// Throws std::invalid_argument for steps < 2, non-finite bounds or max <= min.
    void validate() const;
    std::vector<double> points() const;
};

/// A classical mixture of pure symmetric states.
class MixtureSpec {
   public:
    struct Branch {
        double weight;
        DickeState state;
    };

    /// Weights must be nonnegative and sum to 1 within 1e-12; all states share one atom count.
    explicit MixtureSpec(std::vector<Branch> branches);

    std::span<const Branch> branches() const noexcept {
        return branches_;
    }
    AtomCount atoms() const {
        return branches_.front().state.atoms();
    }

   private:
    std::vector<Branch> branches_;
};

struct FringeSeries {
    std::size_t n = 0;
    double alpha = 0;
    double theta = 0;
    double phi = 0;
    double tau = 0;
    std::vector<double> betas;
    std::vector<double> p_coherent;
    std::vector<double> p_mixture;
    std::vector<double> p_no_cavity;
};

/// |<alpha, beta|s>|^2 with the bra built by coherent_dicke.
double detection_probability(const DickeState &s, RamseyParams r);

/// Detection probability of the coherent state |source> via the closed-form overlap.
double coherent_detection_probability(AtomCount n, CoherentParams source, RamseyParams r);

/// sum_i w_i |<alpha, beta|state_i>|^2, summed in a fixed order independent of branch order.
double mixture_probability(const MixtureSpec &m, RamseyParams r);

/// Fills `betas` and `p_coherent` only; the other channels stay empty.
FringeSeries fringe_sweep(const DickeState &s, double alpha, const BetaGrid &grid);

/// Same sweep over `betas` for a mixture.
std::vector<double> mixture_sweep(const MixtureSpec &m, double alpha, std::span<const double> betas);

/// Equal-weight mixture of the two cat branches at (theta, phi).
MixtureSpec cat_branch_mixture(AtomCount n, CoherentParams source);

/// The Dicke-basis diagonal of s: weights |c_k|^2 on the basis states |k>.
MixtureSpec dephased_mixture(const DickeState &s);

/// True when tau is pi/2 modulo 2pi (to 1e-12), where the cat-branch mixture applies.
bool is_cat_time(ScaledTime tau);

/// The full three-channel comparison for a source |theta, phi> evolved for tau:
///   coherent:  propagate(|theta, phi>, tau)
///   mixture:   cat_branch_mixture at cat time, otherwise dephased_mixture of the evolved state
///   no cavity: |theta, phi> itself
FringeSeries compare_channels(AtomCount n, CoherentParams source, ScaledTime tau, double alpha,
                              const BetaGrid &grid);

/// |sum_i p_i e^{-i h beta_i}| / len for h = 0..max_harmonic.
///
/// `betas` must be uniform and cover exactly one 2pi period (half-open) with
/// at least 2 max_harmonic + 2 points; otherwise std::invalid_argument.
std::vector<double> harmonic_magnitudes(std::span<const double> betas, std::span<const double> values,
                                        std::size_t max_harmonic);

struct ChannelGaps {
    double coherent_vs_mixture;
    double coherent_vs_no_cavity;
    double mixture_vs_no_cavity;
};

/// Max over beta of the pointwise channel differences.
ChannelGaps channel_gaps(const FringeSeries &s);

}  // namespace ghzcat

#endif
