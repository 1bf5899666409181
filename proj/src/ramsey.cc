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

#include "ghzcat/ramsey.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ghzcat/dynamics.h"
#include "ghzcat/errors.h"
#include "ghzcat/kernels.h"

namespace ghzcat {

namespace {

constexpr double kWeightSumTolerance = 1e-12;
constexpr double kGridTolerance = 1e-9;
constexpr double kCatTimeTolerance = 1e-12;

}  // namespace

void BetaGrid::validate() const {
    if (!std::isfinite(min) || !std::isfinite(max)) {
        throw std::invalid_argument("beta grid bounds must be finite");
    }
    if (steps < 2) {
        throw std::invalid_argument("beta grid needs at least 2 steps, got " + std::to_string(steps));
    }
    if (!(max > min)) {
        throw std::invalid_argument("beta grid is degenerate: beta_max must exceed beta_min");
    }
}

std::vector<double> BetaGrid::points() const {
    validate();
    std::vector<double> out(steps);
    const double width = max - min;
    for (std::size_t i = 0; i < steps; ++i) {
        out[i] = min + width * static_cast<double>(i) / static_cast<double>(steps);
    }
    return out;
}

MixtureSpec::MixtureSpec(std::vector<Branch> branches) : branches_(std::move(branches)) {
    if (branches_.empty()) {
        throw std::invalid_argument("mixture needs at least one branch");
    }
    double total = 0;
    for (const Branch &b : branches_) {
        if (!(b.weight >= 0)) {
            throw std::invalid_argument("mixture weights must be nonnegative");
        }
        if (!(b.state.atoms() == branches_.front().state.atoms())) {
            throw SizeMismatchError("mixture branches have different atom counts");
        }
        total += b.weight;
    }
    if (std::abs(total - 1) > kWeightSumTolerance) {
        throw std::invalid_argument("mixture weights sum to " + std::to_string(total) + ", not 1");
    }
}

double detection_probability(const DickeState &s, RamseyParams r) {
    const DickeState bra = coherent_dicke(s.atoms(), {r.alpha, r.beta});
    return std::norm(overlap(bra, s));
}

double coherent_detection_probability(AtomCount n, CoherentParams source, RamseyParams r) {
    return std::norm(coherent_overlap_closed_form(n, {r.alpha, r.beta}, source));
}

double mixture_probability(const MixtureSpec &m, RamseyParams r) {
    std::vector<double> terms;
    terms.reserve(m.branches().size());
    for (const auto &b : m.branches()) {
        terms.push_back(b.weight * detection_probability(b.state, r));
    }
    // Sorting makes the floating-point sum independent of branch order.
    std::sort(terms.begin(), terms.end());
    double acc = 0;
    for (double t : terms) {
        acc += t;
    }
    return acc;
}

FringeSeries fringe_sweep(const DickeState &s, double alpha, const BetaGrid &grid) {
    FringeSeries out;
    out.n = s.atoms().value();
    out.alpha = alpha;
    out.betas = grid.points();
    out.p_coherent.resize(out.betas.size());
    kernels::omp::tabulate(
        out.betas, [&](double beta) { return detection_probability(s, {alpha, beta}); }, out.p_coherent);
    return out;
}

std::vector<double> mixture_sweep(const MixtureSpec &m, double alpha, std::span<const double> betas) {
    std::vector<double> out(betas.size());
    kernels::omp::tabulate(betas, [&](double beta) { return mixture_probability(m, {alpha, beta}); }, out);
    return out;
}

MixtureSpec cat_branch_mixture(AtomCount n, CoherentParams source) {
    CatBranches br = cat_branches(n, source);
    std::vector<MixtureSpec::Branch> branches;
    branches.push_back({0.5, std::move(br.first)});
    branches.push_back({0.5, std::move(br.second)});
    return MixtureSpec(std::move(branches));
}

MixtureSpec dephased_mixture(const DickeState &s) {
    std::vector<MixtureSpec::Branch> branches;
    double total = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        total += std::norm(s[k]);
    }
    for (std::size_t k = 0; k < s.size(); ++k) {
        branches.push_back({std::norm(s[k]) / total, DickeState::basis(s.atoms(), k)});
    }
    return MixtureSpec(std::move(branches));
}

bool is_cat_time(ScaledTime tau) {
    return std::abs(wrap_phase(tau.tau - kPi / 2)) <= kCatTimeTolerance;
}

FringeSeries compare_channels(AtomCount n, CoherentParams source, ScaledTime tau, double alpha,
                              const BetaGrid &grid) {
    const DickeState start = coherent_dicke(n, source);
    const DickeState evolved = propagate(start, tau);
    if (std::abs(norm(evolved) - 1) > kSameRepTolerance) {
        throw NormalizationError("propagated source state lost normalization");
    }

    FringeSeries out = fringe_sweep(evolved, alpha, grid);
    out.theta = source.theta;
    out.phi = source.phi;
    out.tau = tau.tau;

    const MixtureSpec mixture = is_cat_time(tau) ? cat_branch_mixture(n, source) : dephased_mixture(evolved);
    out.p_mixture = mixture_sweep(mixture, alpha, out.betas);
    out.p_no_cavity = fringe_sweep(start, alpha, grid).p_coherent;
    return out;
}

std::vector<double> harmonic_magnitudes(std::span<const double> betas, std::span<const double> values,
                                        std::size_t max_harmonic) {
    if (betas.size() != values.size()) {
        throw SizeMismatchError("harmonic analysis needs one value per grid point");
    }
    const std::size_t len = betas.size();
    if (len < 2 * max_harmonic + 2) {
        throw std::invalid_argument(
            "harmonics up to " + std::to_string(max_harmonic) + " need at least " +
            std::to_string(2 * max_harmonic + 2) + " grid points, got " + std::to_string(len));
    }
    const double step = 2 * kPi / static_cast<double>(len);
    for (std::size_t i = 1; i < len; ++i) {
        if (std::abs(betas[i] - betas[i - 1] - step) > kGridTolerance) {
            throw std::invalid_argument("harmonic analysis needs a uniform grid spanning one 2pi period");
        }
    }

    std::vector<double> out(max_harmonic + 1);
    for (std::size_t h = 0; h <= max_harmonic; ++h) {
        Complex acc = 0;
        for (std::size_t i = 0; i < len; ++i) {
            acc += values[i] * cis(-static_cast<double>(h) * betas[i]);
        }
        out[h] = std::abs(acc) / static_cast<double>(len);
    }
    return out;
}

ChannelGaps channel_gaps(const FringeSeries &s) {
    if (s.p_mixture.size() != s.p_coherent.size() || s.p_no_cavity.size() != s.p_coherent.size()) {
        throw SizeMismatchError("channel gaps need all three channels filled");
    }
    ChannelGaps g{0, 0, 0};
    for (std::size_t i = 0; i < s.p_coherent.size(); ++i) {
        g.coherent_vs_mixture = std::max(g.coherent_vs_mixture, std::abs(s.p_coherent[i] - s.p_mixture[i]));
        g.coherent_vs_no_cavity = std::max(g.coherent_vs_no_cavity, std::abs(s.p_coherent[i] - s.p_no_cavity[i]));
        g.mixture_vs_no_cavity = std::max(g.mixture_vs_no_cavity, std::abs(s.p_mixture[i] - s.p_no_cavity[i]));
    }
    return g;
}

}  // namespace ghzcat
