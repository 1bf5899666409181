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

#include "ghzcat/dynamics.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "ghzcat/errors.h"

namespace ghzcat {

namespace {

constexpr double kCatNormTolerance = 1e-9;

// || x - e^{i arg<y|x>} y ||_inf
double aligned_residual(const DickeState &x, const DickeState &y) {
    const Complex phase = cis(std::arg(overlap(y, x)));
    double worst = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        worst = std::max(worst, std::abs(x[k] - phase * y[k]));
    }
    return worst;
}

}  // namespace

double wrap_phase(double radians) {
    double r = std::remainder(radians, 2 * kPi);
    if (r <= -kPi) {
        r += 2 * kPi;
    }
    return r;
}

DickeState propagate(const DickeState &s, ScaledTime tau) {
    const std::size_t n = s.atoms().value();
    std::vector<Complex> amps(s.amps().begin(), s.amps().end());
    for (std::size_t k = 0; k < amps.size(); ++k) {
        amps[k] *= cis(-tau.tau * spsm_eigenvalue(n, k));
    }
    return DickeState(s.atoms(), std::move(amps));
}

DickeState zheng_initial(AtomCount n) {
    const std::size_t N = n.value();
    const double scale = std::pow(2.0, -0.5 * static_cast<double>(N));
    static constexpr Complex kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::vector<Complex> amps(N + 1);
    for (std::size_t k = 0; k <= N; ++k) {
        amps[k] = kPowersOfI[k % 4] * (std::sqrt(static_cast<double>(binomial(N, k))) * scale);
    }
    return DickeState(n, std::move(amps));
}

CatBranches cat_branches(AtomCount n, CoherentParams p) {
    const double N = static_cast<double>(n.value());
    return {
        coherent_dicke(n, {p.theta, p.phi - kPi * (N - 1) / 2}),
        coherent_dicke(n, {p.theta, p.phi - kPi * (N - 3) / 2}),
    };
}

DickeState cat_state(AtomCount n, CoherentParams p) {
    const CatBranches br = cat_branches(n, p);
    const Complex prefactor = cis(-static_cast<double>(n.value()) * kPi / 2) / std::sqrt(2.0);
    const Complex w1 = prefactor * cis(kPi / 4);
    const Complex w2 = prefactor * cis(-kPi / 4);

    std::vector<Complex> amps(n.dicke_dim());
    for (std::size_t k = 0; k < amps.size(); ++k) {
        amps[k] = w1 * br.first[k] + w2 * br.second[k];
    }
    DickeState out(n, std::move(amps));
    const double len = norm(out);
    if (std::abs(len - 1) > kCatNormTolerance) {
        throw NormalizationError(
            "cat-state superposition has norm " + std::to_string(len) + "; branches are not orthogonal");
    }
    return out;
}

FullState ghz_state(AtomCount n) {
    if (n.value() > kMaxFullAtoms) {
        throw CapacityError("GHZ state is built in the product space; at most " + std::to_string(kMaxFullAtoms) +
                            " atoms");
    }
    static constexpr Complex kPowersOfMinusI[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    const Complex s = kPowersOfMinusI[n.value() % 4];
    const double r = 1 / std::sqrt(2.0);

    const FullState plus = uniform_product_state(n, {r, s * r});
    const FullState minus = uniform_product_state(n, {r, -s * r});
    const Complex a = cis(kPi / 4) * r;
    const Complex b = a * Complex(0, -1);

    std::vector<Complex> amps(plus.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = a * plus[i] + b * minus[i];
    }
    return FullState(n, std::move(amps));
}

double EquivalenceReport::phase_error() const {
    return std::abs(wrap_phase(phase_cat_over_ghz - expected_phase));
}

bool EquivalenceReport::passes(double tolerance) const {
    return std::abs(1 - fidelity_prop_vs_cat) < tolerance && std::abs(1 - fidelity_prop_vs_ghz) < tolerance &&
           std::abs(1 - fidelity_cat_vs_ghz) < tolerance && max_residual < tolerance && phase_error() < tolerance;
}

EquivalenceReport equivalence_report(AtomCount n) {
    const DickeState propagated = propagate(zheng_initial(n), {kPi / 2});
    if (std::abs(norm(propagated) - 1) > kSameRepTolerance) {
        throw NormalizationError("propagated state lost normalization");
    }
    const DickeState cat = cat_state(n, {kPi / 2, -kPi / 2});
    const DickeState ghz = project(ghz_state(n)).state;

    EquivalenceReport r;
    r.n = n.value();
    r.fidelity_prop_vs_cat = std::norm(overlap(propagated, cat));
    r.fidelity_prop_vs_ghz = std::norm(overlap(propagated, ghz));
    r.fidelity_cat_vs_ghz = std::norm(overlap(cat, ghz));
    r.phase_cat_over_ghz = wrap_phase(std::arg(overlap(ghz, cat)));
    r.expected_phase = wrap_phase(-static_cast<double>(n.value()) * kPi / 2);
    r.phase_prop_over_cat = wrap_phase(std::arg(overlap(cat, propagated)));
    r.max_residual = std::max({aligned_residual(propagated, cat), aligned_residual(propagated, ghz),
                               aligned_residual(cat, ghz)});
    return r;
}

std::vector<EquivalenceReport> equivalence_sweep(std::size_t max_n) {
    if (max_n > kMaxFullAtoms) {
        throw CapacityError("equivalence checks build product-space states; at most " +
                            std::to_string(kMaxFullAtoms) + " atoms");
    }
    std::vector<EquivalenceReport> out(max_n);
    // Errors are kept per n and the smallest failing n is reported, independent of schedule.
    std::vector<std::exception_ptr> errors(max_n);
    const auto count = static_cast<std::ptrdiff_t>(max_n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            out[idx] = equivalence_report(AtomCount(idx + 1));
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

}  // namespace ghzcat
