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

#include "ghzcat/dicke.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ghzcat/errors.h"

namespace ghzcat {

namespace {

void require_finite(CoherentParams p) {
    if (!std::isfinite(p.theta) || !std::isfinite(p.phi)) {
        throw std::invalid_argument("coherent-state angles must be finite");
    }
}

}  // namespace

AtomCount::AtomCount(std::size_t n) : n_(n) {
    if (n == 0) {
        throw std::invalid_argument("atom count must be at least 1");
    }
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (n > 60) {
        throw CapacityError("exact binomial supports n <= 60, got " + std::to_string(n));
    }
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    // Each partial product r * C(n, i) / (i + 1) is exact: C(n, i+1) * (i+1) fits for n <= 60.
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
    }
    return r;
}

DickeState::DickeState(AtomCount n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {
    if (amps_.size() != n_.dicke_dim()) {
        throw SizeMismatchError(
            "Dicke state of " + std::to_string(n_.value()) + " atoms needs " + std::to_string(n_.dicke_dim()) +
            " amplitudes, got " + std::to_string(amps_.size()));
    }
}

DickeState DickeState::basis(AtomCount n, std::size_t k) {
    if (k > n.value()) {
        throw std::out_of_range("excitation number exceeds atom count");
    }
    std::vector<Complex> amps(n.dicke_dim());
    amps[k] = 1;
    return DickeState(n, std::move(amps));
}

DickeState coherent_dicke(AtomCount n, CoherentParams p) {
    require_finite(p);
    const std::size_t N = n.value();
    const double c = std::cos(p.theta / 2);
    const double s = std::sin(p.theta / 2);
    const Complex global = cis(static_cast<double>(N) * p.phi);

    std::vector<Complex> amps(N + 1);
    for (std::size_t k = 0; k <= N; ++k) {
        // sqrt(C(N,k)) cos^{N-k} sin^k; pow(0, 0) == 1 covers the poles.
        double mag = std::sqrt(static_cast<double>(binomial(N, k))) * std::pow(c, static_cast<double>(N - k)) *
                     std::pow(s, static_cast<double>(k));
        amps[k] = global * (mag * cis(-static_cast<double>(k) * p.phi));
    }
    return DickeState(n, std::move(amps));
}

ComplexAmplitude overlap(const DickeState &a, const DickeState &b) {
    if (!(a.atoms() == b.atoms())) {
        throw SizeMismatchError(
            "overlap of states with " + std::to_string(a.atoms().value()) + " and " +
            std::to_string(b.atoms().value()) + " atoms");
    }
    Complex acc = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

ComplexAmplitude coherent_overlap_closed_form(AtomCount n, CoherentParams a, CoherentParams b) {
    require_finite(a);
    require_finite(b);
    const double N = static_cast<double>(n.value());
    const double ca = std::cos(a.theta / 2), sa = std::sin(a.theta / 2);
    const double cb = std::cos(b.theta / 2), sb = std::sin(b.theta / 2);
    const Complex bracket = ca * cb + (sa * sb) * cis(a.phi - b.phi);
    // Integer power by repeated multiplication keeps arg() well defined for negative real brackets.
    Complex power = 1;
    for (std::size_t i = 0; i < n.value(); ++i) {
        power *= bracket;
    }
    return cis(N * (b.phi - a.phi)) * power;
}

double norm(const DickeState &s) {
    double acc = 0;
    for (const Complex &c : s.amps()) {
        acc += std::norm(c);
    }
    return std::sqrt(acc);
}

}  // namespace ghzcat
