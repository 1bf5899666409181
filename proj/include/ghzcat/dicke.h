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

#ifndef GHZCAT_DICKE_H
#define GHZCAT_DICKE_H

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace ghzcat {

using Complex = std::complex<double>;
/// Carrier for inner products such as <alpha,beta|psi>.
using ComplexAmplitude = Complex;

inline constexpr double kPi = std::numbers::pi;

/// Tolerance for algebraic identities evaluated within one representation.
inline constexpr double kSameRepTolerance = 1e-12;
/// Tolerance for checks that compare the Dicke and product-space representations.
inline constexpr double kCrossRepTolerance = 1e-10;

/// e^{ix}. Unlike std::polar, callers multiply by a possibly negative real magnitude.
inline Complex cis(double x) {
    return {std::cos(x), std::sin(x)};
}

/// Number of two-level atoms. Always at least one.
class AtomCount {
   public:
    explicit AtomCount(std::size_t n);

    std::size_t value() const noexcept {
        return n_;
    }
    /// Dimension of the fully symmetric sector, N + 1.
    std::size_t dicke_dim() const noexcept {
        return n_ + 1;
    }

    friend bool operator==(AtomCount, AtomCount) = default;

   private:
    std::size_t n_;
};

/// Angles of an atomic coherent state |theta, phi>.
///
/// The same pair parameterizes the second Ramsey zone. Any finite reals are
/// accepted; the canonical chart is theta in [0, pi], phi in [-pi, pi), and
/// values outside it describe the same ray (theta -> -theta, phi -> phi + pi
/// and so on) but may differ by a global phase through the e^{iN phi} prefactor.
struct CoherentParams {
    double theta = 0;
    double phi = 0;
};

/// The dimensionless evolution time eta * t. Nothing depends on eta or t separately.
struct ScaledTime {
    double tau = 0;
};

/// Exact binomial coefficient C(n, k) for n <= 60.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// A pure state of N atoms restricted to the fully symmetric sector.
///
/// amps[k] is the amplitude of the Dicke state with k atoms excited
/// (m = k - N/2). Constructors in this library return normalized states; the
/// raw constructor accepts any amplitudes of the right length.
class DickeState {
   public:
    DickeState(AtomCount n, std::vector<Complex> amps);

    /// The Dicke basis vector with `k` excitations.
    static DickeState basis(AtomCount n, std::size_t k);

    AtomCount atoms() const noexcept {
        return n_;
    }
    std::size_t size() const noexcept {
        return amps_.size();
    }
    std::span<const Complex> amps() const noexcept {
        return amps_;
    }
    Complex operator[](std::size_t k) const {
        return amps_[k];
    }

   private:
    AtomCount n_;
    std::vector<Complex> amps_;
};

/// Dicke-basis expansion of e^{iN phi} prod_j (cos(theta/2)|g_j> + e^{-i phi} sin(theta/2)|e_j>).
DickeState coherent_dicke(AtomCount n, CoherentParams p);

/// <a|b>, conjugate-linear in the first argument. Throws SizeMismatchError.
ComplexAmplitude overlap(const DickeState &a, const DickeState &b);

/// <a|b> between two coherent states, from the product form without building either state.
ComplexAmplitude coherent_overlap_closed_form(AtomCount n, CoherentParams a, CoherentParams b);

double norm(const DickeState &s);

}  // namespace ghzcat

#endif
