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

#ifndef GHZCAT_FULL_ORACLE_H
#define GHZCAT_FULL_ORACLE_H

// Brute-force 2^N product-space representation. Nothing here uses the
// Dicke-sector eigenvalue formula; the collective operators are assembled
// from single-atom sigma+ / sigma- and exponentiated numerically, so this
// module is the ground truth the symmetric-subspace code is checked against.
//
// Basis convention: index b = sum_j b_j 2^j, bit j set means atom j is in |e>.

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ghzcat/dicke.h"

namespace ghzcat {

/// Largest atom count for any 2^N state vector.
inline constexpr std::size_t kMaxFullAtoms = 20;
/// Largest atom count for dense 2^N x 2^N operators and their eigendecomposition.
inline constexpr std::size_t kMaxDenseAtoms = 12;

class FullState {
   public:
    /// Throws CapacityError above kMaxFullAtoms and SizeMismatchError unless amps.size() == 2^n.
    FullState(AtomCount n, std::vector<Complex> amps);

    AtomCount atoms() const noexcept {
        return n_;
    }
    std::size_t size() const noexcept {
        return amps_.size();
    }
    std::span<const Complex> amps() const noexcept {
        return amps_;
    }
    Complex operator[](std::size_t b) const {
        return amps_[b];
    }

   private:
    AtomCount n_;
    std::vector<Complex> amps_;
};

/// Dense 2^N x 2^N complex operator.
struct OperatorMatrix {
    AtomCount n;
    Eigen::MatrixXcd entries;
};

/// Single-atom amplitudes (g_amp, e_amp) of one tensor factor.
struct AtomFactor {
    Complex g;
    Complex e;
};

/// amps[b] = prod_j (b_j ? factors[j].e : factors[j].g). Each factor must be normalized to 1e-12.
FullState product_state(AtomCount n, std::span<const AtomFactor> factors);

/// Same factor on every atom.
FullState uniform_product_state(AtomCount n, AtomFactor factor);

/// S- = sum_j |g><e|_j. Throws CapacityError above kMaxDenseAtoms.
OperatorMatrix collective_lowering(AtomCount n);

/// S+ = (S-)^dagger.
OperatorMatrix collective_raising(AtomCount n);

/// S+S-, assembled directly from sigma+_i sigma-_j pairs.
OperatorMatrix collective_spsm(AtomCount n);

double norm(const FullState &s);
Complex inner_product(const FullState &a, const FullState &b);

/// A * s.
FullState apply(const OperatorMatrix &a, const FullState &s);

/// Spectral exponentiation of the real symmetric S+S-.
///
/// Construction diagonalizes S+S- once (dense, O(8^N)); `apply` then costs
/// two dense mat-vecs per time. Construction verifies that every eigenvalue
/// is an integer to 1e-9 and throws NumericalError otherwise.
class SpectralPropagator {
   public:
    explicit SpectralPropagator(AtomCount n);

    AtomCount atoms() const noexcept {
        return n_;
    }
    /// Ascending eigenvalues of S+S-.
    const Eigen::VectorXd &eigenvalues() const noexcept {
        return eigenvalues_;
    }

    /// e^{-i tau S+S-} s. Throws NumericalError if the norm drifts by more than 1e-10.
    FullState apply(const FullState &s, ScaledTime tau) const;

   private:
    AtomCount n_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd eigenvectors_;
};

/// One-shot e^{-i tau S+S-} s. Use SpectralPropagator to reuse the eigendecomposition.
FullState propagate_full(const FullState &s, ScaledTime tau);

/// Symmetric-subspace isometry: amps[b] = c_{popcount(b)} / sqrt(C(N, popcount(b))).
FullState embed(const DickeState &d);

struct Projection {
    DickeState state;
    /// ||f - embed(raw projection)||_2 before renormalization.
    double residual;
};

/// Adjoint of embed, renormalized. Throws OutOfSubspaceError when residual >= 1e-10.
Projection project(const FullState &f);

}  // namespace ghzcat

#endif
