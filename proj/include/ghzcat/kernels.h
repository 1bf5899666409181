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

#ifndef GHZCAT_KERNELS_H
#define GHZCAT_KERNELS_H

// Data-parallel inner loops over the 2^N product basis and over Ramsey phase
// grids. Every kernel exists twice with the same signature: `serial` is the
// reference implementation the tests compare against, `omp` is what the
// library calls. Bit ordering: atom j is bit j of the basis index.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ghzcat::kernels {

using Complex = std::complex<double>;

namespace serial {

/// full[b] = dicke[popcount(b)] * weight[popcount(b)].
void embed_symmetric(std::span<const Complex> dicke, std::span<const double> weight, std::span<Complex> full);

/// out[k] = sum of full[b] over all b with popcount(b) == k. out.size() must be N + 1.
void sum_by_popcount(std::span<const Complex> full, std::span<Complex> out);

/// Dense column-major S+S- = sum_{i,j} sigma+_i sigma-_j on `num_atoms` atoms.
std::vector<double> collective_spsm(std::size_t num_atoms);

/// y = A x for a dim x dim column-major real matrix.
void real_matvec(std::span<const double> a, std::span<const Complex> x, std::span<Complex> y);

/// y = A^T x for a dim x dim column-major real matrix.
void real_matvec_transposed(std::span<const double> a, std::span<const Complex> x, std::span<Complex> y);

/// sum_b conj(a[b]) * b[b].
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

/// out[i] = f(xs[i]).
template <typename F>
void tabulate(std::span<const double> xs, F &&f, std::span<double> out) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out[i] = f(xs[i]);
    }
}

}  // namespace serial

namespace omp {

void embed_symmetric(std::span<const Complex> dicke, std::span<const double> weight, std::span<Complex> full);
void sum_by_popcount(std::span<const Complex> full, std::span<Complex> out);
std::vector<double> collective_spsm(std::size_t num_atoms);
void real_matvec(std::span<const double> a, std::span<const Complex> x, std::span<Complex> y);
void real_matvec_transposed(std::span<const double> a, std::span<const Complex> x, std::span<Complex> y);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

/// Same output as serial::tabulate, bit for bit, for any schedule: each entry is
/// a pure function of its own input.
template <typename F>
void tabulate(std::span<const double> xs, F &&f, std::span<double> out) {
    const auto n = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[i] = f(xs[i]);
    }
}

}  // namespace omp

}  // namespace ghzcat::kernels

#endif
