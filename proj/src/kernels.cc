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

#include "ghzcat/kernels.h"

#include <bit>
#include <cmath>
#include <cstdint>

#include <omp.h>

namespace ghzcat::kernels {

namespace {

inline std::size_t popcount(std::size_t b) {
    return static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(b)));
}

// Column b of S+S-: lower atom j (bit j set), then raise atom i (bit i clear afterwards).
inline void fill_spsm_column(std::size_t num_atoms, std::size_t dim, std::size_t b, double *h) {
    for (std::size_t j = 0; j < num_atoms; ++j) {
        if (!((b >> j) & 1)) {
            continue;
        }
        const std::size_t lowered = b ^ (std::size_t{1} << j);
        for (std::size_t i = 0; i < num_atoms; ++i) {
            if ((lowered >> i) & 1) {
                continue;
            }
            h[b * dim + (lowered | (std::size_t{1} << i))] += 1.0;
        }
    }
}

}  // namespace

namespace serial {

void embed_symmetric(std::span<const Complex> dicke, std::span<const double> weight, std::span<Complex> full) {
    for (std::size_t b = 0; b < full.size(); ++b) {
        const std::size_t k = popcount(b);
        full[b] = dicke[k] * weight[k];
    }
}

void sum_by_popcount(std::span<const Complex> full, std::span<Complex> out) {
    for (auto &o : out) {
        o = 0;
    }
    for (std::size_t b = 0; b < full.size(); ++b) {
        out[popcount(b)] += full[b];
    }
}

std::vector<double> collective_spsm(std::size_t num_atoms) {
    const std::size_t dim = std::size_t{1} << num_atoms;
    std::vector<double> h(dim * dim, 0.0);
    for (std::size_t b = 0; b < dim; ++b) {
        fill_spsm_column(num_atoms, dim, b, h.data());
    }
    return h;
}

void real_matvec(std::span<const double> a, std::span<const Complex> x, std::span<Complex> y) {
    const std::size_t dim = x.size();
    for (std::size_t r = 0; r < dim; ++r) {
        Complex acc = 0;
        for (std::size_t c = 0; c < dim; ++c) {
            acc += a[c * dim + r] * x[c];
        }
        y[r] = acc;
    }
}

void real_matvec_transposed(std::span<const double> a, std::span<const Complex> x, std::span<Complex> y) {
    const std::size_t dim = x.size();
    for (std::size_t c = 0; c < dim; ++c) {
        const double *col = a.data() + c * dim;
        Complex acc = 0;
        for (std::size_t r = 0; r < dim; ++r) {
            acc += col[r] * x[r];
        }
        y[c] = acc;
    }
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    Complex acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

}  // namespace serial

namespace omp {

void embed_symmetric(std::span<const Complex> dicke, std::span<const double> weight, std::span<Complex> full) {
    const auto dim = static_cast<std::ptrdiff_t>(full.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < dim; ++b) {
        const std::size_t k = popcount(static_cast<std::size_t>(b));
        full[b] = dicke[k] * weight[k];
    }
}

void sum_by_popcount(std::span<const Complex> full, std::span<Complex> out) {
    const std::size_t buckets = out.size();
    const int threads = omp_get_max_threads();
    // Per-thread partial sums, combined in thread order so the result only
    // depends on the thread count.
    std::vector<Complex> partial(static_cast<std::size_t>(threads) * buckets, Complex{0});
    const auto dim = static_cast<std::ptrdiff_t>(full.size());
#pragma omp parallel num_threads(threads)
    {
        Complex *mine = partial.data() + static_cast<std::size_t>(omp_get_thread_num()) * buckets;
#pragma omp for schedule(static)
        for (std::ptrdiff_t b = 0; b < dim; ++b) {
            mine[popcount(static_cast<std::size_t>(b))] += full[b];
        }
    }
    for (std::size_t k = 0; k < buckets; ++k) {
        Complex acc = 0;
        for (int t = 0; t < threads; ++t) {
            acc += partial[static_cast<std::size_t>(t) * buckets + k];
        }
        out[k] = acc;
    }
}

std::vector<double> collective_spsm(std::size_t num_atoms) {
    const std::size_t dim = std::size_t{1} << num_atoms;
    std::vector<double> h(dim * dim, 0.0);
    const auto sdim = static_cast<std::ptrdiff_t>(dim);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < sdim; ++b) {
        fill_spsm_column(num_atoms, dim, static_cast<std::size_t>(b), h.data());
    }
    return h;
}

void real_matvec(std::span<const double> a, std::span<const Complex> x, std::span<Complex> y) {
    const std::size_t dim = x.size();
    const auto sdim = static_cast<std::ptrdiff_t>(dim);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < sdim; ++r) {
        Complex acc = 0;
        for (std::size_t c = 0; c < dim; ++c) {
            acc += a[c * dim + static_cast<std::size_t>(r)] * x[c];
        }
        y[r] = acc;
    }
}

void real_matvec_transposed(std::span<const double> a, std::span<const Complex> x, std::span<Complex> y) {
    const std::size_t dim = x.size();
    const auto sdim = static_cast<std::ptrdiff_t>(dim);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < sdim; ++c) {
        const double *col = a.data() + static_cast<std::size_t>(c) * dim;
        Complex acc = 0;
        for (std::size_t r = 0; r < dim; ++r) {
            acc += col[r] * x[r];
        }
        y[c] = acc;
    }
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    double re = 0;
    double im = 0;
    const auto n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static) reduction(+ : re, im)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const Complex t = std::conj(a[i]) * b[i];
        re += t.real();
        im += t.imag();
    }
    return {re, im};
}

}  // namespace omp

}  // namespace ghzcat::kernels
