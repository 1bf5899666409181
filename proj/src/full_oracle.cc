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

#include "ghzcat/full_oracle.h"

#include <cmath>
#include <string>

#include "ghzcat/errors.h"
#include "ghzcat/kernels.h"

namespace ghzcat {

namespace {

constexpr double kProjectionResidualLimit = 1e-10;
constexpr double kIntegralityTolerance = 1e-9;
constexpr double kUnitarityTolerance = 1e-10;

void require_full_capacity(AtomCount n) {
    if (n.value() > kMaxFullAtoms) {
        throw CapacityError(
            "product-space states support at most " + std::to_string(kMaxFullAtoms) + " atoms, got " +
            std::to_string(n.value()));
    }
}

void require_dense_capacity(AtomCount n) {
    if (n.value() > kMaxDenseAtoms) {
        throw CapacityError(
            "dense product-space operators support at most " + std::to_string(kMaxDenseAtoms) + " atoms, got " +
            std::to_string(n.value()));
    }
}

std::size_t full_dim(AtomCount n) {
    return std::size_t{1} << n.value();
}

std::vector<double> inverse_sqrt_binomials(AtomCount n) {
    std::vector<double> w(n.dicke_dim());
    for (std::size_t k = 0; k < w.size(); ++k) {
        w[k] = 1.0 / std::sqrt(static_cast<double>(binomial(n.value(), k)));
    }
    return w;
}

}  // namespace

FullState::FullState(AtomCount n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {
    require_full_capacity(n_);
    if (amps_.size() != full_dim(n_)) {
        throw SizeMismatchError(
            "product state of " + std::to_string(n_.value()) + " atoms needs " + std::to_string(full_dim(n_)) +
            " amplitudes, got " + std::to_string(amps_.size()));
    }
}

FullState product_state(AtomCount n, std::span<const AtomFactor> factors) {
    require_full_capacity(n);
    if (factors.size() != n.value()) {
        throw SizeMismatchError(
            "expected " + std::to_string(n.value()) + " single-atom factors, got " + std::to_string(factors.size()));
    }
    for (std::size_t j = 0; j < factors.size(); ++j) {
        const double nn = std::norm(factors[j].g) + std::norm(factors[j].e);
        if (std::abs(nn - 1) > kSameRepTolerance) {
            throw NormalizationError("factor for atom " + std::to_string(j) + " is not normalized");
        }
    }

    std::vector<Complex> amps(full_dim(n));
    amps[0] = 1;
    // After atom j, the low 2^{j+1} entries hold the product over atoms 0..j.
    for (std::size_t j = 0; j < factors.size(); ++j) {
        const std::size_t half = std::size_t{1} << j;
        for (std::size_t b = 0; b < half; ++b) {
            amps[b + half] = amps[b] * factors[j].e;
            amps[b] *= factors[j].g;
        }
    }
    return FullState(n, std::move(amps));
}

FullState uniform_product_state(AtomCount n, AtomFactor factor) {
    const std::vector<AtomFactor> factors(n.value(), factor);
    return product_state(n, factors);
}

OperatorMatrix collective_lowering(AtomCount n) {
    require_dense_capacity(n);
    const std::size_t dim = full_dim(n);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t b = 0; b < dim; ++b) {
        for (std::size_t j = 0; j < n.value(); ++j) {
            if ((b >> j) & 1) {
                m(static_cast<Eigen::Index>(b ^ (std::size_t{1} << j)), static_cast<Eigen::Index>(b)) = 1.0;
            }
        }
    }
    return {n, std::move(m)};
}

OperatorMatrix collective_raising(AtomCount n) {
    OperatorMatrix lower = collective_lowering(n);
    return {n, lower.entries.adjoint()};
}

OperatorMatrix collective_spsm(AtomCount n) {
    require_dense_capacity(n);
    const auto dim = static_cast<Eigen::Index>(full_dim(n));
    const std::vector<double> h = kernels::omp::collective_spsm(n.value());
    return {n, Eigen::Map<const Eigen::MatrixXd>(h.data(), dim, dim).cast<Complex>()};
}

double norm(const FullState &s) {
    return std::sqrt(kernels::omp::inner_product(s.amps(), s.amps()).real());
}

Complex inner_product(const FullState &a, const FullState &b) {
    if (!(a.atoms() == b.atoms())) {
        throw SizeMismatchError("inner product of product states with different atom counts");
    }
    return kernels::omp::inner_product(a.amps(), b.amps());
}

FullState apply(const OperatorMatrix &a, const FullState &s) {
    if (!(a.n == s.atoms())) {
        throw SizeMismatchError("operator and state act on different atom counts");
    }
    const auto dim = static_cast<Eigen::Index>(s.size());
    Eigen::Map<const Eigen::VectorXcd> x(s.amps().data(), dim);
    Eigen::VectorXcd y = a.entries * x;
    return FullState(s.atoms(), std::vector<Complex>(y.data(), y.data() + dim));
}

SpectralPropagator::SpectralPropagator(AtomCount n) : n_(n) {
    require_dense_capacity(n);
    const auto dim = static_cast<Eigen::Index>(full_dim(n));
    const std::vector<double> h = kernels::omp::collective_spsm(n.value());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(Eigen::Map<const Eigen::MatrixXd>(h.data(), dim, dim));
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigendecomposition of S+S- failed for " + std::to_string(n.value()) + " atoms");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double lambda = eigenvalues_(i);
        if (std::abs(lambda - std::round(lambda)) > kIntegralityTolerance) {
            throw NumericalError("S+S- eigenvalue " + std::to_string(lambda) + " is not an integer");
        }
    }
}

FullState SpectralPropagator::apply(const FullState &s, ScaledTime tau) const {
    if (!(s.atoms() == n_)) {
        throw SizeMismatchError("propagator and state act on different atom counts");
    }
    const std::size_t dim = s.size();
    const std::span<const double> u(eigenvectors_.data(), dim * dim);

    std::vector<Complex> coeffs(dim);
    kernels::omp::real_matvec_transposed(u, s.amps(), coeffs);
    for (std::size_t i = 0; i < dim; ++i) {
        coeffs[i] *= cis(-tau.tau * eigenvalues_(static_cast<Eigen::Index>(i)));
    }
    std::vector<Complex> out(dim);
    kernels::omp::real_matvec(u, coeffs, out);

    FullState result(s.atoms(), std::move(out));
    if (std::abs(norm(result) - norm(s)) > kUnitarityTolerance) {
        throw NumericalError("spectral propagation did not preserve the norm");
    }
    return result;
}

FullState propagate_full(const FullState &s, ScaledTime tau) {
    return SpectralPropagator(s.atoms()).apply(s, tau);
}

FullState embed(const DickeState &d) {
    require_full_capacity(d.atoms());
    const std::vector<double> w = inverse_sqrt_binomials(d.atoms());
    std::vector<Complex> full(full_dim(d.atoms()));
    kernels::omp::embed_symmetric(d.amps(), w, full);
    return FullState(d.atoms(), std::move(full));
}

Projection project(const FullState &f) {
    const AtomCount n = f.atoms();
    const std::vector<double> w = inverse_sqrt_binomials(n);

    std::vector<Complex> c(n.dicke_dim());
    kernels::omp::sum_by_popcount(f.amps(), c);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] *= w[k];
    }

    std::vector<Complex> back(f.size());
    kernels::omp::embed_symmetric(c, w, back);
    for (std::size_t b = 0; b < back.size(); ++b) {
        back[b] = f[b] - back[b];
    }
    const double residual = std::sqrt(kernels::omp::inner_product(back, back).real());
    if (!(residual < kProjectionResidualLimit)) {
        throw OutOfSubspaceError(
            "state is not permutation-symmetric: residual " + std::to_string(residual) + " after projection");
    }

    DickeState raw(n, std::move(c));
    const double len = norm(raw);
    if (len == 0) {
        throw NormalizationError("cannot project the zero vector");
    }
    std::vector<Complex> amps(raw.amps().begin(), raw.amps().end());
    for (auto &a : amps) {
        a /= len;
    }
    return {DickeState(n, std::move(amps)), residual};
}

}  // namespace ghzcat
