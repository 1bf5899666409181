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

#include <Eigen/Dense>
#include <omp.h>

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace ghzcat;
using ghzcat::testing::cd;

namespace {

std::vector<cd> random_vector(std::size_t len, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    std::vector<cd> v(len);
    for (auto &x : v) {
        x = cd(gauss(rng), gauss(rng));
    }
    return v;
}

// Runs the OpenMP kernels with several threads even on a single-core host.
class kernels_omp : public ::testing::Test {
   protected:
    void SetUp() override {
        saved_ = omp_get_max_threads();
        omp_set_num_threads(4);
    }
    void TearDown() override {
        omp_set_num_threads(saved_);
    }

   private:
    int saved_ = 1;
};

}  // namespace

TEST_F(kernels_omp, embed_matches_serial_exactly) {
    std::mt19937_64 rng(1);
    for (std::size_t n : {1u, 5u, 12u}) {
        auto dicke = random_vector(n + 1, rng);
        std::vector<double> w(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            w[k] = 0.5 + static_cast<double>(k);
        }
        std::vector<cd> a(std::size_t{1} << n), b(std::size_t{1} << n);
        kernels::serial::embed_symmetric(dicke, w, a);
        kernels::omp::embed_symmetric(dicke, w, b);
        EXPECT_EQ(a, b);
    }
}

TEST_F(kernels_omp, sum_by_popcount_matches_serial) {
    std::mt19937_64 rng(2);
    for (std::size_t n : {1u, 6u, 14u}) {
        auto full = random_vector(std::size_t{1} << n, rng);
        std::vector<cd> a(n + 1), b(n + 1);
        kernels::serial::sum_by_popcount(full, a);
        kernels::omp::sum_by_popcount(full, b);
        EXPECT_LT(ghzcat::testing::max_abs_diff(a, b), 1e-10);
        // Independent count: bucket sizes are binomial coefficients.
        std::vector<cd> ones(full.size(), 1.0);
        kernels::omp::sum_by_popcount(ones, b);
        auto row = ghzcat::testing::pascal_row(n);
        for (std::size_t k = 0; k <= n; ++k) {
            EXPECT_EQ(b[k].real(), row[k]);
        }
    }
}

TEST_F(kernels_omp, spsm_matches_serial_exactly) {
    for (std::size_t n = 1; n <= 8; ++n) {
        EXPECT_EQ(kernels::serial::collective_spsm(n), kernels::omp::collective_spsm(n));
    }
}

TEST_F(kernels_omp, spsm_small_case) {
    // Two atoms: S+S- = [[0,0,0,0],[0,1,1,0],[0,1,1,0],[0,0,0,2]] column-major.
    auto h = kernels::serial::collective_spsm(2);
    const std::vector<double> expected{0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 2};
    EXPECT_EQ(h, expected);
}

TEST_F(kernels_omp, matvec_matches_serial_and_eigen) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss;
    const std::size_t dim = 37;
    std::vector<double> a(dim * dim);
    for (auto &x : a) {
        x = gauss(rng);
    }
    auto x = random_vector(dim, rng);
    std::vector<cd> ys(dim), yo(dim), ts(dim), to(dim);
    kernels::serial::real_matvec(a, x, ys);
    kernels::omp::real_matvec(a, x, yo);
    kernels::serial::real_matvec_transposed(a, x, ts);
    kernels::omp::real_matvec_transposed(a, x, to);
    EXPECT_EQ(ys, yo);
    EXPECT_EQ(ts, to);

    Eigen::Map<const Eigen::MatrixXd> m(a.data(), dim, dim);
    Eigen::Map<const Eigen::VectorXcd> xv(x.data(), dim);
    Eigen::VectorXcd ey = m.cast<cd>() * xv;
    Eigen::VectorXcd et = m.transpose().cast<cd>() * xv;
    for (std::size_t i = 0; i < dim; ++i) {
        EXPECT_NEAR(std::abs(ys[i] - ey(static_cast<Eigen::Index>(i))), 0, 1e-12);
        EXPECT_NEAR(std::abs(ts[i] - et(static_cast<Eigen::Index>(i))), 0, 1e-12);
    }
}

TEST_F(kernels_omp, inner_product_matches_serial) {
    std::mt19937_64 rng(4);
    auto a = random_vector(5000, rng), b = random_vector(5000, rng);
    EXPECT_LT(std::abs(kernels::serial::inner_product(a, b) - kernels::omp::inner_product(a, b)), 1e-10);
}

TEST_F(kernels_omp, tabulate_bitwise_identical) {
    std::vector<double> xs(1001);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xs[i] = -3 + 0.006 * static_cast<double>(i);
    }
    auto f = [](double x) { return std::sin(x) * std::exp(-x * x); };
    std::vector<double> a(xs.size()), b(xs.size());
    kernels::serial::tabulate(xs, f, a);
    kernels::omp::tabulate(xs, f, b);
    EXPECT_EQ(a, b);
}
