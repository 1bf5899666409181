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

#ifndef GHZCAT_TESTS_FIXTURES_H
#define GHZCAT_TESTS_FIXTURES_H

// Regression values frozen from tests/oracle/compute_fixtures.py, which works
// entirely in the 2^N product space with numpy. Rerun that script to
// regenerate; never edit these from C++ output.

namespace ghzcat::fixtures {

// N = 3, theta = pi/2, phi = -pi/2, tau = pi/2, alpha = pi/2, 256-point grid over [-pi, pi).
inline constexpr double kGapCoherentMixtureN3 = 0.12500000000000003;
inline constexpr double kGapCoherentNoCavityN3 = 0.50000000000000011;
inline constexpr double kHarmonicsCoherentN3[] = {0.31249999999999978, 0.046874999999999931, 0.093749999999999944,
                                                  0.015625000000000014};
inline constexpr double kHarmonicsMixtureN3[] = {0.3125, 6.9388939039072284e-18, 0.09375, 7.152448122690996e-18};
inline constexpr double kHarmonicsNoCavityN3[] = {0.3125, 0.234375, 0.09375, 0.015624999999999984};
// Grid indices 0, 64, 128, 192 are beta = -pi, -pi/2, 0, pi/2.
inline constexpr double kCoherentSamplesN3[] = {2.7376812118762972e-31, 0.49999999999999989, 0.24999999999999956,
                                                0.49999999999999928};

// Same parameters with N = 4: the cat fringe coincides with the branch mixture.
inline constexpr double kGapCoherentMixtureN4 = 1.1102230246251565e-15;
inline constexpr double kGapCoherentNoCavityN4 = 0.93750000000000022;

// |<pi/2, 0|cat_3>|^2.
inline constexpr double kCat3DetectionAtEquatorZero = 0.24999999999999956;

// <3; pi/2, -pi/2 | 3; pi/2, 0>.
inline constexpr double kOverlapN3Re = -0.25000000000000017;
inline constexpr double kOverlapN3Im = 0.24999999999999989;

// <5; 1.1, 0.3 | 5; 0.7, -2.0>.
inline constexpr double kOverlapN5Re = -0.072252763761296107;
inline constexpr double kOverlapN5Im = 0.14439235641220333;

}  // namespace ghzcat::fixtures

#endif
