// Copyright 2026 The heliwave Authors
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

#ifndef HELIWAVE_TESTS_TEST_UTIL_HPP
#define HELIWAVE_TESTS_TEST_UTIL_HPP

#include <cmath>
#include <complex>
#include <random>

#include "heliwave/kinematics.hpp"

namespace heliwave::test {

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20260417);
    return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

/// Random Lambda = rz * ry * bz with |eta| <= max_eta.
inline LorentzTransform random_normal_form(double max_eta = 2.0) {
    return normal_form(uniform(0, kTwoPi), uniform(0, kPi), uniform(-max_eta, max_eta));
}

/// A direction away from the poles and the equator.
inline FourMomentum random_direction() {
    double theta = uniform(0.05, kPi - 0.05);
    if (std::abs(theta - kPi / 2) < 0.01) {
        theta += 0.02;
    }
    return FourMomentum::from_angles(theta, uniform(0, kTwoPi));
}

inline double angle_distance(double a, double b) { return std::abs(wrap_pi(a - b)); }

}  // namespace heliwave::test

#endif
