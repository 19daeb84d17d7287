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

#include "heliwave/helicity.hpp"

#include "gtest/gtest.h"

#include "heliwave/errors.hpp"
#include "test_util.hpp"

using namespace heliwave;
using heliwave::test::uniform;

namespace {

constexpr Helicity kBoth[] = {Helicity::Plus, Helicity::Minus};

double distance(const Vector3c& a, const Vector3c& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(helicity, s_matrix_is_unitary) {
    const Matrix3c& s = s_matrix();
    EXPECT_LT((s * s.adjoint() - Matrix3c::Identity()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(helicity, closed_form_rotation_matches_conjugation) {
    for (int i = 0; i < 200; i++) {
        double t = uniform(0, kPi);
        double f = uniform(0, kTwoPi);
        Eigen::Matrix3d r = standard_rotation(t, f).block<3, 3>(1, 1);
        ASSERT_LT((helicity_rotation(t, f) - helicity_basis(r)).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(helicity, triad_columns) {
    auto p = FourMomentum::from_angles(kPi / 4, kPi / 6);
    double c = std::cos(kPi / 4);
    double s = std::sin(kPi / 4);
    Vector3c plus(0.5 * (c + 1) * std::polar(1.0, -kPi / 6), 0.5 * (c - 1) * std::polar(1.0, kPi / 6),
                  -s / std::sqrt(2.0));
    Vector3c minus(0.5 * (c - 1) * std::polar(1.0, -kPi / 6), 0.5 * (c + 1) * std::polar(1.0, kPi / 6),
                   -s / std::sqrt(2.0));
    EXPECT_LT(distance(triad(p, Helicity::Plus).v, plus), 1e-15);
    EXPECT_LT(distance(triad(p, Helicity::Minus).v, minus), 1e-15);

    // |k, +> and |k, -> are the first two basis vectors.
    EXPECT_LT(distance(triad(FourMomentum(), Helicity::Plus).v, Vector3c(1, 0, 0)), 1e-15);
    EXPECT_LT(distance(triad(FourMomentum(), Helicity::Minus).v, Vector3c(0, 1, 0)), 1e-15);
}

TEST(helicity, triads_are_orthonormal_and_transverse) {
    for (int i = 0; i < 200; i++) {
        auto p = test::random_direction();
        Vector3c a = triad(p, Helicity::Plus).v;
        Vector3c b = triad(p, Helicity::Minus).v;
        ASSERT_NEAR(a.norm(), 1, 1e-14);
        ASSERT_NEAR(b.norm(), 1, 1e-14);
        ASSERT_LT(std::abs(a.dot(b)), 1e-14);
        Vector3c dir = p.direction().cast<Complex>();
        ASSERT_LT(std::abs(dir.dot(to_linear(a))), 1e-14);

        // sum over helicities of eps eps^dagger is the transverse projector.
        Eigen::Matrix3cd sum = Eigen::Matrix3cd::Zero();
        for (Helicity h : kBoth) {
            Vector3c e = to_linear(triad(p, h).v);
            sum += e * e.adjoint();
        }
        ASSERT_LT((sum - transverse_projector(p).cast<Complex>()).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(helicity, floor_weights_and_overlap) {
    for (double t : {0.1, 0.7, 1.2, kPi / 2, 2.5}) {
        auto p = FourMomentum::from_angles(t, 0.4);
        double c = std::cos(t);
        FlooredKet a = floor(triad(p, Helicity::Plus));
        FlooredKet b = floor(triad(p, Helicity::Minus));
        EXPECT_NEAR(a.detection_weight, (1 + c * c) / 2, 1e-15);
        EXPECT_NEAR(a.v.norm(), 1, 1e-15);
        EXPECT_NEAR(std::abs(floored_overlap(a, b) - Complex((c * c - 1) / (1 + c * c))), 0, 1e-15);
    }
}

TEST(helicity, gauge_fix_restores_coulomb_gauge) {
    auto p = FourMomentum::from_angles(0.8, 1.9);
    auto moved = transform(bz(1.1), polarization(triad(p, Helicity::Plus)));
    EXPECT_GT(std::abs(moved.eps[0]), 1e-3);
    auto fixed = gauge_fix(moved);
    EXPECT_LT(std::abs(fixed.eps[0]), 1e-15);
    Vector3c spatial = fixed.eps.tail<3>();
    EXPECT_LT(std::abs(fixed.p.direction().cast<Complex>().dot(spatial)), 1e-14);
}

TEST(helicity, transport_is_the_wigner_phase) {
    for (int i = 0; i < 300; i++) {
        auto lambda = test::random_normal_form();
        auto p = test::random_direction();
        double w = wigner_angle_numeric(lambda, p);
        FourMomentum q = apply(lambda, p);
        for (Helicity h : kBoth) {
            HelicityTriad moved = transport(lambda, triad(p, h));
            Vector3c expected = wigner_factor(w, h) * triad(q, h).v;
            ASSERT_LT(distance(moved.v, expected), 1e-12);
        }
    }
}
