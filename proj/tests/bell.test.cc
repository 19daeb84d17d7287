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

#include "heliwave/bell.hpp"

#include "gtest/gtest.h"

#include "heliwave/errors.hpp"
#include "heliwave/fixed_points.hpp"
#include "test_util.hpp"

using namespace heliwave;
using heliwave::test::uniform;

namespace {

constexpr BellKind kKinds[] = {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus};

double max_abs(const Eigen::VectorXcd& v) { return v.cwiseAbs().maxCoeff(); }

MomentumPair random_correlated(Correlation tag) {
    auto p = test::random_direction();
    return correlated_pair(p.theta(), p.phi(), tag);
}

}  // namespace

TEST(bell, parse_and_print) {
    for (Correlation c : kAllCorrelations) {
        EXPECT_EQ(parse_correlation(to_string(c)), c);
    }
    EXPECT_EQ(parse_correlation("PHI-A"), Correlation::PhiA);
    EXPECT_EQ(parse_correlation("none"), Correlation::None);
    EXPECT_THROW(parse_correlation("phi-e"), DomainError);
    EXPECT_EQ(parse_family("Psi"), Family::Psi);
    EXPECT_THROW(parse_family("chi"), DomainError);
    EXPECT_THROW(family_of(Correlation::None), DomainError);
}

TEST(bell, partner_examples) {
    auto a = fixed_point_partner(kPi / 4, kPi / 6, Correlation::PhiA);
    EXPECT_DOUBLE_EQ(a.theta, kPi / 4);
    EXPECT_NEAR(a.phi, kTwoPi - kPi / 6, 1e-15);

    auto d = fixed_point_partner(0.77, 2.1, Correlation::PsiD);
    EXPECT_DOUBLE_EQ(d.theta, 0.77);
    EXPECT_DOUBLE_EQ(d.phi, 2.1);

    auto c = fixed_point_partner(kPi / 4, kPi / 6, Correlation::PhiC);
    EXPECT_NEAR(c.theta, 3 * kPi / 4, 1e-15);
    EXPECT_NEAR(c.phi, 7 * kPi / 6, 1e-15);
    // "points in the opposite direction"
    auto p1 = FourMomentum::from_angles(kPi / 4, kPi / 6);
    auto p2 = FourMomentum::from_any_angles(c.theta, c.phi);
    EXPECT_LT((p1.direction() + p2.direction()).norm(), 1e-15);

    EXPECT_THROW(fixed_point_partner(0.1, 0.2, Correlation::None), DomainError);
}

TEST(bell, all_solutions_solve_their_equation) {
    int checked = 0;
    for (int i = 0; i < 20; i++) {
        double varpi = (i + 0.5) * kPi / 20;
        for (int j = 0; j < 20; j++) {
            double theta1 = (j + 0.5) * kPi / 20;
            for (int k = 0; k < 20; k++) {
                double phi1 = (k + 0.3) * kTwoPi / 20;
                double d1 = wigner_tangent_ry(varpi, theta1, phi1).denominator;
                if (std::abs(d1) < 1e-3) {
                    continue;
                }
                for (Correlation tag : kAllCorrelations) {
                    auto partner = fixed_point_partner(theta1, phi1, tag);
                    auto r = fixed_point_residual(varpi, theta1, phi1, partner.phi - phi1, partner.theta - theta1,
                                                  family_of(tag));
                    ASSERT_TRUE(r.has_value());
                    // Both tangents can be large near the singular locus; compare relative to them.
                    double scale = 1 + std::abs(wigner_tangent_ry(varpi, theta1, phi1).numerator / d1);
                    ASSERT_LT(std::abs(*r), 1e-12 * scale) << to_string(tag) << " " << varpi << " " << theta1 << " " << phi1;
                    checked++;
                }
            }
        }
    }
    EXPECT_GT(checked, 50000);
}

TEST(bell, residual_examples) {
    for (double varpi : {0.3, 0.7, 1.2}) {
        auto r = fixed_point_residual(varpi, 0.9, 0.7, -2 * 0.7, 0, Family::Phi);
        ASSERT_TRUE(r.has_value());
        EXPECT_LT(std::abs(*r), 1e-12);
    }
    for (int i = 0; i < 100; i++) {
        auto r = fixed_point_residual(uniform(0, 3), uniform(0.1, 3), uniform(0, 6), 0, 0, Family::Psi);
        if (r) {
            EXPECT_EQ(*r, 0.0);
        }
    }
    auto phi = fixed_point_residual(0.5, 0.9, 0.7, 0, 0, Family::Phi);
    ASSERT_TRUE(phi.has_value());
    EXPECT_GT(std::abs(*phi), 1e-3);
    EXPECT_FALSE(fixed_point_residual(kPi / 2, kPi / 2, 1.0, 0.3, 0.2, Family::Phi).has_value());
}

TEST(bell, correlated_pairs) {
    auto pair = correlated_pair(0.4, 1.0, Correlation::PhiA);
    EXPECT_TRUE(satisfies(Correlation::PhiA, pair.p1, pair.p2));
    EXPECT_FALSE(satisfies(Correlation::PhiA, pair.p1, pair.p1));
    EXPECT_THROW(correlated_pair(0.0, 0.0, Correlation::PhiA), ExcludedDirectionError);
    EXPECT_NO_THROW(correlated_pair(0.0, 0.0, Correlation::PsiD));
    MomentumPair broken{pair.p1, pair.p1, Correlation::PhiA};
    EXPECT_THROW(validate(broken), DomainError);
}

TEST(bell, states_are_orthonormal) {
    for (int i = 0; i < 50; i++) {
        auto pair = random_correlated(Correlation::PhiA);
        for (BellKind a : kKinds) {
            for (BellKind b : kKinds) {
                Complex overlap = bell(pair, a).amps.dot(bell(pair, b).amps);
                ASSERT_NEAR(std::abs(overlap), a == b ? 1.0 : 0.0, 1e-14);
            }
        }
    }
    EXPECT_THROW(bell(MomentumPair{FourMomentum(), FourMomentum(), Correlation::None}, BellKind::PhiPlus),
                 ExcludedDirectionError);
    EXPECT_NO_THROW(bell(MomentumPair{FourMomentum(), FourMomentum(), Correlation::None}, BellKind::PsiPlus));
}

TEST(bell, component_expansion) {
    auto pair = correlated_pair(kPi / 4, kPi / 6, Correlation::PhiA);
    auto entries = [](double t, double f, int sigma) {
        double c = std::cos(t);
        return Vector3c(0.5 * (c + sigma) * std::polar(1.0, -f), 0.5 * (c - sigma) * std::polar(1.0, f),
                        -std::sin(t) / std::sqrt(2.0));
    };
    Vector3c a1 = entries(kPi / 4, kPi / 6, 1), b1 = entries(kPi / 4, kPi / 6, -1);
    Vector3c a2 = entries(kPi / 4, -kPi / 6, 1), b2 = entries(kPi / 4, -kPi / 6, -1);
    Eigen::VectorXcd expected(9);
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            expected[3 * i + j] = (a1[i] * a2[j] + b1[i] * b2[j]) / std::sqrt(2.0);
        }
    }
    EXPECT_LT(max_abs(bell(pair, BellKind::PhiPlus).amps - expected), 1e-15);
}

TEST(bell, rz_leaves_amplitudes) {
    auto pair = correlated_pair(0.8, 0.3, Correlation::PhiA);
    auto moved = transform_bell(bell(pair, BellKind::PhiPlus), rz(1.1));
    Vector4c c = helicity_coefficients(moved);
    EXPECT_LT((c - Vector4c(1, 0, 0, 1) / std::sqrt(2.0)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(moved.pair.p1.phi(), 1.4, 1e-14);
    EXPECT_NEAR(moved.pair.p2.phi(), wrap_two_pi(-0.3 + 1.1), 1e-14);
}

TEST(bell, ry_leaves_correlated_amplitudes) {
    for (int i = 0; i < 100; i++) {
        auto pair = random_correlated(Correlation::PhiA);
        double varpi = uniform(-3, 3);
        for (BellKind k : {BellKind::PhiPlus, BellKind::PhiMinus}) {
            Vector4c before = helicity_coefficients(bell(pair, k));
            auto moved = transform_bell(bell(pair, k), ry(varpi));
            ASSERT_LT((helicity_coefficients(moved) - before).cwiseAbs().maxCoeff(), 1e-10);
            ASSERT_EQ(moved.pair.tag, Correlation::PhiA);
        }
    }
}

TEST(bell, uncorrelated_pair_dephases) {
    MomentumPair pair{FourMomentum::from_angles(0.5, 0.4), FourMomentum::from_angles(1.1, 2.0), Correlation::None};
    Vector4c before = helicity_coefficients(bell(pair, BellKind::PhiPlus));
    auto moved = transform_bell(bell(pair, BellKind::PhiPlus), ry(0.9));
    EXPECT_GT((helicity_coefficients(moved) - before).cwiseAbs().maxCoeff(), 1e-3);
}

TEST(bell, normal_form_invariance_per_tag) {
    struct Case {
        Correlation tag;
        bool boosts;
    };
    // The antipodal solutions survive rotations only: a boost breaks the antipodality.
    const Case cases[] = {{Correlation::PhiA, true},  {Correlation::PhiB, true},  {Correlation::PsiC, true},
                          {Correlation::PsiD, true},  {Correlation::PhiC, false}, {Correlation::PhiD, false},
                          {Correlation::PsiA, false}, {Correlation::PsiB, false}};
    for (const auto& c : cases) {
        bool phi = family_of(c.tag) == Family::Phi;
        for (int i = 0; i < 50; i++) {
            auto pair = random_correlated(c.tag);
            auto lambda = c.boosts ? test::random_normal_form() : compose(rz(uniform(0, 6)), ry(uniform(-3, 3)));
            for (BellKind k : phi ? std::vector{BellKind::PhiPlus, BellKind::PhiMinus}
                                  : std::vector{BellKind::PsiPlus, BellKind::PsiMinus}) {
                Vector4c before = helicity_coefficients(bell(pair, k));
                auto after = helicity_coefficients(transform_bell(bell(pair, k), lambda));
                ASSERT_LT((after - before).cwiseAbs().maxCoeff(), 1e-10) << to_string(c.tag);
            }
        }
    }
}

TEST(bell, projection_examples) {
    auto pair = correlated_pair(kPi / 4, 0.9, Correlation::PhiA);
    auto minus = pt_project(bell(pair, BellKind::PhiMinus));
    EXPECT_EQ(minus.form, StateForm::Floored);
    EXPECT_LT((minus.amps - Vector4c(1, 0, 0, -1) / std::sqrt(2.0)).cwiseAbs().maxCoeff(), 1e-15);

    double phi1 = 0.37;
    auto equator = correlated_pair(kPi / 2, phi1, Correlation::PhiA);
    auto plus = pt_project(bell(equator, BellKind::PhiPlus));
    Vector4c expected(1, -std::polar(1.0, -2 * phi1), -std::polar(1.0, 2 * phi1), 1);
    EXPECT_LT((plus.amps - expected / 2.0).cwiseAbs().maxCoeff(), 1e-15);

    EXPECT_THROW(pt_project(bell(equator, BellKind::PhiMinus)), NullOutcomeError);
    EXPECT_THROW(pt_project(minus), DomainError);
}

TEST(bell, projection_matches_closed_form) {
    for (int i = 0; i < 500; i++) {
        auto p1 = test::random_direction();
        auto p2 = test::random_direction();
        MomentumPair pair{p1, p2, Correlation::None};
        for (BellKind k : kKinds) {
            auto projected = pt_project(bell(pair, k));
            ASSERT_LE(projected.norm_weight, 1 + 1e-15);
            ASSERT_GT(projected.norm_weight, 0);
            Vector4c closed = projected_bell_closed_form(k, p1.theta(), p1.phi(), p2.theta(), p2.phi());
            ASSERT_LT((projected.amps - closed.normalized()).cwiseAbs().maxCoeff(), 1e-12) << to_string(k);
        }
    }
}

TEST(bell, specialization_to_correlated_pair) {
    for (int i = 0; i < 50; i++) {
        double t = (i + 0.5) * kPi / 50;
        double f = 0.3 + i * 0.1;
        Vector4c plus = projected_bell_closed_form(BellKind::PhiPlus, t, f, t, -f);
        Vector4c minus = projected_bell_closed_form(BellKind::PhiMinus, t, f, t, -f);
        ASSERT_LT((plus - projected_phi_plus_correlated(t, f)).cwiseAbs().maxCoeff(), 1e-12);
        ASSERT_LT((minus - projected_phi_minus_correlated(t)).cwiseAbs().maxCoeff(), 1e-12);

        double c = std::cos(t);
        ASSERT_NEAR(phi_plus_normalization(t), (1 + c * c) / (2 * std::sqrt(1 + c * c * c * c)), 1e-12);
        ASSERT_NEAR(phi_plus_normalization(t) * projected_phi_plus_correlated(t, f).norm(), 1, 1e-12);
        ASSERT_NEAR(phi_minus_normalization(t), (1 + c * c) / (std::sqrt(8.0) * c), 1e-12);
        ASSERT_NEAR(std::abs(phi_minus_normalization(t)) * projected_phi_minus_correlated(t).norm(), 1, 1e-12);
    }
    EXPECT_THROW(phi_minus_normalization(kPi / 2), NullOutcomeError);
}

TEST(bell, triplet_singlet_expansion) {
    for (int i = 0; i < 200; i++) {
        auto pair = random_correlated(Correlation::PhiA);
        Vector4c coeff = floored_bell_coefficients(pt_project(bell(pair, BellKind::PhiPlus)).amps);
        // (Phi+, Phi-, Psi+, Psi-) = (a1, 0, a2, i a3) with real a_i.
        ASSERT_LT(std::abs(coeff[1]), 1e-14);
        ASSERT_LT(std::abs(coeff[0].imag()), 1e-14);
        ASSERT_LT(std::abs(coeff[2].imag()), 1e-14);
        ASSERT_LT(std::abs(coeff[3].real()), 1e-14);
        double sum = std::norm(coeff[0]) + std::norm(coeff[2]) + std::norm(coeff[3]);
        ASSERT_NEAR(sum, 1, 1e-12);
    }
}

TEST(bell, floored_overlaps) {
    auto pair = correlated_pair(1.0, 0.5, Correlation::PhiA);
    auto plus = pt_project(bell(pair, BellKind::PhiPlus));
    auto minus = pt_project(bell(pair, BellKind::PhiMinus));
    EXPECT_LT(std::abs(floored_overlap(plus, minus)), 1e-15);
    EXPECT_NEAR(std::abs(floored_overlap(plus, plus) - 1.0), 0, 1e-15);

    MomentumPair loose{FourMomentum::from_angles(1.0, 0.5), FourMomentum::from_angles(1.3, 2.0), Correlation::None};
    auto lp = pt_project(bell(loose, BellKind::PhiPlus));
    auto lm = pt_project(bell(loose, BellKind::PhiMinus));
    auto ls = pt_project(bell(loose, BellKind::PsiPlus));
    // Phi+ and Phi- stay orthogonal for any pair; Psi+ does not.
    EXPECT_LT(std::abs(floored_overlap(lp, lm)), 1e-15);
    EXPECT_GT(std::abs(floored_overlap(lp, ls)), 1e-3);

    EXPECT_THROW(floored_overlap(plus, lp), DomainError);
    EXPECT_THROW(floored_overlap(plus, bell(pair, BellKind::PhiPlus)), DomainError);
}

TEST(bell, orthogonal_after_transform_and_projection) {
    for (int i = 0; i < 100; i++) {
        auto pair = random_correlated(Correlation::PhiA);
        auto lambda = test::random_normal_form();
        auto plus = pt_project(transform_bell(bell(pair, BellKind::PhiPlus), lambda));
        TwoModeState minus_full = transform_bell(bell(pair, BellKind::PhiMinus), lambda);
        if (std::abs(minus_full.pair.p1.cos_theta()) < 1e-6) {
            continue;
        }
        auto minus = pt_project(minus_full);
        ASSERT_LT(std::abs(floored_overlap(plus, minus)), 1e-10);
        ASSERT_LE(plus.norm_weight, 1.0);
    }
}
