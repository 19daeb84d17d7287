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

#include <cmath>

#include "heliwave/errors.hpp"

namespace heliwave {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kNullNorm = 1e-14;
const Complex kI(0, 1);

}  // namespace

const Matrix3c& s_matrix() {
    static const Matrix3c s = [] {
        Matrix3c m;
        m << 1, -kI, 0,
             1, kI, 0,
             0, 0, kSqrt2;
        return Matrix3c(m / kSqrt2);
    }();
    return s;
}

Matrix3c helicity_rotation(double theta, double phi) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    Complex em = std::polar(1.0, -phi);
    Complex ep = std::polar(1.0, phi);
    Matrix3c r;
    r << (c + 1) * em, (c - 1) * em, kSqrt2 * s * em,
         (c - 1) * ep, (c + 1) * ep, kSqrt2 * s * ep,
         -kSqrt2 * s, -kSqrt2 * s, 2 * c;
    return r / 2.0;
}

Matrix3c helicity_basis(const Eigen::Matrix3d& linear) {
    return s_matrix() * linear.cast<Complex>() * s_matrix().adjoint();
}

HelicityTriad triad(const FourMomentum& p, Helicity sigma) {
    double c = p.cos_theta();
    double s = p.sin_theta();
    double h = sign(sigma);
    Vector3c v((c + h) * std::polar(1.0, -p.phi()), (c - h) * std::polar(1.0, p.phi()), -kSqrt2 * s);
    return {v / 2.0, p, sigma};
}

Vector3c to_linear(const Vector3c& helicity_components) {
    return s_matrix().adjoint() * helicity_components;
}

Vector3c to_helicity(const Vector3c& linear_components) { return s_matrix() * linear_components; }

Eigen::Matrix3d transverse_projector(const FourMomentum& p) {
    Vector3 d = p.direction();
    return Eigen::Matrix3d::Identity() - d * d.transpose() / d.squaredNorm();
}

FlooredKet floor(const HelicityTriad& t) {
    Vector2c v = t.v.head<2>();
    double weight = v.squaredNorm();
    if (std::sqrt(weight) < kNullNorm) {
        throw NullOutcomeError("transverse projection of the triad vanishes");
    }
    return {v / std::sqrt(weight), t.p, t.sigma, weight};
}

Complex floored_overlap(const FlooredKet& a, const FlooredKet& b) { return a.v.dot(b.v); }

PolarizationFourVector polarization(const HelicityTriad& t) {
    Vector3c lin = to_linear(t.v);
    return {Vector4c(0, lin[0], lin[1], lin[2]), t.p};
}

PolarizationFourVector transform(const LorentzTransform& lambda, const PolarizationFourVector& e) {
    return {lambda.matrix().cast<Complex>() * e.eps, apply(lambda, e.p)};
}

PolarizationFourVector gauge_fix(const PolarizationFourVector& e) {
    // q^0 = 1 for renormalized momenta.
    Vector4 q = e.p.vector();
    Complex g = e.eps[0] / q[0];
    return {e.eps - g * q.cast<Complex>(), e.p};
}

Vector3c helicity_components(const PolarizationFourVector& e) { return to_helicity(e.eps.tail<3>()); }

HelicityTriad transport(const LorentzTransform& lambda, const HelicityTriad& t) {
    PolarizationFourVector moved = gauge_fix(transform(lambda, polarization(t)));
    return {helicity_components(moved), moved.p, t.sigma};
}

}  // namespace heliwave
