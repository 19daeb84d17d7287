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

#include "heliwave/little_group.hpp"

#include <cmath>
#include <sstream>

#include "heliwave/errors.hpp"

namespace heliwave {

namespace {

constexpr double kSingularDenominator = 1e-14;
constexpr double kStabilizerTolerance = 1e-10;

std::string singularity_message(double varpi, double theta, double phi) {
    std::ostringstream out;
    out.precision(17);
    out << "closed-form Wigner angle is singular at varpi=" << varpi << ", theta=" << theta
        << ", phi=" << phi;
    return out.str();
}

}  // namespace

SingularityError::SingularityError(double varpi, double theta, double phi)
    : Error(singularity_message(varpi, theta, phi)), varpi(varpi), theta(theta), phi(phi) {}

std::complex<double> wigner_factor(double angle, Helicity helicity) {
    return std::polar(1.0, -sign(helicity) * angle);
}

std::complex<double> WignerPhase::factor() const { return wigner_factor(angle, helicity); }

WignerTangent wigner_tangent_ry(double varpi, double theta, double phi) {
    double sw = std::sin(varpi);
    return {sw * std::sin(phi), sw * std::cos(theta) * std::cos(phi) + std::cos(varpi) * std::sin(theta)};
}

double wigner_angle_ry(double varpi, double theta, double phi) {
    if (!std::isfinite(varpi) || !std::isfinite(theta) || !std::isfinite(phi)) {
        throw DomainError("wigner_angle_ry arguments must be finite");
    }
    auto [num, den] = wigner_tangent_ry(varpi, theta, phi);
    if (std::abs(den) < kSingularDenominator && std::abs(num) >= kSingularDenominator) {
        throw SingularityError(varpi, theta, phi);
    }
    return wrap_pi(std::atan2(num, den));
}

double wigner_angle_rz(double lambda, const FourMomentum& p) {
    if (!std::isfinite(lambda)) {
        throw DomainError("lambda must be finite");
    }
    if (p.is_standard()) {
        throw ExcludedDirectionError("rotation about z: p = k is excluded (its phase is the rotation angle)");
    }
    return 0.0;
}

double wigner_angle_bz(double eta, const FourMomentum&) {
    if (!std::isfinite(eta)) {
        throw DomainError("eta must be finite");
    }
    return 0.0;
}

Matrix4 little_group_element(const LorentzTransform& lambda, const FourMomentum& p) {
    TransformedMomentum image = apply_with_doppler(lambda, p);
    const FourMomentum& q = image.momentum;
    // L(q)^-1 for the rotation part is its transpose.
    Matrix4 rotation_back = standard_rotation(q.theta(), q.phi()).transpose();
    Matrix4 unboost = bz(-std::log(image.doppler)).matrix();
    return unboost * rotation_back * lambda.matrix() * standard_rotation(p.theta(), p.phi());
}

double wigner_angle_numeric(const LorentzTransform& lambda, const FourMomentum& p) {
    Matrix4 w = little_group_element(lambda, p);
    const Vector4 k(1, 0, 0, 1);
    double scale = std::max(1.0, lambda.matrix().cwiseAbs().maxCoeff());
    double defect = (w * k - k).cwiseAbs().maxCoeff();
    if (!(defect <= kStabilizerTolerance * scale)) {
        std::ostringstream out;
        out << "little-group element does not stabilize k (defect " << defect << ")";
        throw ConsistencyError(out.str());
    }
    return wrap_pi(std::atan2(w(2, 1), w(1, 1)));
}

bool near_ry_singularity(double varpi, double theta, double phi, double eps) {
    auto [num, den] = wigner_tangent_ry(varpi, theta, phi);
    (void)num;
    if (std::abs(den) < eps) {
        return true;
    }
    Vector4 image = ry(varpi).matrix() * FourMomentum::from_any_angles(theta, phi).vector();
    return std::hypot(image[1], image[2]) < eps;
}

}  // namespace heliwave
