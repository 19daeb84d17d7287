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

#include "heliwave/kinematics.hpp"

#include <cmath>

#include "heliwave/errors.hpp"
#include "heliwave/format.hpp"

namespace heliwave {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be finite");
    }
}

std::string format_parameter(double v) { return format_shortest(v); }

// Entries above cosh(kMaxRapidity) mean the composition left double range in
// any useful sense.
void require_in_range(const Matrix4& m) {
    if (!(std::abs(m(0, 0)) <= std::cosh(kMaxRapidity))) {
        throw RangeError("Lorentz transform exceeds the supported rapidity range |eta| <= 50");
    }
}

}  // namespace

double wrap_two_pi(double angle) {
    double r = std::fmod(angle, kTwoPi);
    if (r < 0) {
        r += kTwoPi;
    }
    if (r >= kTwoPi) {
        r = 0;
    }
    return r;
}

double wrap_pi(double angle) {
    double r = std::remainder(angle, kTwoPi);
    if (r <= -kPi) {
        r += kTwoPi;
    }
    return r;
}

const Matrix4& minkowski_metric() {
    static const Matrix4 g = Eigen::Vector4d(-1, 1, 1, 1).asDiagonal();
    return g;
}

double minkowski_dot(const Vector4& a, const Vector4& b) {
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

FourMomentum FourMomentum::from_angles(double theta, double phi) {
    require_finite(theta, "theta");
    require_finite(phi, "phi");
    if (theta < 0 || theta > kPi) {
        throw DomainError("theta must lie in [0, pi], got " + format_parameter(theta));
    }
    if (theta == 0 || theta == kPi) {
        return FourMomentum(theta, 0.0);
    }
    return FourMomentum(theta, wrap_two_pi(phi));
}

FourMomentum FourMomentum::from_any_angles(double theta, double phi) {
    require_finite(theta, "theta");
    require_finite(phi, "phi");
    double t = wrap_two_pi(theta);
    if (t > kPi) {
        t = kTwoPi - t;
        phi += kPi;
    }
    return from_angles(t, phi);
}

FourMomentum FourMomentum::from_null_vector(const Vector4& p) {
    if (!p.allFinite() || !(p[0] > 0)) {
        throw DomainError("momentum must be finite and future pointing");
    }
    if (std::abs(minkowski_dot(p, p)) > 1e-9 * p[0] * p[0]) {
        throw DomainError("momentum is not light-like");
    }
    double rho = std::hypot(p[1], p[2]);
    double theta = std::atan2(rho, p[3]);
    if (rho == 0) {
        return from_angles(theta, 0.0);
    }
    return from_angles(theta, std::atan2(p[2], p[1]));
}

double FourMomentum::cos_theta() const { return std::cos(theta_); }

double FourMomentum::sin_theta() const { return std::sin(theta_); }

Vector3 FourMomentum::direction() const {
    double s = std::sin(theta_);
    return {s * std::cos(phi_), s * std::sin(phi_), std::cos(theta_)};
}

Vector4 FourMomentum::vector() const {
    Vector3 d = direction();
    return {1.0, d[0], d[1], d[2]};
}

std::string LorentzFactor::describe() const {
    const char* name = kind == Kind::RotationZ ? "rz" : kind == Kind::RotationY ? "ry" : "bz";
    return std::string(name) + "(" + format_parameter(parameter) + ")";
}

std::string LorentzTransform::describe() const {
    if (factors_.empty()) {
        return "identity";
    }
    std::string out;
    for (size_t i = 0; i < factors_.size(); i++) {
        if (i) {
            out += "*";
        }
        out += factors_[i].describe();
    }
    return out;
}

double LorentzTransform::metric_defect() const {
    const Matrix4& g = minkowski_metric();
    return (matrix_.transpose() * g * matrix_ - g).cwiseAbs().maxCoeff();
}

LorentzTransform rz(double lambda) {
    require_finite(lambda, "lambda");
    double c = std::cos(lambda);
    double s = std::sin(lambda);
    Matrix4 m = Matrix4::Identity();
    m(1, 1) = c;
    m(1, 2) = -s;
    m(2, 1) = s;
    m(2, 2) = c;
    return LorentzTransform(m, {{LorentzFactor::Kind::RotationZ, lambda}});
}

LorentzTransform ry(double varpi) {
    require_finite(varpi, "varpi");
    double c = std::cos(varpi);
    double s = std::sin(varpi);
    Matrix4 m = Matrix4::Identity();
    m(1, 1) = c;
    m(1, 3) = s;
    m(3, 1) = -s;
    m(3, 3) = c;
    return LorentzTransform(m, {{LorentzFactor::Kind::RotationY, varpi}});
}

LorentzTransform bz(double eta) {
    require_finite(eta, "eta");
    if (std::abs(eta) > kMaxRapidity) {
        throw RangeError("rapidity " + format_parameter(eta) + " exceeds |eta| <= 50");
    }
    double c = std::cosh(eta);
    double s = std::sinh(eta);
    Matrix4 m = Matrix4::Identity();
    m(0, 0) = c;
    m(0, 3) = s;
    m(3, 0) = s;
    m(3, 3) = c;
    return LorentzTransform(m, {{LorentzFactor::Kind::BoostZ, eta}});
}

LorentzTransform compose(const LorentzTransform& a, const LorentzTransform& b) {
    Matrix4 m = a.matrix_ * b.matrix_;
    require_in_range(m);
    std::vector<LorentzFactor> factors = a.factors_;
    factors.insert(factors.end(), b.factors_.begin(), b.factors_.end());
    return LorentzTransform(m, std::move(factors));
}

LorentzTransform inverse(const LorentzTransform& a) {
    // For any Lorentz matrix, m^-1 = g m^T g.
    const Matrix4& g = minkowski_metric();
    Matrix4 m = g * a.matrix_.transpose() * g;
    std::vector<LorentzFactor> factors(a.factors_.rbegin(), a.factors_.rend());
    for (auto& f : factors) {
        f.parameter = -f.parameter;
    }
    return LorentzTransform(m, std::move(factors));
}

LorentzTransform normal_form(double lambda, double varpi, double eta) {
    return compose(rz(lambda), compose(ry(varpi), bz(eta)));
}

TransformedMomentum apply_with_doppler(const LorentzTransform& a, const FourMomentum& p) {
    Vector4 q = a.matrix() * p.vector();
    return {FourMomentum::from_null_vector(q), q[0]};
}

FourMomentum apply(const LorentzTransform& a, const FourMomentum& p) {
    return apply_with_doppler(a, p).momentum;
}

double boosted_cos_theta(double cos_theta, double eta) {
    double v = std::tanh(eta);
    return (cos_theta + v) / (1 + v * cos_theta);
}

Matrix4 standard_rotation(double theta, double phi) {
    return (rz(phi).matrix() * ry(theta).matrix());
}

}  // namespace heliwave
