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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "heliwave/errors.hpp"

namespace heliwave {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kNullNorm = 1e-14;
constexpr Helicity kHelicities[] = {Helicity::Plus, Helicity::Minus};

std::string lowercase(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

Eigen::VectorXcd kron(const Vector3c& a, const Vector3c& b) {
    Eigen::VectorXcd out(9);
    for (int i = 0; i < 3; i++) {
        out.segment<3>(3 * i) = a[i] * b;
    }
    return out;
}

bool is_phi(BellKind k) { return k == BellKind::PhiPlus || k == BellKind::PhiMinus; }

}  // namespace

std::string_view to_string(Correlation tag) {
    switch (tag) {
        case Correlation::PhiA: return "phi-a";
        case Correlation::PhiB: return "phi-b";
        case Correlation::PhiC: return "phi-c";
        case Correlation::PhiD: return "phi-d";
        case Correlation::PsiA: return "psi-a";
        case Correlation::PsiB: return "psi-b";
        case Correlation::PsiC: return "psi-c";
        case Correlation::PsiD: return "psi-d";
        case Correlation::None: return "none";
    }
    return "none";
}

std::string_view to_string(Family family) { return family == Family::Phi ? "phi" : "psi"; }

std::string_view to_string(BellKind kind) {
    switch (kind) {
        case BellKind::PhiPlus: return "phi+";
        case BellKind::PhiMinus: return "phi-";
        case BellKind::PsiPlus: return "psi+";
        case BellKind::PsiMinus: return "psi-";
    }
    return "phi+";
}

Correlation parse_correlation(std::string_view text) {
    std::string t = lowercase(text);
    for (Correlation c : kAllCorrelations) {
        if (t == to_string(c)) {
            return c;
        }
    }
    if (t == "none") {
        return Correlation::None;
    }
    throw DomainError("unknown correlation '" + std::string(text) + "'");
}

Family parse_family(std::string_view text) {
    std::string t = lowercase(text);
    if (t == "phi") {
        return Family::Phi;
    }
    if (t == "psi") {
        return Family::Psi;
    }
    throw DomainError("unknown family '" + std::string(text) + "' (expected phi or psi)");
}

Family family_of(Correlation tag) {
    switch (tag) {
        case Correlation::PhiA:
        case Correlation::PhiB:
        case Correlation::PhiC:
        case Correlation::PhiD:
            return Family::Phi;
        case Correlation::PsiA:
        case Correlation::PsiB:
        case Correlation::PsiC:
        case Correlation::PsiD:
            return Family::Psi;
        case Correlation::None:
            break;
    }
    throw DomainError("uncorrelated pair has no fixed-point family");
}

PartnerAngles fixed_point_partner(double theta1, double phi1, Correlation tag) {
    double t = theta1;
    double p = phi1;
    switch (tag) {
        case Correlation::PhiA: t = theta1; p = -phi1; break;
        case Correlation::PhiB: t = -theta1; p = kPi - phi1; break;
        case Correlation::PhiC: t = kPi - theta1; p = kPi + phi1; break;
        case Correlation::PhiD: t = theta1 + kPi; p = phi1; break;
        case Correlation::PsiA: t = theta1 + kPi; p = -phi1; break;
        case Correlation::PsiB: t = kPi - theta1; p = kPi - phi1; break;
        case Correlation::PsiC: t = -theta1; p = kPi + phi1; break;
        case Correlation::PsiD: t = theta1; p = phi1; break;
        case Correlation::None:
            throw DomainError("uncorrelated pair has no fixed-point partner");
    }
    return {t, wrap_two_pi(p)};
}

bool satisfies(Correlation tag, const FourMomentum& p1, const FourMomentum& p2, double tol) {
    if (tag == Correlation::None) {
        return true;
    }
    PartnerAngles partner = fixed_point_partner(p1.theta(), p1.phi(), tag);
    FourMomentum expected = FourMomentum::from_any_angles(partner.theta, partner.phi);
    return (expected.direction() - p2.direction()).cwiseAbs().maxCoeff() <= tol;
}

void validate(const MomentumPair& pair) {
    if (pair.tag == Correlation::None) {
        return;
    }
    if (family_of(pair.tag) == Family::Phi && (pair.p1.is_standard() || pair.p2.is_standard())) {
        throw ExcludedDirectionError("Phi-family correlations exclude p = k");
    }
    if (!satisfies(pair.tag, pair.p1, pair.p2)) {
        throw DomainError("momentum pair does not satisfy correlation " + std::string(to_string(pair.tag)));
    }
}

MomentumPair correlated_pair(double theta1, double phi1, Correlation tag) {
    FourMomentum p1 = FourMomentum::from_angles(theta1, phi1);
    PartnerAngles partner = fixed_point_partner(p1.theta(), p1.phi(), tag);
    MomentumPair pair{p1, FourMomentum::from_any_angles(partner.theta, partner.phi), tag};
    validate(pair);
    return pair;
}

bool same_momenta(const MomentumPair& a, const MomentumPair& b, double tol) {
    return (a.p1.direction() - b.p1.direction()).cwiseAbs().maxCoeff() <= tol &&
           (a.p2.direction() - b.p2.direction()).cwiseAbs().maxCoeff() <= tol;
}

TwoModeState from_coefficients(const MomentumPair& pair, const Vector4c& coefficients) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(9);
    for (int a = 0; a < 2; a++) {
        Vector3c t1 = triad(pair.p1, kHelicities[a]).v;
        for (int b = 0; b < 2; b++) {
            amps += coefficients[2 * a + b] * kron(t1, triad(pair.p2, kHelicities[b]).v);
        }
    }
    return {amps, pair, StateForm::Full, 1.0};
}

TwoModeState bell(const MomentumPair& pair, BellKind which) {
    if (is_phi(which) && (pair.p1.is_standard() || pair.p2.is_standard())) {
        throw ExcludedDirectionError("Phi Bell states exclude p = k");
    }
    const double h = 1 / kSqrt2;
    Vector4c c = Vector4c::Zero();
    switch (which) {
        case BellKind::PhiPlus: c << h, 0, 0, h; break;
        case BellKind::PhiMinus: c << h, 0, 0, -h; break;
        case BellKind::PsiPlus: c << 0, h, h, 0; break;
        case BellKind::PsiMinus: c << 0, h, -h, 0; break;
    }
    return from_coefficients(pair, c);
}

Vector4c helicity_coefficients(const TwoModeState& state) {
    if (state.form != StateForm::Full) {
        throw DomainError("helicity coefficients need a full-form state");
    }
    Vector4c c;
    for (int a = 0; a < 2; a++) {
        Vector3c t1 = triad(state.pair.p1, kHelicities[a]).v;
        for (int b = 0; b < 2; b++) {
            c[2 * a + b] = kron(t1, triad(state.pair.p2, kHelicities[b]).v).dot(state.amps);
        }
    }
    return c;
}

TwoModeState transform_bell(const TwoModeState& state, const LorentzTransform& lambda) {
    Vector4c c = helicity_coefficients(state);
    double theta1 = wigner_angle_numeric(lambda, state.pair.p1);
    double theta2 = wigner_angle_numeric(lambda, state.pair.p2);
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            c[2 * a + b] *= wigner_factor(theta1, kHelicities[a]) * wigner_factor(theta2, kHelicities[b]);
        }
    }
    MomentumPair moved{apply(lambda, state.pair.p1), apply(lambda, state.pair.p2), state.pair.tag};
    // Tag survives only if the image is still correlated (1e-10 allows for rounding in apply).
    if (moved.tag != Correlation::None && !satisfies(moved.tag, moved.p1, moved.p2, 1e-10)) {
        moved.tag = Correlation::None;
    }
    return from_coefficients(moved, c);
}

TwoModeState pt_project(const TwoModeState& state) {
    if (state.form != StateForm::Full) {
        throw DomainError("pt_project needs a full-form state");
    }
    Vector4c v(state.amps[0], state.amps[1], state.amps[3], state.amps[4]);
    double weight = v.squaredNorm();
    if (std::sqrt(weight) < kNullNorm) {
        throw NullOutcomeError("transverse projection annihilates the two-mode state");
    }
    return {v / std::sqrt(weight), state.pair, StateForm::Floored, state.norm_weight * weight};
}

Complex floored_overlap(const TwoModeState& a, const TwoModeState& b) {
    if (a.form != StateForm::Floored || b.form != StateForm::Floored) {
        throw DomainError("floored_overlap needs floored states");
    }
    if (!same_momenta(a.pair, b.pair)) {
        throw DomainError("floored_overlap needs states on the same momentum pair");
    }
    return a.amps.dot(b.amps);
}

Vector4c floored_bell_basis(BellKind which) {
    const double h = 1 / kSqrt2;
    switch (which) {
        case BellKind::PhiPlus: return {h, 0, 0, h};
        case BellKind::PhiMinus: return {h, 0, 0, -h};
        case BellKind::PsiPlus: return {0, h, h, 0};
        case BellKind::PsiMinus: return {0, h, -h, 0};
    }
    return Vector4c::Zero();
}

Vector4c floored_bell_coefficients(const Vector4c& v) {
    return {floored_bell_basis(BellKind::PhiPlus).dot(v), floored_bell_basis(BellKind::PhiMinus).dot(v),
            floored_bell_basis(BellKind::PsiPlus).dot(v), floored_bell_basis(BellKind::PsiMinus).dot(v)};
}

Vector4c projected_bell_closed_form(BellKind which, double theta1, double phi1, double theta2, double phi2) {
    double c1 = std::cos(theta1);
    double c2 = std::cos(theta2);
    double n = std::sqrt((1 + c1 * c1) * (1 + c2 * c2));
    double sum = c1 + c2;
    double diff = c1 - c2;
    double pp = c1 * c2 + 1;
    double pm = c1 * c2 - 1;
    auto e = [](double angle) { return std::polar(1.0, angle); };
    Vector4c v;
    switch (which) {
        case BellKind::PhiPlus:
            v << pp * e(-(phi1 + phi2)), pm * e(-(phi1 - phi2)), pm * e(phi1 - phi2), pp * e(phi1 + phi2);
            break;
        case BellKind::PhiMinus:
            v << sum * e(-(phi1 + phi2)), -diff * e(phi2 - phi1), diff * e(-(phi2 - phi1)), -sum * e(phi1 + phi2);
            break;
        case BellKind::PsiPlus:
            v << pm * e(-(phi1 + phi2)), pp * e(phi2 - phi1), pp * e(-(phi2 - phi1)), pm * e(phi1 + phi2);
            break;
        case BellKind::PsiMinus:
            v << -diff * e(-(phi1 + phi2)), sum * e(-(phi1 - phi2)), -sum * e(phi1 - phi2), diff * e(phi1 + phi2);
            break;
    }
    return v / n;
}

Vector4c projected_phi_plus_correlated(double theta1, double phi1) {
    double c2 = std::cos(theta1) * std::cos(theta1);
    double r = (c2 - 1) / (c2 + 1);
    return {1.0, r * std::polar(1.0, -2 * phi1), r * std::polar(1.0, 2 * phi1), 1.0};
}

Vector4c projected_phi_minus_correlated(double theta1) {
    double c = std::cos(theta1);
    double v = 2 * c / (1 + c * c);
    return {v, 0, 0, -v};
}

double phi_plus_normalization(double theta1) {
    double c2 = std::cos(theta1) * std::cos(theta1);
    return (1 + c2) / (2 * std::sqrt(1 + c2 * c2));
}

double phi_minus_normalization(double theta1) {
    double c = std::cos(theta1);
    if (std::abs(c) < kNullNorm) {
        throw NullOutcomeError("projected Phi- vanishes at cos(theta1) = 0");
    }
    return (1 + c * c) / (std::sqrt(8.0) * c);
}

}  // namespace heliwave
