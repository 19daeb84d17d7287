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

#ifndef HELIWAVE_LITTLE_GROUP_HPP
#define HELIWAVE_LITTLE_GROUP_HPP

#include <complex>

#include "heliwave/kinematics.hpp"

namespace heliwave {

enum class Helicity : int { Plus = 1, Minus = -1 };

inline int sign(Helicity h) { return static_cast<int>(h); }

/// The SO(2) little-group phase picked up by |p, sigma> under a Lorentz
/// transformation: U(Lambda)|p, sigma> = exp(-i sigma angle) |Lambda p, sigma>.
struct WignerPhase {
    double angle;  // (-pi, pi]
    Helicity helicity;

    std::complex<double> factor() const;
};

/// exp(-i sigma angle).
std::complex<double> wigner_factor(double angle, Helicity helicity);

/// Numerator and denominator of tan(theta_W) for a rotation about y:
/// sin(varpi) sin(phi) / (sin(varpi) cos(theta) cos(phi) + cos(varpi) sin(theta)).
struct WignerTangent {
    double numerator;
    double denominator;
};

WignerTangent wigner_tangent_ry(double varpi, double theta, double phi);

/// Closed-form Wigner angle for ry(varpi) acting on the direction (theta, phi),
/// evaluated with atan2 on (numerator, denominator).
///
/// Throws SingularityError when |denominator| < 1e-14 while the numerator is not.
double wigner_angle_ry(double varpi, double theta, double phi);

/// Rotations about z induce no phase for p != k. Throws ExcludedDirectionError
/// for theta <= 1e-12.
double wigner_angle_rz(double lambda, const FourMomentum& p);

/// Boosts along z induce no phase.
double wigner_angle_bz(double eta, const FourMomentum& p);

/// The little-group element W = L^-1(Lambda p) Lambda L(p), with L(p) the pure
/// rotation rz(phi) ry(theta) composed with the z boost absorbing the Doppler
/// factor of Lambda p. W fixes k = (1, 0, 0, 1).
Matrix4 little_group_element(const LorentzTransform& lambda, const FourMomentum& p);

/// Wigner angle extracted from the SO(2) part of the little-group element,
/// atan2(W[y][x], W[x][x]). The E(2) translation part is discarded.
///
/// Throws ConsistencyError if W fails to stabilize k within 1e-10 (scaled by
/// the size of Lambda's entries).
double wigner_angle_numeric(const LorentzTransform& lambda, const FourMomentum& p);

/// True when (varpi, theta, phi) lies within eps of a singular locus of the
/// closed form: vanishing denominator, or ry(varpi) p within eps of the z axis
/// where the azimuth of the image is undefined.
bool near_ry_singularity(double varpi, double theta, double phi, double eps);

}  // namespace heliwave

#endif
