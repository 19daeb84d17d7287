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

#ifndef HELIWAVE_HELICITY_HPP
#define HELIWAVE_HELICITY_HPP

#include <Eigen/Core>
#include <complex>

#include "heliwave/kinematics.hpp"
#include "heliwave/little_group.hpp"

namespace heliwave {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix3c = Eigen::Matrix3cd;
using Vector2c = Eigen::Vector2cd;
using Vector3c = Eigen::Vector3cd;
using Vector4c = Eigen::Vector4cd;

// Polarization vectors live in the helicity basis throughout: components
// (+, -, longitudinal) with respect to the standard direction k. S maps the
// linear-polarization (x, y, z) basis onto it.

/// The constant unitary S taking linear-polarization components to helicity components.
const Matrix3c& s_matrix();

/// R~(theta, phi) = S R(theta, phi) S^-1 written out in closed form, with
/// R(theta, phi) = rz(phi) ry(theta) the rotation taking k to p.
Matrix3c helicity_rotation(double theta, double phi);

/// Spatial 3x3 block of a Lorentz transform expressed in the helicity basis,
/// S R S^-1. Only meaningful for pure rotations.
Matrix3c helicity_basis(const Eigen::Matrix3d& linear);

/// |p, sigma> as a helicity-basis 3-vector.
struct HelicityTriad {
    Vector3c v;
    FourMomentum p;
    Helicity sigma;
};

/// 1/2 ((cos t + s) e^{-i phi}, (cos t - s) e^{i phi}, -sqrt(2) sin t) for helicity s = +-1.
HelicityTriad triad(const FourMomentum& p, Helicity sigma);

/// S^-1 v: the triad in the linear-polarization (x, y, z) basis.
Vector3c to_linear(const Vector3c& helicity_components);
Vector3c to_helicity(const Vector3c& linear_components);

/// Pi^{ij} = delta^{ij} - p^i p^j / |p|^2; rank-2 projector orthogonal to p.
Eigen::Matrix3d transverse_projector(const FourMomentum& p);

/// A triad with its longitudinal component removed and renormalized.
struct FlooredKet {
    Vector2c v;
    FourMomentum p;
    Helicity sigma;
    /// Squared norm kept by the projection, (1 + cos^2 t) / 2 for a triad.
    double detection_weight;
};

/// Applies Pi_k to a triad and renormalizes. Throws NullOutcomeError if the
/// transverse part vanishes.
FlooredKet floor(const HelicityTriad& t);

/// <floor(p,+), floor(p,-)> = (cos^2 t - 1) / (1 + cos^2 t).
Complex floored_overlap(const FlooredKet& a, const FlooredKet& b);

/// A complex polarization four-vector eps^mu attached to momentum p, in
/// linear (t, x, y, z) components.
struct PolarizationFourVector {
    Vector4c eps;
    FourMomentum p;
};

/// The Coulomb-gauge four-vector (0, S^-1 v) of a triad.
PolarizationFourVector polarization(const HelicityTriad& t);

/// Lambda eps, attached to the renormalized image of p. Generally violates
/// the Coulomb gauge until gauge_fix is applied.
PolarizationFourVector transform(const LorentzTransform& lambda, const PolarizationFourVector& e);

/// Restores the Coulomb gauge: eps -> eps - (eps^0 / q^0) q.
PolarizationFourVector gauge_fix(const PolarizationFourVector& e);

/// Helicity-basis 3-vector of a gauge-fixed four-vector.
Vector3c helicity_components(const PolarizationFourVector& e);

/// Transports a triad through Lambda: boost/rotate the four-vector, re-fix the
/// gauge and return the helicity-basis components at the image momentum. By
/// Wigner's construction the result is exp(-i sigma theta_W) triad(Lambda p, sigma).
HelicityTriad transport(const LorentzTransform& lambda, const HelicityTriad& t);

}  // namespace heliwave

#endif
