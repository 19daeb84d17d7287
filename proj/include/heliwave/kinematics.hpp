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

#ifndef HELIWAVE_KINEMATICS_HPP
#define HELIWAVE_KINEMATICS_HPP

#include <Eigen/Core>
#include <string>
#include <vector>

namespace heliwave {

using Matrix4 = Eigen::Matrix4d;
using Vector4 = Eigen::Vector4d;
using Vector3 = Eigen::Vector3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Default comparison tolerance for exact-arithmetic identities.
inline constexpr double kTolerance = 1e-12;

/// Largest |rapidity| accepted before cosh/sinh lose all meaningful precision.
inline constexpr double kMaxRapidity = 50.0;

/// Reduces an angle to [0, 2pi).
double wrap_two_pi(double angle);

/// Reduces an angle to (-pi, pi].
double wrap_pi(double angle);

/// Minkowski metric diag(-1, 1, 1, 1).
const Matrix4& minkowski_metric();

/// A null, future-pointing four-momentum normalized to unit energy.
///
/// Stored through its direction angles; theta lies in [0, pi] and phi in
/// [0, 2pi). At the poles (theta == 0 or pi) the azimuth is undefined and is
/// stored as 0.
class FourMomentum {
   public:
    /// The standard momentum k = (1, 0, 0, 1).
    FourMomentum() = default;

    /// Throws DomainError for non-finite input or theta outside [0, pi].
    static FourMomentum from_angles(double theta, double phi);

    /// Accepts any finite (theta, phi), folding theta into [0, pi] by the
    /// identity (theta, phi) ~ (-theta, phi + pi) ~ (2pi - theta, phi + pi).
    static FourMomentum from_any_angles(double theta, double phi);

    /// Normalizes a future-pointing null vector (components need not have p0 = 1).
    static FourMomentum from_null_vector(const Vector4& p);

    double theta() const { return theta_; }
    double phi() const { return phi_; }
    double cos_theta() const;
    double sin_theta() const;

    /// Unit spatial direction (sin t cos p, sin t sin p, cos t).
    Vector3 direction() const;

    /// Cartesian four-vector (1, direction).
    Vector4 vector() const;

    /// True when the momentum lies along the standard direction, |theta| <= tol.
    bool is_standard(double tol = kTolerance) const { return theta_ <= tol; }

   private:
    FourMomentum(double theta, double phi) : theta_(theta), phi_(phi) {}

    double theta_ = 0.0;
    double phi_ = 0.0;
};

/// Minkowski product a.g.b with signature (-+++).
double minkowski_dot(const Vector4& a, const Vector4& b);

/// One generator in a compositional description of a LorentzTransform.
struct LorentzFactor {
    enum class Kind { RotationZ, RotationY, BoostZ };

    Kind kind;
    double parameter;

    std::string describe() const;
};

/// A proper orthochronous Lorentz transformation.
///
/// Built from rz/ry/bz and closed under compose/inverse. The factor list
/// records the generating sequence, leftmost factor applied last.
class LorentzTransform {
   public:
    /// Identity.
    LorentzTransform() : matrix_(Matrix4::Identity()) {}

    const Matrix4& matrix() const { return matrix_; }
    const std::vector<LorentzFactor>& factors() const { return factors_; }

    /// Human-readable generating sequence, e.g. "rz(0.4)*ry(0.9)"; "identity" if empty.
    std::string describe() const;

    /// Max-norm deviation from m^T g m = g.
    double metric_defect() const;

    friend LorentzTransform rz(double lambda);
    friend LorentzTransform ry(double varpi);
    friend LorentzTransform bz(double eta);
    friend LorentzTransform compose(const LorentzTransform& a, const LorentzTransform& b);
    friend LorentzTransform inverse(const LorentzTransform& a);

   private:
    LorentzTransform(Matrix4 m, std::vector<LorentzFactor> factors)
        : matrix_(std::move(m)), factors_(std::move(factors)) {}

    Matrix4 matrix_;
    std::vector<LorentzFactor> factors_;
};

/// Rotation by lambda about the z axis.
LorentzTransform rz(double lambda);
/// Rotation by varpi about the y axis.
LorentzTransform ry(double varpi);
/// Boost along z with rapidity eta. Throws RangeError for |eta| > 50.
LorentzTransform bz(double eta);

/// Matrix product a*b (b acts first).
LorentzTransform compose(const LorentzTransform& a, const LorentzTransform& b);
LorentzTransform inverse(const LorentzTransform& a);

/// Lambda = rz(lambda) * ry(varpi) * bz(eta), the general transformation of
/// a packet travelling along z.
LorentzTransform normal_form(double lambda, double varpi, double eta);

/// Result of moving a momentum: the renormalized image and its Doppler factor
/// (the zeroth component before renormalization).
struct TransformedMomentum {
    FourMomentum momentum;
    double doppler;
};

TransformedMomentum apply_with_doppler(const LorentzTransform& a, const FourMomentum& p);

/// Lambda p renormalized to unit energy.
FourMomentum apply(const LorentzTransform& a, const FourMomentum& p);

/// Closed-form polar angle after bz(eta):
/// cos t' = (cos t + tanh eta) / (1 + tanh eta cos t).
double boosted_cos_theta(double cos_theta, double eta);

/// The pure rotation rz(phi) * ry(theta) taking k to p.
Matrix4 standard_rotation(double theta, double phi);

}  // namespace heliwave

#endif
