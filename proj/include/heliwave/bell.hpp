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

#ifndef HELIWAVE_BELL_HPP
#define HELIWAVE_BELL_HPP

#include <Eigen/Core>
#include <string_view>

#include "heliwave/helicity.hpp"

namespace heliwave {

/// Momentum correlations that cancel the Wigner phases of rotations about y.
/// Phi-* make the two phases conjugate, Psi-* make them equal.
enum class Correlation { PhiA, PhiB, PhiC, PhiD, PsiA, PsiB, PsiC, PsiD, None };

enum class Family { Phi, Psi };

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

std::string_view to_string(Correlation tag);
std::string_view to_string(Family family);
std::string_view to_string(BellKind kind);
/// Accepts "phi-a" ... "psi-d" and "none", case-insensitive. Throws DomainError.
Correlation parse_correlation(std::string_view text);
Family parse_family(std::string_view text);

/// Throws DomainError for Correlation::None.
Family family_of(Correlation tag);

/// The eight correlations in declaration order.
inline constexpr Correlation kAllCorrelations[] = {
    Correlation::PhiA, Correlation::PhiB, Correlation::PhiC, Correlation::PhiD,
    Correlation::PsiA, Correlation::PsiB, Correlation::PsiC, Correlation::PsiD};

struct PartnerAngles {
    double theta;  // literal value, may lie outside [0, pi]
    double phi;    // reduced to [0, 2pi)
};

/// Partner direction of (theta1, phi1) under one of the eight fixed-point
/// solutions, e.g. Phi-a -> (theta1, -phi1), Psi-d -> (theta1, phi1).
PartnerAngles fixed_point_partner(double theta1, double phi1, Correlation tag);

struct MomentumPair {
    FourMomentum p1;
    FourMomentum p2;
    Correlation tag = Correlation::None;
};

/// True when p2 is the tag's partner of p1, compared as directions.
bool satisfies(Correlation tag, const FourMomentum& p1, const FourMomentum& p2, double tol = kTolerance);

/// Builds the pair (p1, partner(p1)). Throws ExcludedDirectionError for
/// Phi-family tags when either momentum is k.
MomentumPair correlated_pair(double theta1, double phi1, Correlation tag);

/// Checks the MomentumPair invariants; throws DomainError/ExcludedDirectionError.
void validate(const MomentumPair& pair);

/// Same momenta (as directions) within tol, ignoring tags.
bool same_momenta(const MomentumPair& a, const MomentumPair& b, double tol = kTolerance);

enum class StateForm { Full, Floored };

/// A two-photon helicity state over a momentum pair.
///
/// Full form: 9 components in the tensor basis of the two helicity-basis
/// triads, index 3 * i + j. Floored form: 4 components ordered
/// (++, +-, -+, --), stored renormalized, with norm_weight the squared norm
/// the projection kept.
struct TwoModeState {
    Eigen::VectorXcd amps;
    MomentumPair pair;
    StateForm form = StateForm::Full;
    double norm_weight = 1.0;
};

/// sum_{s1,s2} c[s1 s2] |p1, s1> |p2, s2>, coefficients ordered (++, +-, -+, --).
TwoModeState from_coefficients(const MomentumPair& pair, const Vector4c& coefficients);

/// The four Bell states. Throws ExcludedDirectionError for Phi states with p1 or p2 = k.
TwoModeState bell(const MomentumPair& pair, BellKind which);

/// Logical coefficients of a full-form state, (++, +-, -+, --).
Vector4c helicity_coefficients(const TwoModeState& state);

/// U(Lambda) on a full-form state: each mode moves to Lambda p and picks up
/// exp(-i sigma theta_W) from the numeric little-group oracle. The output pair
/// keeps its tag only if the moved momenta still satisfy it.
TwoModeState transform_bell(const TwoModeState& state, const LorentzTransform& lambda);

/// Pi_k x Pi_k followed by renormalization. Throws NullOutcomeError when the
/// projected norm is below 1e-14.
TwoModeState pt_project(const TwoModeState& state);

/// Inner product of two floored states on the same momentum pair. Throws
/// DomainError for mismatched pairs or forms.
Complex floored_overlap(const TwoModeState& a, const TwoModeState& b);

/// Normalized floored Bell basis: Phi+- = (1, 0, 0, +-1)/sqrt2, Psi+- = (0, 1, +-1, 0)/sqrt2.
Vector4c floored_bell_basis(BellKind which);

/// Coefficients <floored_bell_basis(k), v> for k = Phi+, Phi-, Psi+, Psi-.
Vector4c floored_bell_coefficients(const Vector4c& v);

/// Closed-form projections of the Bell states for arbitrary momenta,
/// normalized by 1 / sqrt((1 + cos^2 t1)(1 + cos^2 t2)).
Vector4c projected_bell_closed_form(BellKind which, double theta1, double phi1, double theta2, double phi2);

/// Projected Phi+ for the Phi-a pair: (1, e^{-2i phi1} r, e^{2i phi1} r, 1) with
/// r = (cos^2 t1 - 1)/(cos^2 t1 + 1).
Vector4c projected_phi_plus_correlated(double theta1, double phi1);

/// Projected Phi- for the Phi-a pair: (2 cos t1, 0, 0, -2 cos t1) / (1 + cos^2 t1).
Vector4c projected_phi_minus_correlated(double theta1);

/// Factor normalizing projected_phi_plus_correlated: (1 + c^2) / (2 sqrt(1 + c^4)).
double phi_plus_normalization(double theta1);

/// Factor mapping projected_phi_minus_correlated onto floored Phi-:
/// (1 + c^2) / (sqrt(8) c). Throws NullOutcomeError for |cos t1| < 1e-14.
double phi_minus_normalization(double theta1);

}  // namespace heliwave

#endif
