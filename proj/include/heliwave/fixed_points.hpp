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

#ifndef HELIWAVE_FIXED_POINTS_HPP
#define HELIWAVE_FIXED_POINTS_HPP

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "heliwave/bell.hpp"
#include "heliwave/contour.hpp"

namespace heliwave {

/// Residual of the fixed-point condition for ry(varpi) with the partner at
/// phi2 = phi1 + x, theta2 = theta1 + y:
///   Phi: tan w(theta1, phi1) + tan w(theta2, phi2)  (conjugate phases)
///   Psi: tan w(theta1, phi1) - tan w(theta2, phi2)  (equal phases)
/// Returns nullopt when either tangent denominator is within 1e-14 of zero.
std::optional<double> fixed_point_residual(double varpi, double theta1, double phi1, double x, double y,
                                           Family family);

/// N1 D2 +- D1 N2: the residual with denominators cleared. Smooth everywhere,
/// and shares the zero set of fixed_point_residual away from the singular loci.
double cleared_residual(double varpi, double theta1, double phi1, double x, double y, Family family);

struct FixedPoint {
    char label;  // 'a' .. 'd'
    double x;    // [0, 2pi)
    double y;    // [0, 2pi)
};

/// The four solutions of the family as (x, y) offsets reduced to [0, 2pi).
std::array<FixedPoint, 4> analytic_fixed_points(double theta1, double phi1, Family family);

struct Curve {
    double varpi;
    int curve_id;  // per varpi, in extraction order
    Polyline points;
};

struct SweepSummary {
    double varpi;
    int curves;
    int blocked_cells;  // cells dropped around the singular locus of the partner's tangent
    bool singular_lhs;  // the (theta1, phi1) tangent itself is singular; no curves extracted
};

struct CurveSet {
    int grid;
    double cell;  // 2pi / grid
    std::vector<Curve> curves;
    std::vector<SweepSummary> sweeps;
    std::array<FixedPoint, 4> fixed_points;
};

/// Zero-level curves of the residual over (x, y) in [0, 2pi]^2 on a grid x grid
/// cell lattice, one sweep per varpi. Cells where the partner's denominator
/// changes sign or vanishes are blocked and break the curves there. Node
/// evaluation runs on `threads` workers; the result does not depend on it.
///
/// Throws DomainError for grid < 2 or non-finite angles.
CurveSet fixed_point_curves(std::span<const double> varpis, double theta1, double phi1, Family family,
                            int grid, int threads = 0);

/// Periodic distance on the torus [0, 2pi)^2.
double torus_distance(double x1, double y1, double x2, double y2);

/// Per sweep (same order as CurveSet::sweeps): the largest distance from one
/// of the four analytic points to the nearest curve vertex of that varpi.
/// Infinity when the sweep produced no curves.
std::vector<double> fixed_point_misses(const CurveSet& set);

}  // namespace heliwave

#endif
