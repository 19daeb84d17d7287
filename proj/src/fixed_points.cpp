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

#include "heliwave/fixed_points.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "heliwave/errors.hpp"
#include "heliwave/little_group.hpp"
#include "heliwave/parallel.hpp"

namespace heliwave {

namespace {

constexpr double kSingularDenominator = 1e-14;

struct Sides {
    WignerTangent first;
    WignerTangent second;
};

Sides both_sides(double varpi, double theta1, double phi1, double x, double y) {
    return {wigner_tangent_ry(varpi, theta1, phi1), wigner_tangent_ry(varpi, theta1 + y, phi1 + x)};
}

double sign_of(Family family) { return family == Family::Phi ? 1.0 : -1.0; }

void check_finite(std::initializer_list<double> values) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw DomainError("non-finite fixed-point parameter");
        }
    }
}

}  // namespace

std::optional<double> fixed_point_residual(double varpi, double theta1, double phi1, double x, double y,
                                           Family family) {
    check_finite({varpi, theta1, phi1, x, y});
    Sides s = both_sides(varpi, theta1, phi1, x, y);
    if (std::abs(s.first.denominator) < kSingularDenominator ||
        std::abs(s.second.denominator) < kSingularDenominator) {
        return std::nullopt;
    }
    return s.first.numerator / s.first.denominator +
           sign_of(family) * s.second.numerator / s.second.denominator;
}

double cleared_residual(double varpi, double theta1, double phi1, double x, double y, Family family) {
    Sides s = both_sides(varpi, theta1, phi1, x, y);
    return s.first.numerator * s.second.denominator +
           sign_of(family) * s.first.denominator * s.second.numerator;
}

std::array<FixedPoint, 4> analytic_fixed_points(double theta1, double phi1, Family family) {
    check_finite({theta1, phi1});
    const Correlation* tags = family == Family::Phi ? &kAllCorrelations[0] : &kAllCorrelations[4];
    std::array<FixedPoint, 4> out{};
    for (int k = 0; k < 4; k++) {
        PartnerAngles partner = fixed_point_partner(theta1, phi1, tags[k]);
        out[k] = {static_cast<char>('a' + k), wrap_two_pi(partner.phi - phi1), wrap_two_pi(partner.theta - theta1)};
    }
    return out;
}

double torus_distance(double x1, double y1, double x2, double y2) {
    double dx = std::abs(wrap_pi(x1 - x2));
    double dy = std::abs(wrap_pi(y1 - y2));
    return std::hypot(dx, dy);
}

std::vector<double> fixed_point_misses(const CurveSet& set) {
    std::vector<double> out;
    for (const auto& sweep : set.sweeps) {
        double worst = 0;
        for (const auto& fp : set.fixed_points) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& curve : set.curves) {
                if (curve.varpi != sweep.varpi) {
                    continue;
                }
                for (const auto& v : curve.points) {
                    best = std::min(best, torus_distance(v.x, v.y, fp.x, fp.y));
                }
            }
            worst = std::max(worst, best);
        }
        out.push_back(worst);
    }
    return out;
}

CurveSet fixed_point_curves(std::span<const double> varpis, double theta1, double phi1, Family family,
                            int grid, int threads) {
    if (grid < 2) {
        throw DomainError("fixed-point grid must have at least 2 cells per axis");
    }
    check_finite({theta1, phi1});
    for (double v : varpis) {
        check_finite({v});
    }
    double h = kTwoPi / grid;
    GridSpec lattice{grid, grid, 0.0, 0.0, h, h};

    CurveSet out;
    out.grid = grid;
    out.cell = h;
    out.fixed_points = analytic_fixed_points(theta1, phi1, family);

    std::vector<double> values(lattice.node_count());
    std::vector<double> partner_den(lattice.node_count());
    std::vector<std::uint8_t> blocked(lattice.cell_count());

    for (double varpi : varpis) {
        SweepSummary summary{varpi, 0, 0, false};
        WignerTangent lhs = wigner_tangent_ry(varpi, theta1, phi1);
        if (std::abs(lhs.denominator) < kSingularDenominator) {
            summary.singular_lhs = true;
            out.sweeps.push_back(summary);
            continue;
        }
        parallel_for(static_cast<std::size_t>(grid + 1), threads, [&](std::size_t row) {
            int j = static_cast<int>(row);
            for (int i = 0; i <= grid; i++) {
                double x = i * h;
                double y = j * h;
                WignerTangent rhs = wigner_tangent_ry(varpi, theta1 + y, phi1 + x);
                std::size_t n = lattice.node_index(i, j);
                values[n] = lhs.numerator * rhs.denominator + sign_of(family) * lhs.denominator * rhs.numerator;
                partner_den[n] = rhs.denominator;
            }
        });
        for (int j = 0; j < grid; j++) {
            for (int i = 0; i < grid; i++) {
                double d[4] = {partner_den[lattice.node_index(i, j)], partner_den[lattice.node_index(i + 1, j)],
                               partner_den[lattice.node_index(i + 1, j + 1)], partner_den[lattice.node_index(i, j + 1)]};
                bool pos = false;
                bool neg = false;
                bool tiny = false;
                for (double v : d) {
                    pos |= v > 0;
                    neg |= v < 0;
                    tiny |= std::abs(v) < kSingularDenominator;
                }
                bool b = (pos && neg) || tiny;
                blocked[lattice.cell_index(i, j)] = b ? 1 : 0;
                summary.blocked_cells += b ? 1 : 0;
            }
        }
        auto lines = zero_contours(lattice, values, blocked);
        for (auto& line : lines) {
            out.curves.push_back({varpi, summary.curves++, std::move(line)});
        }
        out.sweeps.push_back(summary);
    }
    return out;
}

}  // namespace heliwave
