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

#ifndef HELIWAVE_CONTOUR_HPP
#define HELIWAVE_CONTOUR_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace heliwave {

struct ContourPoint {
    double x;
    double y;
};

using Polyline = std::vector<ContourPoint>;

/// A regular lattice of (cells_x + 1) x (cells_y + 1) nodes starting at (x0, y0).
struct GridSpec {
    int cells_x;
    int cells_y;
    double x0;
    double y0;
    double dx;
    double dy;

    std::size_t node_count() const { return static_cast<std::size_t>(cells_x + 1) * (cells_y + 1); }
    std::size_t cell_count() const { return static_cast<std::size_t>(cells_x) * cells_y; }
    std::size_t node_index(int i, int j) const { return static_cast<std::size_t>(j) * (cells_x + 1) + i; }
    std::size_t cell_index(int i, int j) const { return static_cast<std::size_t>(j) * cells_x + i; }
};

/// Zero level set of node samples by marching squares.
///
/// `values` holds node samples row by row (index j * (cells_x + 1) + i);
/// nodes with value >= 0 count as inside. Cells flagged in `blocked` (index
/// j * cells_x + i, nonzero = blocked) emit no segments, which splits any
/// polyline running through them. Saddle cells are resolved with the mean of
/// the four corners. Output order is deterministic: open chains first, in
/// order of their lowest end edge, then closed loops (first point repeated
/// at the end).
std::vector<Polyline> zero_contours(const GridSpec& grid, std::span<const double> values,
                                    std::span<const std::uint8_t> blocked);

}  // namespace heliwave

#endif
