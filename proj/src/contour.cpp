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

#include "heliwave/contour.hpp"

#include <array>

#include "heliwave/errors.hpp"

namespace heliwave {

namespace {

struct Segment {
    std::size_t a;
    std::size_t b;
    bool used = false;

    std::size_t other(std::size_t e) const { return e == a ? b : a; }
};

class EdgeTable {
   public:
    EdgeTable(const GridSpec& g, std::span<const double> v) : g_(g), v_(v) {
        horizontal_ = static_cast<std::size_t>(g.cells_x) * (g.cells_y + 1);
    }

    std::size_t horizontal(int i, int j) const { return static_cast<std::size_t>(j) * g_.cells_x + i; }
    std::size_t vertical(int i, int j) const { return horizontal_ + static_cast<std::size_t>(j) * (g_.cells_x + 1) + i; }
    std::size_t size() const { return horizontal_ + static_cast<std::size_t>(g_.cells_x + 1) * g_.cells_y; }

    ContourPoint point(std::size_t e) const {
        int i0, j0, i1, j1;
        if (e < horizontal_) {
            i0 = static_cast<int>(e % g_.cells_x);
            j0 = static_cast<int>(e / g_.cells_x);
            i1 = i0 + 1;
            j1 = j0;
        } else {
            std::size_t k = e - horizontal_;
            i0 = static_cast<int>(k % (g_.cells_x + 1));
            j0 = static_cast<int>(k / (g_.cells_x + 1));
            i1 = i0;
            j1 = j0 + 1;
        }
        double v0 = v_[g_.node_index(i0, j0)];
        double v1 = v_[g_.node_index(i1, j1)];
        double t = v0 == v1 ? 0.5 : v0 / (v0 - v1);
        double x = g_.x0 + g_.dx * (i0 + t * (i1 - i0));
        double y = g_.y0 + g_.dy * (j0 + t * (j1 - j0));
        return {x, y};
    }

   private:
    const GridSpec& g_;
    std::span<const double> v_;
    std::size_t horizontal_;
};

}  // namespace

std::vector<Polyline> zero_contours(const GridSpec& grid, std::span<const double> values,
                                    std::span<const std::uint8_t> blocked) {
    if (grid.cells_x < 1 || grid.cells_y < 1) {
        throw DomainError("contour grid needs at least one cell per axis");
    }
    if (values.size() != grid.node_count()) {
        throw DomainError("contour values do not match the grid");
    }
    if (!blocked.empty() && blocked.size() != grid.cell_count()) {
        throw DomainError("contour mask does not match the grid");
    }
    EdgeTable edges(grid, values);
    std::vector<Segment> segments;

    for (int j = 0; j < grid.cells_y; j++) {
        for (int i = 0; i < grid.cells_x; i++) {
            if (!blocked.empty() && blocked[grid.cell_index(i, j)]) {
                continue;
            }
            double bl = values[grid.node_index(i, j)];
            double br = values[grid.node_index(i + 1, j)];
            double tr = values[grid.node_index(i + 1, j + 1)];
            double tl = values[grid.node_index(i, j + 1)];
            int code = (bl >= 0 ? 1 : 0) | (br >= 0 ? 2 : 0) | (tr >= 0 ? 4 : 0) | (tl >= 0 ? 8 : 0);
            if (code == 0 || code == 15) {
                continue;
            }
            std::size_t bottom = edges.horizontal(i, j);
            std::size_t top = edges.horizontal(i, j + 1);
            std::size_t left = edges.vertical(i, j);
            std::size_t right = edges.vertical(i + 1, j);
            if (code == 5 || code == 10) {
                bool centre_inside = (bl + br + tr + tl) / 4 >= 0;
                // Cut off the two corners whose sign differs from the centre.
                bool cut_bl_tr = (code == 5) != centre_inside;
                if (cut_bl_tr) {
                    segments.push_back({left, bottom});
                    segments.push_back({right, top});
                } else {
                    segments.push_back({bottom, right});
                    segments.push_back({top, left});
                }
                continue;
            }
            std::array<std::size_t, 2> hit{};
            int n = 0;
            if (((code >> 0) & 1) != ((code >> 1) & 1)) hit[n++] = bottom;
            if (((code >> 1) & 1) != ((code >> 2) & 1)) hit[n++] = right;
            if (((code >> 2) & 1) != ((code >> 3) & 1)) hit[n++] = top;
            if (((code >> 3) & 1) != ((code >> 0) & 1)) hit[n++] = left;
            segments.push_back({hit[0], hit[1]});
        }
    }

    constexpr int kNone = -1;
    std::vector<std::array<int, 2>> adjacency(edges.size(), {kNone, kNone});
    for (std::size_t s = 0; s < segments.size(); s++) {
        for (std::size_t e : {segments[s].a, segments[s].b}) {
            auto& slot = adjacency[e];
            (slot[0] == kNone ? slot[0] : slot[1]) = static_cast<int>(s);
        }
    }

    std::vector<Polyline> out;
    auto walk = [&](std::size_t edge, int seg) {
        Polyline line{edges.point(edge)};
        while (seg != kNone) {
            Segment& s = segments[seg];
            s.used = true;
            edge = s.other(edge);
            line.push_back(edges.point(edge));
            int next = kNone;
            for (int cand : adjacency[edge]) {
                if (cand != kNone && !segments[cand].used) {
                    next = cand;
                }
            }
            seg = next;
        }
        out.push_back(std::move(line));
    };

    for (std::size_t e = 0; e < adjacency.size(); e++) {
        const auto& slot = adjacency[e];
        if (slot[0] != kNone && slot[1] == kNone && !segments[slot[0]].used) {
            walk(e, slot[0]);
        }
    }
    for (std::size_t s = 0; s < segments.size(); s++) {
        if (!segments[s].used) {
            walk(segments[s].a, static_cast<int>(s));
        }
    }
    return out;
}

}  // namespace heliwave
