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

#include <cmath>

#include "gtest/gtest.h"

#include "heliwave/errors.hpp"

using namespace heliwave;

namespace {

std::vector<double> sample(const GridSpec& g, double (*f)(double, double)) {
    std::vector<double> v(g.node_count());
    for (int j = 0; j <= g.cells_y; j++) {
        for (int i = 0; i <= g.cells_x; i++) {
            v[g.node_index(i, j)] = f(g.x0 + i * g.dx, g.y0 + j * g.dy);
        }
    }
    return v;
}

double circle(double x, double y) { return x * x + y * y - 1; }

}  // namespace

TEST(contour, circle_is_one_closed_loop) {
    GridSpec g{40, 40, -2, -2, 0.1, 0.1};
    auto lines = zero_contours(g, sample(g, circle), {});
    ASSERT_EQ(lines.size(), 1u);
    const Polyline& loop = lines[0];
    EXPECT_GT(loop.size(), 40u);
    EXPECT_EQ(loop.front().x, loop.back().x);
    EXPECT_EQ(loop.front().y, loop.back().y);
    for (const auto& p : loop) {
        ASSERT_NEAR(std::hypot(p.x, p.y), 1, 0.01);
    }
}

TEST(contour, blocked_cells_split_curves) {
    GridSpec g{40, 40, -2, -2, 0.1, 0.1};
    std::vector<std::uint8_t> blocked(g.cell_count(), 0);
    // Block a column of cells through x in [0.9, 1.1]: the right cap of the loop is cut away.
    for (int j = 0; j < 40; j++) {
        blocked[g.cell_index(29, j)] = 1;
        blocked[g.cell_index(30, j)] = 1;
    }
    auto lines = zero_contours(g, sample(g, circle), blocked);
    ASSERT_EQ(lines.size(), 1u);
    EXPECT_NEAR(lines[0].front().y, -lines[0].back().y, 1e-12);
    EXPECT_GT(std::abs(lines[0].front().y), 0.3);

    // A horizontal strip through the centre cuts it in two.
    std::fill(blocked.begin(), blocked.end(), 0);
    for (int i = 0; i < 40; i++) {
        blocked[g.cell_index(i, 20)] = 1;
    }
    EXPECT_EQ(zero_contours(g, sample(g, circle), blocked).size(), 2u);
}

TEST(contour, saddle_uses_centre_value) {
    GridSpec g{1, 1, 0, 0, 1, 1};
    auto joins = [](const std::vector<Polyline>& lines, auto on_a, auto on_b) {
        for (const auto& line : lines) {
            if ((on_a(line.front()) && on_b(line.back())) || (on_b(line.front()) && on_a(line.back()))) {
                return true;
            }
        }
        return false;
    };
    auto bottom = [](ContourPoint p) { return p.y == 0; };
    auto left = [](ContourPoint p) { return p.x == 0; };
    auto right = [](ContourPoint p) { return p.x == 1; };

    // Node order is (bl, br, tl, tr); bl and tr are positive in both cases.
    auto a = zero_contours(g, std::vector<double>{1, -0.5, -0.5, 1}, {});
    ASSERT_EQ(a.size(), 2u);
    EXPECT_TRUE(joins(a, bottom, right));  // centre inside: br is cut off

    auto b = zero_contours(g, std::vector<double>{0.5, -1, -1, 0.5}, {});
    ASSERT_EQ(b.size(), 2u);
    EXPECT_TRUE(joins(b, left, bottom));  // centre outside: bl is cut off
}

TEST(contour, deterministic_order) {
    GridSpec g{64, 64, 0, 0, 0.1, 0.1};
    auto f = [](double x, double y) { return std::sin(x) * std::cos(y) - 0.2; };
    std::vector<double> v(g.node_count());
    for (int j = 0; j <= 64; j++) {
        for (int i = 0; i <= 64; i++) {
            v[g.node_index(i, j)] = f(i * 0.1, j * 0.1);
        }
    }
    auto a = zero_contours(g, v, {});
    auto b = zero_contours(g, v, {});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); k++) {
        ASSERT_EQ(a[k].size(), b[k].size());
        for (std::size_t n = 0; n < a[k].size(); n++) {
            ASSERT_EQ(a[k][n].x, b[k][n].x);
            ASSERT_EQ(a[k][n].y, b[k][n].y);
        }
    }
}

TEST(contour, rejects_bad_input) {
    GridSpec g{2, 2, 0, 0, 1, 1};
    EXPECT_THROW(zero_contours(g, std::vector<double>(4), {}), DomainError);
    EXPECT_THROW(zero_contours(g, std::vector<double>(9), std::vector<std::uint8_t>(3)), DomainError);
    EXPECT_THROW(zero_contours(GridSpec{0, 2, 0, 0, 1, 1}, std::vector<double>(3), {}), DomainError);
}
