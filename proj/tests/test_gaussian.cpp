// Copyright 2026 The fpgrid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

#include "fpgrid/gaussian.hpp"

using fpgrid::GaussianInt;

namespace {

using Point = std::pair<std::int64_t, std::int64_t>;

// BFS distances from 0 over the steps {1, -1, i, -i}, confined to the box
// |re|, |im| <= radius. Geodesics never leave the bounding box of their
// endpoints, so the result is exact for every point of norm <= radius.
std::map<Point, std::uint64_t> box_bfs(std::int64_t radius) {
    std::map<Point, std::uint64_t> dist;
    std::queue<Point> queue;
    dist[{0, 0}] = 0;
    queue.push({0, 0});
    while (!queue.empty()) {
        auto [re, im] = queue.front();
        queue.pop();
        std::uint64_t d = dist[{re, im}];
        for (Point next : {Point{re + 1, im}, Point{re - 1, im}, Point{re, im + 1},
                           Point{re, im - 1}}) {
            if (std::abs(next.first) > radius || std::abs(next.second) > radius) continue;
            if (dist.count(next)) continue;
            dist[next] = d + 1;
            queue.push(next);
        }
    }
    return dist;
}

GaussianInt pow4(const GaussianInt& z) {
    GaussianInt s = z * z;
    return s * s;
}

std::string rendered(const GaussianInt& z) {
    std::ostringstream os;
    os << z;
    return os.str();
}

} // namespace

TEST_CASE("ring arithmetic matches hand examples") {
    GaussianInt a(2, 1), b(1, 3);
    CHECK(a * b == GaussianInt(-1, 7));
    CHECK(a + b == GaussianInt(3, 4));
    CHECK(a - b == GaussianInt(1, -2));
    CHECK(-a == GaussianInt(-2, -1));
    CHECK(GaussianInt(0, 1) * GaussianInt(0, 1) == GaussianInt(-1));
    CHECK(GaussianInt(5).im() == 0);
    CHECK(GaussianInt().is_zero());
    CHECK_FALSE(GaussianInt(0, 1).is_zero());
}

TEST_CASE("conjugation fixes the real axis and negates the imaginary part") {
    CHECK(conjugate(GaussianInt(2, 3)) == GaussianInt(2, -3));
    CHECK(conjugate(GaussianInt(7)) == GaussianInt(7));
    CHECK(conjugate(conjugate(GaussianInt(-4, 9))) == GaussianInt(-4, 9));
}

TEST_CASE("stream rendering keeps the sign on the imaginary part") {
    CHECK(rendered(GaussianInt(-1, 7)) == "-1+7i");
    CHECK(rendered(GaussianInt(3, -4)) == "3-4i");
    CHECK(rendered(GaussianInt(5, 0)) == "5+0i");
}

TEST_CASE("unit steps are exactly the solutions of (z-u)^4 = 1") {
    for (std::int64_t are = -2; are <= 2; ++are)
        for (std::int64_t aim = -2; aim <= 2; ++aim)
            for (std::int64_t bre = -2; bre <= 2; ++bre)
                for (std::int64_t bim = -2; bim <= 2; ++bim) {
                    GaussianInt d = GaussianInt(bre, bim) - GaussianInt(are, aim);
                    bool step = d == GaussianInt(1) || d == GaussianInt(-1) ||
                                d == GaussianInt(0, 1) || d == GaussianInt(0, -1);
                    REQUIRE((pow4(d) == GaussianInt(1)) == step);
                }
}

TEST_CASE("grid norm equals BFS distance within radius 8") {
    auto dist = box_bfs(8);
    std::size_t checked = 0;
    for (const auto& [point, d] : dist) {
        GaussianInt z(point.first, point.second);
        if (fpgrid::grid_norm(z) > 8) continue;
        REQUIRE(fpgrid::grid_norm(z) == d);
        ++checked;
    }
    // All of |re|+|im| <= 8: 2*8*(8+1) + 1 points.
    CHECK(checked == 145);
}

TEST_CASE("overflow throws instead of wrapping") {
    constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
    constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
    CHECK_THROWS_AS(GaussianInt(kMax) + GaussianInt(1), std::overflow_error);
    CHECK_THROWS_AS(GaussianInt(kMin) - GaussianInt(1), std::overflow_error);
    CHECK_THROWS_AS(-GaussianInt(kMin), std::overflow_error);
    CHECK_THROWS_AS(GaussianInt(kMin) * GaussianInt(-1), std::overflow_error);
    CHECK_THROWS_AS(GaussianInt(0, 1) * GaussianInt(0, kMin), std::overflow_error);
    CHECK(GaussianInt(1) * GaussianInt(0, kMin) == GaussianInt(0, kMin));
    CHECK_THROWS_AS(fpgrid::grid_norm(GaussianInt(kMin, kMin)), std::overflow_error);
    CHECK(fpgrid::grid_norm(GaussianInt(kMax, kMax)) == 2 * static_cast<std::uint64_t>(kMax));
    CHECK(conjugate(GaussianInt(kMin, kMax)) == GaussianInt(kMin, kMin + 1));
}

TEST_CASE("sampled algebraic laws: triangle, submultiplicativity, conjugation") {
    std::mt19937_64 rng(0x6761757373ULL);
    std::uniform_int_distribution<std::int64_t> comp(-100, 100);
    for (int trial = 0; trial < 10000; ++trial) {
        GaussianInt a(comp(rng), comp(rng)), b(comp(rng), comp(rng)), c(comp(rng), comp(rng));
        REQUIRE(fpgrid::grid_norm(a + b) <= fpgrid::grid_norm(a) + fpgrid::grid_norm(b));
        REQUIRE(fpgrid::grid_norm(a * b) <= fpgrid::grid_norm(a) * fpgrid::grid_norm(b));
        REQUIRE(fpgrid::grid_norm(conjugate(a)) == fpgrid::grid_norm(a));
        REQUIRE(conjugate(a * b) == conjugate(a) * conjugate(b));
        REQUIRE(conjugate(a + b) == conjugate(a) + conjugate(b));
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a * b) * c == a * (b * c));
    }
}
