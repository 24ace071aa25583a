#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fibtiles/dfao.hpp"
#include "fibtiles/wang.hpp"

using namespace fibtiles;

namespace {

Patch seed_patch() {
    Patch p;
    p.window = {-1, -1, 1, 1};
    p.tiles = {1, 6, 8, 12};  // bottom row (1 6), top row (8 12)
    return p;
}

}  // namespace

TEST_CASE("tile_set_z") {
    const WangTileSet z = tile_set_z();
    REQUIRE(z.size() == 16);
    CHECK(z[0] == WangTile{"D", "O", "J", "O"});
    CHECK(z[15] == WangTile{"C", "N", "I", "P"});
    CHECK(z[8] == WangTile{"I", "L", "E", "O"});
    CHECK_THROWS_AS(WangTileSet::from_strings({"ABC"}), std::invalid_argument);
    CHECK_THROWS_AS(WangTileSet::from_strings({"DOJO", "DOJO"}), std::invalid_argument);
}

TEST_CASE("color universes") {
    const WangTileSet z = tile_set_z();
    const auto vert = z.vertical_colors();
    const auto horiz = z.horizontal_colors();
    CHECK(std::is_sorted(vert.begin(), vert.end()));
    CHECK(std::is_sorted(horiz.begin(), horiz.end()));
    for (const WangTile& t : z.tiles) {
        CHECK(std::binary_search(vert.begin(), vert.end(), t.east));
        CHECK(std::binary_search(vert.begin(), vert.end(), t.west));
        CHECK(std::binary_search(horiz.begin(), horiz.end(), t.north));
        CHECK(std::binary_search(horiz.begin(), horiz.end(), t.south));
    }
}

TEST_CASE("is_valid_patch") {
    const WangTileSet z = tile_set_z();

    Patch single;
    single.window = {0, 0, 1, 1};
    single.tiles = {3};
    CHECK(is_valid_patch(z, single).ok);

    CHECK(is_valid_patch(z, seed_patch()).ok);

    Patch bad;
    bad.window = {0, 0, 2, 1};
    bad.tiles = {0, 0};  // east(z0) = D, west(z0) = J
    const ValidityReport r = is_valid_patch(z, bad);
    CHECK_FALSE(r.ok);
    REQUIRE(r.first_violation.has_value());
    CHECK(r.first_violation->x == 0);
    CHECK(r.first_violation->y == 0);
    CHECK(r.first_violation->direction == 1);

    Patch out_of_range;
    out_of_range.window = {0, 0, 1, 1};
    out_of_range.tiles = {16};
    CHECK_THROWS_AS(is_valid_patch(z, out_of_range), std::out_of_range);
}

TEST_CASE("solve_rectangle") {
    const WangTileSet z = tile_set_z();

    auto single = solve_rectangle(z, 1, 1);
    REQUIRE(single.has_value());
    CHECK(is_valid_patch(z, *single).ok);

    auto pinned = solve_rectangle(z, 3, 3, {{{1, 1}, 12}});
    REQUIRE(pinned.has_value());
    CHECK(pinned->at(1, 1) == 12);
    CHECK(is_valid_patch(z, *pinned).ok);

    // Two tiles with no matching horizontal pair.
    const WangTileSet mismatch = WangTileSet::from_strings({"ABCD", "EFGH"});
    CHECK_FALSE(solve_rectangle(mismatch, 2, 1).has_value());

    // Determinism.
    CHECK(solve_rectangle(z, 4, 4)->tiles == solve_rectangle(z, 4, 4)->tiles);
}

TEST_CASE("admissible_dominoes") {
    const WangTileSet z = tile_set_z();

    const auto h0 = admissible_dominoes(z, 1, 0);
    for (std::size_t a = 0; a < z.size(); ++a)
        for (std::size_t b = 0; b < z.size(); ++b)
            CHECK(h0.count({static_cast<int>(a), static_cast<int>(b)}) ==
                  (z[a].east == z[b].west ? 1u : 0u));

    const auto v0 = admissible_dominoes(z, 2, 0);
    CHECK(v0.count({1, 8}) == 1);  // north(z1) = O = south(z8)

    // Larger radius only removes pairs.
    const auto v2 = admissible_dominoes(z, 2, 2);
    for (const auto& p : v2) CHECK(v0.count(p) == 1);
    CHECK(v2.size() < v0.size());

    CHECK_THROWS_AS(admissible_dominoes(z, 3, 0), std::invalid_argument);
}

TEST_CASE("equivalence") {
    const WangTileSet z = tile_set_z();

    const auto self = is_equivalent(z, z);
    REQUIRE(self.has_value());
    for (std::size_t i = 0; i < z.size(); ++i)
        CHECK(relabel_tile(z[i], *self) == z[static_cast<std::size_t>(self->tile_map[i])]);

    WangTileSet subset;
    subset.tiles.assign(z.tiles.begin(), z.tiles.end() - 1);
    CHECK_FALSE(is_equivalent(z, subset).has_value());

    // Symmetry: every certificate verifies in both directions via inversion.
    const auto certs = all_equivalences(z, z);
    CHECK(!certs.empty());
    for (const auto& c : certs) {
        std::vector<int> seen(z.size(), 0);
        for (int t : c.tile_map) ++seen[static_cast<std::size_t>(t)];
        for (int s : seen) CHECK(s == 1);
    }
}

TEST_CASE("renderers") {
    const WangTileSet z = tile_set_z();

    Patch one;
    one.window = {0, 0, 1, 1};
    one.tiles = {12};
    CHECK(render_text(one) == "12\n");

    CHECK(render_text(seed_patch()) == " 8 12\n 1  6\n");

    const std::string svg = render_svg(z, one);
    CHECK(svg.find("<svg") != std::string::npos);
    for (const std::string& color : {z[12].east, z[12].north, z[12].west, z[12].south})
        CHECK(svg.find(">" + color + "<") != std::string::npos);
}

TEST_CASE("patch json") {
    Patch p = seed_patch();
    const std::string json = p.to_json();
    CHECK(json.find("\"window\"") != std::string::npos);
    CHECK(json.find("\"rows\"") != std::string::npos);
}

TEST_CASE("generated windows are valid") {
    const WangTileSet z = tile_set_z();
    const Rect window = {-8, -8, 9, 9};
    const Word2D w = quadrant_fixed_point(phi_morphism(), phi_seed(), window);
    const Patch p = Patch::from_word(window, w);
    CHECK(is_valid_patch(z, p).ok);
}
