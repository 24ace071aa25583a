#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "fibtiles/morphism.hpp"
#include "fibtiles/numeration.hpp"

using namespace fibtiles;

TEST_CASE("Morphism1D apply and powers") {
    const Morphism1D phi1 = fibonacci_morphism();
    CHECK(phi1.apply({0}) == std::vector<int>{0, 1});
    CHECK(phi1.apply({1}) == std::vector<int>{0});
    CHECK(phi1.apply_power({1}, 2) == std::vector<int>{0, 1});
    CHECK(phi1.apply_power({1}, 4) == std::vector<int>{0, 1, 0, 0, 1});
    CHECK(phi1.name_of(0) == "a");
    CHECK(phi1.name_of(1) == "b");
    CHECK_THROWS_AS(phi1.apply({2}), std::invalid_argument);
}

TEST_CASE("two_sided_fixed_point") {
    const Morphism1D phi1 = fibonacci_morphism();
    CHECK(two_sided_fixed_point(phi1, 1, 0, 0, 6) == std::vector<int>{0, 1, 0, 0, 1, 0});
    CHECK(two_sided_fixed_point(phi1, 1, 0, -2, 0) == std::vector<int>{0, 1});
    CHECK(two_sided_fixed_point(phi1, 1, 0, -5, -2) == std::vector<int>{0, 1, 0});
    // Swapped seed letters fail the prolongability precondition.
    CHECK_THROWS_AS(two_sided_fixed_point(phi1, 0, 1, 0, 1), std::invalid_argument);
    // Nonnegative segment agrees with iterated images of the positive letter.
    for (int k = 2; k <= 16; k += 2) {
        const std::vector<int> image = phi1.apply_power({0}, k);
        CHECK(two_sided_fixed_point(phi1, 1, 0, 0, static_cast<std::int64_t>(image.size())) ==
              image);
    }
}

TEST_CASE("Word2D basics") {
    const Word2D w = Word2D::from_rows({{1, 2}, {3, 4}});
    CHECK(w.width == 2);
    CHECK(w.height == 2);
    CHECK(w.at(0, 1) == 1);  // top-left
    CHECK(w.at(1, 0) == 4);  // bottom-right
    CHECK(w.to_string() == "1 2\n3 4");
    CHECK(w.subword(1, 0, 1, 2) == Word2D::from_rows({{2}, {4}}));
    CHECK_THROWS_AS(w.subword(1, 1, 2, 1), std::out_of_range);
    CHECK_THROWS_AS(Word2D::from_rows({{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("concat") {
    const Word2D a = Word2D::from_rows({{1}, {2}});
    const Word2D b = Word2D::from_rows({{3}, {4}});
    CHECK(concat(1, a, b) == Word2D::from_rows({{1, 3}, {2, 4}}));
    CHECK(concat(2, a, b) == Word2D::from_rows({{3}, {4}, {1}, {2}}));
    const Word2D wide = Word2D::from_rows({{5, 6}});
    CHECK_THROWS_AS(concat(1, a, wide), std::invalid_argument);
    CHECK(concat(2, wide, Word2D::from_rows({{7, 8}})) ==
          Word2D::from_rows({{7, 8}, {5, 6}}));
    CHECK_THROWS_AS(concat(3, a, b), std::invalid_argument);
}

TEST_CASE("subwords_of_shape") {
    const Word2D w = Word2D::from_rows({{1, 2, 3}, {4, 5, 6}});
    CHECK(subwords_of_shape(w, 2, 2).size() == 2);
    CHECK(subwords_of_shape(w, 1, 1).size() == 6);
    CHECK(subwords_of_shape(w, 3, 3).empty());
}

TEST_CASE("phi images") {
    const Morphism2D phi = phi_morphism();
    CHECK(phi.image(0) == Word2D::from_rows({{14}}));
    CHECK(phi.image(13) == Word2D::from_rows({{5, 1}, {15, 9}}));
    CHECK(phi.image(8) == Word2D::from_rows({{3}, {14}}));
    CHECK(phi.rule.size() == 16);
    CHECK_THROWS_AS(phi.image(16), std::invalid_argument);
}

TEST_CASE("Morphism2D apply and powers") {
    const Morphism2D phi = phi_morphism();
    CHECK(phi.apply_power(Word2D::letter(1), 2) == Word2D::from_rows({{5, 1}, {15, 9}}));
    CHECK(phi.apply_power(Word2D::letter(0), 2) == Word2D::from_rows({{4, 1}, {11, 8}}));
    CHECK(phi.power(1) == phi);
    CHECK(phi.power(2).image(1) == Word2D::from_rows({{5, 1}, {15, 9}}));
    // Image heights of 0 (1x1) and 7 (1x2) differ, so the row (0 7) is
    // outside the domain language.
    CHECK_THROWS_AS(phi.apply(Word2D::from_rows({{0, 7}})), std::invalid_argument);
}

TEST_CASE("compose2") {
    const Morphism2D phi = phi_morphism();
    Morphism2D identity;
    for (const auto& [a, img] : phi.rule) identity.rule[a] = Word2D::letter(a);
    CHECK(compose2(identity, phi) == phi);
    CHECK(compose2(phi, identity) == phi);
}

TEST_CASE("prolongable_seeds") {
    const std::vector<Seed2x2> expected = {
        {8, 12, 1, 6},  {8, 12, 7, 13},   {9, 11, 8, 12},  {9, 12, 10, 14},
        {13, 11, 2, 4}, {13, 12, 3, 6},   {14, 11, 6, 5},  {14, 11, 13, 12},
    };
    std::vector<Seed2x2> seeds = prolongable_seeds(phi_morphism());
    std::sort(seeds.begin(), seeds.end());
    CHECK(seeds == expected);

    Morphism2D trivial;
    trivial.rule[0] = Word2D::letter(0);
    CHECK(prolongable_seeds(trivial).empty());
}

TEST_CASE("quadrant_fixed_point") {
    const Morphism2D phi = phi_morphism();
    const Seed2x2 s = phi_seed();
    CHECK(quadrant_fixed_point(phi, s, {0, 0, 1, 1}).at(0, 0) == 12);
    CHECK(quadrant_fixed_point(phi, s, {-1, -1, 0, 0}).at(0, 0) == 1);
    CHECK(quadrant_fixed_point(phi, s, {-1, 6, 0, 7}).at(0, 0) == 1);
    CHECK_THROWS_AS(quadrant_fixed_point(phi, s, {0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(quadrant_fixed_point(phi, {0, 0, 0, 0}, {0, 0, 1, 1}),
                    std::invalid_argument);

    // Stationarity: windows of different sizes agree on their overlap.
    const Word2D small = quadrant_fixed_point(phi, s, {-3, -3, 4, 4});
    const Word2D large = quadrant_fixed_point(phi, s, {-8, -8, 13, 13});
    for (int y = 0; y < small.height; ++y)
        for (int x = 0; x < small.width; ++x)
            CHECK(small.at(x, y) == large.at(x + 5, y + 5));

    // The window restriction is a fixed point of phi^2 around the origin:
    // the seed square sits at the center of its own expansion.
    const Word2D seed_word = Word2D::from_rows({{s.nw, s.ne}, {s.sw, s.se}});
    const Word2D around = quadrant_fixed_point(phi, s, {-1, -1, 1, 1});
    CHECK(around == seed_word);
}

TEST_CASE("factor language") {
    const Morphism2D phi = phi_morphism();
    const auto factors = list_2x2_factors(phi);
    const std::set<Word2D> squares(factors.begin(), factors.end());
    for (const Seed2x2& s : prolongable_seeds(phi))
        CHECK(squares.count(Word2D::from_rows({{s.nw, s.ne}, {s.sw, s.se}})) == 1);
    for (const Word2D& sq : factors) {
        CHECK(sq.width == 2);
        CHECK(sq.height == 2);
        for (int c : sq.cells) {
            CHECK(c >= 0);
            CHECK(c <= 15);
        }
    }
    // Every 2x2 subword of a generated window is a listed factor.
    const Word2D window = quadrant_fixed_point(phi, phi_seed(), {-8, -8, 13, 13});
    for (const Word2D& sq : subwords_of_shape(window, 2, 2)) CHECK(squares.count(sq) == 1);
}

TEST_CASE("column and row structure") {
    const Morphism2D phi = phi_morphism();
    const Structure1D s = horiz_vert_structure(phi);

    // Both projections collapse the alphabet onto two classes, and both
    // structure morphisms are the Fibonacci morphism up to renaming.
    std::set<int> col_ids, row_ids;
    for (const auto& [letter, cls] : s.proj.col_class) col_ids.insert(cls);
    for (const auto& [letter, cls] : s.proj.row_class) row_ids.insert(cls);
    CHECK(col_ids.size() == 2);
    CHECK(row_ids.size() == 2);

    auto is_fibonacci_like = [](const Morphism1D& m) {
        REQUIRE(m.rule.size() == 2);
        // One letter maps to (wide narrow), the other to (wide).
        std::vector<int> ids;
        for (const auto& [a, img] : m.rule) ids.push_back(a);
        for (int a : ids)
            for (int b : ids) {
                if (a == b) continue;
                if (m.rule.at(a) == std::vector<int>{a, b} &&
                    m.rule.at(b) == std::vector<int>{a})
                    return true;
            }
        return false;
    };
    CHECK(is_fibonacci_like(s.horiz));
    CHECK(is_fibonacci_like(s.vert));

    // Projected widths/heights follow the classes: letters in the "wide"
    // column class have 2-column images, the others 1-column.
    for (const auto& [a, img] : phi.rule) {
        const int ca = s.proj.col_class.at(a);
        CHECK(img.width == static_cast<int>(s.horiz.rule.at(ca).size()));
        const int ra = s.proj.row_class.at(a);
        CHECK(img.height == static_cast<int>(s.vert.rule.at(ra).size()));
    }
}

TEST_CASE("morphism JSON round trip") {
    const Morphism2D phi = phi_morphism();
    const std::string text = morphism2d_to_json(phi);
    CHECK(morphism2d_from_json(text) == phi);
    CHECK(text.find("\"shape\"") != std::string::npos);
}
