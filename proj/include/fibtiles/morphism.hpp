#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fibtiles/word2d.hpp"

namespace fibtiles {

// Non-erasing morphism on an integer alphabet.  Optional display names are
// used by the automaton exports (e.g. 0 -> "a", 1 -> "b").
struct Morphism1D {
    std::map<int, std::vector<int>> rule;
    std::map<int, std::string> names;

    std::vector<int> apply(const std::vector<int>& w) const;
    std::vector<int> apply_power(const std::vector<int>& w, int k) const;
    std::string name_of(int letter) const;
};

// The Fibonacci morphism a -> ab, b -> a with letters a = 0, b = 1.
Morphism1D fibonacci_morphism();

// Segment x_lo ... x_{hi-1} of the two-sided fixed point of sigma^2 built
// from the seed "neg.pos" (the dot marks the origin): nonnegative positions
// come from iterating on pos, negative ones from images of neg read so that
// they end at position -1.  Requires sigma^2(pos) to begin with pos and
// sigma^2(neg) to end with neg.
std::vector<int> two_sided_fixed_point(const Morphism1D& sigma, int neg, int pos,
                                       std::int64_t lo, std::int64_t hi);

struct Morphism2D {
    std::map<int, Word2D> rule;

    const Word2D& image(int letter) const;

    // Block assembly: throws std::invalid_argument when images in a column
    // disagree in width or images in a row disagree in height (the input is
    // then outside the domain language).
    Word2D apply(const Word2D& w) const;
    Word2D apply_power(const Word2D& w, int k) const;
    Morphism2D power(int k) const;

    bool operator==(const Morphism2D&) const = default;
    std::string to_string() const;
};

Morphism2D compose2(const Morphism2D& outer, const Morphism2D& inner);

// 2x2 seed, one letter per quadrant.
struct Seed2x2 {
    int nw;  // s_(-1,0)
    int ne;  // s_(0,0)
    int sw;  // s_(-1,-1)
    int se;  // s_(0,-1)

    bool operator==(const Seed2x2&) const = default;
    bool operator<(const Seed2x2& o) const;
};

// The self-similarity morphism of the 16-tile Wang shift and its seed.
Morphism2D phi_morphism();
Seed2x2 phi_seed();  // (8 12 / 1 6)

// All 2x2 seeds s such that omega^{2j}(s), assembled with the quadrant
// anchoring, contains s at the center for some 1 <= j <= max_power.
std::vector<Seed2x2> prolongable_seeds(const Morphism2D& omega, int max_power = 8);

// Half-open rectangle [x0,x1) x [y0,y1).
struct Rect {
    std::int64_t x0, y0, x1, y1;
};

// Restriction of lim omega^{2k}(seed) to the window.  The returned word has
// shape (x1-x0, y1-y0); its cell (i, j) is the configuration at
// (x0 + i, y0 + j).
Word2D quadrant_fixed_point(const Morphism2D& omega, const Seed2x2& seed, const Rect& window);

// Factors of shape up to (2,2) of the substitutive language, saturated by
// closure under the morphism.  Shapes covered: (1,1), (2,1), (1,2), (2,2).
struct FactorLanguage {
    std::set<int> letters;
    std::set<std::pair<int, int>> horizontal;  // (left, right)
    std::set<std::pair<int, int>> vertical;    // (bottom, top)
    std::set<Word2D> squares;                  // shape (2,2)
};
FactorLanguage saturated_factors(const Morphism2D& omega);

std::vector<Word2D> list_2x2_factors(const Morphism2D& omega);

// Union-find closures of the domino relations; class ids are the minimum
// letter of each class.
struct Projections {
    std::map<int, int> col_class;  // a ~col b iff linked by vertical dominoes
    std::map<int, int> row_class;  // a ~row b iff linked by horizontal dominoes
};
Projections column_row_equivalence(const Morphism2D& omega);

// 1D structure morphisms on the class alphabets.  Throws std::runtime_error
// when two letters of a class disagree on the image word of classes.
struct Structure1D {
    Morphism1D horiz;  // on column classes, reads bottom rows of images
    Morphism1D vert;   // on row classes, reads left columns of images
    Projections proj;
};
Structure1D horiz_vert_structure(const Morphism2D& omega);

// JSON round trip: { "alphabet": [...], "rule": { "a": { "shape": [m,n],
// "rows": [[top row], ..., [bottom row]] } } }.
std::string morphism2d_to_json(const Morphism2D& m);
Morphism2D morphism2d_from_json(const std::string& text);

}  // namespace fibtiles
