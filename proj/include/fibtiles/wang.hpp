#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fibtiles/morphism.hpp"

namespace fibtiles {

// Unit square with colored edges.  Colors are opaque symbols; fused colors
// produced by desubstitution are multi-character strings.
struct WangTile {
    std::string east, north, west, south;

    bool operator==(const WangTile&) const = default;
    bool operator<(const WangTile& o) const;
};

struct WangTileSet {
    std::vector<WangTile> tiles;

    // One tile per 4-character string in edge order (east, north, west, south).
    static WangTileSet from_strings(const std::vector<std::string>& strings);

    std::size_t size() const { return tiles.size(); }
    const WangTile& operator[](std::size_t i) const { return tiles[i]; }

    // Symbols appearing on east/west edges, sorted; horizontal likewise for
    // north/south.  A symbol used on both axes counts as two distinct colors.
    std::vector<std::string> vertical_colors() const;
    std::vector<std::string> horizontal_colors() const;

    std::string to_json() const;  // {"tiles": ["DOJO", ...]} when 1-char colors
};

// The 16-tile set behind the distinguished configuration.
WangTileSet tile_set_z();

// Finite window assignment position -> tile index over [x0,x1) x [y0,y1).
struct Patch {
    Rect window;
    std::vector<int> tiles;  // row-major from the bottom row of the window

    int at(std::int64_t x, std::int64_t y) const;
    int& at(std::int64_t x, std::int64_t y);
    static Patch from_word(const Rect& window, const Word2D& w);

    std::string to_json() const;
};

struct EdgeViolation {
    std::int64_t x, y;
    int direction;  // 1 = east/west mismatch with (x+1,y), 2 = north/south with (x,y+1)
};

struct ValidityReport {
    bool ok;
    std::optional<EdgeViolation> first_violation;
};

ValidityReport is_valid_patch(const WangTileSet& set, const Patch& p);

// Deterministic backtracking search for a valid assignment of the
// width x height rectangle extending the pinned cells ((x,y) -> tile index).
std::optional<Patch> solve_rectangle(const WangTileSet& set, int width, int height,
                                     const std::map<std::pair<int, int>, int>& pinned = {});

// Tile pairs (a, b) whose domino a (.)^direction b is completable to a valid
// patch after extending the window by radius cells on every side.
std::set<std::pair<int, int>> admissible_dominoes(const WangTileSet& set, int direction,
                                                  int radius);

// Witness that relabeling set 1 through (vert, horiz) and permuting tiles by
// tile_map yields set 2.
struct EquivalenceCertificate {
    std::map<std::string, std::string> vert;
    std::map<std::string, std::string> horiz;
    std::vector<int> tile_map;  // index in set 1 -> index in set 2
};

// Applies a certificate; used to verify certificates independently of the
// search that produced them.
WangTile relabel_tile(const WangTile& t, const EquivalenceCertificate& cert);

std::optional<EquivalenceCertificate> is_equivalent(const WangTileSet& a, const WangTileSet& b);
std::vector<EquivalenceCertificate> all_equivalences(const WangTileSet& a, const WangTileSet& b);

// Text grid of tile indices (rows top-down) and an SVG with edge labels.
std::string render_text(const Patch& p);
std::string render_svg(const WangTileSet& set, const Patch& p);

}  // namespace fibtiles
