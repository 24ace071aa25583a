#include "fibtiles/wang.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace fibtiles {

bool WangTile::operator<(const WangTile& o) const {
    return std::tie(east, north, west, south) < std::tie(o.east, o.north, o.west, o.south);
}

WangTileSet WangTileSet::from_strings(const std::vector<std::string>& strings) {
    WangTileSet set;
    for (const std::string& s : strings) {
        if (s.size() != 4)
            throw std::invalid_argument("WangTileSet: tile string must have 4 colors");
        set.tiles.push_back({std::string(1, s[0]), std::string(1, s[1]), std::string(1, s[2]),
                             std::string(1, s[3])});
    }
    for (std::size_t i = 0; i < set.tiles.size(); ++i)
        for (std::size_t j = i + 1; j < set.tiles.size(); ++j)
            if (set.tiles[i] == set.tiles[j])
                throw std::invalid_argument("WangTileSet: duplicate tile");
    return set;
}

std::vector<std::string> WangTileSet::vertical_colors() const {
    std::set<std::string> c;
    for (const WangTile& t : tiles) {
        c.insert(t.east);
        c.insert(t.west);
    }
    return {c.begin(), c.end()};
}

std::vector<std::string> WangTileSet::horizontal_colors() const {
    std::set<std::string> c;
    for (const WangTile& t : tiles) {
        c.insert(t.north);
        c.insert(t.south);
    }
    return {c.begin(), c.end()};
}

std::string WangTileSet::to_json() const {
    nlohmann::json j;
    j["tiles"] = nlohmann::json::array();
    for (const WangTile& t : tiles) j["tiles"].push_back(t.east + t.north + t.west + t.south);
    return j.dump(2);
}

WangTileSet tile_set_z() {
    return WangTileSet::from_strings({"DOJO", "DOHL", "JMDP", "DMDK", "HPJP", "HPHN", "HKDP",
                                      "BOIO", "ILEO", "ILCL", "ALIO", "EPIP", "IPIK", "IKBM",
                                      "IKAK", "CNIP"});
}

int Patch::at(std::int64_t x, std::int64_t y) const {
    return tiles[static_cast<std::size_t>((y - window.y0) * (window.x1 - window.x0) +
                                          (x - window.x0))];
}

int& Patch::at(std::int64_t x, std::int64_t y) {
    return tiles[static_cast<std::size_t>((y - window.y0) * (window.x1 - window.x0) +
                                          (x - window.x0))];
}

Patch Patch::from_word(const Rect& window, const Word2D& w) {
    if (w.width != window.x1 - window.x0 || w.height != window.y1 - window.y0)
        throw std::invalid_argument("Patch::from_word: shape does not match window");
    Patch p;
    p.window = window;
    p.tiles = w.cells;
    return p;
}

std::string Patch::to_json() const {
    nlohmann::json j;
    j["window"] = {window.x0, window.y0, window.x1, window.y1};
    j["rows"] = nlohmann::json::array();
    for (std::int64_t y = window.y1 - 1; y >= window.y0; --y) {
        nlohmann::json row = nlohmann::json::array();
        for (std::int64_t x = window.x0; x < window.x1; ++x) row.push_back(at(x, y));
        j["rows"].push_back(row);
    }
    return j.dump(2);
}

ValidityReport is_valid_patch(const WangTileSet& set, const Patch& p) {
    const std::int64_t n = static_cast<std::int64_t>(set.size());
    for (int t : p.tiles)
        if (t < 0 || t >= n) throw std::out_of_range("is_valid_patch: tile index out of set");
    for (std::int64_t y = p.window.y0; y < p.window.y1; ++y)
        for (std::int64_t x = p.window.x0; x < p.window.x1; ++x) {
            const WangTile& t = set[p.at(x, y)];
            if (x + 1 < p.window.x1 && t.east != set[p.at(x + 1, y)].west)
                return {false, EdgeViolation{x, y, 1}};
            if (y + 1 < p.window.y1 && t.north != set[p.at(x, y + 1)].south)
                return {false, EdgeViolation{x, y, 2}};
        }
    return {true, std::nullopt};
}

std::optional<Patch> solve_rectangle(const WangTileSet& set, int width, int height,
                                     const std::map<std::pair<int, int>, int>& pinned) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("solve_rectangle: empty rectangle");
    for (const auto& [pos, tile] : pinned)
        if (pos.first < 0 || pos.first >= width || pos.second < 0 || pos.second >= height ||
            tile < 0 || tile >= static_cast<int>(set.size()))
            throw std::invalid_argument("solve_rectangle: pin out of range");

    const int n = static_cast<int>(set.size());
    // Forward checking: a placement is hopeless when nothing can continue
    // east of it or north of it.
    std::set<std::string> continuable_west, continuable_south;
    for (const WangTile& t : set.tiles) {
        continuable_west.insert(t.west);
        continuable_south.insert(t.south);
    }

    std::vector<int> cells(static_cast<std::size_t>(width) * height, -1);
    auto cell = [&](int x, int y) -> int& { return cells[static_cast<std::size_t>(y) * width + x]; };

    auto fits = [&](int x, int y, int t) {
        const WangTile& tile = set[t];
        if (x > 0 && set[cell(x - 1, y)].east != tile.west) return false;
        if (y > 0 && set[cell(x, y - 1)].north != tile.south) return false;
        if (x + 1 < width && !continuable_west.count(tile.east)) return false;
        if (y + 1 < height && !continuable_south.count(tile.north)) return false;
        return true;
    };

    auto solve = [&](auto&& self, int index) -> bool {
        if (index == width * height) return true;
        const int x = index % width, y = index / width;
        const auto pin = pinned.find({x, y});
        if (pin != pinned.end()) {
            if (!fits(x, y, pin->second)) return false;
            cell(x, y) = pin->second;
            if (self(self, index + 1)) return true;
            cell(x, y) = -1;
            return false;
        }
        for (int t = 0; t < n; ++t) {
            if (!fits(x, y, t)) continue;
            cell(x, y) = t;
            if (self(self, index + 1)) return true;
            cell(x, y) = -1;
        }
        return false;
    };

    if (!solve(solve, 0)) return std::nullopt;
    Patch p;
    p.window = {0, 0, width, height};
    p.tiles = cells;
    return p;
}

std::set<std::pair<int, int>> admissible_dominoes(const WangTileSet& set, int direction,
                                                  int radius) {
    if (direction != 1 && direction != 2)
        throw std::invalid_argument("admissible_dominoes: direction must be 1 or 2");
    if (radius < 0) throw std::invalid_argument("admissible_dominoes: negative radius");

    const int w = (direction == 1 ? 2 : 1) + 2 * radius;
    const int h = (direction == 2 ? 2 : 1) + 2 * radius;
    const int n = static_cast<int>(set.size());

    std::set<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // Quick edge check before searching.
            if (direction == 1 && set[a].east != set[b].west) continue;
            if (direction == 2 && set[a].north != set[b].south) continue;
            std::map<std::pair<int, int>, int> pins;
            pins[{radius, radius}] = a;
            if (direction == 1)
                pins[{radius + 1, radius}] = b;
            else
                pins[{radius, radius + 1}] = b;
            if (solve_rectangle(set, w, h, pins)) out.insert({a, b});
        }
    return out;
}

WangTile relabel_tile(const WangTile& t, const EquivalenceCertificate& cert) {
    return {cert.vert.at(t.east), cert.horiz.at(t.north), cert.vert.at(t.west),
            cert.horiz.at(t.south)};
}

namespace {

// Backtracking over tile assignments building partial color bijections.
void search_equivalences(const WangTileSet& a, const WangTileSet& b, std::size_t i,
                         EquivalenceCertificate& cert,
                         std::map<std::string, std::string>& vert_inv,
                         std::map<std::string, std::string>& horiz_inv, std::vector<bool>& used,
                         std::vector<EquivalenceCertificate>& out, bool first_only) {
    if (i == a.size()) {
        out.push_back(cert);
        return;
    }
    const WangTile& ta = a.tiles[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (used[j]) continue;
        const WangTile& tb = b.tiles[j];

        std::vector<std::pair<std::string, std::string>> added_v, added_h;
        bool ok = true;
        auto bind = [&](std::map<std::string, std::string>& fwd,
                        std::map<std::string, std::string>& inv,
                        std::vector<std::pair<std::string, std::string>>& added,
                        const std::string& from, const std::string& to) {
            auto it = fwd.find(from);
            if (it != fwd.end()) {
                if (it->second != to) ok = false;
                return;
            }
            auto rit = inv.find(to);
            if (rit != inv.end()) {
                ok = false;
                return;
            }
            fwd[from] = to;
            inv[to] = from;
            added.push_back({from, to});
        };
        bind(cert.vert, vert_inv, added_v, ta.east, tb.east);
        if (ok) bind(cert.vert, vert_inv, added_v, ta.west, tb.west);
        if (ok) bind(cert.horiz, horiz_inv, added_h, ta.north, tb.north);
        if (ok) bind(cert.horiz, horiz_inv, added_h, ta.south, tb.south);

        if (ok) {
            used[j] = true;
            cert.tile_map[i] = static_cast<int>(j);
            search_equivalences(a, b, i + 1, cert, vert_inv, horiz_inv, used, out, first_only);
            used[j] = false;
            if (first_only && !out.empty()) return;
        }
        for (const auto& [f, t] : added_v) {
            cert.vert.erase(f);
            vert_inv.erase(t);
        }
        for (const auto& [f, t] : added_h) {
            cert.horiz.erase(f);
            horiz_inv.erase(t);
        }
    }
}

std::vector<EquivalenceCertificate> equivalences(const WangTileSet& a, const WangTileSet& b,
                                                 bool first_only) {
    std::vector<EquivalenceCertificate> out;
    if (a.size() != b.size()) return out;
    EquivalenceCertificate cert;
    cert.tile_map.assign(a.size(), -1);
    std::map<std::string, std::string> vert_inv, horiz_inv;
    std::vector<bool> used(b.size(), false);
    search_equivalences(a, b, 0, cert, vert_inv, horiz_inv, used, out, first_only);
    return out;
}

}  // namespace

std::optional<EquivalenceCertificate> is_equivalent(const WangTileSet& a, const WangTileSet& b) {
    auto certs = equivalences(a, b, true);
    if (certs.empty()) return std::nullopt;
    return certs.front();
}

std::vector<EquivalenceCertificate> all_equivalences(const WangTileSet& a, const WangTileSet& b) {
    return equivalences(a, b, false);
}

std::string render_text(const Patch& p) {
    int cell_width = 1;
    for (int t : p.tiles)
        cell_width = std::max(cell_width, static_cast<int>(std::to_string(t).size()));
    std::string out;
    for (std::int64_t y = p.window.y1 - 1; y >= p.window.y0; --y) {
        for (std::int64_t x = p.window.x0; x < p.window.x1; ++x) {
            std::string v = std::to_string(p.at(x, y));
            if (x != p.window.x0) out += ' ';
            out += std::string(cell_width - v.size(), ' ') + v;
        }
        out += '\n';
    }
    return out;
}

std::string render_svg(const WangTileSet& set, const Patch& p) {
    constexpr int kCell = 32;
    const std::int64_t w = (p.window.x1 - p.window.x0) * kCell;
    const std::int64_t h = (p.window.y1 - p.window.y0) * kCell;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
                      "\" height=\"" + std::to_string(h) + "\">\n";
    for (std::int64_t y = p.window.y0; y < p.window.y1; ++y)
        for (std::int64_t x = p.window.x0; x < p.window.x1; ++x) {
            const std::int64_t px = (x - p.window.x0) * kCell;
            const std::int64_t py = (p.window.y1 - 1 - y) * kCell;  // SVG y grows downward
            const WangTile& t = set[p.at(x, y)];
            auto num = [](std::int64_t v) { return std::to_string(v); };
            out += "  <rect x=\"" + num(px) + "\" y=\"" + num(py) + "\" width=\"" + num(kCell) +
                   "\" height=\"" + num(kCell) + "\" fill=\"none\" stroke=\"black\"/>\n";
            auto label = [&](std::int64_t cx, std::int64_t cy, const std::string& text) {
                out += "  <text x=\"" + num(cx) + "\" y=\"" + num(cy) +
                       "\" font-size=\"8\" text-anchor=\"middle\">" + text + "</text>\n";
            };
            label(px + kCell - 5, py + kCell / 2, t.east);
            label(px + kCell / 2, py + 9, t.north);
            label(px + 5, py + kCell / 2, t.west);
            label(px + kCell / 2, py + kCell - 3, t.south);
            label(px + kCell / 2, py + kCell / 2 + 3, std::to_string(p.at(x, y)));
        }
    out += "</svg>\n";
    return out;
}

}  // namespace fibtiles
