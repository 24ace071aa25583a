#include "fibtiles/morphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace fibtiles {

std::vector<int> Morphism1D::apply(const std::vector<int>& w) const {
    std::vector<int> out;
    for (int a : w) {
        auto it = rule.find(a);
        if (it == rule.end())
            throw std::invalid_argument("Morphism1D: letter " + std::to_string(a) +
                                        " not in alphabet");
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
    return out;
}

std::vector<int> Morphism1D::apply_power(const std::vector<int>& w, int k) const {
    std::vector<int> out = w;
    for (int i = 0; i < k; ++i) out = apply(out);
    return out;
}

std::string Morphism1D::name_of(int letter) const {
    auto it = names.find(letter);
    return it != names.end() ? it->second : std::to_string(letter);
}

Morphism1D fibonacci_morphism() {
    Morphism1D m;
    m.rule[0] = {0, 1};  // a -> ab
    m.rule[1] = {0};     // b -> a
    m.names[0] = "a";
    m.names[1] = "b";
    return m;
}

std::vector<int> two_sided_fixed_point(const Morphism1D& sigma, int neg, int pos,
                                       std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("two_sided_fixed_point: empty window bounds");
    const std::vector<int> pos2 = sigma.apply_power({pos}, 2);
    const std::vector<int> neg2 = sigma.apply_power({neg}, 2);
    if (pos2.empty() || pos2.front() != pos || neg2.empty() || neg2.back() != neg)
        throw std::invalid_argument("two_sided_fixed_point: seed not prolongable on both sides");

    std::vector<int> right = {pos};
    while (static_cast<std::int64_t>(right.size()) < hi) right = sigma.apply_power(right, 2);
    std::vector<int> left = {neg};
    while (static_cast<std::int64_t>(left.size()) < -lo) left = sigma.apply_power(left, 2);

    std::vector<int> out;
    for (std::int64_t n = lo; n < hi; ++n) {
        if (n >= 0)
            out.push_back(right[static_cast<std::size_t>(n)]);
        else
            out.push_back(left[left.size() + static_cast<std::size_t>(n)]);
    }
    return out;
}

const Word2D& Morphism2D::image(int letter) const {
    auto it = rule.find(letter);
    if (it == rule.end())
        throw std::invalid_argument("Morphism2D: letter " + std::to_string(letter) +
                                    " not in alphabet");
    return it->second;
}

Word2D Morphism2D::apply(const Word2D& w) const {
    if (w.width == 0 || w.height == 0) return {};
    // Column widths must agree down each column, row heights across each row.
    std::vector<int> col_w(w.width), row_h(w.height);
    for (int x = 0; x < w.width; ++x) {
        col_w[x] = image(w.at(x, 0)).width;
        for (int y = 1; y < w.height; ++y)
            if (image(w.at(x, y)).width != col_w[x])
                throw std::invalid_argument("Morphism2D::apply: column width mismatch");
    }
    for (int y = 0; y < w.height; ++y) {
        row_h[y] = image(w.at(0, y)).height;
        for (int x = 1; x < w.width; ++x)
            if (image(w.at(x, y)).height != row_h[y])
                throw std::invalid_argument("Morphism2D::apply: row height mismatch");
    }
    Word2D out(std::accumulate(col_w.begin(), col_w.end(), 0),
               std::accumulate(row_h.begin(), row_h.end(), 0));
    int oy = 0;
    for (int y = 0; y < w.height; ++y) {
        int ox = 0;
        for (int x = 0; x < w.width; ++x) {
            const Word2D& block = image(w.at(x, y));
            for (int j = 0; j < block.height; ++j)
                for (int i = 0; i < block.width; ++i)
                    out.at(ox + i, oy + j) = block.at(i, j);
            ox += col_w[x];
        }
        oy += row_h[y];
    }
    return out;
}

Word2D Morphism2D::apply_power(const Word2D& w, int k) const {
    Word2D out = w;
    for (int i = 0; i < k; ++i) out = apply(out);
    return out;
}

Morphism2D Morphism2D::power(int k) const {
    if (k < 1) throw std::invalid_argument("Morphism2D::power: k must be >= 1");
    Morphism2D out;
    for (const auto& [a, img] : rule) out.rule[a] = apply_power(Word2D::letter(a), k);
    return out;
}

std::string Morphism2D::to_string() const {
    std::string s;
    for (const auto& [a, img] : rule) {
        s += std::to_string(a) + " -> ";
        std::string block = img.to_string();
        std::replace(block.begin(), block.end(), '\n', '/');
        s += block + "\n";
    }
    return s;
}

Morphism2D compose2(const Morphism2D& outer, const Morphism2D& inner) {
    Morphism2D out;
    for (const auto& [a, img] : inner.rule) out.rule[a] = outer.apply(img);
    return out;
}

bool Seed2x2::operator<(const Seed2x2& o) const {
    return std::tie(nw, ne, sw, se) < std::tie(o.nw, o.ne, o.sw, o.se);
}

Morphism2D phi_morphism() {
    Morphism2D m;
    auto r = [&](int a, std::vector<std::vector<int>> rows) {
        m.rule[a] = Word2D::from_rows(std::move(rows));
    };
    r(0, {{14}});
    r(1, {{13}});
    r(2, {{12, 10}});
    r(3, {{11, 8}});
    r(4, {{14, 7}});
    r(5, {{13, 7}});
    r(6, {{12, 7}});
    r(7, {{6}, {12}});
    r(8, {{3}, {14}});
    r(9, {{3}, {13}});
    r(10, {{2}, {12}});
    r(11, {{6, 1}, {12, 10}});
    r(12, {{6, 1}, {11, 8}});
    r(13, {{5, 1}, {15, 9}});
    r(14, {{4, 1}, {11, 8}});
    r(15, {{2, 0}, {12, 7}});
    return m;
}

Seed2x2 phi_seed() { return {8, 12, 1, 6}; }

namespace {

enum Corner { BL, BR, TL, TR };

int corner_of(const Word2D& w, Corner c) {
    switch (c) {
        case BL: return w.at(0, 0);
        case BR: return w.at(w.width - 1, 0);
        case TL: return w.at(0, w.height - 1);
        case TR: return w.at(w.width - 1, w.height - 1);
    }
    throw std::logic_error("corner_of");
}

// corner(omega^2(w)) = corner_map(corner(w)), so quadrant prolongation
// reduces to cycle membership of the seed letters under these maps.
std::map<int, int> corner_map(const Morphism2D& omega2, Corner c) {
    std::map<int, int> m;
    for (const auto& [a, img] : omega2.rule) m[a] = corner_of(img, c);
    return m;
}

int iterate_map(const std::map<int, int>& m, int x, int k) {
    for (int i = 0; i < k; ++i) x = m.at(x);
    return x;
}

}  // namespace

std::vector<Seed2x2> prolongable_seeds(const Morphism2D& omega, int max_power) {
    const Morphism2D omega2 = omega.power(2);
    const auto bl = corner_map(omega2, BL);
    const auto br = corner_map(omega2, BR);
    const auto tl = corner_map(omega2, TL);
    const auto tr = corner_map(omega2, TR);
    const FactorLanguage lang = saturated_factors(omega);

    std::vector<int> letters;
    for (const auto& [a, img] : omega.rule) letters.push_back(a);

    std::vector<Seed2x2> out;
    for (int nw : letters)
        for (int ne : letters) {
            if (omega.image(nw).height != omega.image(ne).height) continue;
            for (int sw : letters) {
                if (omega.image(nw).width != omega.image(sw).width) continue;
                for (int se : letters) {
                    if (omega.image(ne).width != omega.image(se).width) continue;
                    if (omega.image(sw).height != omega.image(se).height) continue;
                    // A seed outside the factor language cannot start a
                    // configuration of the substitutive subshift.
                    if (!lang.squares.count(Word2D::from_rows({{nw, ne}, {sw, se}}))) continue;
                    for (int j = 1; j <= max_power; ++j) {
                        if (iterate_map(br, nw, j) == nw && iterate_map(bl, ne, j) == ne &&
                            iterate_map(tr, sw, j) == sw && iterate_map(tl, se, j) == se) {
                            out.push_back({nw, ne, sw, se});
                            break;
                        }
                    }
                }
            }
        }
    return out;
}

namespace {

// Smallest j such that omega^{2j}(seed) repeats the seed at the center.
int prolongation_period(const Morphism2D& omega, const Seed2x2& s, int max_power) {
    const Morphism2D omega2 = omega.power(2);
    const auto bl = corner_map(omega2, BL);
    const auto br = corner_map(omega2, BR);
    const auto tl = corner_map(omega2, TL);
    const auto tr = corner_map(omega2, TR);
    for (int j = 1; j <= max_power; ++j)
        if (iterate_map(br, s.nw, j) == s.nw && iterate_map(bl, s.ne, j) == s.ne &&
            iterate_map(tr, s.sw, j) == s.sw && iterate_map(tl, s.se, j) == s.se)
            return j;
    throw std::invalid_argument("seed is not prolongable");
}

}  // namespace

Word2D quadrant_fixed_point(const Morphism2D& omega, const Seed2x2& seed, const Rect& window) {
    if (window.x0 >= window.x1 || window.y0 >= window.y1)
        throw std::invalid_argument("quadrant_fixed_point: empty window");
    const int j = prolongation_period(omega, seed, 8);
    const Morphism2D step = omega.power(2 * j);

    // Grow a quadrant word from its seed letter until it covers (need_w, need_h),
    // anchored at the given corner of the plane's origin.
    auto grow = [&](int letter, std::int64_t need_w, std::int64_t need_h) {
        Word2D q = Word2D::letter(letter);
        while (q.width < need_w || q.height < need_h) {
            Word2D next = step.apply(q);
            if (next.width <= q.width && next.height <= q.height)
                throw std::runtime_error("quadrant_fixed_point: morphism is not expansive");
            q = std::move(next);
        }
        return q;
    };

    const std::int64_t W = window.x1 - window.x0, H = window.y1 - window.y0;
    Word2D out(static_cast<int>(W), static_cast<int>(H));

    const std::int64_t need_e = std::max<std::int64_t>(window.x1, 0);
    const std::int64_t need_w = std::max<std::int64_t>(-window.x0, 0);
    const std::int64_t need_n = std::max<std::int64_t>(window.y1, 0);
    const std::int64_t need_s = std::max<std::int64_t>(-window.y0, 0);

    auto fill = [&](int letter, bool east, bool north) {
        const std::int64_t qw = east ? need_e : need_w;
        const std::int64_t qh = north ? need_n : need_s;
        if (qw == 0 || qh == 0) return;
        Word2D q = grow(letter, qw, qh);
        for (std::int64_t y = window.y0; y < window.y1; ++y) {
            if (north ? (y < 0) : (y >= 0)) continue;
            for (std::int64_t x = window.x0; x < window.x1; ++x) {
                if (east ? (x < 0) : (x >= 0)) continue;
                const int qx = east ? static_cast<int>(x) : static_cast<int>(q.width + x);
                const int qy = north ? static_cast<int>(y) : static_cast<int>(q.height + y);
                out.at(static_cast<int>(x - window.x0), static_cast<int>(y - window.y0)) =
                    q.at(qx, qy);
            }
        }
    };

    fill(seed.ne, true, true);
    fill(seed.nw, false, true);
    fill(seed.se, true, false);
    fill(seed.sw, false, false);
    return out;
}

FactorLanguage saturated_factors(const Morphism2D& omega) {
    FactorLanguage f;
    for (const auto& [a, img] : omega.rule) f.letters.insert(a);

    auto absorb = [&](const Word2D& w) {
        bool grew = false;
        auto add = [&](auto& set, const auto& v) {
            if (set.insert(v).second) grew = true;
        };
        for (int y = 0; y < w.height; ++y)
            for (int x = 0; x < w.width; ++x) {
                add(f.letters, w.at(x, y));
                if (x + 1 < w.width) add(f.horizontal, std::pair{w.at(x, y), w.at(x + 1, y)});
                if (y + 1 < w.height) add(f.vertical, std::pair{w.at(x, y), w.at(x, y + 1)});
            }
        for (const Word2D& sq : subwords_of_shape(w, 2, 2)) add(f.squares, sq);
        return grew;
    };

    bool grew = true;
    while (grew) {
        grew = false;
        for (int a : std::set<int>(f.letters)) grew |= absorb(omega.image(a));
        for (auto [l, r] : std::set<std::pair<int, int>>(f.horizontal))
            grew |= absorb(omega.apply(concat(1, Word2D::letter(l), Word2D::letter(r))));
        for (auto [b, t] : std::set<std::pair<int, int>>(f.vertical))
            grew |= absorb(omega.apply(concat(2, Word2D::letter(b), Word2D::letter(t))));
        for (const Word2D& sq : std::set<Word2D>(f.squares)) grew |= absorb(omega.apply(sq));
    }
    return f;
}

std::vector<Word2D> list_2x2_factors(const Morphism2D& omega) {
    const FactorLanguage f = saturated_factors(omega);
    return {f.squares.begin(), f.squares.end()};
}

namespace {

struct UnionFind {
    std::map<int, int> parent;

    int find(int x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        if (it->second == x) return x;
        return parent[x] = find(it->second);
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Canonical class ids: minimum letter of each class.
std::map<int, int> canonical_classes(UnionFind& uf, const std::set<int>& letters) {
    std::map<int, int> root_min;
    for (int a : letters) {
        int r = uf.find(a);
        auto it = root_min.find(r);
        if (it == root_min.end() || a < it->second) root_min[r] = a;
    }
    std::map<int, int> out;
    for (int a : letters) out[a] = root_min[uf.find(a)];
    return out;
}

}  // namespace

Projections column_row_equivalence(const Morphism2D& omega) {
    const FactorLanguage f = saturated_factors(omega);
    UnionFind col, row;
    for (int a : f.letters) {
        col.find(a);
        row.find(a);
    }
    for (auto [b, t] : f.vertical) col.unite(b, t);
    for (auto [l, r] : f.horizontal) row.unite(l, r);
    return {canonical_classes(col, f.letters), canonical_classes(row, f.letters)};
}

Structure1D horiz_vert_structure(const Morphism2D& omega) {
    Structure1D s;
    s.proj = column_row_equivalence(omega);

    for (const auto& [a, img] : omega.rule) {
        std::vector<int> horiz_word, vert_word;
        for (int x = 0; x < img.width; ++x) horiz_word.push_back(s.proj.col_class.at(img.at(x, 0)));
        for (int y = 0; y < img.height; ++y) vert_word.push_back(s.proj.row_class.at(img.at(0, y)));

        const int ca = s.proj.col_class.at(a);
        auto hit = s.horiz.rule.find(ca);
        if (hit == s.horiz.rule.end())
            s.horiz.rule[ca] = horiz_word;
        else if (hit->second != horiz_word)
            throw std::runtime_error("horiz structure not well-defined on class " +
                                     std::to_string(ca));

        const int ra = s.proj.row_class.at(a);
        auto vit = s.vert.rule.find(ra);
        if (vit == s.vert.rule.end())
            s.vert.rule[ra] = vert_word;
        else if (vit->second != vert_word)
            throw std::runtime_error("vert structure not well-defined on class " +
                                     std::to_string(ra));
    }
    return s;
}

std::string morphism2d_to_json(const Morphism2D& m) {
    nlohmann::json j;
    j["alphabet"] = nlohmann::json::array();
    j["rule"] = nlohmann::json::object();
    for (const auto& [a, img] : m.rule) {
        j["alphabet"].push_back(a);
        nlohmann::json rows = nlohmann::json::array();
        for (int y = img.height - 1; y >= 0; --y) {
            nlohmann::json row = nlohmann::json::array();
            for (int x = 0; x < img.width; ++x) row.push_back(img.at(x, y));
            rows.push_back(row);
        }
        j["rule"][std::to_string(a)] = {{"shape", {img.width, img.height}}, {"rows", rows}};
    }
    return j.dump(2);
}

Morphism2D morphism2d_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    Morphism2D m;
    for (const auto& [key, entry] : j.at("rule").items()) {
        std::vector<std::vector<int>> rows;
        for (const auto& row : entry.at("rows")) rows.push_back(row.get<std::vector<int>>());
        m.rule[std::stoi(key)] = Word2D::from_rows(rows);
    }
    return m;
}

}  // namespace fibtiles
