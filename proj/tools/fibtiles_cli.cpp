// Command-line front-end.  Exit codes: 0 success, 1 usage error, 2 domain
// error, 3 pipeline/verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fibtiles/desub.hpp"
#include "fibtiles/dfao.hpp"

using namespace fibtiles;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerification = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::int64_t parse_int(const std::string& s) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("not an integer: '" + s + "'");
    return v;
}

// Either a single integer or a comma-separated pair.
struct IntOrPair {
    std::int64_t first = 0;
    std::optional<std::int64_t> second;
};

IntOrPair parse_int_or_pair(const std::string& s) {
    const std::size_t comma = s.find(',');
    IntOrPair out;
    if (comma == std::string::npos) {
        out.first = parse_int(s);
    } else {
        out.first = parse_int(s.substr(0, comma));
        out.second = parse_int(s.substr(comma + 1));
    }
    return out;
}

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& s) {
    const IntOrPair p = parse_int_or_pair(s);
    if (!p.second) throw UsageError("expected a pair 'n1,n2', got '" + s + "'");
    return {p.first, *p.second};
}

void check_binary_word(const std::string& w) {
    if (w.empty()) throw UsageError("empty digit word");
    for (char c : w)
        if (c != '0' && c != '1') throw UsageError("expected a binary word, got '" + w + "'");
}

int cmd_rep(const std::string& arg) {
    const IntOrPair p = parse_int_or_pair(arg);
    if (p.second) {
        const ZWord2 w = rep_f2(p.first, *p.second);
        std::printf("%s/%s\n", w.row1.c_str(), w.row2.c_str());
    } else {
        std::printf("%s\n", rep_f(p.first).c_str());
    }
    return 0;
}

int cmd_val(const std::string& arg) {
    const std::size_t slash = arg.find('/');
    if (slash == std::string::npos) {
        check_binary_word(arg);
        std::printf("%lld\n", static_cast<long long>(val_f(arg)));
    } else {
        const std::string row1 = arg.substr(0, slash);
        const std::string row2 = arg.substr(slash + 1);
        check_binary_word(row1);
        check_binary_word(row2);
        const auto [n1, n2] = val_f2({row1, row2});
        std::printf("%lld,%lld\n", static_cast<long long>(n1), static_cast<long long>(n2));
    }
    return 0;
}

int cmd_tile(const std::string& arg, bool trace) {
    const auto [n1, n2] = parse_pair(arg);
    if (trace) {
        const Dfao& a = wang_seed_dfao();
        std::string path = "START";
        int state = a.start;
        for (const std::string& c : columns_of(rep_f2(n1, n2))) {
            state = a.run_from(state, {c});
            path += "→" + a.states[static_cast<std::size_t>(state)];
        }
        std::printf("%s\n", path.c_str());
    }
    std::printf("%d\n", tile_at(n1, n2));
    return 0;
}

int cmd_window(std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1,
               const std::string& format) {
    if (x0 >= x1 || y0 >= y1) throw UsageError("empty window");
    const Rect window = {x0, y0, x1, y1};
    const Word2D w = quadrant_fixed_point(phi_morphism(), phi_seed(), window);
    const Patch p = Patch::from_word(window, w);
    const WangTileSet z = tile_set_z();
    if (format == "text")
        std::fputs(render_text(p).c_str(), stdout);
    else if (format == "json")
        std::printf("%s\n", p.to_json().c_str());
    else if (format == "svg")
        std::fputs(render_svg(z, p).c_str(), stdout);
    else
        throw UsageError("unknown format '" + format + "'");
    return is_valid_patch(z, p).ok ? 0 : kExitVerification;
}

int cmd_pipeline() {
    PipelineResult r;
    try {
        r = self_similarity_pipeline(tile_set_z());
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitVerification;
    }
    std::fputs(pipeline_transcript(r).c_str(), stdout);
    return r.composite_is_phi ? 0 : kExitVerification;
}

int cmd_automaton(const std::string& which, const std::string& format) {
    const Dfao* a = nullptr;
    if (which == "fib1d")
        a = &fibonacci_seed_dfao();
    else if (which == "wang2d")
        a = &wang_seed_dfao();
    else
        throw UsageError("unknown automaton '" + which + "' (expected fib1d or wang2d)");
    if (format == "dot")
        std::fputs(dot_export(*a).c_str(), stdout);
    else if (format == "json")
        std::printf("%s\n", json_export(*a).c_str());
    else
        throw UsageError("unknown format '" + format + "'");
    return 0;
}

int cmd_fibword(std::int64_t lo, std::int64_t hi) {
    if (lo >= hi) throw UsageError("empty range");
    if (hi - lo > 1000000) throw UsageError("range too large");
    const Morphism1D m = fibonacci_morphism();
    std::string out;
    for (int letter : two_sided_fixed_point(m, 1, 0, lo, hi)) out += m.name_of(letter);
    std::printf("%s\n", out.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signed Fibonacci numeration, the 16 Wang tiles, and their self-similarity"};
    app.require_subcommand(1);

    std::string rep_arg;
    auto* rep = app.add_subcommand("rep", "Representation of n or of a pair n1,n2");
    rep->add_option("n", rep_arg, "integer or 'n1,n2'")->required();

    std::string val_arg;
    auto* val = app.add_subcommand("val", "Value of a digit word or of 'row1/row2'");
    val->add_option("word", val_arg, "binary word, odd length")->required();

    std::string tile_arg;
    bool tile_trace = false;
    auto* tile = app.add_subcommand("tile", "Tile index at a position of the configuration");
    tile->add_option("position", tile_arg, "'n1,n2'")->required();
    tile->add_flag("--trace", tile_trace, "print the automaton path");

    std::vector<std::int64_t> window_bounds;
    std::string window_format = "text";
    auto* window = app.add_subcommand("window", "Render a window of the configuration");
    window->add_option("bounds", window_bounds, "x0 y0 x1 y1 (half-open)")
        ->expected(4)
        ->required();
    window->add_option("--format", window_format, "text | json | svg");

    auto* pipeline =
        app.add_subcommand("pipeline", "Run the two-step desubstitution and verify the composite");

    std::string automaton_which, automaton_format = "dot";
    auto* automaton = app.add_subcommand("automaton", "Export an automaton");
    automaton->add_option("which", automaton_which, "fib1d | wang2d")->required();
    automaton->add_option("--format", automaton_format, "dot | json");

    std::vector<std::int64_t> fibword_range;
    auto* fibword = app.add_subcommand("fibword", "Letters of the two-sided Fibonacci word");
    fibword->add_option("range", fibword_range, "lo hi (half-open)")->expected(2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (rep->parsed()) return cmd_rep(rep_arg);
        if (val->parsed()) return cmd_val(val_arg);
        if (tile->parsed()) return cmd_tile(tile_arg, tile_trace);
        if (window->parsed())
            return cmd_window(window_bounds[0], window_bounds[1], window_bounds[2],
                              window_bounds[3], window_format);
        if (pipeline->parsed()) return cmd_pipeline();
        if (automaton->parsed()) return cmd_automaton(automaton_which, automaton_format);
        if (fibword->parsed()) return cmd_fibword(fibword_range[0], fibword_range[1]);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDomain;
    }
    return kExitUsage;
}
