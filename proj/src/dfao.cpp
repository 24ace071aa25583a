#include "fibtiles/dfao.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace fibtiles {

int Dfao::state_index(const std::string& name) const {
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end()) throw std::invalid_argument("unknown state " + name);
    return static_cast<int>(it - states.begin());
}

int Dfao::letter_index(const std::string& name) const {
    auto it = std::find(alphabet.begin(), alphabet.end(), name);
    if (it == alphabet.end()) throw std::invalid_argument("unknown input letter " + name);
    return static_cast<int>(it - alphabet.begin());
}

int Dfao::run_from(int state, const std::vector<std::string>& word) const {
    std::string consumed;
    for (const std::string& letter : word) {
        consumed += letter;
        state = delta[state][letter_index(letter)];
        if (state < 0) throw RejectionError(consumed);
    }
    return state;
}

int Dfao::run(const std::vector<std::string>& word) const { return run_from(start, word); }

int Dfao::run_digits(const std::string& digits) const {
    std::vector<std::string> word;
    for (char c : digits) word.emplace_back(1, c);
    return run(word);
}

std::vector<std::string> columns_of(const ZWord2& w) {
    if (w.row1.size() != w.row2.size())
        throw std::invalid_argument("columns_of: rows differ in length");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < w.row1.size(); ++i)
        out.push_back(std::string{w.row1[i], w.row2[i]});
    return out;
}

namespace {

constexpr const char* kStart = "START";

}  // namespace

Dfao dfao_from_morphism(const Morphism1D& sigma, int a) {
    const auto it = sigma.rule.find(a);
    if (it == sigma.rule.end() || it->second.size() < 2 || it->second.front() != a)
        throw std::invalid_argument("dfao_from_morphism: sigma not prolongable on the letter");

    Dfao d;
    std::map<int, int> index;
    for (const auto& [b, img] : sigma.rule) {
        index[b] = static_cast<int>(d.states.size());
        d.states.push_back(sigma.name_of(b));
    }
    std::size_t max_len = 0;
    for (const auto& [b, img] : sigma.rule) max_len = std::max(max_len, img.size());
    for (std::size_t i = 0; i < max_len; ++i) d.alphabet.push_back(std::to_string(i));

    d.delta.assign(d.states.size(), std::vector<int>(d.alphabet.size(), -1));
    for (const auto& [b, img] : sigma.rule)
        for (std::size_t i = 0; i < img.size(); ++i)
            d.delta[index[b]][i] = index[img[i]];
    d.start = index[a];
    return d;
}

Dfao dfao_from_seed_1d(const Morphism1D& sigma, int neg, int pos) {
    // Two-sided prolongability of the seed under sigma^2.
    const std::vector<int> pos2 = sigma.apply_power({pos}, 2);
    const std::vector<int> neg2 = sigma.apply_power({neg}, 2);
    if (pos2.empty() || pos2.front() != pos || neg2.empty() || neg2.back() != neg)
        throw std::invalid_argument("dfao_from_seed_1d: seed not prolongable");

    Dfao d;
    std::map<int, int> index;
    for (const auto& [b, img] : sigma.rule) {
        index[b] = static_cast<int>(d.states.size());
        d.states.push_back(sigma.name_of(b));
    }
    const int start = static_cast<int>(d.states.size());
    d.states.push_back(kStart);
    d.start = start;

    std::size_t max_len = 0;
    for (const auto& [b, img] : sigma.rule) max_len = std::max(max_len, img.size());
    for (std::size_t i = 0; i < std::max<std::size_t>(max_len, 2); ++i)
        d.alphabet.push_back(std::to_string(i));

    d.delta.assign(d.states.size(), std::vector<int>(d.alphabet.size(), -1));
    for (const auto& [b, img] : sigma.rule)
        for (std::size_t i = 0; i < img.size(); ++i)
            d.delta[index[b]][i] = index[img[i]];
    d.delta[start][0] = index[pos];  // rep(0) = "0"
    d.delta[start][1] = index[neg];  // rep(-1) = "1"
    return d;
}

Dfao dfao_from_seed_2d(const Morphism2D& omega, const Seed2x2& seed) {
    Dfao d;
    std::map<int, int> index;
    for (const auto& [a, img] : omega.rule) {
        if (img.width < 1 || img.width > 2 || img.height < 1 || img.height > 2)
            throw std::invalid_argument("dfao_from_seed_2d: image shapes must be within 2x2");
        index[a] = static_cast<int>(d.states.size());
        d.states.push_back(std::to_string(a));
    }
    const int start = static_cast<int>(d.states.size());
    d.states.push_back(kStart);
    d.start = start;

    d.alphabet = {"00", "01", "10", "11"};
    d.delta.assign(d.states.size(), std::vector<int>(4, -1));
    for (const auto& [a, img] : omega.rule)
        for (int e1 = 0; e1 < 2; ++e1)
            for (int e2 = 0; e2 < 2; ++e2)
                if (e1 < img.width && e2 < img.height)
                    d.delta[index[a]][e1 * 2 + e2] = index[img.at(e1, e2)];

    // rep of the four corner positions: column "<digit of n1><digit of n2>".
    d.delta[start][0] = index.at(seed.ne);  // (0,0)
    d.delta[start][1] = index.at(seed.se);  // (0,-1)
    d.delta[start][2] = index.at(seed.nw);  // (-1,0)
    d.delta[start][3] = index.at(seed.sw);  // (-1,-1)
    return d;
}

std::string dot_export(const Dfao& a) {
    std::vector<int> order(a.states.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int l, int r) { return a.states[l] < a.states[r]; });

    std::string out = "digraph dfao {\n  rankdir=LR;\n";
    for (int s : order) out += "  \"" + a.states[s] + "\";\n";
    for (int s : order)
        for (std::size_t l = 0; l < a.alphabet.size(); ++l)
            if (a.delta[s][l] >= 0)
                out += "  \"" + a.states[s] + "\" -> \"" + a.states[a.delta[s][l]] +
                       "\" [label=\"" + a.alphabet[l] + "\"];\n";
    out += "}\n";
    return out;
}

std::string json_export(const Dfao& a) {
    nlohmann::json j;
    j["states"] = a.states;
    j["alphabet"] = a.alphabet;
    j["start"] = a.states[a.start];
    j["edges"] = nlohmann::json::array();
    for (std::size_t s = 0; s < a.states.size(); ++s)
        for (std::size_t l = 0; l < a.alphabet.size(); ++l)
            if (a.delta[s][l] >= 0)
                j["edges"].push_back({{"from", a.states[s]},
                                      {"label", a.alphabet[l]},
                                      {"to", a.states[a.delta[s][l]]}});
    return j.dump(2);
}

NumerationSystem::NumerationSystem(Dfao automaton) : dfao_(std::move(automaton)) {
    words_.push_back({});
    word_state_.push_back(dfao_.start);
    next_length_start_ = 0;
}

void NumerationSystem::extend(std::size_t count) const {
    const int k = static_cast<int>(dfao_.alphabet.size());
    while (words_.size() < count) {
        const std::size_t layer_begin = next_length_start_;
        const std::size_t layer_end = words_.size();
        next_length_start_ = layer_end;
        for (std::size_t i = layer_begin; i < layer_end; ++i)
            for (int c = 0; c < k; ++c) {
                if (words_[i].empty() && c == 0) continue;  // no leading zeros
                const int to = dfao_.delta[word_state_[i]][c];
                if (to < 0) continue;
                std::vector<int> w = words_[i];
                w.push_back(c);
                words_.push_back(std::move(w));
                word_state_.push_back(to);
            }
        if (words_.size() == next_length_start_)
            throw std::runtime_error("NumerationSystem: language exhausted");
    }
}

std::vector<int> NumerationSystem::rep(std::int64_t n) const {
    if (n < 0) throw std::invalid_argument("NumerationSystem::rep: negative index");
    extend(static_cast<std::size_t>(n) + 1);
    return words_[static_cast<std::size_t>(n)];
}

std::int64_t NumerationSystem::val(const std::vector<int>& digits) const {
    std::vector<int> w = digits;
    while (!w.empty() && w.front() == 0) w.erase(w.begin());
    // Enumerate until the word shows up; all words of its length get listed
    // before any longer one, so absence is detectable.
    for (std::size_t i = 0;; ++i) {
        extend(i + 1);
        if (words_[i] == w) return static_cast<std::int64_t>(i);
        if (words_[i].size() > w.size())
            throw std::invalid_argument("NumerationSystem::val: word not in the language");
    }
}

AnsDecomposition decompose_ans(const NumerationSystem& s, std::int64_t n) {
    if (n <= 0) throw std::domain_error("decompose_ans: n must be positive");
    std::vector<int> w = s.rep(n);
    const int digit = w.back();
    w.pop_back();
    return {s.val(w), digit};
}

const Dfao& fibonacci_seed_dfao() {
    static const Dfao d = dfao_from_seed_1d(fibonacci_morphism(), 1, 0);
    return d;
}

const Dfao& wang_seed_dfao() {
    static const Dfao d = dfao_from_seed_2d(phi_morphism(), phi_seed());
    return d;
}

int fibonacci_letter_at(std::int64_t n) {
    const Dfao& d = fibonacci_seed_dfao();
    const int state = d.run_digits(rep_f(n));
    return d.states[state] == "a" ? 0 : 1;
}

int tile_at(std::int64_t n1, std::int64_t n2) {
    const Dfao& d = wang_seed_dfao();
    const int state = d.run(columns_of(rep_f2(n1, n2)));
    return std::stoi(d.states[state]);
}

}  // namespace fibtiles
