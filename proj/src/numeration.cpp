#include "fibtiles/numeration.hpp"

#include <stdexcept>

namespace fibtiles {

std::int64_t fib(int i) {
    if (i < 0) throw std::invalid_argument("fib: negative index");
    std::int64_t a = 1, b = 1;  // F_0, F_1
    for (int j = 0; j < i; ++j) {
        std::int64_t next;
        if (__builtin_add_overflow(a, b, &next))
            throw std::overflow_error("fib: index too large for 64-bit result");
        a = b;
        b = next;
    }
    return a;
}

std::string zeckendorf_rep(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("zeckendorf_rep: negative input");
    if (n == 0) return "";
    int ell = 1;
    while (fib(ell + 1) <= n) ++ell;
    std::string w;
    std::int64_t rest = n;
    for (int i = ell; i >= 1; --i) {
        if (fib(i) <= rest) {
            w.push_back('1');
            rest -= fib(i);
        } else {
            w.push_back('0');
        }
    }
    return w;
}

namespace {

void check_binary(std::string_view w) {
    for (char c : w)
        if (c != '0' && c != '1')
            throw std::invalid_argument("expected a binary word, got '" + std::string(w) + "'");
}

}  // namespace

std::int64_t val_f(std::string_view w) {
    check_binary(w);
    if (w.size() % 2 == 0)
        throw std::invalid_argument("val_f: word length must be odd");
    const int n = static_cast<int>(w.size());
    std::int64_t value = 0;
    // w[j] is digit w_{n-j}; the leading digit carries weight -F_{n-1}.
    for (int j = 1; j < n; ++j)
        if (w[j] == '1') value += fib(n - j);
    if (w[0] == '1') value -= fib(n - 1);
    return value;
}

std::string rep_f(std::int64_t n) {
    if (n == 0) return "0";
    if (n == -1) return "1";
    if (n > 0) {
        std::string u = zeckendorf_rep(n);
        return (u.size() % 2 == 1) ? "00" + u : "0" + u;
    }
    // n <= -2: find k with -F_{2k} <= n < -F_{2k-2}, then recurse on n + F_{2k}
    // via the plain Zeckendorf digits of the shifted value.
    int k = 1;
    while (-fib(2 * k) > n) ++k;
    std::string w = zeckendorf_rep(n + fib(2 * k));
    w.insert(0, 2 * k - 2 - w.size(), '0');
    return "100" + w;
}

bool is_canonical(std::string_view w) {
    if (w.empty() || w.size() % 2 == 0) return false;
    for (char c : w)
        if (c != '0' && c != '1') return false;
    if (w.find("11") != std::string_view::npos) return false;
    if (w.substr(0, 3) == "000" || w.substr(0, 3) == "101") return false;
    return true;
}

std::string pad(std::string_view w, std::size_t t) {
    if (w.empty()) throw std::invalid_argument("pad: empty word");
    if (t < w.size() || (t - w.size()) % 2 != 0)
        throw std::invalid_argument("pad: bad target length");
    std::string prefix;
    const std::size_t blocks = (t - w.size()) / 2;
    for (std::size_t i = 0; i < blocks; ++i)
        prefix += (w[0] == '0') ? "00" : "10";
    return prefix + std::string(w);
}

ZWord2 rep_f2(std::int64_t n1, std::int64_t n2) {
    const std::string w1 = rep_f(n1);
    const std::string w2 = rep_f(n2);
    const std::size_t t = std::max(w1.size(), w2.size());
    return {pad(w1, t), pad(w2, t)};
}

std::pair<std::int64_t, std::int64_t> val_f2(const ZWord2& w) {
    if (w.row1.size() != w.row2.size())
        throw std::invalid_argument("val_f2: rows differ in length");
    return {val_f(w.row1), val_f(w.row2)};
}

int level_of(std::int64_t n) {
    return static_cast<int>(rep_f(n).size()) / 2;
}

int level_of2(std::int64_t n1, std::int64_t n2) {
    return std::max(level_of(n1), level_of(n2));
}

LevelInterval level_interval(int k) {
    if (k < 0) throw std::invalid_argument("level_interval: negative level");
    return {k, -fib(2 * k), fib(2 * k + 1)};
}

std::string h_recode(int digit) {
    switch (digit) {
        case 0: return "00";
        case 1: return "01";
        case 2: return "10";
    }
    throw std::invalid_argument("h_recode: digit out of {0,1,2}");
}

std::string h_recode_word(const std::vector<int>& digits) {
    std::string out;
    for (int d : digits) out += h_recode(d);
    return out;
}

ZWord2 h_recode_pair(int d1, int d2) {
    return {h_recode(d1), h_recode(d2)};
}

int h_decode(std::string_view two_digits) {
    if (two_digits == "00") return 0;
    if (two_digits == "01") return 1;
    if (two_digits == "10") return 2;
    throw std::invalid_argument("h_decode: not in the image of h");
}

ZDecomposition decompose_z(std::int64_t n) {
    if (n == 0 || n == -1)
        throw std::domain_error("decompose_z: n must lie outside I_0 = {-1, 0}");
    const std::string w = rep_f(n);
    const std::string_view prefix(w.data(), w.size() - 2);
    const int digit = h_decode(std::string_view(w).substr(w.size() - 2));
    return {val_f(prefix), digit};
}

Z2Decomposition decompose_z2(std::int64_t n1, std::int64_t n2) {
    if ((n1 == 0 || n1 == -1) && (n2 == 0 || n2 == -1))
        throw std::domain_error("decompose_z2: n must lie outside I_0 x I_0");
    const ZWord2 w = rep_f2(n1, n2);
    const std::size_t t = w.row1.size();
    const int d1 = h_decode(std::string_view(w.row1).substr(t - 2));
    const int d2 = h_decode(std::string_view(w.row2).substr(t - 2));
    return {val_f(std::string_view(w.row1).substr(0, t - 2)),
            val_f(std::string_view(w.row2).substr(0, t - 2)), d1, d2};
}

}  // namespace fibtiles
