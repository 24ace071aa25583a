#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Signed Fibonacci numeration for Z and Z^2.
//
// A value is written as an odd-length binary word w = w_{2k+1} w_{2k} ... w_1
// (most significant digit first) with
//
//     val(w) = sum_{i=1}^{2k} w_i F_i  -  w_{2k+1} F_{2k},
//
// where F_0 = F_1 = 1, F_2 = 2, ...  The leading digit plays the role of a
// sign bit: canonical words starting with 1 denote negative integers.

namespace fibtiles {

// F_i with F_0 = F_1 = 1, F_2 = 2.  Throws std::overflow_error before any
// wraparound would occur.
std::int64_t fib(int i);

// Zeckendorf digits of n >= 0, most significant first, using F_1, F_2, ...
// No "11" factor, no leading zero; the empty word for n = 0.
std::string zeckendorf_rep(std::int64_t n);

// Signed value of an odd-length binary word (need not be canonical).
std::int64_t val_f(std::string_view w);

// The canonical representation: odd length, no "11" factor, and no "000" or
// "101" prefix.  val_f(rep_f(n)) == n.
std::string rep_f(std::int64_t n);

// Membership in the canonical language S(SS)* \ (S*11S* u 000S* u 101S*).
bool is_canonical(std::string_view w);

// Value-preserving left padding to length t: "00" blocks for nonnegative
// words, "10" blocks for negative ones.  Requires t >= |w| and t = |w| mod 2.
std::string pad(std::string_view w, std::size_t t);

// Two rows of equal odd length; row1 represents the first coordinate.
struct ZWord2 {
    std::string row1;
    std::string row2;

    bool operator==(const ZWord2&) const = default;
};

// Both coordinates padded to the longer representation.
ZWord2 rep_f2(std::int64_t n1, std::int64_t n2);

// Rowwise val_f; left inverse of rep_f2.
std::pair<std::int64_t, std::int64_t> val_f2(const ZWord2& w);

// Level k such that |rep_f(n)| = 2k+1.  Level intervals are
// I_k = [-F_{2k}, F_{2k+1}).
int level_of(std::int64_t n);
int level_of2(std::int64_t n1, std::int64_t n2);

// Interval I_k of integers whose representation has length <= 2k+1.
struct LevelInterval {
    int k;
    std::int64_t lo;  // -F_{2k}
    std::int64_t hi;  // F_{2k+1}, exclusive
};
LevelInterval level_interval(int k);

// Digit recoding h: 0 -> "00", 1 -> "01", 2 -> "10".
std::string h_recode(int digit);
std::string h_recode_word(const std::vector<int>& digits);

// Componentwise h on a digit pair, giving a two-column block.
ZWord2 h_recode_pair(int d1, int d2);

// Inverse of h on {"00", "01", "10"}.
int h_decode(std::string_view two_digits);

// rep_f(n) = rep_f(m) h(digit), defined for n outside I_0 = {-1, 0}.
struct ZDecomposition {
    std::int64_t m;
    int digit;
};
ZDecomposition decompose_z(std::int64_t n);

// Coordinatewise decomposition after padding, for n outside I_0 x I_0.
struct Z2Decomposition {
    std::int64_t m1;
    std::int64_t m2;
    int d1;
    int d2;
};
Z2Decomposition decompose_z2(std::int64_t n1, std::int64_t n2);

}  // namespace fibtiles
