#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibtiles/morphism.hpp"
#include "fibtiles/numeration.hpp"

namespace fibtiles {

// Raised when a run falls off the partial transition function.  Carries the
// input prefix consumed up to and including the failing letter.
struct RejectionError : std::runtime_error {
    std::string consumed;
    explicit RejectionError(std::string prefix)
        : std::runtime_error("input rejected after reading \"" + prefix + "\""),
          consumed(std::move(prefix)) {}
};

// Deterministic finite automaton with output; the output coding is the
// identity, so runs return the reached state.
struct Dfao {
    std::vector<std::string> states;    // state 0.. ; START, when present, is last
    std::vector<std::string> alphabet;  // input letters, serialization order
    std::vector<std::vector<int>> delta;  // delta[state][letter], -1 = undefined
    int start = 0;

    int state_index(const std::string& name) const;
    int letter_index(const std::string& name) const;

    // word is a sequence of input letters (each an alphabet symbol).
    int run_from(int state, const std::vector<std::string>& word) const;
    int run(const std::vector<std::string>& word) const;

    // Convenience for digit-string inputs: each character is one letter for
    // 1-letter alphabets ("0"/"1"); use columns_of for the two-row case.
    int run_digits(const std::string& digits) const;
};

// Input letters of the two-dimensional automaton: one column per position,
// written "<row1 digit><row2 digit>".
std::vector<std::string> columns_of(const ZWord2& w);

// States = alphabet of sigma, start = a, edges labeled by image positions.
Dfao dfao_from_morphism(const Morphism1D& sigma, int a);

// Adds a START state with edges rep(0) = "0" -> pos and rep(-1) = "1" -> neg
// on top of the morphism transitions of sigma.
Dfao dfao_from_seed_1d(const Morphism1D& sigma, int neg, int pos);

// Two-dimensional analogue: input alphabet {"00","01","10","11"}; START maps
// the four length-1 representations to the seed letters; delta(a, e) is the
// letter of omega(a) at cell e.  Requires every image shape in {1,2}x{1,2}.
Dfao dfao_from_seed_2d(const Morphism2D& omega, const Seed2x2& seed);

// Deterministic DOT and JSON dumps (states sorted, edges by source/label).
std::string dot_export(const Dfao& a);
std::string json_export(const Dfao& a);

// Abstract numeration system on the language accepted by a DFAO, minus
// leading-zero words, enumerated in radix order (rep(0) = empty word).
class NumerationSystem {
public:
    explicit NumerationSystem(Dfao automaton);

    std::vector<int> rep(std::int64_t n) const;
    std::int64_t val(const std::vector<int>& digits) const;

    const Dfao& automaton() const { return dfao_; }

private:
    void extend(std::size_t count) const;

    Dfao dfao_;
    mutable std::vector<std::vector<int>> words_;   // radix order; words_[0] = {}
    mutable std::vector<int> word_state_;
    mutable std::size_t next_length_start_ = 0;     // first index of the last length layer
};

// rep(n) = rep(m) . last digit; requires n > 0.
struct AnsDecomposition {
    std::int64_t m;
    int digit;
};
AnsDecomposition decompose_ans(const NumerationSystem& s, std::int64_t n);

// Letter of the two-sided Fibonacci word at position n (0 = a, 1 = b),
// evaluated through the seeded automaton.
int fibonacci_letter_at(std::int64_t n);

// Tile index at position (n1, n2) of the distinguished configuration,
// evaluated as the automaton run over rep_f2(n1, n2).
int tile_at(std::int64_t n1, std::int64_t n2);

// The automata behind the two queries above.
const Dfao& fibonacci_seed_dfao();
const Dfao& wang_seed_dfao();

}  // namespace fibtiles
