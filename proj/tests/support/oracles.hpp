#pragma once

// Test-only reference computations and random generators. Nothing here
// shares code with the library's lattice sweep.

#include "wsadist/cost_model.hpp"
#include "wsadist/utf8.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace wsadist::test_support {

// Exhaustive recursion over every alignment of a and b (no memoization).
// Exponential; keep |a| + |b| small.
inline Cost brute_force_standard(std::u32string_view a, std::u32string_view b,
                                 const CostModel& model) {
    if (a.empty()) {
        Cost c = 0;
        for (char32_t ch : b) c += model.indel(ch);
        return c;
    }
    if (b.empty()) {
        Cost c = 0;
        for (char32_t ch : a) c += model.indel(ch);
        return c;
    }
    return std::min({brute_force_standard(a.substr(1), b, model) + model.indel(a[0]),
                     brute_force_standard(a, b.substr(1), model) + model.indel(b[0]),
                     brute_force_standard(a.substr(1), b.substr(1), model) +
                         model.replace(a[0], b[0])});
}

// Textbook full-matrix weighted Levenshtein.
inline Cost full_matrix_standard(std::u32string_view a, std::u32string_view b,
                                 const CostModel& model) {
    std::vector<std::vector<Cost>> d(a.size() + 1, std::vector<Cost>(b.size() + 1, 0));
    for (std::size_t i = 1; i <= a.size(); ++i) d[i][0] = d[i - 1][0] + model.indel(a[i - 1]);
    for (std::size_t j = 1; j <= b.size(); ++j) d[0][j] = d[0][j - 1] + model.indel(b[j - 1]);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            d[i][j] = std::min({d[i - 1][j] + model.indel(a[i - 1]),
                                d[i][j - 1] + model.indel(b[j - 1]),
                                d[i - 1][j - 1] + model.replace(a[i - 1], b[j - 1])});
        }
    }
    return d[a.size()][b.size()];
}

inline std::string utf8_debug(std::u32string_view s) { return "\"" + utf8::encode(s) + "\""; }

inline std::u32string strip_trailing_spaces(std::u32string s) {
    while (!s.empty() && s.back() == U' ') s.pop_back();
    return s;
}

// Symbols of the normalized-table cost matrix.
inline const std::u32string kTableAlphabet = U"aA9 (),$";

inline std::u32string random_string(std::mt19937_64& rng, std::u32string_view alphabet,
                                    std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::u32string s(len_dist(rng), U' ');
    for (char32_t& c : s) c = alphabet[pick(rng)];
    return s;
}

// A random model over `alphabet`; symmetric or not, with arbitrary
// (possibly zero) costs.
inline CostModel random_model(std::mt19937_64& rng, std::u32string_view alphabet, bool symmetric) {
    std::uniform_int_distribution<Cost> cost(0, 6);
    std::bernoulli_distribution coin(0.5);
    CostModelBuilder b;
    b.symmetric(symmetric).indel_default(cost(rng) + 1).replace_default(cost(rng));
    for (char32_t c : alphabet) {
        if (coin(rng)) b.indel(c, cost(rng));
    }
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        for (std::size_t j = symmetric ? i + 1 : 0; j < alphabet.size(); ++j) {
            if (i != j && coin(rng)) b.replace(alphabet[i], alphabet[j], cost(rng));
        }
    }
    return b.build();
}

} // namespace wsadist::test_support
