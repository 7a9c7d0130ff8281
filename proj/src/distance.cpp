#include "wsadist/distance.hpp"

#include "wsadist/error.hpp"
#include "wsadist/utf8.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsadist {

namespace {

constexpr std::size_t kMaxDenseAlphabet = 512;

void check_cells(std::size_t n1, std::size_t n2, const DistanceLimits& limits) {
    if (n1 != 0 && n2 > limits.max_cells / n1) {
        throw SizeLimitError("distance: " + std::to_string(n1) + " x " + std::to_string(n2) +
                             " cells exceeds the limit of " + std::to_string(limits.max_cells));
    }
}

// Positions of one string mapped onto its sorted distinct characters.
struct Indexed {
    std::vector<char32_t> alphabet;
    std::vector<std::uint32_t> index;
};

Indexed index_string(std::u32string_view s) {
    Indexed out;
    out.alphabet.assign(s.begin(), s.end());
    std::sort(out.alphabet.begin(), out.alphabet.end());
    out.alphabet.erase(std::unique(out.alphabet.begin(), out.alphabet.end()), out.alphabet.end());
    out.index.reserve(s.size());
    for (char32_t c : s) {
        const auto it = std::lower_bound(out.alphabet.begin(), out.alphabet.end(), c);
        out.index.push_back(static_cast<std::uint32_t>(it - out.alphabet.begin()));
    }
    return out;
}

// Everything the lattice sweep needs, precomputed per position. The "row"
// string is walked by the outer loop and the "column" string by the inner
// loop; `tail` costs apply to a character once the other string is used up.
struct Lattice {
    std::u32string_view row;
    std::u32string_view col;
    std::vector<Cost> row_indel, row_tail, col_indel, col_tail;
    Indexed row_chars, col_chars;
    std::vector<Cost> sub; // |row alphabet| x |col alphabet| when dense
    bool dense = false;
    bool transposed = false;
    const CostModel* model = nullptr;

    Cost substitute(std::size_t i, std::size_t j) const {
        if (dense) {
            return sub[row_chars.index[i] * col_chars.alphabet.size() + col_chars.index[j]];
        }
        return transposed ? model->replace(col[j], row[i]) : model->replace(row[i], col[j]);
    }
};

Lattice make_lattice(std::u32string_view s1, std::u32string_view s2, const CostModel& model,
                     bool ws_tails) {
    Lattice lat;
    lat.model = &model;
    // Keep the inner dimension short for the rolling rows.
    lat.transposed = s2.size() > s1.size();
    lat.row = lat.transposed ? s2 : s1;
    lat.col = lat.transposed ? s1 : s2;

    const auto fill = [&](std::u32string_view s, bool is_s1, std::vector<Cost>& indel,
                          std::vector<Cost>& tail) {
        indel.resize(s.size());
        tail.resize(s.size());
        for (std::size_t k = 0; k < s.size(); ++k) {
            indel[k] = model.indel(s[k]);
            if (!ws_tails) {
                tail[k] = indel[k];
            } else {
                tail[k] = is_s1 ? model.to_whitespace(s[k]) : model.from_whitespace(s[k]);
            }
        }
    };
    fill(lat.row, !lat.transposed, lat.row_indel, lat.row_tail);
    fill(lat.col, lat.transposed, lat.col_indel, lat.col_tail);

    lat.row_chars = index_string(lat.row);
    lat.col_chars = index_string(lat.col);
    const std::size_t kr = lat.row_chars.alphabet.size();
    const std::size_t kc = lat.col_chars.alphabet.size();
    lat.dense = kr <= kMaxDenseAlphabet && kc <= kMaxDenseAlphabet;
    if (lat.dense) {
        lat.sub.resize(kr * kc);
        for (std::size_t r = 0; r < kr; ++r) {
            for (std::size_t c = 0; c < kc; ++c) {
                const char32_t a = lat.row_chars.alphabet[r];
                const char32_t b = lat.col_chars.alphabet[c];
                lat.sub[r * kc + c] = lat.transposed ? model.replace(b, a) : model.replace(a, b);
            }
        }
    }
    return lat;
}

// Fills the (n+1) x (m+1) lattice two rows at a time. In the last column a
// row character may be consumed at its tail cost, and in the last row a
// column character likewise; with tail == indel this is the classical
// recurrence.
Cost sweep(const Lattice& lat) {
    const std::size_t n = lat.row.size();
    const std::size_t m = lat.col.size();

    std::vector<Cost> prev(m + 1);
    std::vector<Cost> cur(m + 1);
    {
        const std::vector<Cost>& first = n == 0 ? lat.col_tail : lat.col_indel;
        prev[0] = 0;
        for (std::size_t j = 1; j <= m; ++j) {
            prev[j] = prev[j - 1] + first[j - 1];
        }
    }

    for (std::size_t i = 1; i <= n; ++i) {
        const Cost del = lat.row_indel[i - 1];
        const Cost del_tail = lat.row_tail[i - 1];
        const Cost* insert = i == n ? lat.col_tail.data() : lat.col_indel.data();

        cur[0] = prev[0] + (m == 0 ? del_tail : del);
        if (m == 0) {
            std::swap(prev, cur);
            continue;
        }

        const std::size_t last = m;
        if (lat.dense) {
            const std::size_t kc = lat.col_chars.alphabet.size();
            const Cost* sub_row = lat.sub.data() + lat.row_chars.index[i - 1] * kc;
            const std::uint32_t* col_index = lat.col_chars.index.data();
            for (std::size_t j = 1; j < last; ++j) {
                const Cost up = prev[j] + del;
                const Cost left = cur[j - 1] + insert[j - 1];
                const Cost diag = prev[j - 1] + sub_row[col_index[j - 1]];
                cur[j] = std::min({up, left, diag});
            }
        } else {
            for (std::size_t j = 1; j < last; ++j) {
                const Cost up = prev[j] + del;
                const Cost left = cur[j - 1] + insert[j - 1];
                const Cost diag = prev[j - 1] + lat.substitute(i - 1, j - 1);
                cur[j] = std::min({up, left, diag});
            }
        }
        const Cost up = prev[last] + del_tail;
        const Cost left = cur[last - 1] + insert[last - 1];
        const Cost diag = prev[last - 1] + lat.substitute(i - 1, last - 1);
        cur[last] = std::min({up, left, diag});

        std::swap(prev, cur);
    }
    return prev[m];
}

} // namespace

std::string_view to_string(Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::Standard: return "standard";
    case Algorithm::WsAgnostic: return "ws-agnostic";
    case Algorithm::NaiveOracle: return "naive-oracle";
    case Algorithm::RecursiveReference: return "recursive-reference";
    }
    throw std::logic_error("unknown algorithm");
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    if (name == "standard") return Algorithm::Standard;
    if (name == "ws-agnostic") return Algorithm::WsAgnostic;
    if (name == "naive-oracle") return Algorithm::NaiveOracle;
    if (name == "recursive-reference") return Algorithm::RecursiveReference;
    return std::nullopt;
}

Cost levenshtein_standard(std::u32string_view s1, std::u32string_view s2, const CostModel& model,
                          const DistanceLimits& limits) {
    check_cells(s1.size(), s2.size(), limits);
    return sweep(make_lattice(s1, s2, model, false));
}

Cost levenshtein_ws_agnostic(std::u32string_view s1, std::u32string_view s2,
                             const CostModel& model, const DistanceLimits& limits) {
    check_cells(s1.size(), s2.size(), limits);
    return sweep(make_lattice(s1, s2, model, true));
}

Cost ws_agnostic_naive(std::u32string_view s1, std::u32string_view s2, const CostModel& model,
                       const DistanceLimits& limits, std::optional<std::size_t> pad_bound) {
    const std::size_t total = s1.size() + s2.size();
    if (total > limits.naive_max_total) {
        throw SizeLimitError("naive oracle: combined length " + std::to_string(total) +
                             " exceeds the limit of " + std::to_string(limits.naive_max_total));
    }
    const std::size_t pad = pad_bound.value_or(total);
    const char32_t ws = model.whitespace_char();

    // Row k of a classical lattice against s2 + pad spaces holds the distance
    // from that row's prefix to every prefix of the column string, so one
    // lattice per padding of s1 covers every padding of s2.
    std::u32string col(s2);
    col.append(pad, ws);
    const std::size_t m = col.size();

    Cost best = std::numeric_limits<Cost>::max();
    std::vector<Cost> prev(m + 1);
    std::vector<Cost> cur(m + 1);
    for (std::size_t p = 0; p <= pad; ++p) {
        std::u32string row(s1);
        row.append(p, ws);

        prev[0] = 0;
        for (std::size_t j = 1; j <= m; ++j) {
            prev[j] = prev[j - 1] + model.indel(col[j - 1]);
        }
        for (std::size_t i = 1; i <= row.size(); ++i) {
            cur[0] = prev[0] + model.indel(row[i - 1]);
            for (std::size_t j = 1; j <= m; ++j) {
                cur[j] = std::min({prev[j] + model.indel(row[i - 1]),
                                   cur[j - 1] + model.indel(col[j - 1]),
                                   prev[j - 1] + model.replace(row[i - 1], col[j - 1])});
            }
            std::swap(prev, cur);
        }
        for (std::size_t q = 0; q <= pad; ++q) {
            best = std::min(best, prev[s2.size() + q]);
        }
    }
    return best;
}

Cost ws_agnostic_recursive_unit(std::u32string_view s1, std::u32string_view s2,
                                const DistanceLimits& limits) {
    if (s1.size() > limits.recursive_max_length || s2.size() > limits.recursive_max_length) {
        throw SizeLimitError("recursive reference: inputs longer than " +
                             std::to_string(limits.recursive_max_length) + " characters");
    }
    const std::size_t n1 = s1.size();
    const std::size_t n2 = s2.size();
    constexpr Cost kUnknown = std::numeric_limits<Cost>::max();
    std::vector<Cost> memo((n1 + 1) * (n2 + 1), kUnknown);

    // Index n1 (resp. n2) stands for the infinite-whitespace sentinel; the
    // tail of a one-character string is the sentinel, and the tail of the
    // sentinel is itself.
    const auto lev = [&](auto&& self, std::size_t i, std::size_t j) -> Cost {
        Cost& slot = memo[i * (n2 + 1) + j];
        if (slot != kUnknown) {
            return slot;
        }
        const bool a_end = i == n1;
        const bool b_end = j == n2;
        Cost result = 0;
        if (a_end && b_end) {
            result = 0;
        } else if (!a_end && !b_end && s1[i] == s2[j]) {
            result = self(self, i + 1, j + 1);
        } else if (!a_end && b_end && s1[i] == U' ') {
            result = self(self, i + 1, j);
        } else if (a_end && !b_end && s2[j] == U' ') {
            result = self(self, i, j + 1);
        } else {
            // Branches that would recurse on the same pair are dropped: they
            // cannot beat the others under the "1 +".
            const std::size_t ti = a_end ? i : i + 1;
            const std::size_t tj = b_end ? j : j + 1;
            Cost best = self(self, ti, tj);
            if (!b_end) best = std::min(best, self(self, i, tj));
            if (!a_end) best = std::min(best, self(self, ti, j));
            result = 1 + best;
        }
        memo[i * (n2 + 1) + j] = result;
        return result;
    };
    return lev(lev, 0, 0);
}

DistanceResult compute_distance(Algorithm algorithm, std::u32string_view s1,
                                std::u32string_view s2, const CostModel& model,
                                const DistanceLimits& limits) {
    DistanceResult result;
    result.algorithm = algorithm;
    result.len1 = s1.size();
    result.len2 = s2.size();
    switch (algorithm) {
    case Algorithm::Standard:
        result.cost = levenshtein_standard(s1, s2, model, limits);
        break;
    case Algorithm::WsAgnostic:
        result.cost = levenshtein_ws_agnostic(s1, s2, model, limits);
        break;
    case Algorithm::NaiveOracle:
        result.cost = ws_agnostic_naive(s1, s2, model, limits);
        break;
    case Algorithm::RecursiveReference:
        result.cost = ws_agnostic_recursive_unit(s1, s2, limits);
        break;
    }
    return result;
}

Cost levenshtein_standard(std::string_view s1, std::string_view s2, const CostModel& model,
                          const DistanceLimits& limits) {
    return levenshtein_standard(utf8::decode(s1), utf8::decode(s2), model, limits);
}

Cost levenshtein_ws_agnostic(std::string_view s1, std::string_view s2, const CostModel& model,
                             const DistanceLimits& limits) {
    return levenshtein_ws_agnostic(utf8::decode(s1), utf8::decode(s2), model, limits);
}

Cost ws_agnostic_naive(std::string_view s1, std::string_view s2, const CostModel& model,
                       const DistanceLimits& limits, std::optional<std::size_t> pad_bound) {
    return ws_agnostic_naive(utf8::decode(s1), utf8::decode(s2), model, limits, pad_bound);
}

Cost ws_agnostic_recursive_unit(std::string_view s1, std::string_view s2,
                                const DistanceLimits& limits) {
    return ws_agnostic_recursive_unit(utf8::decode(s1), utf8::decode(s2), limits);
}

DistanceResult compute_distance(Algorithm algorithm, std::string_view s1, std::string_view s2,
                                const CostModel& model, const DistanceLimits& limits) {
    return compute_distance(algorithm, utf8::decode(s1), utf8::decode(s2), model, limits);
}

} // namespace wsadist
