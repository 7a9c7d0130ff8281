#pragma once

#include "wsadist/cost_model.hpp"

#include <cstddef>
#include <optional>
#include <string_view>

namespace wsadist {

// Size guards. Exceeding any of them raises SizeLimitError.
struct DistanceLimits {
    // Upper bound on |s1| * |s2| for the dynamic-programming routines.
    std::size_t max_cells = std::size_t{1} << 26;
    // Upper bound on |s1| + |s2| for the padded-enumeration oracle.
    std::size_t naive_max_total = 512;
    // Upper bound on each length for the memoized recurrence.
    std::size_t recursive_max_length = 64;
};

enum class Algorithm { Standard, WsAgnostic, NaiveOracle, RecursiveReference };

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct DistanceResult {
    Cost cost = 0;
    Algorithm algorithm = Algorithm::WsAgnostic;
    std::size_t len1 = 0;
    std::size_t len2 = 0;

    bool operator==(const DistanceResult&) const = default;
};

/// Classical weighted Levenshtein distance: replacing s1[i] by s2[j] costs
/// model.replace(s1[i], s2[j]), inserting or deleting c costs model.indel(c).
/// O(|s1|*|s2|) time, O(min(|s1|, |s2|)) space.
Cost levenshtein_standard(std::u32string_view s1, std::u32string_view s2,
                          const CostModel& model, const DistanceLimits& limits = {});

/// Edit distance where both strings are read as if followed by an unbounded
/// run of model.whitespace_char(). Once one string is exhausted, each
/// remaining character c of the other costs to_whitespace(c) (or
/// from_whitespace(c) when it belongs to s2), so whitespace past the end is
/// free and "abc   " is at distance 0 from "abc".
///
/// Equal to the minimum of levenshtein_standard over every pair of
/// whitespace paddings of the two inputs, computed in a single
/// O(|s1|*|s2|) pass with two rolling rows.
Cost levenshtein_ws_agnostic(std::u32string_view s1, std::u32string_view s2,
                             const CostModel& model, const DistanceLimits& limits = {});

/// Reference for levenshtein_ws_agnostic: explicitly pads s1 with p and s2
/// with q whitespace characters and minimises the classical distance over
/// p, q in [0, pad_bound]. pad_bound defaults to |s1| + |s2|. Cubic time;
/// meant for testing only and guarded by limits.naive_max_total.
Cost ws_agnostic_naive(std::u32string_view s1, std::u32string_view s2, const CostModel& model,
                       const DistanceLimits& limits = {},
                       std::optional<std::size_t> pad_bound = std::nullopt);

/// Reference for levenshtein_ws_agnostic under unit costs: memoized
/// head/tail recursion over strings terminated by an infinite-whitespace
/// sentinel, with the space character as whitespace. An empty string is
/// already at the sentinel. Testing only.
Cost ws_agnostic_recursive_unit(std::u32string_view s1, std::u32string_view s2,
                                const DistanceLimits& limits = {});

// Dispatches to one of the routines above. RecursiveReference ignores the
// model and always uses unit costs.
DistanceResult compute_distance(Algorithm algorithm, std::u32string_view s1,
                                std::u32string_view s2, const CostModel& model,
                                const DistanceLimits& limits = {});

// UTF-8 conveniences; inputs are decoded to code points first.
Cost levenshtein_standard(std::string_view s1, std::string_view s2, const CostModel& model,
                          const DistanceLimits& limits = {});
Cost levenshtein_ws_agnostic(std::string_view s1, std::string_view s2, const CostModel& model,
                             const DistanceLimits& limits = {});
Cost ws_agnostic_naive(std::string_view s1, std::string_view s2, const CostModel& model,
                       const DistanceLimits& limits = {},
                       std::optional<std::size_t> pad_bound = std::nullopt);
Cost ws_agnostic_recursive_unit(std::string_view s1, std::string_view s2,
                                const DistanceLimits& limits = {});
DistanceResult compute_distance(Algorithm algorithm, std::string_view s1, std::string_view s2,
                                const CostModel& model, const DistanceLimits& limits = {});

} // namespace wsadist
