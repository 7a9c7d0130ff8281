#pragma once

#include "wsadist/cost_model.hpp"
#include "wsadist/distance.hpp"
#include "wsadist/normalizer.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace wsadist {

// Inclusive, 0-based line range judged to be a single table.
struct TableRegion {
    std::size_t start_line = 0;
    std::size_t end_line = 0;
    // Mean similarity of adjacent rows inside the region, in [0, 1].
    double score = 0.0;

    std::size_t rows() const { return end_line - start_line + 1; }
    bool operator==(const TableRegion&) const = default;
};

struct DetectConfig {
    double threshold = 0.5;
    std::size_t min_rows = 3;
    NormalizationMode mode = NormalizationMode::Cased;
    CostModel model = appendix_model();
    std::size_t tab_width = 8;
    DistanceLimits limits = {};

    // Throws std::invalid_argument when a knob is out of range.
    void validate() const;
};

// Sum of to_whitespace(c) over the line: its distance from a blank line.
Cost whitespace_cost(std::u32string_view line, const CostModel& model);

/// Similarity of two rows, 1 - d / D, where d is the whitespace-agnostic
/// distance and D the larger of the two rows' whitespace_cost (so d <= D).
/// Two blank rows have similarity 1.
double row_similarity(std::u32string_view line1, std::u32string_view line2,
                      const CostModel& model, const DistanceLimits& limits = {});
double row_similarity(std::string_view line1, std::string_view line2, const CostModel& model,
                      const DistanceLimits& limits = {});

// A line is blank when it holds nothing but whitespace.
bool is_blank(std::u32string_view line);

/// Finds maximal runs of consecutive non-blank lines whose adjacent-row
/// similarities all reach config.threshold and that span at least
/// config.min_rows lines. Lines are tab-expanded and normalized first; a
/// trailing carriage return is ignored. Regions come back sorted and
/// disjoint.
std::vector<TableRegion> detect_tables(const std::vector<std::string>& lines,
                                       const DetectConfig& config = {});

} // namespace wsadist
