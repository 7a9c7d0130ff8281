#include "wsadist/table_detect.hpp"

#include "wsadist/utf8.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wsadist {

void DetectConfig::validate() const {
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw std::invalid_argument("threshold must lie in [0, 1]");
    }
    if (min_rows < 2) {
        throw std::invalid_argument("min_rows must be at least 2");
    }
    if (tab_width < 1) {
        throw std::invalid_argument("tab_width must be at least 1");
    }
}

Cost whitespace_cost(std::u32string_view line, const CostModel& model) {
    Cost total = 0;
    for (char32_t c : line) {
        total += model.to_whitespace(c);
    }
    return total;
}

double row_similarity(std::u32string_view line1, std::u32string_view line2,
                      const CostModel& model, const DistanceLimits& limits) {
    // line2 sits on the column side of the lattice, so against imagined
    // whitespace its characters cost from_whitespace; measure it that way.
    Cost scale2 = 0;
    for (char32_t c : line2) {
        scale2 += model.from_whitespace(c);
    }
    const Cost scale = std::max(whitespace_cost(line1, model), scale2);
    if (scale == 0) {
        return 1.0;
    }
    const Cost d = levenshtein_ws_agnostic(line1, line2, model, limits);
    return 1.0 - static_cast<double>(std::min(d, scale)) / static_cast<double>(scale);
}

double row_similarity(std::string_view line1, std::string_view line2, const CostModel& model,
                      const DistanceLimits& limits) {
    return row_similarity(utf8::decode(line1), utf8::decode(line2), model, limits);
}

bool is_blank(std::u32string_view line) {
    return std::all_of(line.begin(), line.end(), [](char32_t c) {
        return c == U' ' || c == U'\t' || c == U'\r' || c == U'\v' || c == U'\f';
    });
}

std::vector<TableRegion> detect_tables(const std::vector<std::string>& lines,
                                       const DetectConfig& config) {
    config.validate();

    std::vector<std::u32string> rows;
    rows.reserve(lines.size());
    for (std::string_view line : lines) {
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        rows.push_back(normalize_line(expand_tabs(utf8::decode(line), config.tab_width), config.mode));
    }

    std::vector<TableRegion> regions;
    std::size_t start = 0;
    double similarity_sum = 0.0;
    const auto close_run = [&](std::size_t end) {
        if (end + 1 - start >= config.min_rows) {
            regions.push_back({start, end, similarity_sum / static_cast<double>(end - start)});
        }
    };

    bool in_run = false;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (is_blank(rows[k])) {
            if (in_run) {
                close_run(k - 1);
                in_run = false;
            }
            continue;
        }
        if (!in_run) {
            in_run = true;
            start = k;
            similarity_sum = 0.0;
            continue;
        }
        const double sim = row_similarity(rows[k - 1], rows[k], config.model, config.limits);
        if (sim >= config.threshold) {
            similarity_sum += sim;
        } else {
            close_run(k - 1);
            start = k;
            similarity_sum = 0.0;
        }
    }
    if (in_run) {
        close_run(rows.size() - 1);
    }
    return regions;
}

} // namespace wsadist
