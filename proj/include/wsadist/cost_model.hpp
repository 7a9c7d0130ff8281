#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace wsadist {

// Unitless, non-negative edit cost.
using Cost = std::uint64_t;

// Largest cost accepted for a single model entry. With strings capped at
// 2^20 characters no distance can overflow Cost.
inline constexpr Cost kMaxEntryCost = 1'000'000'000;

/// Insertion/deletion costs per character plus a replacement table, each
/// with a fallback default. Immutable once built; use CostModelBuilder,
/// unit_model(), appendix_model() or load_model() to obtain one.
///
/// Deleting a character costs the same as inserting it. replace(c, c) is 0
/// for every c. When the model is symmetric every replacement entry is
/// stored in both directions.
class CostModel {
public:
    using ReplaceKey = std::pair<char32_t, char32_t>;

    Cost indel(char32_t c) const;
    Cost replace(char32_t from, char32_t to) const;

    // Cost of one character of a string aligned past the end of the other
    // string, i.e. against the imagined whitespace: either drop it or turn
    // it into whitespace. Zero for the whitespace character itself.
    Cost to_whitespace(char32_t c) const;
    // Same, seen from the other side: imagined whitespace becoming `c`.
    Cost from_whitespace(char32_t c) const;

    char32_t whitespace_char() const { return whitespace_; }
    Cost indel_default() const { return indel_default_; }
    Cost replace_default() const { return replace_default_; }
    bool symmetric() const { return symmetric_; }

    const std::map<char32_t, Cost>& indel_entries() const { return indel_; }
    const std::map<ReplaceKey, Cost>& replace_entries() const { return replace_; }

    bool operator==(const CostModel&) const = default;

private:
    friend class CostModelBuilder;
    CostModel() = default;

    Cost indel_default_ = 1;
    Cost replace_default_ = 1;
    char32_t whitespace_ = U' ';
    bool symmetric_ = true;
    std::map<char32_t, Cost> indel_;
    std::map<ReplaceKey, Cost> replace_;
};

/// Accumulates entries and produces a validated CostModel. Every setter
/// throws ValidationError when the value would break a model invariant.
class CostModelBuilder {
public:
    CostModelBuilder& indel_default(Cost cost);
    CostModelBuilder& replace_default(Cost cost);
    CostModelBuilder& whitespace_char(char32_t c);
    // Must be called before any replace() entry is added.
    CostModelBuilder& symmetric(bool value);

    CostModelBuilder& indel(char32_t c, Cost cost);
    // In a symmetric model the mirrored entry is set as well; an existing
    // mirrored entry with a different cost is rejected.
    CostModelBuilder& replace(char32_t from, char32_t to, Cost cost);

    CostModel build() const { return model_; }

private:
    CostModel model_;
};

// Cost 1 for every insertion, deletion and replacement.
CostModel unit_model();

// The replacement matrix over {a, A, 9, (, ), ',', $, space} used for the
// normalized-table examples, 999 for every other pair, unit indel.
CostModel appendix_model();

// Parses a JSON cost-model document. Throws ParseError on malformed input and
// ValidationError (naming the offending key) on invariant violations.
CostModel load_model(std::string_view json_text);
CostModel load_model_file(const std::filesystem::path& path);

// Emits a document that load_model() maps back to an equal model.
std::string serialize(const CostModel& model);

} // namespace wsadist
