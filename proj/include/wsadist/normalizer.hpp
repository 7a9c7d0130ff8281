#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace wsadist {

// How characters are collapsed to shape classes before comparing lines.
enum class NormalizationMode {
    Simple, // letters -> 'a', digits -> '9'
    Cased,  // lowercase -> 'a', uppercase -> 'A', digits -> '9'
    None,   // identity
};

std::string_view to_string(NormalizationMode mode);
std::optional<NormalizationMode> parse_normalization_mode(std::string_view name);

// Maps one code point. Anything that is not a letter or a digit (whitespace,
// punctuation, control characters) comes back unchanged.
char32_t normalize_char(char32_t c, NormalizationMode mode);

// Length in code points is preserved. The UTF-8 overload passes bytes that
// are not valid UTF-8 through verbatim.
std::u32string normalize_line(std::u32string_view line, NormalizationMode mode);
std::string normalize_line(std::string_view line, NormalizationMode mode);

// Replaces each tab with spaces up to the next multiple of `tab_width`
// columns (one column per code point). `tab_width` must be >= 1.
std::u32string expand_tabs(std::u32string_view line, std::size_t tab_width);

} // namespace wsadist
