#pragma once

#include <string>
#include <string_view>

namespace wsadist::utf8 {

// Decodes UTF-8 into code points. Bytes that are not part of a valid sequence
// are mapped to U+DC80..U+DCFF (one per byte) so that encode(decode(s)) == s
// for arbitrary input.
std::u32string decode(std::string_view bytes);

std::string encode(std::u32string_view code_points);

// Appends the encoding of one code point, honouring the escape range above.
void append(std::string& out, char32_t cp);

// True when `s` is exactly one valid code point, which is stored in `out`.
bool single_code_point(std::string_view s, char32_t& out);

} // namespace wsadist::utf8
