#include "wsadist/normalizer.hpp"

#include "wsadist/utf8.hpp"

#include <cwctype>
#include <locale.h>
#include <stdexcept>

namespace wsadist {

namespace {

// Character classes for non-ASCII input come from the C library's UTF-8
// locale tables. When that locale is missing only ASCII is classified.
class UnicodeClasses {
public:
    UnicodeClasses() : locale_(newlocale(LC_CTYPE_MASK, "C.UTF-8", static_cast<locale_t>(nullptr))) {}
    ~UnicodeClasses() {
        if (locale_ != static_cast<locale_t>(nullptr)) {
            freelocale(locale_);
        }
    }
    UnicodeClasses(const UnicodeClasses&) = delete;
    UnicodeClasses& operator=(const UnicodeClasses&) = delete;

    bool available() const { return locale_ != static_cast<locale_t>(nullptr); }
    bool is_alpha(char32_t c) const { return iswalpha_l(static_cast<wint_t>(c), locale_) != 0; }
    bool is_digit(char32_t c) const { return iswdigit_l(static_cast<wint_t>(c), locale_) != 0; }
    bool is_upper(char32_t c) const { return iswupper_l(static_cast<wint_t>(c), locale_) != 0; }
    bool is_space(char32_t c) const { return iswspace_l(static_cast<wint_t>(c), locale_) != 0; }

private:
    locale_t locale_;
};

const UnicodeClasses& unicode_classes() {
    static const UnicodeClasses classes;
    return classes;
}

enum class CharClass { Lower, Upper, Digit, Other };

CharClass classify(char32_t c) {
    if (c < 0x80) {
        if (c >= U'a' && c <= U'z') return CharClass::Lower;
        if (c >= U'A' && c <= U'Z') return CharClass::Upper;
        if (c >= U'0' && c <= U'9') return CharClass::Digit;
        return CharClass::Other;
    }
    const auto& uc = unicode_classes();
    if (!uc.available() || c > 0x10FFFF || uc.is_space(c)) {
        return CharClass::Other;
    }
    if (uc.is_digit(c)) return CharClass::Digit;
    // Caseless scripts count as lowercase.
    if (uc.is_alpha(c)) return uc.is_upper(c) ? CharClass::Upper : CharClass::Lower;
    return CharClass::Other;
}

} // namespace

std::string_view to_string(NormalizationMode mode) {
    switch (mode) {
    case NormalizationMode::Simple: return "simple";
    case NormalizationMode::Cased: return "cased";
    case NormalizationMode::None: return "none";
    }
    throw std::logic_error("unknown normalization mode");
}

std::optional<NormalizationMode> parse_normalization_mode(std::string_view name) {
    if (name == "simple") return NormalizationMode::Simple;
    if (name == "cased") return NormalizationMode::Cased;
    if (name == "none") return NormalizationMode::None;
    return std::nullopt;
}

char32_t normalize_char(char32_t c, NormalizationMode mode) {
    if (mode == NormalizationMode::None) {
        return c;
    }
    switch (classify(c)) {
    case CharClass::Lower: return U'a';
    case CharClass::Upper: return mode == NormalizationMode::Cased ? U'A' : U'a';
    case CharClass::Digit: return U'9';
    case CharClass::Other: return c;
    }
    return c;
}

std::u32string normalize_line(std::u32string_view line, NormalizationMode mode) {
    std::u32string out(line);
    for (char32_t& c : out) {
        c = normalize_char(c, mode);
    }
    return out;
}

std::string normalize_line(std::string_view line, NormalizationMode mode) {
    if (mode == NormalizationMode::None) {
        return std::string(line);
    }
    return utf8::encode(normalize_line(utf8::decode(line), mode));
}

std::u32string expand_tabs(std::u32string_view line, std::size_t tab_width) {
    if (tab_width == 0) {
        throw std::invalid_argument("tab width must be at least 1");
    }
    std::u32string out;
    out.reserve(line.size());
    for (char32_t c : line) {
        if (c == U'\t') {
            out.append(tab_width - out.size() % tab_width, U' ');
        } else {
            out.push_back(c);
        }
    }
    return out;
}

} // namespace wsadist
