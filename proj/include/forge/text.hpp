#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "forge/unicode_tables.hpp"

namespace forge {

enum class Language { EN, ZH };

inline std::string to_string(Language lang) { return lang == Language::EN ? "EN" : "ZH"; }

inline Language language_from_string(std::string_view s) {
    if (s == "EN" || s == "en") return Language::EN;
    if (s == "ZH" || s == "zh") return Language::ZH;
    throw std::invalid_argument("unknown language tag: " + std::string(s));
}

namespace utf8 {

// Decodes the codepoint starting at `i`, advancing `i`. Malformed bytes are
// consumed one at a time and returned as U+FFFD.
inline char32_t decode(std::string_view s, std::size_t& i) {
    unsigned char lead = static_cast<unsigned char>(s[i]);
    if (lead < 0x80) {
        ++i;
        return lead;
    }
    int extra;
    char32_t cp;
    if ((lead >> 5) == 0b110) {
        extra = 1;
        cp = lead & 0x1F;
    } else if ((lead >> 4) == 0b1110) {
        extra = 2;
        cp = lead & 0x0F;
    } else if ((lead >> 3) == 0b11110) {
        extra = 3;
        cp = lead & 0x07;
    } else {
        ++i;
        return 0xFFFD;
    }
    if (i + static_cast<std::size_t>(extra) >= s.size()) {
        ++i;
        return 0xFFFD;
    }
    char32_t out = cp;
    for (int k = 1; k <= extra; ++k) {
        unsigned char c = static_cast<unsigned char>(s[i + k]);
        if ((c >> 6) != 0b10) {
            ++i;
            return 0xFFFD;
        }
        out = (out << 6) | (c & 0x3F);
    }
    i += 1 + extra;
    return out;
}

inline void append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline std::vector<char32_t> decode_all(std::string_view s) {
    std::vector<char32_t> out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) out.push_back(decode(s, i));
    return out;
}

inline std::string encode(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size() * 3);
    for (char32_t cp : cps) append(out, cp);
    return out;
}

inline std::size_t count_codepoints(std::string_view s) {
    std::size_t n = 0, i = 0;
    while (i < s.size()) {
        decode(s, i);
        ++n;
    }
    return n;
}

}  // namespace utf8

namespace detail {

template <std::size_t N>
inline bool in_ranges(const std::uint32_t (&ranges)[N], char32_t cp) {
    // ranges holds closed [first, last] pairs sorted by first
    std::size_t lo = 0, hi = N / 2;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (ranges[2 * mid + 1] < cp) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return lo < N / 2 && ranges[2 * lo] <= cp && cp <= ranges[2 * lo + 1];
}

}  // namespace detail

inline bool is_punct(char32_t cp) { return detail::in_ranges(unicode_tables::kPunctRanges, cp); }
inline bool is_space(char32_t cp) { return detail::in_ranges(unicode_tables::kSpaceRanges, cp); }

inline char32_t to_lower(char32_t cp) {
    const auto& keys = unicode_tables::kLowerKeys;
    auto n = std::size(keys);
    auto it = std::lower_bound(keys, keys + n, static_cast<std::uint32_t>(cp));
    if (it != keys + n && *it == static_cast<std::uint32_t>(cp)) {
        return unicode_tables::kLowerValues[it - keys];
    }
    return cp;
}

// Per-codepoint NFKC compatibility fold (fullwidth forms, ligatures, circled
// digits, ...). Combining sequences across codepoints are left alone; QA
// answer normalization does not depend on them.
inline std::string nfkc_fold(std::string_view s) {
    const auto& keys = unicode_tables::kCompatKeys;
    auto n = std::size(keys);
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        char32_t cp = utf8::decode(s, i);
        auto it = std::lower_bound(keys, keys + n, static_cast<std::uint32_t>(cp));
        if (it != keys + n && *it == static_cast<std::uint32_t>(cp)) {
            std::uint32_t off = unicode_tables::kCompatOffsets[it - keys];
            unsigned char len = unicode_tables::kCompatBlob[off];
            out.append(reinterpret_cast<const char*>(unicode_tables::kCompatBlob + off + 1), len);
        } else {
            utf8::append(out, cp);
        }
    }
    return out;
}

// First `max_chars` Unicode scalar values after replacing newline bytes
// ('\n', '\r') with spaces; shorter texts are returned whole.
inline std::string canonical_prefix(std::string_view text, std::size_t max_chars = 100) {
    std::string out;
    out.reserve(std::min(text.size(), max_chars * 4));
    std::size_t i = 0, taken = 0;
    while (i < text.size() && taken < max_chars) {
        char32_t cp = utf8::decode(text, i);
        if (cp == U'\n' || cp == U'\r') cp = U' ';
        utf8::append(out, cp);
        ++taken;
    }
    return out;
}

}  // namespace forge
