#include "docext/text.hpp"

#include <algorithm>
#include <cstddef>

namespace docext {

namespace {

struct CompositionPair {
    char32_t starter;
    char32_t combining;
    char32_t composed;
};

#include "nfc_pairs.inc"

constexpr std::size_t kNumPairs = sizeof(kCompositionPairs) / sizeof(kCompositionPairs[0]);

char32_t compose_pair(char32_t a, char32_t b) {
    const CompositionPair* begin = kCompositionPairs;
    const CompositionPair* end = kCompositionPairs + kNumPairs;
    auto it = std::lower_bound(begin, end, a, [](const CompositionPair& p, char32_t key) {
        return p.starter < key;
    });
    for (; it != end && it->starter == a; ++it)
        if (it->combining == b) return it->composed;
    return 0;
}

} // namespace

std::vector<char32_t> utf8_decode(const std::string& s) {
    std::vector<char32_t> out;
    out.reserve(s.size());
    std::size_t i = 0;
    const auto n = s.size();
    while (i < n) {
        unsigned char b0 = static_cast<unsigned char>(s[i]);
        char32_t cp = 0xFFFD;
        std::size_t len = 1;
        if (b0 < 0x80) {
            cp = b0;
        } else if ((b0 & 0xE0) == 0xC0 && i + 1 < n && (s[i + 1] & 0xC0) == 0x80) {
            cp = (char32_t(b0 & 0x1F) << 6) | (s[i + 1] & 0x3F);
            len = 2;
            if (cp < 0x80) cp = 0xFFFD;
        } else if ((b0 & 0xF0) == 0xE0 && i + 2 < n && (s[i + 1] & 0xC0) == 0x80 &&
                   (s[i + 2] & 0xC0) == 0x80) {
            cp = (char32_t(b0 & 0x0F) << 12) | (char32_t(s[i + 1] & 0x3F) << 6) |
                 (s[i + 2] & 0x3F);
            len = 3;
            if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
        } else if ((b0 & 0xF8) == 0xF0 && i + 3 < n && (s[i + 1] & 0xC0) == 0x80 &&
                   (s[i + 2] & 0xC0) == 0x80 && (s[i + 3] & 0xC0) == 0x80) {
            cp = (char32_t(b0 & 0x07) << 18) | (char32_t(s[i + 1] & 0x3F) << 12) |
                 (char32_t(s[i + 2] & 0x3F) << 6) | (s[i + 3] & 0x3F);
            len = 4;
            if (cp < 0x10000 || cp > 0x10FFFF) cp = 0xFFFD;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string utf8_encode(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) {
        if (cp < 0x80) {
            out += char(cp);
        } else if (cp < 0x800) {
            out += char(0xC0 | (cp >> 6));
            out += char(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            out += char(0xE0 | (cp >> 12));
            out += char(0x80 | ((cp >> 6) & 0x3F));
            out += char(0x80 | (cp & 0x3F));
        } else {
            out += char(0xF0 | (cp >> 18));
            out += char(0x80 | ((cp >> 12) & 0x3F));
            out += char(0x80 | ((cp >> 6) & 0x3F));
            out += char(0x80 | (cp & 0x3F));
        }
    }
    return out;
}

std::string normalize_nfc(const std::string& s) {
    // Fast path: pure ASCII never changes.
    bool ascii = true;
    for (char c : s)
        if (static_cast<unsigned char>(c) >= 0x80) {
            ascii = false;
            break;
        }
    if (ascii) return s;

    std::vector<char32_t> cps = utf8_decode(s);
    std::vector<char32_t> out;
    out.reserve(cps.size());
    for (char32_t cp : cps) {
        if (!out.empty()) {
            if (char32_t composed = compose_pair(out.back(), cp)) {
                out.back() = composed;
                continue;
            }
        }
        out.push_back(cp);
    }
    return utf8_encode(out);
}

std::string ascii_lower(const std::string& s) {
    std::string out = s;
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = char(c - 'A' + 'a');
    return out;
}

std::string fold_token(const std::string& token) {
    return ascii_lower(normalize_nfc(token));
}

} // namespace docext
