#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace docext {

// UTF-8 decoding; invalid byte sequences decode to U+FFFD, one replacement
// per offending byte, so normalization never throws on dirty corpora.
std::vector<char32_t> utf8_decode(const std::string& s);
std::string utf8_encode(const std::vector<char32_t>& cps);

// Canonical composition over the BMP below U+3000 (Latin, Greek, Cyrillic
// precomposed forms). Starters followed by combining marks are composed
// iteratively left to right; no combining-class reordering and no Hangul,
// which do not occur in the corpora this toolkit targets.
std::string normalize_nfc(const std::string& s);

// ASCII-only lowering; multi-byte sequences pass through untouched.
std::string ascii_lower(const std::string& s);

// Normalization + lowering, the token equality key used by the scorer.
std::string fold_token(const std::string& token);

} // namespace docext
