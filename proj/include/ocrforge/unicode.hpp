#pragma once

#include <vector>

namespace ocrforge {

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_alnum(char32_t cp);

// CJK ideographs, Hiragana, Katakana, and Hangul syllables: scripts the
// tokenizer emits as single-codepoint tokens.
bool is_cjk_single(char32_t cp);

// Simple (single-codepoint) lowercase mapping.
char32_t to_lower(char32_t cp);

// Canonical composition per UAX #15, including algorithmic Hangul. Tables
// come from src/unicode_tables.inc (generated, committed).
std::vector<char32_t> nfc(const std::vector<char32_t>& input);

} // namespace ocrforge
