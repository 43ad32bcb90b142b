#include "ocrforge/unicode.hpp"

#include <algorithm>
#include <cstdint>

namespace ocrforge {

namespace {

struct CpRange { char32_t lo, hi; };
struct CpPair { char32_t cp, mapped; };
struct Decomp { char32_t cp, first, second; }; // second == 0 -> singleton
struct CpCcc { char32_t cp; std::uint8_t ccc; };
struct Comp { char32_t first, second, composed; };

#include "unicode_tables.inc"

template <std::size_t N>
bool in_ranges(const CpRange (&ranges)[N], char32_t cp) {
    auto it = std::upper_bound(
        std::begin(ranges), std::end(ranges), cp,
        [](char32_t v, const CpRange& r) { return v < r.lo; });
    return it != std::begin(ranges) && cp <= std::prev(it)->hi;
}

const Decomp* find_decomp(char32_t cp) {
    auto it = std::lower_bound(
        std::begin(kDecompMap), std::end(kDecompMap), cp,
        [](const Decomp& d, char32_t v) { return d.cp < v; });
    return (it != std::end(kDecompMap) && it->cp == cp) ? &*it : nullptr;
}

std::uint8_t combining_class(char32_t cp) {
    auto it = std::lower_bound(
        std::begin(kCccMap), std::end(kCccMap), cp,
        [](const CpCcc& d, char32_t v) { return d.cp < v; });
    return (it != std::end(kCccMap) && it->cp == cp) ? it->ccc : 0;
}

char32_t find_composition(char32_t a, char32_t b) {
    auto it = std::lower_bound(
        std::begin(kCompMap), std::end(kCompMap), std::pair{a, b},
        [](const Comp& c, const std::pair<char32_t, char32_t>& v) {
            return c.first != v.first ? c.first < v.first : c.second < v.second;
        });
    return (it != std::end(kCompMap) && it->first == a && it->second == b)
               ? it->composed : 0;
}

// Hangul syllable arithmetic (UAX #15 section 3.12)
constexpr char32_t kSBase = 0xAC00, kLBase = 0x1100, kVBase = 0x1161,
                   kTBase = 0x11A7;
constexpr int kLCount = 19, kVCount = 21, kTCount = 28;
constexpr int kNCount = kVCount * kTCount;
constexpr int kSCount = kLCount * kNCount;

void decompose_into(char32_t cp, std::vector<char32_t>& out) {
    if (cp >= kSBase && cp < kSBase + kSCount) {
        const int idx = static_cast<int>(cp - kSBase);
        out.push_back(kLBase + idx / kNCount);
        out.push_back(kVBase + (idx % kNCount) / kTCount);
        if (idx % kTCount) out.push_back(kTBase + idx % kTCount);
        return;
    }
    if (const Decomp* d = find_decomp(cp)) {
        decompose_into(d->first, out);
        if (d->second) decompose_into(d->second, out);
        return;
    }
    out.push_back(cp);
}

} // namespace

bool is_letter(char32_t cp) { return in_ranges(kLetterRanges, cp); }
bool is_digit(char32_t cp) { return in_ranges(kDigitRanges, cp); }
bool is_alnum(char32_t cp) { return is_letter(cp) || is_digit(cp); }

bool is_cjk_single(char32_t cp) {
    return (cp >= 0x4E00 && cp <= 0x9FFF) ||   // CJK Unified Ideographs
           (cp >= 0x3400 && cp <= 0x4DBF) ||   // CJK Extension A
           (cp >= 0xF900 && cp <= 0xFAFF) ||   // CJK Compatibility
           (cp >= 0x3040 && cp <= 0x309F) ||   // Hiragana
           (cp >= 0x30A0 && cp <= 0x30FF) ||   // Katakana
           (cp >= 0xAC00 && cp <= 0xD7A3);     // Hangul syllables
}

char32_t to_lower(char32_t cp) {
    auto it = std::lower_bound(
        std::begin(kLowerMap), std::end(kLowerMap), cp,
        [](const CpPair& d, char32_t v) { return d.cp < v; });
    return (it != std::end(kLowerMap) && it->cp == cp) ? it->mapped : cp;
}

std::vector<char32_t> nfc(const std::vector<char32_t>& input) {
    // 1. full canonical decomposition
    std::vector<char32_t> buf;
    buf.reserve(input.size() + 8);
    for (char32_t cp : input) decompose_into(cp, buf);

    // 2. canonical ordering of combining marks
    for (std::size_t i = 1; i < buf.size(); ++i) {
        const std::uint8_t ci = combining_class(buf[i]);
        if (ci == 0) continue;
        std::size_t j = i;
        while (j > 0 && combining_class(buf[j - 1]) > ci) {
            std::swap(buf[j - 1], buf[j]);
            --j;
        }
    }

    // 3. canonical composition
    std::vector<char32_t> out;
    out.reserve(buf.size());
    std::ptrdiff_t last_starter = -1;
    std::uint8_t prev_ccc = 0; // ccc of the most recently appended codepoint
    for (char32_t cp : buf) {
        const std::uint8_t ccc = combining_class(cp);
        if (last_starter >= 0) {
            const char32_t starter = out[last_starter];
            const bool follows_starter =
                out.size() == static_cast<std::size_t>(last_starter) + 1;

            // algorithmic Hangul: L+V -> LV, LV+T -> LVT
            if (follows_starter && ccc == 0) {
                if (starter >= kLBase && starter < kLBase + kLCount &&
                    cp >= kVBase && cp < kVBase + kVCount) {
                    out[last_starter] =
                        kSBase + ((starter - kLBase) * kVCount +
                                  (cp - kVBase)) * kTCount;
                    continue;
                }
                if (starter >= kSBase && starter < kSBase + kSCount &&
                    (starter - kSBase) % kTCount == 0 && cp > kTBase &&
                    cp < kTBase + kTCount) {
                    out[last_starter] = starter + (cp - kTBase);
                    continue;
                }
            }

            // C composes with S when nothing between them blocks it
            const bool not_blocked =
                follows_starter || (prev_ccc != 0 && prev_ccc < ccc);
            if (not_blocked) {
                if (const char32_t composed = find_composition(starter, cp)) {
                    out[last_starter] = composed;
                    continue;
                }
            }
        }
        if (ccc == 0) {
            last_starter = static_cast<std::ptrdiff_t>(out.size());
            prev_ccc = 0;
        } else {
            prev_ccc = ccc;
        }
        out.push_back(cp);
    }
    return out;
}

} // namespace ocrforge
