#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocrforge/rng.hpp"

namespace ocrforge {

bool valid_language_code(std::string_view code);

struct LexiconEntry {
    std::string key;                              // canonical source phrase
    std::map<std::string, std::string> translations; // language -> phrase
};

// Parallel lexicon file: UTF-8 TSV, column 1 the source key, remaining
// columns "lang=translation". '#' lines are comments.
class Lexicon {
public:
    Lexicon() = default;
    explicit Lexicon(std::vector<LexiconEntry> entries);

    static Lexicon parse(std::string_view text);
    static Lexicon load(const std::string& path);

    const std::vector<LexiconEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    std::optional<std::string> translate(std::string_view key,
                                         std::string_view lang) const;

private:
    std::vector<LexiconEntry> entries_;
    std::map<std::string, std::size_t, std::less<>> by_key_;
};

struct SlotDecl {
    enum class Kind { word, choice, price, integer, total };
    Kind kind = Kind::word;
    std::vector<std::string> choices; // for Kind::choice
    long long lo = 0, hi = 0;         // cents for price, value for integer
};

struct LineTemplate {
    std::string pattern;          // literal text with {slot} references
    std::uint32_t min_repeat = 1; // instances drawn uniformly in [min, max]
    std::uint32_t max_repeat = 1;
};

struct TextTemplate {
    std::string id;
    std::string language;
    std::vector<LineTemplate> lines;
    std::map<std::string, SlotDecl> slots;
};

// Template file: line-oriented UTF-8.
//   template <id> <lang>
//     slot <name> word               one lexicon key, uniform
//     slot <name> choice A|B|C       one listed literal, uniform
//     slot <name> price <lo> <hi>    money, integer cents, "d.dd" format
//     slot <name> int <lo> <hi>      integer
//     slot <name> total              sum of all price draws in the sample
//     line <pattern>
//     repeat <min> <max> <pattern>
//   end
class TemplateSet {
public:
    TemplateSet() = default;
    explicit TemplateSet(std::vector<TextTemplate> templates);

    static TemplateSet parse(std::string_view text);
    static TemplateSet load(const std::string& path);
    // Compiled-in receipt/menu/sign templates used when no file is given.
    static const TemplateSet& builtin();

    const std::vector<TextTemplate>& templates() const { return templates_; }
    std::vector<const TextTemplate*> for_language(std::string_view lang) const;
    bool empty() const { return templates_.empty(); }

private:
    std::vector<TextTemplate> templates_;
};

struct TextSample {
    std::vector<std::string> lines;
    std::string language;
    std::string template_id;
    // (line_index, value) for every generated price/quantity/total
    std::vector<std::pair<std::uint32_t, double>> numeric_fields;
    // per-line source language; filled by mix_languages, else all == language
    std::vector<std::string> line_languages;
};

struct ParallelTextPair {
    TextSample src;
    TextSample tgt;
    double coverage = 0.0;            // fraction of lines with lexicon backing
    std::vector<bool> line_translated; // per-line provenance flags
};

// Draws one template uniformly for `lang` and instantiates it. Word slots
// draw from the lexicon keys; totals equal the sum of the sample's price
// draws exactly (integer cents).
TextSample sample_source_text(const TemplateSet& templates,
                              std::string_view lang, const Lexicon& lexicon,
                              Rng& rng);

// Longest-match-first, left-to-right replacement of lexicon keys at word
// boundaries. Numerals and unmatched tokens pass through unchanged; missing
// entries degrade coverage, never fail.
ParallelTextPair pair_translation(const TextSample& src, const Lexicon& lexicon,
                                  std::string_view tgt_lang);

// Interleaves lines of >=2 samples with distinct languages, preserving each
// input's internal order. Output language is "mixed".
TextSample mix_languages(const std::vector<TextSample>& samples, Rng& rng);

// Compiled-in parallel lexicon (en -> fr/de/es/ja) used when no file is given.
const Lexicon& builtin_lexicon();

} // namespace ocrforge
