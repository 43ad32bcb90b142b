#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ocrforge/manifest.hpp"

namespace ocrforge {

struct TokenBag {
    std::vector<std::string> tokens;       // normalized, in reading order
    std::map<std::string, std::size_t> counts;

    static TokenBag from_tokens(std::vector<std::string> tokens);
    std::size_t size() const { return tokens.size(); }
    bool empty() const { return tokens.empty(); }
};

// NFC-normalize, case-fold, then split. A codepoint stays token-internal iff
// it is a letter, a digit, or '.'/','/':'/ with digits on both sides. CJK
// ideographs, kana, and Hangul syllables become single-codepoint tokens.
// The lang hint is accepted for interface stability; the rule itself is
// language-independent.
TokenBag tokenize(std::string_view text, std::string_view lang_hint = "");

// Clipped multiset matches: sum over w of min(hyp.count(w), ref.count(w)).
std::size_t clipped_matches(const TokenBag& hyp, const TokenBag& ref);

// 100 * clipped / |ref|. Empty ref scores 100 (nothing to recover).
double ocr_completeness(const TokenBag& hyp, const TokenBag& ref);

// 100 * (|hyp| - clipped) / |hyp|. Empty hyp scores 0.
double hallucination_rate(const TokenBag& hyp, const TokenBag& ref);

// Brevity-penalized clipped unigram precision in [0,1]. Empty hyp scores 0.
double bleu1(const TokenBag& hyp, const TokenBag& ref);

// Corpus-level BLEU-1: clipped counts and lengths aggregate across rows
// before the precision and brevity penalty apply.
double corpus_bleu1(const std::vector<std::pair<TokenBag, TokenBag>>& rows);

struct ScoreRow {
    std::string id;
    double completeness = 0.0;   // [0,100]
    double hallucination = 0.0;  // [0,100]
    double bleu1 = 0.0;          // [0,1]
    std::vector<std::string> condition_tags;
};

struct ConditionStats {
    std::string tag; // "overall" for the whole-corpus row
    std::size_t samples = 0;
    double completeness_mean = 0.0;
    double hallucination_mean = 0.0;
    double bleu1_corpus = 0.0; // x100 in reports
};

struct EvalReport {
    std::string mode; // "ocr" or "translation"
    std::vector<ScoreRow> rows;
    std::vector<ConditionStats> conditions; // manifest-order tags
    ConditionStats overall;
};

enum class EvalMode { ocr, translation };

// Scores predictions against manifest ground truth and aggregates per
// condition tag. Rows are processed in id-sorted order so aggregation is
// order-independent.
EvalReport evaluate(const std::vector<SampleRecord>& records,
                    const std::vector<Prediction>& predictions, EvalMode mode);

EvalReport evaluate_files(const std::string& prediction_path,
                          const std::string& manifest_path, EvalMode mode);

// Aligned plain-text table, one row per condition plus overall.
std::string report_to_text(const EvalReport& report);
// Machine-readable JSON document.
std::string report_to_json(const EvalReport& report);

// The fixed five-bullet visual reasoning preamble plus the query. Byte-stable
// across runs.
std::string build_cot_prompt(std::string_view query);

} // namespace ocrforge
