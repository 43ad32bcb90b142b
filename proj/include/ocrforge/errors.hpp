#pragma once

#include <stdexcept>
#include <string>

namespace ocrforge {

// Error codes named after the contract violations they report. `usage`
// errors come from bad invocations, `data` errors from bad inputs on disk,
// `internal` from everything else; the CLI maps these to exit codes.
enum class Errc {
    degenerate_quad,
    point_at_infinity,
    empty_template_set,
    missing_lexicon_for_language,
    insufficient_inputs,
    unsupported_kind,
    layout_overflow,
    unrenderable_at_minimum_scale,
    param_out_of_range,
    degenerate_warp,
    mask_dimension_mismatch,
    no_regions_found,
    fully_masked_image,
    empty_corpus,
    empty_query,
    unknown_id,
    missing_target_text,
    duplicate_prediction_id,
    duplicate_id,
    malformed_line,
    invariant_violation,
    io_failure,
    bad_config,
};

enum class ErrorCategory { usage, data, internal };

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const noexcept { return code_; }

    ErrorCategory category() const noexcept {
        switch (code_) {
        case Errc::empty_query:
        case Errc::bad_config:
            return ErrorCategory::usage;
        case Errc::unknown_id:
        case Errc::missing_target_text:
        case Errc::duplicate_prediction_id:
        case Errc::duplicate_id:
        case Errc::malformed_line:
        case Errc::invariant_violation:
        case Errc::io_failure:
        case Errc::mask_dimension_mismatch:
        case Errc::no_regions_found:
        case Errc::empty_template_set:
        case Errc::missing_lexicon_for_language:
        case Errc::empty_corpus:
            return ErrorCategory::data;
        default:
            return ErrorCategory::internal;
        }
    }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace ocrforge
