#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocrforge/geometry.hpp"
#include "ocrforge/rng.hpp"

namespace ocrforge {

inline constexpr int kManifestSchemaVersion = 1;

struct RegionRecord {
    Quad quad; // TL, TR, BR, BL
    std::string text;
    std::uint32_t line_index = 0;
    double occluded_fraction = 0.0;
};

struct DegradationRecord {
    std::string kind;
    std::vector<std::pair<std::string, double>> params; // sorted by key
    std::uint64_t seed = 0;
};

// One manifest row: a draw from the joint (image, source text, target text)
// plus its degradation provenance.
struct SampleRecord {
    std::string id; // zero-padded decimal index, unique per manifest
    std::string image_path; // relative to the manifest's directory
    std::uint32_t width = 0, height = 0;
    std::string language_src;
    std::optional<std::string> language_tgt;
    std::vector<RegionRecord> regions;
    std::string full_text_src; // region texts joined by "\n" in line order
    std::optional<std::string> full_text_tgt;
    std::vector<DegradationRecord> degradations;
    std::vector<std::string> condition_tags;
    std::uint64_t master_seed = 0;
    std::uint64_t sample_index = 0;
};

// Per-sample seed stream: SplitMix64 mix of master XOR (index * golden).
// Permanent API; golden-file tested.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64_mix(master ^ (index * kGolden64));
}

// UTF-8 JSON-lines with a {"schema_version":1} header record. Keys are
// written in a fixed order and floats with shortest round-trip precision,
// so equal records always produce identical bytes.
void write_manifest(const std::vector<SampleRecord>& records,
                    const std::string& path);
std::string manifest_to_string(const std::vector<SampleRecord>& records);

struct ManifestReadResult {
    std::vector<SampleRecord> records;
    std::size_t unknown_key_warnings = 0;
};

ManifestReadResult read_manifest(const std::string& path);
ManifestReadResult manifest_from_string(const std::string& text);

struct Prediction {
    std::string id;
    std::string text;
};

// Prediction file: JSON-lines, one {"id":..., "text":...} object per line.
std::vector<Prediction> read_predictions(const std::string& path);
std::vector<Prediction> predictions_from_string(const std::string& text);

} // namespace ocrforge
