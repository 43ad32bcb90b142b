#include "ocrforge/manifest.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ocrforge/errors.hpp"

namespace ocrforge {

using ordered_json = nlohmann::ordered_json;

namespace {

const std::set<std::string> kKnownKeys = {
    "id", "image_path", "width", "height", "language_src", "language_tgt",
    "regions", "full_text_src", "full_text_tgt", "degradations",
    "condition_tags", "master_seed", "sample_index"};

ordered_json region_to_json(const RegionRecord& r) {
    ordered_json quad = ordered_json::array();
    for (const Point& p : r.quad.corners) {
        quad.push_back(ordered_json::array({p.x, p.y}));
    }
    ordered_json j;
    j["quad"] = std::move(quad);
    j["text"] = r.text;
    j["line_index"] = r.line_index;
    j["occluded_fraction"] = r.occluded_fraction;
    return j;
}

ordered_json record_to_json(const SampleRecord& rec) {
    ordered_json j;
    j["id"] = rec.id;
    j["image_path"] = rec.image_path;
    j["width"] = rec.width;
    j["height"] = rec.height;
    j["language_src"] = rec.language_src;
    if (rec.language_tgt) j["language_tgt"] = *rec.language_tgt;
    j["regions"] = ordered_json::array();
    for (const RegionRecord& r : rec.regions) {
        j["regions"].push_back(region_to_json(r));
    }
    j["full_text_src"] = rec.full_text_src;
    if (rec.full_text_tgt) j["full_text_tgt"] = *rec.full_text_tgt;
    j["degradations"] = ordered_json::array();
    for (const DegradationRecord& d : rec.degradations) {
        ordered_json dj;
        dj["kind"] = d.kind;
        ordered_json params;
        for (const auto& [k, v] : d.params) params[k] = v;
        dj["params"] = std::move(params);
        dj["seed"] = std::to_string(d.seed);
        j["degradations"].push_back(std::move(dj));
    }
    j["condition_tags"] = rec.condition_tags;
    j["master_seed"] = std::to_string(rec.master_seed);
    j["sample_index"] = rec.sample_index;
    return j;
}

std::string joined_region_text(const SampleRecord& rec) {
    std::vector<const RegionRecord*> by_line;
    by_line.reserve(rec.regions.size());
    for (const RegionRecord& r : rec.regions) by_line.push_back(&r);
    std::sort(by_line.begin(), by_line.end(),
              [](const RegionRecord* a, const RegionRecord* b) {
                  return a->line_index < b->line_index;
              });
    std::string out;
    for (std::size_t i = 0; i < by_line.size(); ++i) {
        if (i) out += '\n';
        out += by_line[i]->text;
    }
    return out;
}

std::uint64_t parse_u64(const ordered_json& v, std::size_t line_no,
                        const char* field) {
    try {
        if (v.is_string()) return std::stoull(v.get<std::string>());
        if (v.is_number_unsigned()) return v.get<std::uint64_t>();
        if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
            return static_cast<std::uint64_t>(v.get<std::int64_t>());
        }
    } catch (...) {
    }
    raise(Errc::invariant_violation, "manifest line " +
                                         std::to_string(line_no) + ": field " +
                                         field + " is not a uint64");
}

SampleRecord record_from_json(const ordered_json& j, std::size_t line_no,
                              std::size_t& unknown_keys) {
    auto violation = [&](const std::string& field) -> void {
        raise(Errc::invariant_violation,
              "manifest line " + std::to_string(line_no) +
                  ": invariant violation in field " + field);
    };

    for (const auto& [key, _] : j.items()) {
        if (!kKnownKeys.count(key)) ++unknown_keys;
    }

    SampleRecord rec;
    try {
        rec.id = j.at("id").get<std::string>();
        rec.image_path = j.at("image_path").get<std::string>();
        rec.width = j.at("width").get<std::uint32_t>();
        rec.height = j.at("height").get<std::uint32_t>();
        rec.language_src = j.at("language_src").get<std::string>();
        if (j.contains("language_tgt")) {
            rec.language_tgt = j.at("language_tgt").get<std::string>();
        }
        for (const auto& rj : j.at("regions")) {
            RegionRecord r;
            const auto& quad = rj.at("quad");
            if (quad.size() != 4) violation("regions.quad");
            for (int i = 0; i < 4; ++i) {
                r.quad.corners[i] = {quad[i][0].get<double>(),
                                     quad[i][1].get<double>()};
            }
            r.text = rj.at("text").get<std::string>();
            r.line_index = rj.at("line_index").get<std::uint32_t>();
            r.occluded_fraction = rj.at("occluded_fraction").get<double>();
            rec.regions.push_back(std::move(r));
        }
        rec.full_text_src = j.at("full_text_src").get<std::string>();
        if (j.contains("full_text_tgt")) {
            rec.full_text_tgt = j.at("full_text_tgt").get<std::string>();
        }
        if (j.contains("degradations")) {
            for (const auto& dj : j.at("degradations")) {
                DegradationRecord d;
                d.kind = dj.at("kind").get<std::string>();
                for (const auto& [k, v] : dj.at("params").items()) {
                    d.params.emplace_back(k, v.get<double>());
                }
                std::sort(d.params.begin(), d.params.end());
                d.seed = parse_u64(dj.at("seed"), line_no, "degradations.seed");
                rec.degradations.push_back(std::move(d));
            }
        }
        if (j.contains("condition_tags")) {
            rec.condition_tags =
                j.at("condition_tags").get<std::vector<std::string>>();
        }
        rec.master_seed = parse_u64(j.at("master_seed"), line_no, "master_seed");
        rec.sample_index = parse_u64(j.at("sample_index"), line_no,
                                     "sample_index");
    } catch (const ordered_json::exception& e) {
        raise(Errc::malformed_line, "manifest line " + std::to_string(line_no) +
                                        ": " + e.what());
    }

    for (const RegionRecord& r : rec.regions) {
        for (const Point& p : r.quad.corners) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
                violation("regions.quad");
            }
        }
    }
    if (joined_region_text(rec) != rec.full_text_src) {
        violation("full_text_src");
    }
    return rec;
}

} // namespace

std::string manifest_to_string(const std::vector<SampleRecord>& records) {
    std::set<std::string> seen;
    std::string out;
    out += ordered_json{{"schema_version", kManifestSchemaVersion}}.dump();
    out += '\n';
    for (const SampleRecord& rec : records) {
        if (!seen.insert(rec.id).second) {
            raise(Errc::duplicate_id, "duplicate record id '" + rec.id + "'");
        }
        out += record_to_json(rec).dump();
        out += '\n';
    }
    return out;
}

void write_manifest(const std::vector<SampleRecord>& records,
                    const std::string& path) {
    const std::string text = manifest_to_string(records);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) raise(Errc::io_failure, "cannot open for write: " + path);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f) raise(Errc::io_failure, "short write: " + path);
}

ManifestReadResult manifest_from_string(const std::string& text) {
    ManifestReadResult out;
    std::set<std::string> seen;
    std::size_t line_no = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        ordered_json j;
        try {
            j = ordered_json::parse(line);
        } catch (const ordered_json::exception&) {
            raise(Errc::malformed_line,
                  "manifest line " + std::to_string(line_no) +
                      ": not valid JSON");
        }
        if (!j.is_object()) {
            raise(Errc::malformed_line,
                  "manifest line " + std::to_string(line_no) +
                      ": expected an object");
        }
        if (j.contains("schema_version")) continue; // header record
        SampleRecord rec =
            record_from_json(j, line_no, out.unknown_key_warnings);
        if (!seen.insert(rec.id).second) {
            raise(Errc::duplicate_id,
                  "manifest line " + std::to_string(line_no) +
                      ": duplicate id '" + rec.id + "'");
        }
        out.records.push_back(std::move(rec));
    }
    return out;
}

ManifestReadResult read_manifest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::io_failure, "cannot open manifest: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return manifest_from_string(ss.str());
}

std::vector<Prediction> predictions_from_string(const std::string& text) {
    std::vector<Prediction> out;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        ordered_json j;
        try {
            j = ordered_json::parse(line);
        } catch (const ordered_json::exception&) {
            raise(Errc::malformed_line,
                  "prediction line " + std::to_string(line_no) +
                      ": not valid JSON");
        }
        if (j.contains("schema_version")) continue;
        try {
            out.push_back({j.at("id").get<std::string>(),
                           j.at("text").get<std::string>()});
        } catch (const ordered_json::exception& e) {
            raise(Errc::malformed_line,
                  "prediction line " + std::to_string(line_no) + ": " +
                      e.what());
        }
    }
    return out;
}

std::vector<Prediction> read_predictions(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::io_failure, "cannot open predictions: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return predictions_from_string(ss.str());
}

} // namespace ocrforge
