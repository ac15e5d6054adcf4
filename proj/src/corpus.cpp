#include "redebunk/corpus.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "redebunk/digest.hpp"
#include "redebunk/text.hpp"

namespace redebunk {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::optional<std::string> optional_string(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) return std::nullopt;
    return it->get<std::string>();
}

// Trimmed, NFC-normalized entries; empties dropped.
std::optional<std::vector<std::string>> string_array(const json& obj, const char* key,
                                                     bool fold_entries) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::vector<std::string>{};
    if (!it->is_array()) return std::nullopt;
    std::vector<std::string> out;
    for (const auto& v : *it) {
        if (!v.is_string()) return std::nullopt;
        auto entry = std::string(text::trim(v.get<std::string>()));
        if (entry.empty()) continue;
        out.push_back(fold_entries ? text::fold(entry) : text::nfc(entry));
    }
    return out;
}

// Parses one JSON object into a record; on failure returns the reason.
bool present(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it != obj.end() && !it->is_null();
}

std::optional<std::string> record_from_json(const json& obj, DebunkRecord& out) {
    if (!obj.is_object()) return "record is not an object";

    auto claim = optional_string(obj, "claim");
    if (!claim) return present(obj, "claim") ? "invalid claim" : "missing claim";
    out.claim_text = std::string(text::trim(*claim));
    if (out.claim_text.empty()) return "missing claim";

    auto org = optional_string(obj, "org");
    if (!org) return present(obj, "org") ? "invalid org" : "missing org";
    out.organisation = std::string(text::trim(*org));
    if (out.organisation.empty()) return "missing org";

    auto countries = string_array(obj, "countries", /*fold_entries=*/false);
    if (!countries) return "invalid countries";
    if (countries->empty()) return "missing countries";
    out.countries = std::move(*countries);

    if (auto url = optional_string(obj, "url")) {
        out.url = std::string(text::trim(*url));
    } else if (present(obj, "url")) {
        return "invalid url";
    }

    if (auto lang = optional_string(obj, "lang")) {
        out.language = std::string(text::trim(*lang));
        if (!out.language.empty() && !is_valid_language_tag(out.language)) {
            return "invalid lang";
        }
    } else if (present(obj, "lang")) {
        return "invalid lang";
    }

    auto date = optional_string(obj, "date");
    if (!date) return present(obj, "date") ? "invalid debunk_date" : "missing debunk_date";
    auto parsed = parse_date(text::trim(*date));
    if (!parsed) return "invalid debunk_date";
    out.debunk_date = *parsed;

    auto platforms = string_array(obj, "platforms", /*fold_entries=*/true);
    if (!platforms) return "invalid platforms";
    out.platforms = std::move(*platforms);

    if (auto m = optional_string(obj, "modality")) {
        auto parsed_m = parse_modality(text::trim(*m));
        if (!parsed_m) return "invalid modality";
        out.modality = *parsed_m;
    } else if (present(obj, "modality")) {
        return "invalid modality";
    }

    if (auto c = optional_string(obj, "category")) {
        auto parsed_c = parse_category(text::trim(*c));
        if (!parsed_c) return "invalid category";
        out.category = *parsed_c;
    } else if (present(obj, "category")) {
        return "invalid category";
    }

    if (auto id = optional_string(obj, "id")) {
        out.id = std::string(text::trim(*id));
    } else if (present(obj, "id")) {
        return "invalid id";
    }

    return std::nullopt;
}

}  // namespace

ParseResult parse_records(std::istream& in) {
    ParseResult result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (text::trim(line).empty()) continue;
        if (!text::is_valid_utf8(line)) {
            result.issues.push_back({line_no, "invalid UTF-8"});
            continue;
        }
        json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (obj.is_discarded()) {
            result.issues.push_back({line_no, "invalid JSON"});
            continue;
        }
        DebunkRecord rec;
        if (auto reason = record_from_json(obj, rec)) {
            result.issues.push_back({line_no, *reason});
            continue;
        }
        result.records.push_back(std::move(rec));
        result.source_lines.push_back(line_no);
    }
    if (in.bad()) throw std::runtime_error("I/O failure while reading records");
    return result;
}

ParseResult parse_records_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return parse_records(in);
}

std::string serialize_record(const DebunkRecord& r) {
    ordered_json obj;
    if (!r.id.empty()) obj["id"] = r.id;
    obj["claim"] = r.claim_text;
    obj["org"] = r.organisation;
    obj["countries"] = r.countries;
    obj["url"] = r.url;
    if (!r.language.empty()) obj["lang"] = r.language;
    obj["date"] = r.debunk_date.to_string();
    obj["platforms"] = r.platforms;
    if (r.modality) obj["modality"] = to_string(*r.modality);
    if (r.category) obj["category"] = to_string(*r.category);
    return obj.dump();
}

std::string assign_id(std::string_view organisation, std::string_view url,
                      std::string_view claim_text) {
    std::uint64_t h = fnv1a64(organisation);
    h = fnv1a64("\x1f", h);
    h = fnv1a64(url, h);
    h = fnv1a64("\x1f", h);
    h = fnv1a64(claim_text, h);
    return to_hex16(h);
}

Corpus Corpus::build(std::vector<DebunkRecord> records, std::vector<ParseIssue>& issues,
                     const std::vector<std::size_t>* source_lines) {
    Corpus corpus;
    corpus.records_.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto& rec = records[i];
        const std::size_t line = source_lines && i < source_lines->size() ? (*source_lines)[i] : 0;
        if (rec.id.empty()) {
            issues.push_back({line, "record without id"});
            continue;
        }
        if (corpus.by_id_.contains(rec.id)) {
            issues.push_back({line, "duplicate id " + rec.id});
            continue;
        }
        corpus.by_id_.emplace(rec.id, corpus.records_.size());
        corpus.records_.push_back(std::move(rec));
    }
    return corpus;
}

const DebunkRecord* Corpus::find(std::string_view id) const {
    auto it = by_id_.find(std::string(id));
    return it == by_id_.end() ? nullptr : &records_[it->second];
}

}  // namespace redebunk
