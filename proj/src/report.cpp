#include "redebunk/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace redebunk::report {

namespace {

using nlohmann::ordered_json;

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

std::string json_string(std::string_view s) { return ordered_json(s).dump(); }

std::string link_line(const DuplicateLink& link) {
    std::string out = "{\"query_id\":" + json_string(link.query_id);
    out += ",\"duplicate_id\":" + json_string(link.duplicate_id);
    out += ",\"score\":" + format_score(link.relevance_score);
    out += ",\"day_gap\":" + std::to_string(link.day_gap) + "}";
    return out;
}

}  // namespace

std::string format_score(double score) {
    // nearbyint under FE_TONEAREST is round half to even
    const auto scaled = static_cast<long long>(std::nearbyint(score * 1e6));
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld.%06lld", scaled / 1000000, scaled % 1000000);
    return buf;
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

void write_links_jsonl(const std::filesystem::path& path,
                       const std::vector<DuplicateLink>& links) {
    auto out = open_out(path);
    for (const auto& link : links) out << link_line(link) << '\n';
}

void write_links_csv(const std::filesystem::path& path, const std::vector<DuplicateLink>& links) {
    auto out = open_out(path);
    out << "query_id,duplicate_id,score,day_gap\n";
    for (const auto& link : links) {
        out << csv_escape(link.query_id) << ',' << csv_escape(link.duplicate_id) << ','
            << format_score(link.relevance_score) << ',' << link.day_gap << '\n';
    }
}

std::vector<DuplicateLink> read_links_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<DuplicateLink> links;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto obj = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (obj.is_discarded() || !obj.is_object() || !obj.contains("query_id") ||
            !obj.contains("duplicate_id") || !obj.contains("score") || !obj.contains("day_gap") ||
            !obj["query_id"].is_string() || !obj["duplicate_id"].is_string() ||
            !obj["score"].is_number() || !obj["day_gap"].is_number_integer()) {
            throw std::runtime_error(path.string() + " line " + std::to_string(line_no) +
                                     ": malformed link record");
        }
        DuplicateLink link;
        link.query_id = obj["query_id"].get<std::string>();
        link.duplicate_id = obj["duplicate_id"].get<std::string>();
        link.relevance_score = obj["score"].get<double>();
        link.day_gap = obj["day_gap"].get<std::int64_t>();
        links.push_back(std::move(link));
    }
    return links;
}

void write_clusters_jsonl(const std::filesystem::path& path,
                          const std::vector<ClaimCluster>& clusters) {
    auto out = open_out(path);
    for (const auto& c : clusters) {
        ordered_json obj;
        obj["cluster_id"] = c.cluster_id;
        obj["size"] = c.member_ids.size();
        obj["earliest_date"] = c.earliest_date.to_string();
        obj["members"] = c.member_ids;
        obj["languages"] = c.languages;
        obj["countries"] = c.countries;
        out << obj.dump() << '\n';
    }
}

void write_skipped_jsonl(const std::filesystem::path& path,
                         const std::vector<SkippedPair>& skipped) {
    auto out = open_out(path);
    for (const auto& s : skipped) {
        ordered_json obj;
        obj["query_id"] = s.query_id;
        obj["candidate_id"] = s.candidate_id;
        obj["reason"] = s.reason;
        out << obj.dump() << '\n';
    }
}

namespace {

void write_count_proportion_csv(const std::filesystem::path& path, const char* key_header,
                                const std::vector<std::pair<std::string, std::uint64_t>>& rows,
                                std::uint64_t denominator) {
    auto out = open_out(path);
    out << key_header << ",count,proportion\n";
    for (const auto& [key, count] : rows) {
        const double p =
            denominator == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(denominator);
        out << csv_escape(key) << ',' << count << ',' << format_score(p) << '\n';
    }
}

void write_transition_csv(const std::filesystem::path& path, const char* to_header,
                          const char* from_header, const TransitionTable& table,
                          std::size_t top) {
    auto out = open_out(path);
    out << to_header << ',' << from_header << ",count\n";
    for (const auto& [pair, count] : top_n(table, top)) {
        out << csv_escape(pair.first) << ',' << csv_escape(pair.second) << ',' << count << '\n';
    }
}

}  // namespace

void write_report(const std::filesystem::path& out_dir, const Corpus& corpus,
                  const std::vector<DuplicateLink>& all_links,
                  const std::vector<DuplicateLink>& one_to_one,
                  const std::vector<ClaimCluster>& clusters, const ReportConfig& config) {
    std::filesystem::create_directories(out_dir);

    const std::uint64_t query_count = one_to_one.size();

    write_count_proportion_csv(out_dir / "fig1a_countries.csv", "country",
                               top_n(query_country_counts(corpus, one_to_one), config.top_n),
                               query_count);
    write_count_proportion_csv(out_dir / "fig1b_orgs.csv", "organisation",
                               top_n(query_org_counts(corpus, one_to_one), config.top_n),
                               query_count);

    {
        const GapHistogram hist = gap_histogram(one_to_one);
        auto out = open_out(out_dir / "fig2_gap_histogram.csv");
        out << "bin,gap_min_days,gap_max_days,count\n";
        for (std::size_t i = 0; i < hist.bins.size(); ++i) {
            out << (i + 1) << ',' << (i * hist.bin_width_days + 1) << ','
                << ((i + 1) * hist.bin_width_days) << ',' << hist.bins[i] << '\n';
        }
    }

    const CountryTransitions countries = country_transitions(corpus, one_to_one);
    write_transition_csv(out_dir / "fig3a_same_country.csv", "to_country", "from_country",
                         countries.same, config.top_n);
    write_transition_csv(out_dir / "fig3b_diff_country.csv", "to_country", "from_country",
                         countries.diff, config.top_n);

    const TransitionTable platforms = platform_transitions(corpus, one_to_one);
    write_transition_csv(out_dir / "fig4a_platforms.csv", "to_platform", "from_platform",
                         platforms, config.top_n);
    const TransitionTable modalities = modality_transitions(corpus, one_to_one);
    write_transition_csv(out_dir / "fig4b_modalities.csv", "to_modality", "from_modality",
                         modalities, config.top_n);
    const TransitionTable languages = language_pairs(corpus, one_to_one);
    write_transition_csv(out_dir / "fig5_languages.csv", "to_lang", "from_lang", languages,
                         config.top_n);

    {
        auto out = open_out(out_dir / "fig6a_categories.csv");
        out << "category,count,proportion\n";
        std::vector<std::pair<std::string, std::uint64_t>> rows;
        for (const auto& [cat, stat] : category_distribution(corpus, one_to_one)) {
            rows.emplace_back(std::string(to_string(cat)), stat.count);
        }
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
        for (const auto& [label, count] : rows) {
            const double p = query_count == 0
                                 ? 0.0
                                 : static_cast<double>(count) / static_cast<double>(query_count);
            out << label << ',' << count << ',' << format_score(p) << '\n';
        }
    }

    {
        auto out = open_out(out_dir / "fig6b_category_gaps.csv");
        out << "category,day_gap\n";
        for (const auto& [cat, gap] : category_gap_scatter(corpus, one_to_one)) {
            out << to_string(cat) << ',' << gap << '\n';
        }
    }

    {
        auto out = open_out(out_dir / "timelines.jsonl");
        for (const auto& c : clusters) {
            ordered_json obj;
            obj["cluster_id"] = c.cluster_id;
            obj["size"] = c.member_ids.size();
            obj["claim"] = corpus.find(c.member_ids.front())->claim_text;
            obj["earliest_date"] = c.earliest_date.to_string();
            ordered_json events = ordered_json::array();
            for (const auto& ev : timeline(c, corpus)) {
                ordered_json e;
                e["date"] = ev.date.to_string();
                e["org"] = ev.organisation;
                e["lang"] = ev.language;
                e["countries"] = ev.countries;
                e["platforms"] = ev.platforms;
                e["modality"] = to_string(ev.modality);
                events.push_back(std::move(e));
            }
            obj["events"] = std::move(events);
            out << obj.dump() << '\n';
        }
    }

    {
        const CrosslingualGap gap = crosslingual_gap(corpus, all_links);
        ordered_json summary;
        summary["total_debunks"] = corpus.size();
        summary["duplicate_query_count"] = query_count;
        summary["duplicate_fraction"] =
            corpus.size() == 0
                ? 0.0
                : static_cast<double>(query_count) / static_cast<double>(corpus.size());
        summary["crosslingual_gap_count"] = gap.count;
        summary["crosslingual_gap_query_ids"] = gap.query_ids;
        summary["proportion_denominator"] =
            "distinct query claim debunks (representative country = first listed)";
        ordered_json undefined;
        undefined["country"] = countries.undefined;
        undefined["platform"] = platforms.undefined;
        undefined["modality"] = modalities.undefined;
        undefined["language"] = languages.undefined;
        summary["undefined_tallies"] = std::move(undefined);
        summary["backend"] = config.backend_name;
        summary["threshold"] = config.threshold;
        summary["k"] = config.k;
        auto out = open_out(out_dir / "summary.json");
        out << summary.dump(2) << '\n';
    }
}

}  // namespace redebunk::report
