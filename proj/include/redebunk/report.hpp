#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "redebunk/analytics.hpp"
#include "redebunk/dedup.hpp"

namespace redebunk::report {

// Fixed 6 decimal places, round half to even.
std::string format_score(double score);

std::string csv_escape(std::string_view field);

void write_links_jsonl(const std::filesystem::path& path,
                       const std::vector<DuplicateLink>& links);
void write_links_csv(const std::filesystem::path& path, const std::vector<DuplicateLink>& links);

// Throws std::runtime_error naming the line on malformed input.
std::vector<DuplicateLink> read_links_jsonl(const std::filesystem::path& path);
void write_clusters_jsonl(const std::filesystem::path& path,
                          const std::vector<ClaimCluster>& clusters);
void write_skipped_jsonl(const std::filesystem::path& path,
                         const std::vector<SkippedPair>& skipped);

struct ReportConfig {
    std::string backend_name = "tfidf-cosine";
    double threshold = 0.8;
    std::size_t k = 50;
    std::size_t top_n = 10;  // row count of the top-N figure tables
};

// Emits every figure-analog data table plus timelines.jsonl and
// summary.json into out_dir. Idempotent: identical inputs produce
// byte-identical trees.
void write_report(const std::filesystem::path& out_dir, const Corpus& corpus,
                  const std::vector<DuplicateLink>& all_links,
                  const std::vector<DuplicateLink>& one_to_one,
                  const std::vector<ClaimCluster>& clusters, const ReportConfig& config);

}  // namespace redebunk::report
