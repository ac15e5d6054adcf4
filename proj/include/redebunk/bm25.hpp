#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "redebunk/normalize.hpp"

namespace redebunk {

struct Bm25Params {
    double k1 = 1.5;
    double b = 0.75;
};

struct Posting {
    std::uint32_t doc = 0;  // ordinal into doc_ids(), strictly increasing per term
    std::uint32_t tf = 0;

    bool operator==(const Posting&) const = default;
};

struct SearchHit {
    std::string doc_id;
    double score = 0.0;
};

// Inverted BM25-Okapi index. Immutable after build; concurrent searches are
// safe.
//
// score(q, d) = sum over distinct query terms t of
//   idf(t) * tf(t,d) * (k1 + 1) / (tf(t,d) + k1 * (1 - b + b * |d| / avgdl))
// with idf(t) = ln(1 + (N - n(t) + 0.5) / (n(t) + 0.5)), which is strictly
// positive, so scores are non-negative.
class Bm25Index {
public:
    Bm25Index() = default;

    // Throws std::invalid_argument naming the id on duplicate record ids.
    static Bm25Index build(const std::vector<NormalizedClaim>& claims, Bm25Params params = {});

    [[nodiscard]] std::size_t size() const { return doc_ids_.size(); }
    [[nodiscard]] const std::vector<std::string>& doc_ids() const { return doc_ids_; }
    [[nodiscard]] const std::vector<std::uint32_t>& doc_lengths() const { return doc_len_; }
    [[nodiscard]] double avgdl() const { return avgdl_; }
    [[nodiscard]] Bm25Params params() const { return params_; }

    [[nodiscard]] const std::vector<std::string>& terms() const { return terms_; }
    [[nodiscard]] const std::vector<Posting>* postings(std::string_view term) const;
    [[nodiscard]] std::uint64_t doc_frequency(std::string_view term) const;
    [[nodiscard]] double idf(std::string_view term) const;

    // Throws std::out_of_range for an unknown doc id.
    [[nodiscard]] double score(const std::vector<std::string>& query_tokens,
                               std::string_view doc_id) const;

    // Ranked hits, score descending, ties by ascending doc id; zero-score
    // documents excluded. Throws std::invalid_argument when k < 1.
    [[nodiscard]] std::vector<SearchHit> search(const std::vector<std::string>& query_tokens,
                                                std::size_t k) const;

    // Versioned binary persistence; loading a mismatched magic or version
    // is an error, never a silent reinterpretation.
    void save(const std::filesystem::path& path) const;
    static Bm25Index load(const std::filesystem::path& path);

private:
    [[nodiscard]] double term_doc_score(double idf_t, std::uint32_t tf, std::uint32_t dl) const;
    [[nodiscard]] std::vector<std::uint32_t> distinct_term_ordinals(
        const std::vector<std::string>& query_tokens) const;

    std::vector<std::string> doc_ids_;
    std::unordered_map<std::string, std::uint32_t> doc_ordinals_;
    std::vector<std::uint32_t> doc_len_;
    std::vector<std::string> terms_;  // ordinal order = first occurrence
    std::unordered_map<std::string, std::uint32_t> term_ordinals_;
    std::vector<std::vector<Posting>> postings_;
    double avgdl_ = 0.0;
    Bm25Params params_{};
};

}  // namespace redebunk
