#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "redebunk/dedup.hpp"

namespace redebunk {

// Counts of (query-side value <- duplicate-side value) pairs over one
// metadata dimension. Links without a defined pair feed `undefined`, never
// dropped silently, so table total + undefined equals the contributing
// link count.
struct TransitionTable {
    std::string dimension;  // country | platform | modality | language
    std::map<std::pair<std::string, std::string>, std::uint64_t> counts;  // (to, from) -> n
    std::uint64_t undefined = 0;

    [[nodiscard]] std::uint64_t total() const {
        std::uint64_t sum = 0;
        for (const auto& [_, c] : counts) sum += c;
        return sum;
    }
};

// Weekly-style histogram of link day gaps: bin i counts gaps in
// [width*i + 1, width*(i+1)] (0-based). Trailing empty bins are trimmed.
struct GapHistogram {
    int bin_width_days = 7;
    std::vector<std::uint64_t> bins;
};

GapHistogram gap_histogram(const std::vector<DuplicateLink>& one_to_one, int bin_width_days = 7);

struct CountryTransitions {
    TransitionTable same;  // both sides equal
    TransitionTable diff;  // sides differ
    std::uint64_t undefined = 0;
};

// Representative country/platform is the record's first-listed value.
CountryTransitions country_transitions(const Corpus& corpus,
                                       const std::vector<DuplicateLink>& one_to_one);
TransitionTable platform_transitions(const Corpus& corpus,
                                     const std::vector<DuplicateLink>& one_to_one);
TransitionTable modality_transitions(const Corpus& corpus,
                                     const std::vector<DuplicateLink>& one_to_one);
TransitionTable language_pairs(const Corpus& corpus,
                               const std::vector<DuplicateLink>& one_to_one);

struct CrosslingualGap {
    std::uint64_t count = 0;
    std::vector<std::string> query_ids;  // sorted
};

// Queries none of whose duplicates share the query's language; takes the
// full one-to-many link set.
CrosslingualGap crosslingual_gap(const Corpus& corpus, const std::vector<DuplicateLink>& links);

struct CategoryStat {
    std::uint64_t count = 0;
    double proportion = 0.0;
};

// Distribution over the linked query records; proportions sum to 1 over
// non-empty input.
std::map<Category, CategoryStat> category_distribution(
    const Corpus& corpus, const std::vector<DuplicateLink>& one_to_one);

// One (query category, day gap) point per link.
std::vector<std::pair<Category, std::int64_t>> category_gap_scatter(
    const Corpus& corpus, const std::vector<DuplicateLink>& one_to_one);

struct TimelineEvent {
    Date date;
    std::string organisation;
    std::string language;
    std::vector<std::string> countries;
    std::vector<std::string> platforms;
    Modality modality = Modality::Unknown;
};

// One event per cluster member, ascending by date, ties by organisation.
// Throws std::invalid_argument for clusters with fewer than two members.
std::vector<TimelineEvent> timeline(const ClaimCluster& c, const Corpus& corpus);

// Per-query counts over the one-to-one link set, representative
// (first-listed) country / the record's organisation.
std::map<std::string, std::uint64_t> query_country_counts(
    const Corpus& corpus, const std::vector<DuplicateLink>& one_to_one);
std::map<std::string, std::uint64_t> query_org_counts(const Corpus& corpus,
                                                      const std::vector<DuplicateLink>& one_to_one);

// Descending by count, ties by ascending key; at most n entries.
std::vector<std::pair<std::string, std::uint64_t>> top_n(
    const std::map<std::string, std::uint64_t>& counts, std::size_t n);
std::vector<std::pair<std::pair<std::string, std::string>, std::uint64_t>> top_n(
    const TransitionTable& table, std::size_t n);

}  // namespace redebunk
