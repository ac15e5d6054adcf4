#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "redebunk/bm25.hpp"
#include "redebunk/corpus.hpp"
#include "redebunk/similarity.hpp"

namespace redebunk {

// A (query claim, earlier duplicate claim) pair: the query's organisation
// differs from the duplicate's and the duplicate was published strictly
// earlier.
struct DuplicateLink {
    std::string query_id;
    std::string duplicate_id;
    double relevance_score = 0.0;  // in [0,1]
    std::int64_t day_gap = 0;      // whole days, >= 1
};

// True iff the organisations differ and candidate's date strictly precedes
// the query's. Same-day pairs never pass.
bool apply_constraints(const DebunkRecord& query, const DebunkRecord& candidate);

struct DedupConfig {
    std::size_t k = 50;        // lexical candidate depth
    double threshold = 0.8;    // relevance floor, inclusive
    unsigned jobs = 1;         // worker threads; output is schedule-independent
};

struct DedupOutput {
    std::vector<DuplicateLink> links;    // sorted by (query_id, score desc, duplicate_id)
    std::vector<SkippedPair> skipped;    // external-backend per-pair failures
};

// For each record: top-k lexical candidates excluding the record itself,
// reranked, thresholded, then constrained. `normalized` must be parallel to
// corpus.records().
DedupOutput find_duplicates(const Corpus& corpus, const std::vector<NormalizedClaim>& normalized,
                            const Bm25Index& index, SimilarityBackend& backend,
                            const DedupConfig& config);

// One-to-many to one-to-one: per query keeps the maximum-relevance link;
// ties prefer the earlier duplicate date, then the ascending duplicate id.
std::map<std::string, DuplicateLink> to_one_to_one(const std::vector<DuplicateLink>& links);

// A narrative debunked multiple times: one connected component of the
// undirected link graph.
struct ClaimCluster {
    int cluster_id = 0;
    std::vector<std::string> member_ids;  // sorted by (date, id), >= 2 entries
    Date earliest_date;
    std::vector<std::string> languages;   // sorted, distinct
    std::vector<std::string> countries;   // sorted, distinct
};

// Connected components of the link graph, ordered by earliest member date,
// then size descending, then first member id.
std::vector<ClaimCluster> cluster(const std::vector<DuplicateLink>& links, const Corpus& corpus);

}  // namespace redebunk
