#include "redebunk/dedup.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace redebunk {

bool apply_constraints(const DebunkRecord& query, const DebunkRecord& candidate) {
    return query.organisation != candidate.organisation &&
           candidate.debunk_date < query.debunk_date;
}

namespace {

struct PerQuery {
    std::vector<DuplicateLink> links;
    std::vector<SkippedPair> skipped;
};

}  // namespace

DedupOutput find_duplicates(const Corpus& corpus, const std::vector<NormalizedClaim>& normalized,
                            const Bm25Index& index, SimilarityBackend& backend,
                            const DedupConfig& config) {
    if (config.k < 1) throw std::invalid_argument("k must be >= 1");
    if (!(config.threshold >= 0.0 && config.threshold <= 1.0)) {
        throw std::invalid_argument("threshold must be in [0,1]");
    }
    if (normalized.size() != corpus.size()) {
        throw std::invalid_argument("normalized claims do not match corpus");
    }

    std::unordered_map<std::string_view, std::string_view> canonical;
    canonical.reserve(normalized.size());
    for (const auto& nc : normalized) canonical.emplace(nc.record_id, nc.canonical_text);
    const auto text_of = [&](std::string_view id) -> std::string_view {
        auto it = canonical.find(id);
        if (it == canonical.end()) throw std::logic_error("unresolvable id: " + std::string(id));
        return it->second;
    };

    const auto& records = corpus.records();
    const std::size_t n = records.size();
    std::vector<PerQuery> per_query(n);
    std::mutex backend_mutex;  // external backend is one serialized subprocess

    const auto process = [&](std::size_t qi, bool lock_backend) {
        const DebunkRecord& query = records[qi];
        auto hits = index.search(normalized[qi].tokens, config.k + 1);
        std::vector<CandidatePair> candidates;
        candidates.reserve(config.k);
        for (const auto& hit : hits) {
            if (hit.doc_id == query.id) continue;
            if (candidates.size() == config.k) break;
            candidates.push_back({query.id, hit.doc_id, hit.score});
        }
        RerankResult reranked;
        if (lock_backend) {
            std::lock_guard<std::mutex> guard(backend_mutex);
            reranked = rerank(candidates, backend, config.threshold, text_of);
        } else {
            reranked = rerank(candidates, backend, config.threshold, text_of);
        }
        PerQuery out;
        out.skipped = std::move(reranked.skipped);
        for (const auto& sc : reranked.kept) {
            const DebunkRecord* cand = corpus.find(sc.candidate_id);
            if (!apply_constraints(query, *cand)) continue;
            out.links.push_back({query.id, cand->id, sc.relevance_score,
                                 days_between(cand->debunk_date, query.debunk_date)});
        }
        return out;
    };

    const unsigned jobs = std::max(1u, config.jobs);
    if (jobs == 1 || n < 2) {
        for (std::size_t qi = 0; qi < n; ++qi) per_query[qi] = process(qi, false);
    } else {
        std::atomic<std::size_t> next{0};
        const auto worker = [&] {
            for (std::size_t qi; (qi = next.fetch_add(1)) < n;) {
                per_query[qi] = process(qi, true);
            }
        };
        std::vector<std::thread> pool;
        const unsigned count = std::min<unsigned>(jobs, static_cast<unsigned>(n));
        pool.reserve(count);
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    DedupOutput output;
    for (auto& pq : per_query) {
        output.links.insert(output.links.end(), std::make_move_iterator(pq.links.begin()),
                            std::make_move_iterator(pq.links.end()));
        output.skipped.insert(output.skipped.end(), std::make_move_iterator(pq.skipped.begin()),
                              std::make_move_iterator(pq.skipped.end()));
    }
    std::sort(output.links.begin(), output.links.end(),
              [](const DuplicateLink& a, const DuplicateLink& b) {
                  if (a.query_id != b.query_id) return a.query_id < b.query_id;
                  if (a.relevance_score != b.relevance_score) {
                      return a.relevance_score > b.relevance_score;
                  }
                  return a.duplicate_id < b.duplicate_id;
              });
    std::sort(output.skipped.begin(), output.skipped.end(),
              [](const SkippedPair& a, const SkippedPair& b) {
                  if (a.query_id != b.query_id) return a.query_id < b.query_id;
                  return a.candidate_id < b.candidate_id;
              });
    return output;
}

std::map<std::string, DuplicateLink> to_one_to_one(const std::vector<DuplicateLink>& links) {
    std::map<std::string, DuplicateLink> best;
    for (const auto& link : links) {
        auto [it, inserted] = best.try_emplace(link.query_id, link);
        if (inserted) continue;
        DuplicateLink& cur = it->second;
        // max relevance; ties: earlier duplicate date (= larger gap); then id
        const bool better =
            link.relevance_score > cur.relevance_score ||
            (link.relevance_score == cur.relevance_score &&
             (link.day_gap > cur.day_gap ||
              (link.day_gap == cur.day_gap && link.duplicate_id < cur.duplicate_id)));
        if (better) cur = link;
    }
    return best;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<ClaimCluster> cluster(const std::vector<DuplicateLink>& links, const Corpus& corpus) {
    std::vector<std::string> ids;
    std::unordered_map<std::string, std::size_t> ordinal;
    const auto intern = [&](const std::string& id) {
        auto it = ordinal.find(id);
        if (it != ordinal.end()) return it->second;
        ids.push_back(id);
        return ordinal.emplace(id, ids.size() - 1).first->second;
    };

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(links.size());
    for (const auto& link : links) {
        const std::size_t a = intern(link.query_id);
        const std::size_t b = intern(link.duplicate_id);
        edges.emplace_back(a, b);
    }
    UnionFind uf(ids.size());
    for (const auto& [a, b] : edges) uf.unite(a, b);

    std::unordered_map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < ids.size(); ++i) groups[uf.find(i)].push_back(i);

    std::vector<ClaimCluster> clusters;
    for (auto& [_, members] : groups) {
        ClaimCluster c;
        c.member_ids.reserve(members.size());
        std::set<std::string> langs;
        std::set<std::string> countries;
        for (std::size_t m : members) {
            const DebunkRecord* rec = corpus.find(ids[m]);
            if (!rec) throw std::logic_error("link references unknown id: " + ids[m]);
            c.member_ids.push_back(rec->id);
            if (!rec->language.empty()) langs.insert(rec->language);
            countries.insert(rec->countries.begin(), rec->countries.end());
        }
        std::sort(c.member_ids.begin(), c.member_ids.end(),
                  [&](const std::string& a, const std::string& b) {
                      const Date da = corpus.find(a)->debunk_date;
                      const Date db = corpus.find(b)->debunk_date;
                      if (da != db) return da < db;
                      return a < b;
                  });
        c.earliest_date = corpus.find(c.member_ids.front())->debunk_date;
        c.languages.assign(langs.begin(), langs.end());
        c.countries.assign(countries.begin(), countries.end());
        clusters.push_back(std::move(c));
    }
    std::sort(clusters.begin(), clusters.end(), [](const ClaimCluster& a, const ClaimCluster& b) {
        if (a.earliest_date != b.earliest_date) return a.earliest_date < b.earliest_date;
        if (a.member_ids.size() != b.member_ids.size()) {
            return a.member_ids.size() > b.member_ids.size();
        }
        return a.member_ids.front() < b.member_ids.front();
    });
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        clusters[i].cluster_id = static_cast<int>(i);
    }
    return clusters;
}

}  // namespace redebunk
