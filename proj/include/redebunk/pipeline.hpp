#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "redebunk/bm25.hpp"
#include "redebunk/categorize.hpp"
#include "redebunk/corpus.hpp"
#include "redebunk/dedup.hpp"
#include "redebunk/langid.hpp"
#include "redebunk/modality.hpp"
#include "redebunk/normalize.hpp"
#include "redebunk/similarity.hpp"

namespace redebunk {

struct EnrichmentTools {
    AliasSet aliases = AliasSet::bundled();
    ModalityRules modality_rules = ModalityRules::bundled();
    CategoryRules category_rules = CategoryRules::bundled();
    double lang_floor = langid::kDefaultFloor;
};

// Fills absent fields only: id, language, modality, category. Precomputed
// metadata wins.
void enrich_record(DebunkRecord& record, const EnrichmentTools& tools);

struct LoadedCorpus {
    Corpus corpus;
    std::vector<NormalizedClaim> normalized;  // parallel to corpus.records()
    std::vector<ParseIssue> issues;
};

LoadedCorpus load_corpus(std::istream& in, const EnrichmentTools& tools);
LoadedCorpus load_corpus_file(const std::filesystem::path& path, const EnrichmentTools& tools);

// Everything an ad-hoc claim search needs, immutable once built.
struct Runtime {
    EnrichmentTools tools;
    LoadedCorpus data;
    Bm25Index index;
    std::unique_ptr<SimilarityBackend> backend;

    [[nodiscard]] const std::string& canonical_of(const DebunkRecord& record) const;

    static Runtime open(const std::filesystem::path& input, EnrichmentTools tools,
                        const BackendConfig& backend_config, Bm25Params params = {});
};

struct QueryHit {
    const DebunkRecord* record = nullptr;
    double relevance = 0.0;
};

struct QueryResult {
    std::vector<QueryHit> hits;          // relevance desc, ties by ascending id
    std::vector<std::string> warnings;   // per-pair backend failures
};

// Retrieve-and-rerank for a claim that is not in the corpus: alias
// canonicalization, top-k lexical retrieval, relevance filter at
// `threshold`. No date or organisation constraints.
QueryResult search_debunks(Runtime& runtime, std::string_view query_text, std::size_t k,
                           double threshold);

}  // namespace redebunk
