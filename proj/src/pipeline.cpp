#include "redebunk/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace redebunk {

void enrich_record(DebunkRecord& record, const EnrichmentTools& tools) {
    if (record.id.empty()) {
        record.id = assign_id(record.organisation, record.url, record.claim_text);
    }
    if (record.language.empty()) {
        record.language = langid::detect_language(record.claim_text, tools.lang_floor);
    }
    if (!record.modality) {
        record.modality = tools.modality_rules.classify(record.claim_text);
    }
    if (!record.category) {
        record.category = tools.category_rules.classify(tools.aliases.canonicalize(record.claim_text));
    }
}

LoadedCorpus load_corpus(std::istream& in, const EnrichmentTools& tools) {
    ParseResult parsed = parse_records(in);
    for (auto& record : parsed.records) enrich_record(record, tools);
    LoadedCorpus loaded;
    loaded.issues = std::move(parsed.issues);
    loaded.corpus =
        Corpus::build(std::move(parsed.records), loaded.issues, &parsed.source_lines);
    loaded.normalized.reserve(loaded.corpus.size());
    for (const auto& record : loaded.corpus.records()) {
        loaded.normalized.push_back(normalize_claim(record, tools.aliases));
    }
    return loaded;
}

LoadedCorpus load_corpus_file(const std::filesystem::path& path, const EnrichmentTools& tools) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return load_corpus(in, tools);
}

const std::string& Runtime::canonical_of(const DebunkRecord& record) const {
    const auto ordinal = static_cast<std::size_t>(&record - data.corpus.records().data());
    return data.normalized[ordinal].canonical_text;
}

Runtime Runtime::open(const std::filesystem::path& input, EnrichmentTools tools,
                      const BackendConfig& backend_config, Bm25Params params) {
    Runtime runtime{std::move(tools), {}, {}, nullptr};
    runtime.data = load_corpus_file(input, runtime.tools);
    runtime.index = Bm25Index::build(runtime.data.normalized, params);
    runtime.backend = make_backend(backend_config, runtime.data.normalized);
    return runtime;
}

QueryResult search_debunks(Runtime& runtime, std::string_view query_text, std::size_t k,
                           double threshold) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw std::invalid_argument("threshold must be in [0,1]");
    }
    const std::string canonical_query = runtime.tools.aliases.canonicalize(query_text);
    const std::vector<std::string> tokens = tokenize(canonical_query);

    QueryResult result;
    for (const auto& hit : runtime.index.search(tokens, k)) {
        const DebunkRecord* record = runtime.data.corpus.find(hit.doc_id);
        const auto score = runtime.backend->score_pair(canonical_query, runtime.canonical_of(*record));
        if (!score.ok()) {
            result.warnings.push_back(hit.doc_id + ": " + score.error);
            continue;
        }
        if (score.score >= threshold) result.hits.push_back({record, score.score});
    }
    std::sort(result.hits.begin(), result.hits.end(), [](const QueryHit& a, const QueryHit& b) {
        if (a.relevance != b.relevance) return a.relevance > b.relevance;
        return a.record->id < b.record->id;
    });
    return result;
}

}  // namespace redebunk
