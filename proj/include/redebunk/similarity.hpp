#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "redebunk/normalize.hpp"
#include "redebunk/subprocess.hpp"

namespace redebunk {

// External scorer could not be started or died before finishing.
struct BackendError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScoreResult {
    double score = 0.0;
    std::string error;  // non-empty means the pair could not be scored

    [[nodiscard]] bool ok() const { return error.empty(); }
};

// Maps any pair of strings to a relevance score in [0,1]. Built-in backends
// are deterministic and symmetric; the external backend delegates to a
// subprocess and may fail per pair.
class SimilarityBackend {
public:
    virtual ~SimilarityBackend() = default;
    [[nodiscard]] virtual std::string_view name() const = 0;
    virtual ScoreResult score_pair(std::string_view a, std::string_view b) = 0;

    // Built-ins are pure; the external backend is one subprocess and its
    // callers must serialize.
    [[nodiscard]] virtual bool thread_safe() const { return true; }
};

// Cosine of corpus-IDF-weighted term-frequency vectors.
// idf(t) = ln((1 + N) / (1 + df(t))) + 1, strictly positive, so the cosine
// of non-negative vectors stays in [0,1]. Identical strings score exactly 1.
class TfidfCosineBackend final : public SimilarityBackend {
public:
    explicit TfidfCosineBackend(const std::vector<NormalizedClaim>& corpus);

    [[nodiscard]] std::string_view name() const override { return "tfidf-cosine"; }
    ScoreResult score_pair(std::string_view a, std::string_view b) override;

private:
    [[nodiscard]] double idf(const std::string& term) const;
    [[nodiscard]] std::vector<std::pair<std::string, double>> vectorize(std::string_view txt) const;

    std::unordered_map<std::string, std::uint64_t> df_;
    std::size_t n_docs_ = 0;
};

// Cosine of character n-gram count vectors (default n = 3) over the text,
// padded with one space on each side so any non-empty string has at least
// one gram. Identical strings score exactly 1.
class CharNgramBackend final : public SimilarityBackend {
public:
    explicit CharNgramBackend(std::size_t n = 3);

    [[nodiscard]] std::string_view name() const override { return "char-ngram"; }
    ScoreResult score_pair(std::string_view a, std::string_view b) override;

private:
    [[nodiscard]] std::vector<std::pair<std::string, double>> vectorize(std::string_view txt) const;

    std::size_t n_;
};

// Scores via a subprocess speaking line-delimited JSON:
//   request:  {"id": <int>, "a": "<text>", "b": "<text>"}
//   response: {"id": <int>, "score": <float in [0,1]>}
// Responses arrive in request order. A malformed or out-of-range response
// fails that pair only; a dead process fails every remaining pair.
class ExternalBackend final : public SimilarityBackend {
public:
    explicit ExternalBackend(std::string command);  // throws on spawn failure

    [[nodiscard]] std::string_view name() const override { return "external"; }
    ScoreResult score_pair(std::string_view a, std::string_view b) override;
    [[nodiscard]] bool thread_safe() const override { return false; }

    [[nodiscard]] bool alive() const { return !dead_; }

private:
    std::string command_;
    std::unique_ptr<LineProcess> process_;
    std::int64_t next_id_ = 0;
    bool dead_ = false;
};

struct BackendConfig {
    std::string kind = "tfidf-cosine";  // tfidf-cosine | char-ngram | external
    std::size_t ngram_size = 3;
    std::string external_command;
};

// Throws std::invalid_argument on an unknown kind or missing command.
std::unique_ptr<SimilarityBackend> make_backend(const BackendConfig& config,
                                                const std::vector<NormalizedClaim>& corpus);

struct CandidatePair {
    std::string query_id;
    std::string candidate_id;
    double lexical_score = 0.0;
};

struct ScoredCandidate {
    std::string query_id;
    std::string candidate_id;
    double lexical_score = 0.0;
    double relevance_score = 0.0;  // in [0,1]
};

struct SkippedPair {
    std::string query_id;
    std::string candidate_id;
    std::string reason;
};

struct RerankResult {
    std::vector<ScoredCandidate> kept;     // relevance >= threshold
    std::vector<SkippedPair> skipped;      // per-pair backend failures
};

// Keeps exactly the pairs with relevance_score >= threshold, sorted by
// relevance descending, then ascending candidate id, then query id.
// `text_of` resolves an id to its canonical claim text.
RerankResult rerank(const std::vector<CandidatePair>& candidates, SimilarityBackend& backend,
                    double threshold,
                    const std::function<std::string_view(std::string_view)>& text_of);

}  // namespace redebunk
