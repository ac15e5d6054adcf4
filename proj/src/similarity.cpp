#include "redebunk/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"
#include "redebunk/text.hpp"

namespace redebunk {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Exact-symmetry cosine: terms iterate in sorted order for both argument
// orders, so score(a,b) == score(b,a) bit for bit.
double cosine(const std::vector<std::pair<std::string, double>>& a,
              const std::vector<std::pair<std::string, double>>& b) {
    if (a.empty() || b.empty()) return 0.0;
    double dot = 0.0;
    double na = 0.0;
    double nb = 0.0;
    for (const auto& [_, w] : a) na += w * w;
    for (const auto& [_, w] : b) nb += w * w;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            dot += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    const double denom = std::sqrt(na) * std::sqrt(nb);
    if (denom == 0.0) return 0.0;
    return std::clamp(dot / denom, 0.0, 1.0);
}

}  // namespace

TfidfCosineBackend::TfidfCosineBackend(const std::vector<NormalizedClaim>& corpus)
    : n_docs_(corpus.size()) {
    for (const auto& claim : corpus) {
        std::unordered_set<std::string> seen(claim.tokens.begin(), claim.tokens.end());
        for (const auto& t : seen) ++df_[t];
    }
}

double TfidfCosineBackend::idf(const std::string& term) const {
    auto it = df_.find(term);
    const double df = it == df_.end() ? 0.0 : static_cast<double>(it->second);
    return std::log((1.0 + static_cast<double>(n_docs_)) / (1.0 + df)) + 1.0;
}

std::vector<std::pair<std::string, double>> TfidfCosineBackend::vectorize(
    std::string_view txt) const {
    std::map<std::string, double> tf;
    for (auto& token : tokenize(txt)) tf[std::move(token)] += 1.0;
    std::vector<std::pair<std::string, double>> vec;
    vec.reserve(tf.size());
    for (auto& [term, f] : tf) vec.emplace_back(term, f * idf(term));
    return vec;
}

ScoreResult TfidfCosineBackend::score_pair(std::string_view a, std::string_view b) {
    if (a == b && !a.empty()) return {1.0, {}};
    return {cosine(vectorize(a), vectorize(b)), {}};
}

CharNgramBackend::CharNgramBackend(std::size_t n) : n_(n) {
    if (n < 1) throw std::invalid_argument("ngram size must be >= 1");
}

std::vector<std::pair<std::string, double>> CharNgramBackend::vectorize(
    std::string_view txt) const {
    std::vector<char32_t> cps;
    cps.push_back(U' ');
    for (char32_t cp : text::decode_utf8(txt)) cps.push_back(cp);
    cps.push_back(U' ');
    std::map<std::string, double> counts;
    if (cps.size() >= n_) {
        for (std::size_t i = 0; i + n_ <= cps.size(); ++i) {
            std::string gram;
            for (std::size_t j = 0; j < n_; ++j) text::append_utf8(gram, cps[i + j]);
            counts[gram] += 1.0;
        }
    }
    std::vector<std::pair<std::string, double>> vec;
    vec.reserve(counts.size());
    for (auto& [gram, c] : counts) vec.emplace_back(gram, c);
    return vec;
}

ScoreResult CharNgramBackend::score_pair(std::string_view a, std::string_view b) {
    if (a == b && !a.empty()) return {1.0, {}};
    return {cosine(vectorize(a), vectorize(b)), {}};
}

ExternalBackend::ExternalBackend(std::string command) : command_(std::move(command)) {
    try {
        process_ = std::make_unique<LineProcess>(command_);
    } catch (const std::runtime_error& e) {
        throw BackendError("cannot start external backend: " + std::string(e.what()));
    }
}

ScoreResult ExternalBackend::score_pair(std::string_view a, std::string_view b) {
    if (dead_) return {0.0, "backend process terminated"};
    const std::int64_t id = next_id_++;
    ordered_json request;
    request["id"] = id;
    request["a"] = std::string(a);
    request["b"] = std::string(b);
    if (!process_->write_line(request.dump())) {
        dead_ = true;
        return {0.0, "backend process terminated"};
    }
    auto line = process_->read_line();
    if (!line) {
        dead_ = true;
        return {0.0, "backend process terminated"};
    }
    json response = json::parse(*line, nullptr, /*allow_exceptions=*/false);
    if (response.is_discarded() || !response.is_object() || !response.contains("id") ||
        !response.contains("score") || !response["id"].is_number_integer() ||
        !response["score"].is_number()) {
        return {0.0, "malformed backend response: " + *line};
    }
    if (response["id"].get<std::int64_t>() != id) {
        return {0.0, "backend response id mismatch"};
    }
    const double score = response["score"].get<double>();
    if (!(score >= 0.0 && score <= 1.0)) {
        return {0.0, "backend score out of range: " + std::to_string(score)};
    }
    return {score, {}};
}

std::unique_ptr<SimilarityBackend> make_backend(const BackendConfig& config,
                                                const std::vector<NormalizedClaim>& corpus) {
    if (config.kind == "tfidf-cosine") return std::make_unique<TfidfCosineBackend>(corpus);
    if (config.kind == "char-ngram") return std::make_unique<CharNgramBackend>(config.ngram_size);
    if (config.kind == "external") {
        if (config.external_command.empty()) {
            throw std::invalid_argument("external backend requires a command");
        }
        return std::make_unique<ExternalBackend>(config.external_command);
    }
    throw std::invalid_argument("unknown backend kind: " + config.kind);
}

RerankResult rerank(const std::vector<CandidatePair>& candidates, SimilarityBackend& backend,
                    double threshold,
                    const std::function<std::string_view(std::string_view)>& text_of) {
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw std::invalid_argument("threshold must be in [0,1]");
    }
    RerankResult result;
    for (const auto& pair : candidates) {
        const auto score = backend.score_pair(text_of(pair.query_id), text_of(pair.candidate_id));
        if (!score.ok()) {
            result.skipped.push_back({pair.query_id, pair.candidate_id, score.error});
            continue;
        }
        if (score.score >= threshold) {
            result.kept.push_back(
                {pair.query_id, pair.candidate_id, pair.lexical_score, score.score});
        }
    }
    std::sort(result.kept.begin(), result.kept.end(),
              [](const ScoredCandidate& a, const ScoredCandidate& b) {
                  if (a.relevance_score != b.relevance_score) {
                      return a.relevance_score > b.relevance_score;
                  }
                  if (a.candidate_id != b.candidate_id) return a.candidate_id < b.candidate_id;
                  return a.query_id < b.query_id;
              });
    return result;
}

}  // namespace redebunk
