#include "redebunk/bm25.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace redebunk {

namespace {

constexpr char kMagic[8] = {'R', 'D', 'B', 'K', 'B', 'M', '2', '5'};
constexpr std::uint8_t kFormatVersion = 1;

void write_u32(std::ostream& out, std::uint32_t v) {
    char buf[4];
    for (int i = 0; i < 4; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(buf, 4);
}

void write_u64(std::ostream& out, std::uint64_t v) {
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(buf, 8);
}

void write_f64(std::ostream& out, double v) { write_u64(out, std::bit_cast<std::uint64_t>(v)); }

void write_string(std::ostream& out, std::string_view s) {
    write_u32(out, static_cast<std::uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::uint32_t read_u32(std::istream& in) {
    unsigned char buf[4];
    in.read(reinterpret_cast<char*>(buf), 4);
    if (!in) throw std::runtime_error("truncated index file");
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | buf[i];
    return v;
}

std::uint64_t read_u64(std::istream& in) {
    unsigned char buf[8];
    in.read(reinterpret_cast<char*>(buf), 8);
    if (!in) throw std::runtime_error("truncated index file");
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | buf[i];
    return v;
}

double read_f64(std::istream& in) { return std::bit_cast<double>(read_u64(in)); }

std::string read_string(std::istream& in) {
    const std::uint32_t n = read_u32(in);
    std::string s(n, '\0');
    in.read(s.data(), n);
    if (!in) throw std::runtime_error("truncated index file");
    return s;
}

}  // namespace

Bm25Index Bm25Index::build(const std::vector<NormalizedClaim>& claims, Bm25Params params) {
    Bm25Index index;
    index.params_ = params;
    index.doc_ids_.reserve(claims.size());
    index.doc_len_.reserve(claims.size());

    std::uint64_t total_len = 0;
    for (const auto& claim : claims) {
        if (index.doc_ordinals_.contains(claim.record_id)) {
            throw std::invalid_argument("duplicate record id: " + claim.record_id);
        }
        const auto doc = static_cast<std::uint32_t>(index.doc_ids_.size());
        index.doc_ordinals_.emplace(claim.record_id, doc);
        index.doc_ids_.push_back(claim.record_id);
        index.doc_len_.push_back(static_cast<std::uint32_t>(claim.tokens.size()));
        total_len += claim.tokens.size();

        // tf per term of this document; term ordinals by first occurrence
        std::unordered_map<std::uint32_t, std::uint32_t> tf;
        std::vector<std::uint32_t> doc_terms;
        for (const auto& token : claim.tokens) {
            auto [it, inserted] =
                index.term_ordinals_.try_emplace(token, static_cast<std::uint32_t>(index.terms_.size()));
            if (inserted) {
                index.terms_.push_back(token);
                index.postings_.emplace_back();
            }
            auto [tf_it, first] = tf.try_emplace(it->second, 0u);
            if (first) doc_terms.push_back(it->second);
            ++tf_it->second;
        }
        for (std::uint32_t term : doc_terms) {
            index.postings_[term].push_back({doc, tf.at(term)});
        }
    }
    index.avgdl_ = index.doc_ids_.empty()
                       ? 0.0
                       : static_cast<double>(total_len) / static_cast<double>(index.doc_ids_.size());
    return index;
}

const std::vector<Posting>* Bm25Index::postings(std::string_view term) const {
    auto it = term_ordinals_.find(std::string(term));
    return it == term_ordinals_.end() ? nullptr : &postings_[it->second];
}

std::uint64_t Bm25Index::doc_frequency(std::string_view term) const {
    const auto* p = postings(term);
    return p ? p->size() : 0;
}

double Bm25Index::idf(std::string_view term) const {
    const auto n_t = static_cast<double>(doc_frequency(term));
    const auto n = static_cast<double>(doc_ids_.size());
    return std::log(1.0 + (n - n_t + 0.5) / (n_t + 0.5));
}

double Bm25Index::term_doc_score(double idf_t, std::uint32_t tf, std::uint32_t dl) const {
    const double f = tf;
    const double norm = params_.k1 * (1.0 - params_.b + params_.b * dl / avgdl_);
    return idf_t * f * (params_.k1 + 1.0) / (f + norm);
}

std::vector<std::uint32_t> Bm25Index::distinct_term_ordinals(
    const std::vector<std::string>& query_tokens) const {
    std::vector<std::uint32_t> ordinals;
    std::unordered_set<std::uint32_t> seen;
    for (const auto& token : query_tokens) {
        auto it = term_ordinals_.find(token);
        if (it == term_ordinals_.end()) continue;
        if (seen.insert(it->second).second) ordinals.push_back(it->second);
    }
    return ordinals;
}

double Bm25Index::score(const std::vector<std::string>& query_tokens,
                        std::string_view doc_id) const {
    auto it = doc_ordinals_.find(std::string(doc_id));
    if (it == doc_ordinals_.end()) {
        throw std::out_of_range("unknown doc id: " + std::string(doc_id));
    }
    const std::uint32_t doc = it->second;
    double total = 0.0;
    for (std::uint32_t term : distinct_term_ordinals(query_tokens)) {
        const auto& plist = postings_[term];
        auto p = std::lower_bound(plist.begin(), plist.end(), doc,
                                  [](const Posting& a, std::uint32_t d) { return a.doc < d; });
        if (p == plist.end() || p->doc != doc) continue;
        const auto n_t = static_cast<double>(plist.size());
        const auto n = static_cast<double>(doc_ids_.size());
        const double idf_t = std::log(1.0 + (n - n_t + 0.5) / (n_t + 0.5));
        total += term_doc_score(idf_t, p->tf, doc_len_[doc]);
    }
    return total;
}

std::vector<SearchHit> Bm25Index::search(const std::vector<std::string>& query_tokens,
                                         std::size_t k) const {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::vector<double> acc(doc_ids_.size(), 0.0);
    std::vector<std::uint32_t> touched;
    for (std::uint32_t term : distinct_term_ordinals(query_tokens)) {
        const auto& plist = postings_[term];
        const auto n_t = static_cast<double>(plist.size());
        const auto n = static_cast<double>(doc_ids_.size());
        const double idf_t = std::log(1.0 + (n - n_t + 0.5) / (n_t + 0.5));
        for (const Posting& p : plist) {
            if (acc[p.doc] == 0.0) touched.push_back(p.doc);
            acc[p.doc] += term_doc_score(idf_t, p.tf, doc_len_[p.doc]);
        }
    }
    std::sort(touched.begin(), touched.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (acc[a] != acc[b]) return acc[a] > acc[b];
        return doc_ids_[a] < doc_ids_[b];
    });
    if (touched.size() > k) touched.resize(k);
    std::vector<SearchHit> hits;
    hits.reserve(touched.size());
    for (std::uint32_t doc : touched) hits.push_back({doc_ids_[doc], acc[doc]});
    return hits;
}

void Bm25Index::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(kMagic, sizeof(kMagic));
    out.put(static_cast<char>(kFormatVersion));
    write_f64(out, params_.k1);
    write_f64(out, params_.b);
    write_u64(out, doc_ids_.size());
    for (std::size_t i = 0; i < doc_ids_.size(); ++i) {
        write_string(out, doc_ids_[i]);
        write_u32(out, doc_len_[i]);
    }
    write_u64(out, terms_.size());
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        write_string(out, terms_[t]);
        write_u64(out, postings_[t].size());
        for (const Posting& p : postings_[t]) {
            write_u32(out, p.doc);
            write_u32(out, p.tf);
        }
    }
    if (!out) throw std::runtime_error("failed writing index to " + path.string());
}

Bm25Index Bm25Index::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw std::runtime_error(path.string() + " is not a bm25 index file");
    }
    const int version = in.get();
    if (version != kFormatVersion) {
        throw std::runtime_error("unsupported index format version " + std::to_string(version) +
                                 " (expected " + std::to_string(kFormatVersion) + ")");
    }
    Bm25Index index;
    index.params_.k1 = read_f64(in);
    index.params_.b = read_f64(in);
    const std::uint64_t n_docs = read_u64(in);
    std::uint64_t total_len = 0;
    for (std::uint64_t i = 0; i < n_docs; ++i) {
        std::string id = read_string(in);
        const std::uint32_t len = read_u32(in);
        index.doc_ordinals_.emplace(id, static_cast<std::uint32_t>(index.doc_ids_.size()));
        index.doc_ids_.push_back(std::move(id));
        index.doc_len_.push_back(len);
        total_len += len;
    }
    const std::uint64_t n_terms = read_u64(in);
    for (std::uint64_t t = 0; t < n_terms; ++t) {
        std::string term = read_string(in);
        index.term_ordinals_.emplace(term, static_cast<std::uint32_t>(index.terms_.size()));
        index.terms_.push_back(std::move(term));
        std::vector<Posting> plist(read_u64(in));
        for (auto& p : plist) {
            p.doc = read_u32(in);
            p.tf = read_u32(in);
        }
        index.postings_.push_back(std::move(plist));
    }
    index.avgdl_ = n_docs == 0 ? 0.0 : static_cast<double>(total_len) / static_cast<double>(n_docs);
    return index;
}

}  // namespace redebunk
