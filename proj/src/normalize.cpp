#include "redebunk/normalize.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "redebunk/text.hpp"

namespace redebunk {

namespace {

constexpr std::string_view kCanonicalForm = "coronavirus";

bool is_token_char(char32_t cp) { return text::is_letter(cp) || text::is_digit(cp); }

bool is_joiner(char32_t cp) {
    // hyphens and apostrophes, ASCII and typographic
    return cp == U'-' || cp == 0x2010 || cp == 0x2011 || cp == U'\'' || cp == 0x2019;
}

}  // namespace

AliasSet AliasSet::bundled() {
    return from_aliases({"sars-cov-2", "sars-cov2", "sarscov2", "covid-19", "covid19",
                         "covid", "2019-ncov", "ncov", "corona virus"});
}

AliasSet AliasSet::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open alias file " + path.string());
    std::vector<std::string> aliases;
    std::string line;
    while (std::getline(in, line)) {
        auto t = text::trim(line);
        if (t.empty() || t.front() == '#') continue;
        aliases.emplace_back(t);
    }
    return from_aliases(std::move(aliases));
}

AliasSet AliasSet::from_aliases(std::vector<std::string> aliases) {
    AliasSet set;
    for (auto& a : aliases) {
        std::string folded = text::fold(text::trim(a));
        if (folded.empty()) continue;
        if (std::find(set.folded_.begin(), set.folded_.end(), folded) != set.folded_.end()) {
            continue;
        }
        set.folded_.push_back(std::move(folded));
    }
    // Longest match first; equal lengths stay deterministic via lexicographic order.
    std::vector<std::vector<char32_t>> decoded;
    decoded.reserve(set.folded_.size());
    for (const auto& f : set.folded_) decoded.push_back(text::decode_utf8(f));
    std::vector<std::size_t> order(set.folded_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (decoded[a].size() != decoded[b].size()) return decoded[a].size() > decoded[b].size();
        return set.folded_[a] < set.folded_[b];
    });
    AliasSet sorted;
    for (std::size_t i : order) {
        sorted.folded_.push_back(std::move(set.folded_[i]));
        sorted.decoded_.push_back(std::move(decoded[i]));
    }
    return sorted;
}

namespace {

// Word boundaries agree with the tokenizer: a joiner that glues two token
// characters together continues the word, so "covid" inside "covid-190" or
// "pre-covid" is not a boundary occurrence.
bool left_boundary(const std::vector<char32_t>& cps, std::size_t i) {
    if (i == 0) return true;
    const char32_t prev = cps[i - 1];
    if (is_token_char(prev)) return false;
    if (is_joiner(prev) && i >= 2 && is_token_char(cps[i - 2])) return false;
    return true;
}

bool right_boundary(const std::vector<char32_t>& cps, std::size_t end) {
    if (end >= cps.size()) return true;
    const char32_t next = cps[end];
    if (is_token_char(next)) return false;
    if (is_joiner(next) && end + 1 < cps.size() && is_token_char(cps[end + 1])) return false;
    return true;
}

}  // namespace

std::string AliasSet::canonicalize(std::string_view txt) const {
    const std::vector<char32_t> cps = text::decode_utf8(text::fold(txt));
    std::string out;
    out.reserve(txt.size());
    std::size_t i = 0;
    while (i < cps.size()) {
        bool replaced = false;
        if (left_boundary(cps, i)) {
            for (const auto& alias : decoded_) {
                if (alias.empty() || i + alias.size() > cps.size()) continue;
                if (!std::equal(alias.begin(), alias.end(), cps.begin() + static_cast<long>(i))) {
                    continue;
                }
                if (!right_boundary(cps, i + alias.size())) continue;
                out.append(kCanonicalForm);
                i += alias.size();
                replaced = true;
                break;
            }
        }
        if (!replaced) {
            text::append_utf8(out, cps[i]);
            ++i;
        }
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view txt) {
    const std::vector<char32_t> cps = text::decode_utf8(text::fold(txt));
    std::vector<std::string> tokens;
    std::string current;
    for (std::size_t i = 0; i < cps.size(); ++i) {
        const char32_t cp = cps[i];
        if (is_token_char(cp)) {
            text::append_utf8(current, cp);
            continue;
        }
        const bool joins = is_joiner(cp) && !current.empty() && i + 1 < cps.size() &&
                           is_token_char(cps[i + 1]);
        if (joins) {
            text::append_utf8(current, cp);
            continue;
        }
        if (!current.empty()) tokens.push_back(std::move(current)), current.clear();
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

NormalizedClaim normalize_claim(const DebunkRecord& record, const AliasSet& aliases) {
    NormalizedClaim out;
    out.record_id = record.id;
    out.canonical_text = aliases.canonicalize(record.claim_text);
    out.tokens = tokenize(out.canonical_text);
    return out;
}

}  // namespace redebunk
