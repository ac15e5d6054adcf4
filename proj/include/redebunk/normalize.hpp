#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "redebunk/record.hpp"

namespace redebunk {

// Alias-canonicalized, tokenized claim text ready for indexing.
struct NormalizedClaim {
    std::string record_id;
    std::string canonical_text;  // alias-replaced, NFC, lowercased
    std::vector<std::string> tokens;
};

// Replaces every word-boundary occurrence of a configured alias with the
// literal "coronavirus". Longest match first.
class AliasSet {
public:
    // The paper's alias list plus obvious spelling variants.
    static AliasSet bundled();

    // One alias per line, leading '#' comments, blank lines ignored.
    static AliasSet from_file(const std::filesystem::path& path);
    static AliasSet from_aliases(std::vector<std::string> aliases);

    [[nodiscard]] std::string canonicalize(std::string_view txt) const;
    [[nodiscard]] const std::vector<std::string>& aliases() const { return folded_; }

private:
    std::vector<std::string> folded_;             // folded forms, longest first
    std::vector<std::vector<char32_t>> decoded_;  // same order
};

// NFC, lowercase fold, split on anything that is neither a letter, a digit,
// nor an intra-word hyphen/apostrophe. No stemming, no stopwords.
std::vector<std::string> tokenize(std::string_view txt);

NormalizedClaim normalize_claim(const DebunkRecord& record, const AliasSet& aliases);

}  // namespace redebunk
