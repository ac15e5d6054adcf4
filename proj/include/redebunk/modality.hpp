#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "redebunk/phrase.hpp"
#include "redebunk/record.hpp"

namespace redebunk {

// Ordered media-keyword rules over claim text. Matches from two or more
// distinct classes resolve to mixed; no match resolves to text.
class ModalityRules {
public:
    static ModalityRules bundled();
    static ModalityRules from_file(const std::filesystem::path& path);

    [[nodiscard]] Modality classify(std::string_view claim_text) const;

private:
    struct Rule {
        Modality modality;
        std::vector<Phrase> phrases;
    };
    std::vector<Rule> rules_;
};

}  // namespace redebunk
