#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "redebunk/phrase.hpp"
#include "redebunk/record.hpp"

namespace redebunk {

// Ordered keyword rules mapping canonical claim text to one of the ten
// claim categories. The first rule (in file order) with any matching
// pattern wins; no match resolves to None.
class CategoryRules {
public:
    static CategoryRules bundled();
    static CategoryRules from_file(const std::filesystem::path& path);
    static CategoryRules from_stream(std::istream& in, std::string_view origin = "rules");

    [[nodiscard]] Category classify(std::string_view canonical_text) const;

private:
    struct Rule {
        Category category;
        std::vector<Phrase> phrases;
    };
    std::vector<Rule> rules_;
};

}  // namespace redebunk
