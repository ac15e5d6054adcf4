#include "redebunk/modality.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "redebunk/normalize.hpp"

namespace redebunk {

namespace {

constexpr const char* kBundledRules =
    "video: video | footage | clip\n"
    "image: photo | image | picture\n"
    "audio: audio | voice message\n";

}  // namespace

ModalityRules ModalityRules::bundled() {
    std::istringstream in(kBundledRules);
    ModalityRules rules;
    for (auto& line : parse_rule_lines(in)) {
        auto m = parse_modality(line.label);
        rules.rules_.push_back({*m, std::move(line.phrases)});
    }
    return rules;
}

ModalityRules ModalityRules::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open modality rule file " + path.string());
    ModalityRules rules;
    for (auto& line : parse_rule_lines(in)) {
        auto m = parse_modality(line.label);
        if (!m || *m == Modality::Mixed || *m == Modality::Unknown) {
            throw std::runtime_error("modality rule file line " + std::to_string(line.line) +
                                     ": unknown modality '" + line.label + "'");
        }
        rules.rules_.push_back({*m, std::move(line.phrases)});
    }
    return rules;
}

Modality ModalityRules::classify(std::string_view claim_text) const {
    const std::vector<std::string> tokens = tokenize(claim_text);
    std::set<Modality> matched;
    for (const auto& rule : rules_) {
        for (const auto& phrase : rule.phrases) {
            if (phrase_matches(phrase, tokens)) {
                matched.insert(rule.modality);
                break;
            }
        }
    }
    if (matched.empty()) return Modality::Text;
    if (matched.size() > 1) return Modality::Mixed;
    return *matched.begin();
}

}  // namespace redebunk
