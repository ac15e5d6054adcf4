#include "redebunk/categorize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "redebunk/normalize.hpp"

namespace redebunk {

namespace {

// Rule order is precedence. Consp precedes Vacc so that conspiracy framings
// of vaccine claims land in Consp.
constexpr const char* kBundledRules =
    "Consp: 5g | bill gates | planned | plandemic | microchip | new world order | "
    "depopulation | soros | hoax\n"
    "GenMedAdv: cure | remedy | vitamin | gargle | alkaline | garlic | ginger | lemon | "
    "hot water | home remedy | immunity\n"
    "Vacc: vaccine | vaccines | vaccination | dna | dose | pfizer | moderna | coronavac | "
    "jab | immunization\n"
    "VirOrgn: origin | lab | wuhan | bat | bats | bioweapon | man-made | engineered | snake\n"
    "VirTrans: transmission | airborne | mosquito | mosquitoes | droplets | contagious | "
    "spread through | surfaces\n"
    "PubAuthAction: government | lockdown | curfew | ministry | police | decree | law | "
    "fine | army\n"
    "CommSpread: cases | deaths | death toll | hospital | hospitals | outbreak | infected | "
    "quarantine\n"
    "PromActs: pope | president | prime minister | celebrity | actor | minister | trump | "
    "modi | ronaldo\n"
    "PubPrep: panic | stockpile | hoarding | shortage | toilet paper | masks | supermarket\n";

}  // namespace

CategoryRules CategoryRules::bundled() {
    std::istringstream in(kBundledRules);
    return from_stream(in, "bundled rules");
}

CategoryRules CategoryRules::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open category rule file " + path.string());
    return from_stream(in, path.string());
}

CategoryRules CategoryRules::from_stream(std::istream& in, std::string_view origin) {
    CategoryRules rules;
    for (auto& line : parse_rule_lines(in)) {
        auto c = parse_category(line.label);
        if (!c) {
            throw std::runtime_error(std::string(origin) + " line " + std::to_string(line.line) +
                                     ": unknown category '" + line.label + "'");
        }
        rules.rules_.push_back({*c, std::move(line.phrases)});
    }
    return rules;
}

Category CategoryRules::classify(std::string_view canonical_text) const {
    const std::vector<std::string> tokens = tokenize(canonical_text);
    for (const auto& rule : rules_) {
        for (const auto& phrase : rule.phrases) {
            if (phrase_matches(phrase, tokens)) return rule.category;
        }
    }
    return Category::None;
}

}  // namespace redebunk
