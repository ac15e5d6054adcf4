#include <random>
#include <sstream>

#include "doctest.h"
#include "redebunk/categorize.hpp"
#include "redebunk/normalize.hpp"
#include "redebunk/pipeline.hpp"

using namespace redebunk;

TEST_CASE("bundled rules: figure claims land in the expected categories") {
    const CategoryRules rules = CategoryRules::bundled();
    const AliasSet aliases = AliasSet::bundled();
    CHECK(rules.classify(aliases.canonicalize(
              "A diet rich in alkaline foods can eliminate the coronavirus")) ==
          Category::GenMedAdv);
    // Consp precedes Vacc in the bundled order, so the Bill Gates framing wins
    CHECK(rules.classify(aliases.canonicalize(
              "Bill Gates stated that vaccines against COVID-19 will change human's DNA")) ==
          Category::Consp);
    CHECK(rules.classify("xyzzy") == Category::None);
    CHECK(rules.classify("") == Category::None);
    CHECK(rules.classify("vitamin c can cure coronavirus.") == Category::GenMedAdv);
    CHECK(rules.classify("aborted fetal cells are in the coronavirus vaccine") == Category::Vacc);
    CHECK(rules.classify("the government announced a curfew") == Category::PubAuthAction);
}

TEST_CASE("rule order decides multi-topic claims") {
    std::istringstream first(
        "Vacc: vaccine\n"
        "Consp: bill gates\n");
    std::istringstream second(
        "Consp: bill gates\n"
        "Vacc: vaccine\n");
    const auto rules_a = CategoryRules::from_stream(first);
    const auto rules_b = CategoryRules::from_stream(second);
    const char* claim = "bill gates funded the vaccine";
    CHECK(rules_a.classify(claim) == Category::Vacc);
    CHECK(rules_b.classify(claim) == Category::Consp);
}

TEST_CASE("classification is deterministic under a fixed rule set") {
    const CategoryRules rules = CategoryRules::bundled();
    const char* claim = "drinking hot water with lemon boosts immunity against the virus";
    const Category first = rules.classify(claim);
    for (int i = 0; i < 10; ++i) CHECK(rules.classify(claim) == first);
}

TEST_CASE("patterns match whole tokens, not substrings") {
    std::istringstream in("Consp: 5g\n");
    const auto rules = CategoryRules::from_stream(in);
    CHECK(rules.classify("the 5g rollout is to blame") == Category::Consp);
    CHECK(rules.classify("a 5gb download") == Category::None);
}

TEST_CASE("output always lies in the ten-label set on arbitrary bytes") {
    const CategoryRules rules = CategoryRules::bundled();
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> len(0, 80);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int i = 0; i < 500; ++i) {
        std::string s;
        const int n = len(rng);
        for (int j = 0; j < n; ++j) s.push_back(static_cast<char>(byte(rng)));
        const Category c = rules.classify(s);
        CHECK(parse_category(to_string(c)).has_value());
    }
}

TEST_CASE("malformed rule files report the offending line") {
    SUBCASE("missing colon") {
        std::istringstream in("# comment\nGenMedAdv cure remedy\n");
        CHECK_THROWS_WITH_AS(CategoryRules::from_stream(in),
                             "rule file line 2: expected 'LABEL: pattern | pattern'",
                             std::runtime_error);
    }
    SUBCASE("unknown label") {
        std::istringstream in("NotALabel: cure\n");
        CHECK_THROWS_WITH_AS(CategoryRules::from_stream(in),
                             "rules line 1: unknown category 'NotALabel'", std::runtime_error);
    }
    SUBCASE("empty pattern") {
        std::istringstream in("GenMedAdv: cure | | remedy\n");
        CHECK_THROWS_AS(CategoryRules::from_stream(in), std::runtime_error);
    }
    SUBCASE("no patterns") {
        std::istringstream in("GenMedAdv:\n");
        CHECK_THROWS_AS(CategoryRules::from_stream(in), std::runtime_error);
    }
}

TEST_CASE("a record ingested with an explicit category is never reclassified") {
    const EnrichmentTools tools;
    DebunkRecord r;
    r.claim_text = "Bill Gates planned the vaccine rollout";  // would classify as Consp
    r.organisation = "Org";
    r.countries = {"X"};
    r.debunk_date = Date{2020, 6, 1};
    r.category = Category::PubPrep;
    enrich_record(r, tools);
    CHECK(r.category == Category::PubPrep);
}
