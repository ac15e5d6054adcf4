#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "redebunk/normalize.hpp"
#include "redebunk/text.hpp"

using namespace redebunk;

namespace {

// Random strings mixing words, aliases, punctuation and non-ASCII.
std::string random_text(std::mt19937& rng) {
    static const std::vector<std::string> pieces = {
        "covid",   "COVID-19",  "virus",    "corona virus", "2019-nCoV", "vaccine",
        "vitamin", "cure",      "5g",       "covidence",    "l'eau",     "garlic",
        "água",    "señal",     "...",      "--",           "'",         "-",
        "COVID19", "SARS-CoV2", "sarscov2", "ncov",         "x",         "",
    };
    std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<int> sep(0, 3);
    std::string out;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
        out += pieces[pick(rng)];
        switch (sep(rng)) {
            case 0: break;
            case 1: out += ", "; break;
            case 2: out += "! "; break;
            default: out += ' '; break;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("canonicalize_aliases: paper examples") {
    const AliasSet aliases = AliasSet::bundled();
    CHECK(aliases.canonicalize("Vitamin C can cure COVID-19.") ==
          "vitamin c can cure coronavirus.");
    CHECK(aliases.canonicalize("coronavirus") == "coronavirus");
    CHECK(aliases.canonicalize("COVID and covid19 and 2019-nCoV") ==
          "coronavirus and coronavirus and coronavirus");
}

TEST_CASE("canonicalize_aliases: longest match first and word boundaries") {
    const AliasSet aliases = AliasSet::bundled();
    // "covid-19" must not be split by the shorter "covid" rule
    CHECK(aliases.canonicalize("covid-19") == "coronavirus");
    CHECK(aliases.canonicalize("sars-cov-2 vs sars-cov2") == "coronavirus vs coronavirus");
    // no replacement inside words
    CHECK(aliases.canonicalize("covidence") == "covidence");
    CHECK(aliases.canonicalize("covid-190") == "covid-190");
    // multi-word alias
    CHECK(aliases.canonicalize("the corona virus spreads") == "the coronavirus spreads");
    // boundary at punctuation and string edges
    CHECK(aliases.canonicalize("(covid)") == "(coronavirus)");
    CHECK(aliases.canonicalize("covid") == "coronavirus");
}

TEST_CASE("canonicalize_aliases is idempotent on fuzzed strings") {
    const AliasSet aliases = AliasSet::bundled();
    std::mt19937 rng(12345);
    for (int i = 0; i < 2000; ++i) {
        const std::string s = random_text(rng);
        const std::string once = aliases.canonicalize(s);
        CHECK(aliases.canonicalize(once) == once);
    }
}

TEST_CASE("alias set from lines: comments, trimming, dedup") {
    const AliasSet aliases = AliasSet::from_aliases({"  MyVirus  ", "myvirus", "", "other bug"});
    CHECK(aliases.aliases().size() == 2);
    CHECK(aliases.canonicalize("MYVIRUS is here") == "coronavirus is here");
    CHECK(aliases.canonicalize("other bug bites") == "coronavirus bites");
}

TEST_CASE("alias file: one alias per line, leading # comments") {
    const auto path = std::filesystem::temp_directory_path() / "redebunk_aliases_test.txt";
    std::ofstream(path) << "# covid aliases\n"
                        << "wuhan flu\n"
                        << "\n"
                        << "  the plague  \n";
    const AliasSet aliases = AliasSet::from_file(path);
    CHECK(aliases.aliases().size() == 2);
    CHECK(aliases.canonicalize("The Wuhan Flu spreads") == "the coronavirus spreads");
    CHECK(aliases.canonicalize("THE PLAGUE returns") == "coronavirus returns");
    std::filesystem::remove(path);
    CHECK_THROWS_AS(AliasSet::from_file("/nonexistent/aliases.txt"), std::runtime_error);
}

TEST_CASE("tokenize: contract examples") {
    CHECK(tokenize("Vitamin C can cure coronavirus.") ==
          std::vector<std::string>{"vitamin", "c", "can", "cure", "coronavirus"});
    CHECK(tokenize("").empty());
    CHECK(tokenize("L'alimentation alcaline…") ==
          std::vector<std::string>{"l'alimentation", "alcaline"});
}

TEST_CASE("tokenize: hyphens and apostrophes only join inside words") {
    CHECK(tokenize("covid-19") == std::vector<std::string>{"covid-19"});
    CHECK(tokenize("-abc-") == std::vector<std::string>{"abc"});
    CHECK(tokenize("a--b") == std::vector<std::string>{"a", "b"});
    CHECK(tokenize("'quoted'") == std::vector<std::string>{"quoted"});
    CHECK(tokenize("it’s fine") == std::vector<std::string>{"it’s", "fine"});
    CHECK(tokenize("5g towers") == std::vector<std::string>{"5g", "towers"});
    CHECK(tokenize("...!!!") == std::vector<std::string>{});
}

TEST_CASE("tokenize folds case and composes accents") {
    CHECK(tokenize("AGUA Água") == std::vector<std::string>{"agua", "água"});
    // decomposed e + combining acute composes to the same token as é
    const std::string decomposed = "caf\x65\xcc\x81";  // "cafe" + U+0301
    CHECK(tokenize(decomposed) == tokenize("café"));
}

TEST_CASE("tokenize never produces empty tokens on arbitrary bytes") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> len(0, 80);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int i = 0; i < 2000; ++i) {
        std::string s;
        const int n = len(rng);
        for (int j = 0; j < n; ++j) s.push_back(static_cast<char>(byte(rng)));
        for (const auto& token : tokenize(s)) CHECK(!token.empty());
    }
}

TEST_CASE("normalize_claim composes alias replacement and tokenization") {
    const AliasSet aliases = AliasSet::bundled();
    DebunkRecord r;
    r.id = "r1";
    r.organisation = "o";
    r.countries = {"X"};
    r.debunk_date = Date{2020, 1, 1};

    r.claim_text = "COVID19 cure found";
    CHECK(normalize_claim(r, aliases).tokens ==
          std::vector<std::string>{"coronavirus", "cure", "found"});

    r.claim_text = "Vitamin C can cure coronavirus.";
    const auto nc = normalize_claim(r, aliases);
    CHECK(nc.record_id == "r1");
    CHECK(nc.canonical_text == "vitamin c can cure coronavirus.");
    CHECK(nc.tokens == std::vector<std::string>{"vitamin", "c", "can", "cure", "coronavirus"});
}

TEST_CASE("canonical text carries coronavirus iff an alias or the word occurs") {
    const AliasSet aliases = AliasSet::bundled();
    std::mt19937 rng(2024);
    const std::vector<std::string> alias_words = {"covid",   "COVID-19",  "covid19",
                                                  "2019-ncov", "sars-cov-2", "corona virus"};
    const std::vector<std::string> plain_words = {"vaccine", "garlic", "videos", "lockdown",
                                                  "cura",    "teoría"};
    std::uniform_int_distribution<int> len(1, 8);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<std::size_t> pa(0, alias_words.size() - 1);
    std::uniform_int_distribution<std::size_t> pp(0, plain_words.size() - 1);
    for (int i = 0; i < 500; ++i) {
        bool expect = false;
        std::string text;
        const int n = len(rng);
        for (int j = 0; j < n; ++j) {
            if (coin(rng) == 0) {
                text += alias_words[pa(rng)];
                expect = true;
            } else {
                text += plain_words[pp(rng)];
            }
            text += ' ';
        }
        DebunkRecord r;
        r.id = "x";
        r.claim_text = text;
        const auto tokens = normalize_claim(r, aliases).tokens;
        const bool has = std::find(tokens.begin(), tokens.end(), "coronavirus") != tokens.end();
        CHECK(has == expect);
    }
}
