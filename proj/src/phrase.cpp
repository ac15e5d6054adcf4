#include "redebunk/phrase.hpp"

#include <stdexcept>

#include "redebunk/normalize.hpp"
#include "redebunk/text.hpp"

namespace redebunk {

Phrase compile_phrase(std::string_view pattern) {
    Phrase p;
    p.source = std::string(text::trim(pattern));
    p.tokens = tokenize(p.source);
    return p;
}

bool phrase_matches(const Phrase& phrase, const std::vector<std::string>& tokens) {
    if (phrase.tokens.empty() || phrase.tokens.size() > tokens.size()) return false;
    const std::size_t n = phrase.tokens.size();
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (tokens[i + j] != phrase.tokens[j]) {
                hit = false;
                break;
            }
        }
        if (hit) return true;
    }
    return false;
}

std::vector<RuleLine> parse_rule_lines(std::istream& in) {
    std::vector<RuleLine> rules;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto t = text::trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto colon = t.find(':');
        if (colon == std::string_view::npos) {
            throw std::runtime_error("rule file line " + std::to_string(line_no) +
                                     ": expected 'LABEL: pattern | pattern'");
        }
        RuleLine rule;
        rule.line = line_no;
        rule.label = std::string(text::trim(t.substr(0, colon)));
        if (rule.label.empty()) {
            throw std::runtime_error("rule file line " + std::to_string(line_no) +
                                     ": empty label");
        }
        std::string_view rest = t.substr(colon + 1);
        while (!rest.empty()) {
            const auto bar = rest.find('|');
            std::string_view part = bar == std::string_view::npos ? rest : rest.substr(0, bar);
            Phrase phrase = compile_phrase(part);
            if (phrase.tokens.empty()) {
                throw std::runtime_error("rule file line " + std::to_string(line_no) +
                                         ": empty pattern");
            }
            rule.phrases.push_back(std::move(phrase));
            if (bar == std::string_view::npos) break;
            rest = rest.substr(bar + 1);
        }
        if (rule.phrases.empty()) {
            throw std::runtime_error("rule file line " + std::to_string(line_no) +
                                     ": no patterns");
        }
        rules.push_back(std::move(rule));
    }
    return rules;
}

}  // namespace redebunk
