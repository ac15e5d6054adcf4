#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace redebunk {

// A keyword phrase compiled to its token sequence; matches case-insensitively
// at word boundaries.
struct Phrase {
    std::string source;
    std::vector<std::string> tokens;
};

Phrase compile_phrase(std::string_view pattern);

// True iff the phrase occurs as a contiguous token run.
bool phrase_matches(const Phrase& phrase, const std::vector<std::string>& tokens);

// `LABEL: pattern1 | pattern2 | ...` per line, '#' comments, blank lines
// ignored. Throws std::runtime_error naming the offending line.
struct RuleLine {
    std::size_t line = 0;
    std::string label;
    std::vector<Phrase> phrases;
};

std::vector<RuleLine> parse_rule_lines(std::istream& in);

}  // namespace redebunk
