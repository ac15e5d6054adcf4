#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "redebunk/record.hpp"

namespace redebunk {

struct ParseIssue {
    std::size_t line = 0;  // 1-based input line; 0 for corpus-level issues
    std::string reason;
};

struct ParseResult {
    std::vector<DebunkRecord> records;
    std::vector<std::size_t> source_lines;  // parallel to records
    std::vector<ParseIssue> issues;
};

// One record object per non-empty line. Malformed lines become issues;
// parsing never aborts on a bad line.
ParseResult parse_records(std::istream& in);

// Throws std::runtime_error on stream-level I/O failure.
ParseResult parse_records_file(const std::filesystem::path& path);

// One line, no trailing newline. parse of the result yields the same record.
std::string serialize_record(const DebunkRecord& r);

// Stable digest of (organisation, url, claim_text), 16 lowercase hex chars.
std::string assign_id(std::string_view organisation, std::string_view url,
                      std::string_view claim_text);

// Immutable record set with unique ids and id lookup.
class Corpus {
public:
    Corpus() = default;

    // Records whose id collides with an earlier one are dropped and reported.
    static Corpus build(std::vector<DebunkRecord> records, std::vector<ParseIssue>& issues,
                        const std::vector<std::size_t>* source_lines = nullptr);

    [[nodiscard]] const std::vector<DebunkRecord>& records() const { return records_; }
    [[nodiscard]] std::size_t size() const { return records_.size(); }
    [[nodiscard]] const DebunkRecord* find(std::string_view id) const;

private:
    std::vector<DebunkRecord> records_;
    std::unordered_map<std::string, std::size_t> by_id_;
};

}  // namespace redebunk
