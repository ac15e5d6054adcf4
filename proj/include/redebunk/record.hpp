#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "redebunk/date.hpp"

namespace redebunk {

enum class Modality { Text, Image, Video, Audio, Mixed, Unknown };

std::string_view to_string(Modality m);
std::optional<Modality> parse_modality(std::string_view s);

// The ten claim categories used throughout the analytics.
enum class Category {
    PubAuthAction,
    CommSpread,
    GenMedAdv,
    PromActs,
    Consp,
    VirTrans,
    VirOrgn,
    PubPrep,
    Vacc,
    None,
};

inline constexpr int kCategoryCount = 10;

std::string_view to_string(Category c);
std::optional<Category> parse_category(std::string_view s);

// One fact-checked claim with its provenance metadata. Fields mirror the
// ingest record format one to one.
struct DebunkRecord {
    std::string id;
    std::string claim_text;
    std::string organisation;
    std::vector<std::string> countries;  // >= 1, free-form names
    std::string url;                     // may be empty
    std::string language;                // 2-letter ISO 639-1, "und", or "" (absent)
    Date debunk_date;
    std::vector<std::string> platforms;  // lowercased, possibly empty
    std::optional<Modality> modality;
    std::optional<Category> category;
};

// True iff `lang` is exactly two lowercase ASCII letters or "und".
bool is_valid_language_tag(std::string_view lang);

}  // namespace redebunk
