#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace redebunk::langid {

inline constexpr double kDefaultFloor = 0.25;
inline constexpr std::size_t kMinChars = 20;

// Unit-norm character-trigram frequency profile of one language.
struct Profile {
    std::string code;
    std::vector<std::pair<std::string, double>> weights;  // sorted by trigram
};

Profile build_profile(std::string code, std::string_view training_text);

// Bundled profiles: en, es, pt, hi, fr.
const std::vector<Profile>& bundled_profiles();

// Cosine similarity between the text's trigram vector and a profile.
double similarity(std::string_view txt, const Profile& profile);

// Best-matching bundled code, or "und" when the best similarity is below
// `floor` or the text has fewer than kMinChars characters.
std::string detect_language(std::string_view txt, double floor = kDefaultFloor);

}  // namespace redebunk::langid
