#include "redebunk/langid.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "redebunk/text.hpp"

namespace redebunk::langid {

namespace {

// Folded letters with everything else collapsed to single spaces, padded.
std::vector<char32_t> letter_stream(std::string_view txt) {
    std::vector<char32_t> cps = text::decode_utf8(text::fold(txt));
    std::vector<char32_t> out;
    out.reserve(cps.size() + 2);
    out.push_back(U' ');
    for (char32_t cp : cps) {
        if (text::is_letter(cp)) {
            out.push_back(cp);
        } else if (out.back() != U' ') {
            out.push_back(U' ');
        }
    }
    if (out.back() != U' ') out.push_back(U' ');
    return out;
}

std::map<std::string, double> trigram_counts(std::string_view txt) {
    const std::vector<char32_t> stream = letter_stream(txt);
    std::map<std::string, double> counts;
    if (stream.size() < 3) return counts;
    for (std::size_t i = 0; i + 3 <= stream.size(); ++i) {
        std::string gram;
        text::append_utf8(gram, stream[i]);
        text::append_utf8(gram, stream[i + 1]);
        text::append_utf8(gram, stream[i + 2]);
        counts[gram] += 1.0;
    }
    return counts;
}

std::vector<std::pair<std::string, double>> unit_vector(std::map<std::string, double> counts) {
    double norm = 0.0;
    for (const auto& [_, c] : counts) norm += c * c;
    norm = std::sqrt(norm);
    std::vector<std::pair<std::string, double>> out;
    out.reserve(counts.size());
    for (auto& [gram, c] : counts) out.emplace_back(gram, norm > 0.0 ? c / norm : 0.0);
    return out;
}

}  // namespace

Profile build_profile(std::string code, std::string_view training_text) {
    return Profile{std::move(code), unit_vector(trigram_counts(training_text))};
}

double similarity(std::string_view txt, const Profile& profile) {
    const auto vec = unit_vector(trigram_counts(txt));
    double dot = 0.0;
    auto a = vec.begin();
    auto b = profile.weights.begin();
    while (a != vec.end() && b != profile.weights.end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            dot += a->second * b->second;
            ++a;
            ++b;
        }
    }
    return dot;
}

std::string detect_language(std::string_view txt, double floor) {
    if (text::decode_utf8(txt).size() < kMinChars) return "und";
    std::string best_code;
    double best = -1.0;
    for (const Profile& p : bundled_profiles()) {
        const double s = similarity(txt, p);
        if (s > best) {  // ties keep the earlier profile
            best = s;
            best_code = p.code;
        }
    }
    if (best < floor) return "und";
    return best_code;
}

}  // namespace redebunk::langid
