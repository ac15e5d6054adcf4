#include "redebunk/record.hpp"

namespace redebunk {

std::string_view to_string(Modality m) {
    switch (m) {
        case Modality::Text: return "text";
        case Modality::Image: return "image";
        case Modality::Video: return "video";
        case Modality::Audio: return "audio";
        case Modality::Mixed: return "mixed";
        case Modality::Unknown: return "unknown";
    }
    return "unknown";
}

std::optional<Modality> parse_modality(std::string_view s) {
    if (s == "text") return Modality::Text;
    if (s == "image") return Modality::Image;
    if (s == "video") return Modality::Video;
    if (s == "audio") return Modality::Audio;
    if (s == "mixed") return Modality::Mixed;
    if (s == "unknown") return Modality::Unknown;
    return std::nullopt;
}

std::string_view to_string(Category c) {
    switch (c) {
        case Category::PubAuthAction: return "PubAuthAction";
        case Category::CommSpread: return "CommSpread";
        case Category::GenMedAdv: return "GenMedAdv";
        case Category::PromActs: return "PromActs";
        case Category::Consp: return "Consp";
        case Category::VirTrans: return "VirTrans";
        case Category::VirOrgn: return "VirOrgn";
        case Category::PubPrep: return "PubPrep";
        case Category::Vacc: return "Vacc";
        case Category::None: return "None";
    }
    return "None";
}

std::optional<Category> parse_category(std::string_view s) {
    if (s == "PubAuthAction") return Category::PubAuthAction;
    if (s == "CommSpread") return Category::CommSpread;
    if (s == "GenMedAdv") return Category::GenMedAdv;
    if (s == "PromActs") return Category::PromActs;
    if (s == "Consp") return Category::Consp;
    if (s == "VirTrans") return Category::VirTrans;
    if (s == "VirOrgn") return Category::VirOrgn;
    if (s == "PubPrep") return Category::PubPrep;
    if (s == "Vacc") return Category::Vacc;
    if (s == "None") return Category::None;
    return std::nullopt;
}

bool is_valid_language_tag(std::string_view lang) {
    if (lang == "und") return true;
    return lang.size() == 2 && lang[0] >= 'a' && lang[0] <= 'z' && lang[1] >= 'a' &&
           lang[1] <= 'z';
}

}  // namespace redebunk
