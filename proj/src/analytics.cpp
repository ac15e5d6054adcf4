#include "redebunk/analytics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace redebunk {

GapHistogram gap_histogram(const std::vector<DuplicateLink>& one_to_one, int bin_width_days) {
    if (bin_width_days < 1) throw std::invalid_argument("bin width must be >= 1");
    GapHistogram h;
    h.bin_width_days = bin_width_days;
    for (const auto& link : one_to_one) {
        if (link.day_gap < 1) throw std::invalid_argument("day gap must be >= 1");
        const auto bin = static_cast<std::size_t>((link.day_gap - 1) / bin_width_days);
        if (bin >= h.bins.size()) h.bins.resize(bin + 1, 0);
        ++h.bins[bin];
    }
    while (!h.bins.empty() && h.bins.back() == 0) h.bins.pop_back();
    return h;
}

namespace {

const DebunkRecord& record_of(const Corpus& corpus, const std::string& id) {
    const DebunkRecord* rec = corpus.find(id);
    if (!rec) throw std::logic_error("link references unknown id: " + id);
    return *rec;
}

// First-listed value, or nullopt when the list is empty.
std::optional<std::string> representative(const std::vector<std::string>& values) {
    if (values.empty()) return std::nullopt;
    return values.front();
}

}  // namespace

CountryTransitions country_transitions(const Corpus& corpus,
                                       const std::vector<DuplicateLink>& one_to_one) {
    CountryTransitions out;
    out.same.dimension = "country";
    out.diff.dimension = "country";
    for (const auto& link : one_to_one) {
        const auto to = representative(record_of(corpus, link.query_id).countries);
        const auto from = representative(record_of(corpus, link.duplicate_id).countries);
        if (!to || !from) {
            ++out.undefined;
            continue;
        }
        if (*to == *from) {
            ++out.same.counts[{*to, *from}];
        } else {
            ++out.diff.counts[{*to, *from}];
        }
    }
    return out;
}

TransitionTable platform_transitions(const Corpus& corpus,
                                     const std::vector<DuplicateLink>& one_to_one) {
    TransitionTable table;
    table.dimension = "platform";
    for (const auto& link : one_to_one) {
        const auto to = representative(record_of(corpus, link.query_id).platforms);
        const auto from = representative(record_of(corpus, link.duplicate_id).platforms);
        if (!to || !from) {
            ++table.undefined;
            continue;
        }
        ++table.counts[{*to, *from}];
    }
    return table;
}

TransitionTable modality_transitions(const Corpus& corpus,
                                     const std::vector<DuplicateLink>& one_to_one) {
    TransitionTable table;
    table.dimension = "modality";
    for (const auto& link : one_to_one) {
        const auto& q = record_of(corpus, link.query_id);
        const auto& d = record_of(corpus, link.duplicate_id);
        if (!q.modality || !d.modality) {
            ++table.undefined;
            continue;
        }
        ++table.counts[{std::string(to_string(*q.modality)), std::string(to_string(*d.modality))}];
    }
    return table;
}

TransitionTable language_pairs(const Corpus& corpus,
                               const std::vector<DuplicateLink>& one_to_one) {
    TransitionTable table;
    table.dimension = "language";
    for (const auto& link : one_to_one) {
        const auto& q = record_of(corpus, link.query_id);
        const auto& d = record_of(corpus, link.duplicate_id);
        if (q.language.empty() || d.language.empty()) {
            ++table.undefined;
            continue;
        }
        ++table.counts[{q.language, d.language}];
    }
    return table;
}

CrosslingualGap crosslingual_gap(const Corpus& corpus, const std::vector<DuplicateLink>& links) {
    std::map<std::string, bool> has_same_language;  // query id -> any same-language duplicate
    for (const auto& link : links) {
        const auto& q = record_of(corpus, link.query_id);
        const auto& d = record_of(corpus, link.duplicate_id);
        auto [it, _] = has_same_language.try_emplace(link.query_id, false);
        if (!q.language.empty() && q.language == d.language) it->second = true;
    }
    CrosslingualGap gap;
    for (const auto& [id, same] : has_same_language) {
        if (!same) gap.query_ids.push_back(id);
    }
    gap.count = gap.query_ids.size();
    return gap;
}

std::map<Category, CategoryStat> category_distribution(
    const Corpus& corpus, const std::vector<DuplicateLink>& one_to_one) {
    std::map<Category, CategoryStat> dist;
    std::uint64_t total = 0;
    for (const auto& link : one_to_one) {
        const auto& q = record_of(corpus, link.query_id);
        ++dist[q.category.value_or(Category::None)].count;
        ++total;
    }
    for (auto& [_, stat] : dist) {
        stat.proportion = static_cast<double>(stat.count) / static_cast<double>(total);
    }
    return dist;
}

std::vector<std::pair<Category, std::int64_t>> category_gap_scatter(
    const Corpus& corpus, const std::vector<DuplicateLink>& one_to_one) {
    std::vector<std::pair<Category, std::int64_t>> points;
    points.reserve(one_to_one.size());
    for (const auto& link : one_to_one) {
        const auto& q = record_of(corpus, link.query_id);
        points.emplace_back(q.category.value_or(Category::None), link.day_gap);
    }
    return points;
}

std::vector<TimelineEvent> timeline(const ClaimCluster& c, const Corpus& corpus) {
    if (c.member_ids.size() < 2) {
        throw std::invalid_argument("clusters have >= 2 members");
    }
    std::vector<TimelineEvent> events;
    events.reserve(c.member_ids.size());
    for (const auto& id : c.member_ids) {
        const auto& rec = record_of(corpus, id);
        events.push_back({rec.debunk_date, rec.organisation, rec.language, rec.countries,
                          rec.platforms, rec.modality.value_or(Modality::Unknown)});
    }
    std::sort(events.begin(), events.end(), [](const TimelineEvent& a, const TimelineEvent& b) {
        if (a.date != b.date) return a.date < b.date;
        return a.organisation < b.organisation;
    });
    return events;
}

std::map<std::string, std::uint64_t> query_country_counts(
    const Corpus& corpus, const std::vector<DuplicateLink>& one_to_one) {
    std::map<std::string, std::uint64_t> counts;
    for (const auto& link : one_to_one) {
        if (auto c = representative(record_of(corpus, link.query_id).countries)) ++counts[*c];
    }
    return counts;
}

std::map<std::string, std::uint64_t> query_org_counts(
    const Corpus& corpus, const std::vector<DuplicateLink>& one_to_one) {
    std::map<std::string, std::uint64_t> counts;
    for (const auto& link : one_to_one) {
        ++counts[record_of(corpus, link.query_id).organisation];
    }
    return counts;
}

std::vector<std::pair<std::string, std::uint64_t>> top_n(
    const std::map<std::string, std::uint64_t>& counts, std::size_t n) {
    std::vector<std::pair<std::string, std::uint64_t>> entries(counts.begin(), counts.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (entries.size() > n) entries.resize(n);
    return entries;
}

std::vector<std::pair<std::pair<std::string, std::string>, std::uint64_t>> top_n(
    const TransitionTable& table, std::size_t n) {
    std::vector<std::pair<std::pair<std::string, std::string>, std::uint64_t>> entries(
        table.counts.begin(), table.counts.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (entries.size() > n) entries.resize(n);
    return entries;
}

}  // namespace redebunk
