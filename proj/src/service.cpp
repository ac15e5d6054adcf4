#include "redebunk/service.hpp"

#include <charconv>
#include <mutex>

#include "httplib.h"
#include "json.hpp"

namespace redebunk {

namespace {

using nlohmann::ordered_json;

std::optional<std::size_t> parse_k(const std::string& raw) {
    std::size_t k = 0;
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), k);
    if (ec != std::errc{} || ptr != raw.data() + raw.size() || k < 1) return std::nullopt;
    return k;
}

std::optional<double> parse_threshold(const std::string& raw) {
    try {
        std::size_t used = 0;
        const double v = std::stod(raw, &used);
        if (used != raw.size() || !(v >= 0.0 && v <= 1.0)) return std::nullopt;
        return v;
    } catch (...) {
        return std::nullopt;
    }
}

void bad_request(httplib::Response& res, std::string_view message) {
    ordered_json err;
    err["error"] = std::string(message);
    res.status = 400;
    res.set_content(err.dump(), "application/json");
}

}  // namespace

struct SearchService::Impl {
    Runtime& runtime;
    std::size_t default_k;
    double default_threshold;
    httplib::Server server;
    std::mutex backend_mutex;  // taken only for non-thread-safe backends
    std::string host;
    int port = -1;

    Impl(Runtime& rt, std::size_t k, double threshold)
        : runtime(rt), default_k(k), default_threshold(threshold) {
        server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
            res.set_content("ok", "text/plain");
        });
        server.Get("/search", [this](const httplib::Request& req, httplib::Response& res) {
            handle_search(req, res);
        });
    }

    void handle_search(const httplib::Request& req, httplib::Response& res) {
        if (!req.has_param("q")) {
            bad_request(res, "missing required parameter q");
            return;
        }
        const std::string q = req.get_param_value("q");
        std::size_t k = default_k;
        if (req.has_param("k")) {
            auto parsed = parse_k(req.get_param_value("k"));
            if (!parsed) {
                bad_request(res, "k must be an integer >= 1");
                return;
            }
            k = *parsed;
        }
        double threshold = default_threshold;
        if (req.has_param("threshold")) {
            auto parsed = parse_threshold(req.get_param_value("threshold"));
            if (!parsed) {
                bad_request(res, "threshold must be a number in [0,1]");
                return;
            }
            threshold = *parsed;
        }

        QueryResult result;
        if (runtime.backend->thread_safe()) {
            result = search_debunks(runtime, q, k, threshold);
        } else {
            std::lock_guard<std::mutex> guard(backend_mutex);
            result = search_debunks(runtime, q, k, threshold);
        }

        ordered_json hits = ordered_json::array();
        for (const auto& hit : result.hits) {
            ordered_json row;
            row["id"] = hit.record->id;
            row["claim"] = hit.record->claim_text;
            row["org"] = hit.record->organisation;
            row["date"] = hit.record->debunk_date.to_string();
            row["lang"] = hit.record->language;
            row["url"] = hit.record->url;
            row["score"] = hit.relevance;
            hits.push_back(std::move(row));
        }
        res.set_content(hits.dump(), "application/json");
    }
};

SearchService::SearchService(Runtime& runtime, std::size_t default_k, double default_threshold)
    : impl_(std::make_unique<Impl>(runtime, default_k, default_threshold)) {}

SearchService::~SearchService() = default;

int SearchService::bind(const std::string& host, int port) {
    impl_->host = host;
    if (port == 0) {
        impl_->port = impl_->server.bind_to_any_port(host);
        return impl_->port;
    }
    if (!impl_->server.bind_to_port(host, port)) return -1;
    impl_->port = port;
    return port;
}

bool SearchService::serve() { return impl_->server.listen_after_bind(); }

void SearchService::stop() { impl_->server.stop(); }

}  // namespace redebunk
