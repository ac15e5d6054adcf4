#pragma once

#include <string>

#include "redebunk/pipeline.hpp"

namespace redebunk {

// Read-only search endpoints over an immutable runtime:
//   GET /health                                -> 200 "ok"
//   GET /search?q=<text>&k=<int>&threshold=<f> -> JSON array of
//        {id, claim, org, date, lang, url, score}; 400 on bad parameters
class SearchService {
public:
    SearchService(Runtime& runtime, std::size_t default_k, double default_threshold);
    ~SearchService();

    SearchService(const SearchService&) = delete;
    SearchService& operator=(const SearchService&) = delete;

    // Port 0 picks a free port. Returns the bound port, or -1 on failure.
    int bind(const std::string& host, int port);

    // Blocks until stop(). bind() must have succeeded.
    bool serve();

    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace redebunk
