#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "redebunk/pipeline.hpp"
#include "redebunk/report.hpp"
#include "redebunk/service.hpp"

namespace {

using namespace redebunk;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;    // usage or configuration error
constexpr int kExitData = 2;     // unreadable or malformed data
constexpr int kExitBackend = 3;  // external backend failure

struct CommonOpts {
    std::string input;
    std::string out = ".";
    std::string backend = "tfidf-cosine";
    std::string backend_cmd;
    std::size_t ngram_size = 3;
    std::size_t k = 50;
    double threshold = 0.8;
    std::string aliases_file;
    std::string rules_file;
    std::string modality_rules_file;
    unsigned jobs = 1;
    double lang_floor = langid::kDefaultFloor;
    double k1 = 1.5;
    double b = 0.75;
};

// Plain `key = value` config, one per line, '#' comments. Keys are the long
// flag names without the leading dashes. Values set here act as defaults;
// command-line flags take precedence.
void apply_config_file(const std::string& path, CommonOpts& opts, std::string& links_file,
                       std::string& bind_addr) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    const auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const auto unquote = [](std::string s) {
        if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                              (s.front() == '\'' && s.back() == '\''))) {
            return s.substr(1, s.size() - 2);
        }
        return s;
    };
    const auto in_range = [](double v, double lo, double hi) { return v >= lo && v <= hi; };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key = value");
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string value = unquote(trim(t.substr(eq + 1)));
        const auto bad = [&](const std::string& why) {
            return std::invalid_argument("config line " + std::to_string(line_no) + ": " + why);
        };
        try {
            if (key == "input") opts.input = value;
            else if (key == "out") opts.out = value;
            else if (key == "backend") {
                if (value != "tfidf-cosine" && value != "char-ngram" && value != "external") {
                    throw bad("unknown backend " + value);
                }
                opts.backend = value;
            } else if (key == "backend-cmd") opts.backend_cmd = value;
            else if (key == "ngram-size") {
                opts.ngram_size = std::stoul(value);
                if (opts.ngram_size < 1 || opts.ngram_size > 16) throw bad("ngram-size out of range");
            } else if (key == "k") {
                opts.k = std::stoul(value);
                if (opts.k < 1) throw bad("k must be >= 1");
            } else if (key == "threshold") {
                opts.threshold = std::stod(value);
                if (!in_range(opts.threshold, 0.0, 1.0)) throw bad("threshold must be in [0,1]");
            } else if (key == "k1") {
                opts.k1 = std::stod(value);
                if (!in_range(opts.k1, 0.0, 100.0)) throw bad("k1 out of range");
            } else if (key == "b") {
                opts.b = std::stod(value);
                if (!in_range(opts.b, 0.0, 1.0)) throw bad("b must be in [0,1]");
            } else if (key == "aliases") opts.aliases_file = value;
            else if (key == "rules") opts.rules_file = value;
            else if (key == "modality-rules") opts.modality_rules_file = value;
            else if (key == "lang-floor") {
                opts.lang_floor = std::stod(value);
                if (!in_range(opts.lang_floor, 0.0, 1.0)) throw bad("lang-floor must be in [0,1]");
            } else if (key == "jobs") {
                opts.jobs = static_cast<unsigned>(std::stoul(value));
                if (opts.jobs < 1 || opts.jobs > 256) throw bad("jobs out of range");
            } else if (key == "bind") bind_addr = value;
            else if (key == "links") links_file = value;
            else throw bad("unknown key " + key);
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw bad("invalid value for " + key);
        }
    }
}

void add_corpus_options(CLI::App& cmd, CommonOpts& opts, std::string& config_sink) {
    cmd.add_option("--config", config_sink, "key=value config file; flags take precedence");
    cmd.add_option("--input,-i", opts.input, "corpus file, one record per line");
    cmd.add_option("--aliases", opts.aliases_file, "alias file, one alias per line");
    cmd.add_option("--rules", opts.rules_file, "category rule file");
    cmd.add_option("--modality-rules", opts.modality_rules_file, "modality rule file");
    cmd.add_option("--lang-floor", opts.lang_floor, "language-id similarity floor")
        ->check(CLI::Range(0.0, 1.0));
}

void add_retrieval_options(CLI::App& cmd, CommonOpts& opts) {
    cmd.add_option("--backend", opts.backend, "similarity backend")
        ->check(CLI::IsMember({"tfidf-cosine", "char-ngram", "external"}));
    cmd.add_option("--backend-cmd", opts.backend_cmd, "external backend command line");
    cmd.add_option("--ngram-size", opts.ngram_size, "char-ngram size")->check(CLI::Range(1, 16));
    cmd.add_option("--k", opts.k, "lexical candidate depth")->check(CLI::Range(1, 1000000));
    cmd.add_option("--threshold", opts.threshold, "relevance threshold in [0,1]")
        ->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--k1", opts.k1, "BM25 k1")->check(CLI::Range(0.0, 100.0));
    cmd.add_option("--b", opts.b, "BM25 b")->check(CLI::Range(0.0, 1.0));
}

EnrichmentTools make_tools(const CommonOpts& opts) {
    EnrichmentTools tools;
    if (!opts.aliases_file.empty()) tools.aliases = AliasSet::from_file(opts.aliases_file);
    if (!opts.rules_file.empty()) tools.category_rules = CategoryRules::from_file(opts.rules_file);
    if (!opts.modality_rules_file.empty()) {
        tools.modality_rules = ModalityRules::from_file(opts.modality_rules_file);
    }
    tools.lang_floor = opts.lang_floor;
    return tools;
}

BackendConfig make_backend_config(const CommonOpts& opts) {
    BackendConfig config;
    config.kind = opts.backend;
    config.ngram_size = opts.ngram_size;
    config.external_command = opts.backend_cmd;
    return config;
}

void report_issues(const std::vector<ParseIssue>& issues) {
    for (const auto& issue : issues) {
        std::cerr << "line " << issue.line << ": " << issue.reason << '\n';
    }
}

int run_ingest(const CommonOpts& opts) {
    const EnrichmentTools tools = make_tools(opts);
    LoadedCorpus loaded = load_corpus_file(opts.input, tools);
    std::filesystem::create_directories(opts.out);

    const auto corpus_path = std::filesystem::path(opts.out) / "corpus.jsonl";
    std::ofstream corpus_out(corpus_path, std::ios::binary);
    if (!corpus_out) throw std::runtime_error("cannot open " + corpus_path.string());
    for (const auto& record : loaded.corpus.records()) {
        corpus_out << serialize_record(record) << '\n';
    }

    const auto issues_path = std::filesystem::path(opts.out) / "issues.jsonl";
    std::ofstream issues_out(issues_path, std::ios::binary);
    if (!issues_out) throw std::runtime_error("cannot open " + issues_path.string());
    for (const auto& issue : loaded.issues) {
        issues_out << "{\"line\":" << issue.line
                   << ",\"reason\":" << nlohmann::json(issue.reason).dump() << "}\n";
    }

    std::cerr << loaded.corpus.size() << " records, " << loaded.issues.size() << " issues\n";
    return kExitOk;
}

// Shared by dedup and report: the full retrieve-rerank-constrain pass.
struct DedupRun {
    Runtime runtime;
    DedupOutput output;
};

DedupRun run_pipeline(const CommonOpts& opts) {
    DedupRun run{Runtime::open(opts.input, make_tools(opts), make_backend_config(opts),
                               Bm25Params{opts.k1, opts.b}),
                 {}};
    report_issues(run.runtime.data.issues);
    DedupConfig config;
    config.k = opts.k;
    config.threshold = opts.threshold;
    config.jobs = opts.jobs;
    run.output = find_duplicates(run.runtime.data.corpus, run.runtime.data.normalized,
                                 run.runtime.index, *run.runtime.backend, config);
    return run;
}

std::vector<DuplicateLink> one_to_one_vector(const std::vector<DuplicateLink>& links) {
    std::vector<DuplicateLink> out;
    for (auto& [_, link] : to_one_to_one(links)) out.push_back(link);
    return out;
}

int backend_exit_code(const Runtime& runtime) {
    const auto* external = dynamic_cast<const ExternalBackend*>(runtime.backend.get());
    return external && !external->alive() ? kExitBackend : kExitOk;
}

int run_dedup(const CommonOpts& opts) {
    DedupRun run = run_pipeline(opts);
    const std::filesystem::path out_dir(opts.out);
    std::filesystem::create_directories(out_dir);

    report::write_links_jsonl(out_dir / "links.jsonl", run.output.links);
    report::write_links_csv(out_dir / "links.csv", run.output.links);
    const auto reduced = one_to_one_vector(run.output.links);
    report::write_links_jsonl(out_dir / "one_to_one.jsonl", reduced);
    report::write_links_csv(out_dir / "one_to_one.csv", reduced);
    report::write_clusters_jsonl(out_dir / "clusters.jsonl",
                                 cluster(run.output.links, run.runtime.data.corpus));
    if (!run.output.skipped.empty()) {
        report::write_skipped_jsonl(out_dir / "skipped_pairs.jsonl", run.output.skipped);
        std::cerr << run.output.skipped.size() << " pairs skipped (backend errors)\n";
    }
    std::cerr << run.output.links.size() << " links, " << reduced.size() << " query claims\n";
    return backend_exit_code(run.runtime);
}

int run_report(const CommonOpts& opts, const std::string& links_file) {
    report::ReportConfig report_config;
    report_config.threshold = opts.threshold;
    report_config.k = opts.k;

    Runtime runtime{};
    std::vector<DuplicateLink> links;
    if (!links_file.empty()) {
        const EnrichmentTools tools = make_tools(opts);
        runtime.tools = tools;
        runtime.data = load_corpus_file(opts.input, tools);
        report_issues(runtime.data.issues);
        links = report::read_links_jsonl(links_file);
        report_config.backend_name = "links-file";
    } else {
        DedupRun run = run_pipeline(opts);
        runtime = std::move(run.runtime);
        links = std::move(run.output.links);
        report_config.backend_name = opts.backend;
    }

    const auto reduced = one_to_one_vector(links);
    report::write_report(opts.out, runtime.data.corpus, links, reduced,
                         cluster(links, runtime.data.corpus), report_config);
    std::cerr << "report written to " << opts.out << '\n';
    return links_file.empty() ? backend_exit_code(runtime) : kExitOk;
}

int run_query(const CommonOpts& opts, const std::string& claim) {
    Runtime runtime = Runtime::open(opts.input, make_tools(opts), make_backend_config(opts),
                                    Bm25Params{opts.k1, opts.b});
    QueryResult result = search_debunks(runtime, claim, opts.k, opts.threshold);
    for (const auto& warning : result.warnings) std::cerr << "skipped " << warning << '\n';
    std::cout << "id\tscore\tdate\torg\tlang\turl\tclaim\n";
    for (const auto& hit : result.hits) {
        std::cout << hit.record->id << '\t' << report::format_score(hit.relevance) << '\t'
                  << hit.record->debunk_date.to_string() << '\t' << hit.record->organisation
                  << '\t' << hit.record->language << '\t' << hit.record->url << '\t'
                  << hit.record->claim_text << '\n';
    }
    return backend_exit_code(runtime);
}

int run_serve(const CommonOpts& opts, const std::string& bind_addr) {
    const auto colon = bind_addr.rfind(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("--bind expects host:port");
    }
    const std::string host = bind_addr.substr(0, colon);
    int port = 0;
    try {
        port = std::stoi(bind_addr.substr(colon + 1));
    } catch (...) {
        throw std::invalid_argument("--bind expects host:port");
    }

    Runtime runtime = Runtime::open(opts.input, make_tools(opts), make_backend_config(opts),
                                    Bm25Params{opts.k1, opts.b});
    report_issues(runtime.data.issues);
    SearchService service(runtime, opts.k, opts.threshold);
    const int bound = service.bind(host, port);
    if (bound < 0) throw std::runtime_error("cannot bind to " + bind_addr);
    std::cerr << "serving " << runtime.data.corpus.size() << " debunks on http://" << host << ':'
              << bound << '\n';
    service.serve();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"search previously fact-checked claims and analyse duplicate debunks"};
    app.require_subcommand(1);

    CommonOpts opts;
    opts.out.clear();
    std::string links_file;
    std::string claim;
    std::string bind_addr = "127.0.0.1:8080";
    std::string config_sink;

    // config file values act as defaults, so they are applied before parsing
    try {
        std::string config_path;
        for (int i = 1; i < argc; ++i) {
            const std::string arg = argv[i];
            if (arg == "--config" && i + 1 < argc) config_path = argv[i + 1];
            else if (arg.rfind("--config=", 0) == 0) config_path = arg.substr(9);
        }
        if (!config_path.empty()) apply_config_file(config_path, opts, links_file, bind_addr);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }

    CLI::App* ingest = app.add_subcommand("ingest", "validate and enrich a corpus file");
    add_corpus_options(*ingest, opts, config_sink);
    ingest->add_option("--out,-o", opts.out, "output directory");

    CLI::App* dedup = app.add_subcommand("dedup", "find earlier debunks of each claim");
    add_corpus_options(*dedup, opts, config_sink);
    add_retrieval_options(*dedup, opts);
    dedup->add_option("--out,-o", opts.out, "output directory");
    dedup->add_option("--jobs,-j", opts.jobs, "worker threads")->check(CLI::Range(1, 256));

    CLI::App* report_cmd = app.add_subcommand("report", "emit the analytics data tables");
    add_corpus_options(*report_cmd, opts, config_sink);
    add_retrieval_options(*report_cmd, opts);
    report_cmd->add_option("--out,-o", opts.out, "output directory");
    report_cmd->add_option("--links", links_file, "precomputed links.jsonl (skips retrieval)");
    report_cmd->add_option("--jobs,-j", opts.jobs, "worker threads")->check(CLI::Range(1, 256));

    CLI::App* query = app.add_subcommand("query", "search prior debunks for an ad-hoc claim");
    add_corpus_options(*query, opts, config_sink);
    add_retrieval_options(*query, opts);
    query->add_option("claim", claim, "claim text")->required();

    CLI::App* serve = app.add_subcommand("serve", "read-only HTTP search service");
    add_corpus_options(*serve, opts, config_sink);
    add_retrieval_options(*serve, opts);
    serve->add_option("--bind", bind_addr, "host:port (default 127.0.0.1:8080)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (opts.input.empty()) throw std::invalid_argument("--input is required");
        const bool needs_out =
            app.got_subcommand(ingest) || app.got_subcommand(dedup) || app.got_subcommand(report_cmd);
        if (needs_out && opts.out.empty()) throw std::invalid_argument("--out is required");

        if (app.got_subcommand(ingest)) return run_ingest(opts);
        if (app.got_subcommand(dedup)) return run_dedup(opts);
        if (app.got_subcommand(report_cmd)) return run_report(opts, links_file);
        if (app.got_subcommand(query)) return run_query(opts, claim);
        if (app.got_subcommand(serve)) return run_serve(opts, bind_addr);
    } catch (const BackendError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBackend;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}
