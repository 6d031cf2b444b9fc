#include "sparsecut/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "sparsecut/cutsets.hpp"
#include "sparsecut/generators.hpp"
#include "sparsecut/io.hpp"
#include "sparsecut/oracles.hpp"

namespace sparsecut::cli {

using io::Json;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return kPrecondition;
        case ErrorKind::Precondition: return kPrecondition;
        case ErrorKind::BudgetExhausted: return kBudget;
        case ErrorKind::Invariant: return kInvariant;
    }
    return kInvariant;
}

namespace {

std::string status_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "invalid_input";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::BudgetExhausted: return "budget_exhausted";
        case ErrorKind::Invariant: return "invariant";
    }
    return "invariant";
}

bool env_flag(const char* name) {
    const char* v = std::getenv(name);
    return v && *v && std::string(v) != "0" && std::string(v) != "false";
}

std::optional<bool> env_bool(const char* name) {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    return std::string(v) != "0" && std::string(v) != "false";
}

std::uint64_t default_seed() {
    if (const char* v = std::getenv("SPARSECUT_SEED")) return std::strtoull(v, nullptr, 10);
    return 1;
}

// Result of running one command on one graph.
struct Job {
    int code = kOk;
    Json json;            // report printed on stdout, null if none
    std::string message;  // diagnostic for stderr
};

using Handler = std::function<Job(const Graph&)>;

struct InputOptions {
    std::string input = "-";
    std::string corpus;
    std::string format;
};

Graph load(const InputOptions& opt, std::istream& in, const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        text = io::read_file(path);
    }
    std::optional<io::GraphFormat> fmt;
    if (!opt.format.empty()) fmt = io::parse_format_name(opt.format);
    return io::parse_graph(text, fmt);
}

Job guarded(const Handler& h, const Graph& g) {
    try {
        return h(g);
    } catch (const Error& e) {
        return {exit_code_for(e.kind()), nullptr, e.what()};
    } catch (const std::exception& e) {
        return {kInvariant, nullptr, std::string("internal error: ") + e.what()};
    }
}

// Severity order for aggregating corpus runs.
int rank(int code) {
    switch (code) {
        case kInvariant: return 4;
        case kRejected: return 3;
        case kBudget: return 2;
        case kPrecondition: return 1;
        default: return 0;
    }
}

int dispatch(const InputOptions& opt, const Handler& h, std::istream& in, std::ostream& out, std::ostream& err) {
    if (opt.corpus.empty()) {
        Graph g;
        try {
            g = load(opt, in, opt.input);
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return exit_code_for(e.kind());
        }
        Job job = guarded(h, g);
        if (!job.json.is_null()) out << job.json.dump(2) << "\n";
        if (!job.message.empty()) err << "error: " << job.message << "\n";
        return job.code;
    }

    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(opt.corpus, ec))
        if (entry.is_regular_file()) files.push_back(entry.path());
    if (ec) {
        err << "error: cannot read corpus directory '" << opt.corpus << "': " << ec.message() << "\n";
        return kPrecondition;
    }
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
        return a.filename().string() < b.filename().string();
    });

    std::vector<Job> jobs(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
            std::istringstream none;
            try {
                jobs[i] = guarded(h, load(opt, none, files[i].string()));
            } catch (const Error& e) {
                jobs[i] = {exit_code_for(e.kind()), nullptr, e.what()};
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(files.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    int worst = kOk;
    Json results = Json::array();
    for (std::size_t i = 0; i < files.size(); ++i) {
        Json entry;
        entry["file"] = files[i].filename().string();
        entry["exit_code"] = jobs[i].code;
        entry["error"] = jobs[i].message.empty() ? Json(nullptr) : Json(jobs[i].message);
        entry["report"] = jobs[i].json;
        results.push_back(entry);
        if (rank(jobs[i].code) > rank(worst)) worst = jobs[i].code;
    }
    Json agg;
    agg["schema_version"] = io::kSchemaVersion;
    agg["files"] = files.size();
    agg["exit_code"] = worst;
    agg["results"] = results;
    out << agg.dump(2) << "\n";
    return worst;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool zero = false;
    std::int64_t ms() const {
        if (zero) return 0;
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
};

struct VerifyChoice {
    bool on = false;
    bool off = false;
    bool resolve(int n) const {
        if (on) return true;
        if (off) return false;
        if (auto e = env_bool("SPARSECUT_VERIFY")) return *e;
        return n <= 20;
    }
};

// Serializes the certificate, reads it back and hands only the parsed copy to
// the oracle check.
oracle::Verdict verify_serialized(const Graph& g, const Certificate& cert) {
    const std::string text = io::certificate_to_json(cert, g.order()).dump();
    Certificate parsed = io::certificate_from_json(Json::parse(text), g.order());
    ensure(parsed == cert, "certificate survives a JSON round trip");
    return oracle::verify_certificate(g, parsed);
}

// Fills certificate, stats and verification fields of a report.
int finish(io::RunReport& rep, const Graph& g, const Certificate& cert, bool verify) {
    rep.certificate = cert;
    if (auto* r = cutset_report(cert)) rep.stats = *r;
    if (!verify) return kOk;
    auto verdict = verify_serialized(g, cert);
    rep.verified = verdict.ok;
    if (!verdict.ok) {
        rep.status = "rejected";
        rep.error = "certificate rejected: " + verdict.reason;
        return kRejected;
    }
    return kOk;
}

Job report_job(io::RunReport& rep, const Graph& g, int code, bool zero_timing, const Timer& timer) {
    rep.timing_ms = zero_timing ? 0 : timer.ms();
    Job job{code, io::report_to_json(rep, g.order()), {}};
    if (rep.error) job.message = *rep.error;
    return job;
}

struct FindOptions {
    std::string method;
    std::optional<int> delta;
    std::optional<int> r;
    std::optional<int> u;
    bool allow_small = false;
    std::optional<int> max_n;
    std::string dot;
    VerifyChoice verify;
    bool zero_timing = false;
};

Json find_command(const FindOptions& o, const InputOptions& in) {
    Json c;
    c["operation"] = "find-cutset";
    c["method"] = o.method;
    if (o.delta) c["delta"] = *o.delta;
    if (o.r) c["r"] = *o.r;
    if (o.u) c["u"] = *o.u;
    if (o.allow_small) c["allow_small"] = true;
    if (o.max_n) c["max_n"] = *o.max_n;
    c["input"] = in.corpus.empty() ? in.input : "corpus";
    return c;
}

Json trace_json(const std::vector<cutsets::GrowthState>& trace) {
    Json out = Json::array();
    for (const auto& s : trace) {
        Json step;
        step["step"] = s.step;
        step["n_i"] = s.n_i;
        step["m_i"] = s.m_i;
        step["max_degree_in_S"] = s.s_max_degree;
        out.push_back(step);
    }
    return out;
}

Job run_find(const Graph& g, const FindOptions& o, const Json& command) {
    Timer timer;
    io::RunReport rep;
    rep.command = command;
    rep.input_digest = io::input_digest(g);
    const bool verify = o.verify.resolve(g.order());
    int code = kOk;
    try {
        Certificate cert = IsIcosahedron{};
        const std::string& m = o.method;
        if (m == "thm1") {
            const int delta = o.delta.value_or(std::max(3, g.max_degree()));
            auto res = cutsets::theorem1_run(g, delta);
            cert = GoodCutset{res.report, {static_cast<std::size_t>(delta), delta - 3, std::nullopt, false}};
            rep.details["direct"] = res.direct;
            rep.details["iterations"] = res.iterations();
            rep.details["trace"] = trace_json(res.trace);
        } else if (m == "thm2") {
            cert = cutsets::theorem2_cutset(g, {o.allow_small});
        } else if (m == "thm3") {
            cert = cutsets::theorem3_dichotomy(g);
        } else if (m == "thm4") {
            cert = cutsets::theorem4_independent_cutset(g);
        } else if (m == "thm5") {
            const int delta = o.delta.value_or(g.max_degree());
            const int r = o.r.value_or(2);
            auto res = cutsets::theorem5_run(g, delta, r);
            cert = res.certificate;
            rep.details["c"] = cutsets::theorem5_constant(delta, r);
            rep.details["rounds"] = res.trace.size();
        } else if (m == "prop2") {
            cutsets::Prop2Options p2;
            if (o.max_n) p2.contracted_cap = *o.max_n;
            auto report = cutsets::prop2_cutset(g, p2);
            cert = GoodCutset{report, {static_cast<std::size_t>(g.order() - 1), 1, std::nullopt, false}};
        } else if (m == "degenerate") {
            auto report = cutsets::degenerate_sparse_cutset(g, o.u.value_or(0));
            cert = GoodCutset{report, {static_cast<std::size_t>(g.order() - 1), g.max_degree() - 1, std::nullopt, false}};
        } else {
            fail(ErrorKind::InvalidInput, "unknown method '" + m + "'");
        }
        code = finish(rep, g, cert, verify);
        if (!o.dot.empty()) {
            auto* r = cutset_report(cert);
            io::write_file(o.dot, io::to_dot(g, r ? &r->cutset : nullptr));
        }
    } catch (const Error& e) {
        rep.status = status_for(e.kind());
        rep.error = e.what();
        code = exit_code_for(e.kind());
    }
    return report_job(rep, g, code, o.zero_timing, timer);
}

struct OracleOptions {
    std::string name;
    std::optional<int> max_n;
    std::optional<int> max_subset;
    std::optional<double> time;
    int max_delta = 1;
    std::string avg_below;
    int r = 2;
    VerifyChoice verify;
    bool zero_timing = false;
};

Json oracle_command(const OracleOptions& o, const InputOptions& in) {
    Json c;
    c["operation"] = "oracle";
    c["name"] = o.name;
    if (o.max_n) c["max_n"] = *o.max_n;
    if (o.max_subset) c["max_subset"] = *o.max_subset;
    if (o.time) c["time"] = *o.time;
    if (o.name == "constrained-cutset") {
        c["max_delta"] = o.max_delta;
        if (!o.avg_below.empty()) c["avg_below"] = o.avg_below;
    }
    if (o.name == "krr") c["r"] = o.r;
    c["input"] = in.corpus.empty() ? in.input : "corpus";
    return c;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        std::size_t used = 0;
        std::int64_t a = std::stoll(s.substr(0, slash), &used);
        std::int64_t b = slash == std::string::npos ? 1 : std::stoll(s.substr(slash + 1));
        require(b != 0, ErrorKind::InvalidInput, "zero denominator");
        return {a, b};
    } catch (const std::logic_error&) {
        fail(ErrorKind::InvalidInput, "malformed rational '" + s + "'");
    }
}

template <class T>
void put_status(Json& details, const oracle::Outcome<T>& r) {
    details["status"] = oracle::to_string(r.status);
}

Job run_oracle(const Graph& g, const OracleOptions& o, const Json& command) {
    Timer timer;
    io::RunReport rep;
    rep.command = command;
    rep.input_digest = io::input_digest(g);
    int code = kOk;
    try {
        auto budget = oracle::budget_from_env();
        if (o.max_n) budget.max_n = *o.max_n;
        if (o.max_subset) budget.max_subset_size = *o.max_subset;
        if (o.time) budget.time_hint = *o.time;
        bool exhausted = false;
        auto& d = rep.details;

        if (o.name == "independent-cutset" || o.name == "constrained-cutset") {
            auto res = o.name == "independent-cutset"
                           ? oracle::find_independent_cutset(g, budget)
                           : oracle::find_constrained_cutset(
                                 g, o.max_delta,
                                 o.avg_below.empty() ? std::nullopt : std::optional<Rational>(parse_rational(o.avg_below)),
                                 budget);
            put_status(d, res);
            exhausted = res.status == oracle::Status::BudgetExhausted;
            if (res.value) rep.stats = induced_stats(g, *res.value);
        } else if (o.name == "connectivity") {
            d["status"] = oracle::to_string(oracle::Status::Found);
            d["kappa"] = oracle::vertex_connectivity(g);
        } else if (o.name == "krr") {
            auto res = oracle::find_krr(g, o.r);
            d["status"] = oracle::to_string(res ? oracle::Status::Found : oracle::Status::None);
            if (res) code = finish(rep, g, KrrWitness{o.r, res->first, res->second}, o.verify.resolve(g.order()));
        } else if (o.name == "min-cutsets" || o.name == "minimal-cutsets") {
            Json sets = Json::array();
            if (o.name == "min-cutsets") {
                auto res = oracle::enumerate_min_cutsets(g, budget);
                put_status(d, res);
                exhausted = res.status == oracle::Status::BudgetExhausted;
                if (res.value) {
                    d["kappa"] = res.value->kappa ? Json(*res.value->kappa) : Json(nullptr);
                    for (const auto& s : res.value->cutsets) sets.push_back(io::vertex_set_to_json(s));
                }
            } else {
                auto res = oracle::enumerate_minimal_cutsets(g, budget);
                put_status(d, res);
                exhausted = res.status == oracle::Status::BudgetExhausted;
                if (res.value)
                    for (const auto& s : *res.value) sets.push_back(io::vertex_set_to_json(s));
            }
            d["cutsets"] = sets;
        } else if (o.name == "squared-cycle") {
            auto res = oracle::recognize_squared_cycle(g);
            d["status"] = oracle::to_string(res ? oracle::Status::Found : oracle::Status::None);
            if (res) code = finish(rep, g, SquaredCycleIso{*res}, o.verify.resolve(g.order()));
        } else {
            fail(ErrorKind::InvalidInput, "unknown oracle '" + o.name + "'");
        }
        if (exhausted) {
            rep.status = "budget_exhausted";
            rep.error = "oracle budget exhausted (caps: max_n = " + std::to_string(budget.max_n) +
                        ", max_subset = " + std::to_string(budget.max_subset_size) + ")";
            code = kBudget;
        }
    } catch (const Error& e) {
        rep.status = status_for(e.kind());
        rep.error = e.what();
        code = exit_code_for(e.kind());
    }
    return report_job(rep, g, code, o.zero_timing, timer);
}

Job run_verify(const Graph& g, const std::string& cert_path, const Json& command) {
    io::RunReport rep;
    rep.command = command;
    rep.input_digest = io::input_digest(g);
    Json j;
    try {
        j = Json::parse(io::read_file(cert_path));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("certificate file is not valid JSON: ") + e.what());
    }
    // Either a bare certificate or a full run report carrying one.
    if (j.is_object() && j.contains("schema_version")) {
        j = j.value("certificate", Json(nullptr));
        require(!j.is_null(), ErrorKind::InvalidInput, "report carries no certificate");
    }
    Certificate cert = io::certificate_from_json(j, g.order());
    int code = finish(rep, g, cert, true);
    Timer zero;
    return report_job(rep, g, code, true, zero);
}

Job run_report(const Graph& g, bool json) {
    const auto comps = components(g, VertexSet(g.order()));
    Json j;
    j["schema_version"] = io::kSchemaVersion;
    j["input_digest"] = io::input_digest(g);
    j["n"] = g.order();
    j["m"] = g.size();
    j["min_degree"] = g.order() ? g.min_degree() : 0;
    j["max_degree"] = g.order() ? g.max_degree() : 0;
    j["regular"] = g.order() && g.min_degree() == g.max_degree() ? Json(g.max_degree()) : Json(nullptr);
    j["components"] = comps.size();
    j["connected"] = comps.size() == 1;
    if (g.order() <= 62) j["graph6"] = io::emit_graph6(g);
    if (json) return {kOk, j, {}};
    std::ostringstream os;
    for (auto it = j.begin(); it != j.end(); ++it) os << it.key() << ": " << it.value().dump() << "\n";
    // plain text goes through the same printing path as a JSON string
    Job job{kOk, nullptr, {}};
    job.json = Json(os.str());
    return job;
}

Graph generate(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed) {
    auto arg = [&](std::size_t i, const char* what) {
        require(i < params.size(), ErrorKind::InvalidInput, family + " needs parameter <" + what + ">");
        try {
            return std::stoi(params[i]);
        } catch (const std::logic_error&) {
            fail(ErrorKind::InvalidInput, "parameter <" + std::string(what) + "> must be an integer");
        }
    };
    if (family == "icosahedron") return gen::icosahedron();
    if (family == "squared-cycle") return gen::squared_cycle(arg(0, "n"));
    if (family == "squared-path") return gen::squared_path(arg(0, "n"));
    if (family == "figure2" || family == "figure2-pattern") return gen::figure2_pattern(arg(0, "blocks"));
    if (family == "clique-chain") {
        gen::CliqueChainParams p;
        if (!params.empty()) p.delta = arg(0, "delta");
        if (params.size() > 1) p.base_length = arg(1, "base_length");
        if (params.size() > 2) {
            require(params[2] == "cycle" || params[2] == "path", ErrorKind::InvalidInput, "base kind must be cycle or path");
            p.base_is_cycle = params[2] == "cycle";
        }
        p.seed = seed;
        return gen::clique_chain(p).graph;
    }
    if (family == "random-regular") return gen::random_regular(arg(0, "n"), arg(1, "d"), seed);
    if (family == "complete") return gen::complete_graph(arg(0, "n"));
    if (family == "path") return gen::path_graph(arg(0, "n"));
    if (family == "cycle") return gen::cycle_graph(arg(0, "n"));
    if (family == "petersen") return gen::petersen_graph();
    if (family == "projective-plane-4") return gen::projective_plane_incidence_q4();
    return gen::named_small(gen::parse_named(family));
}

void add_input(CLI::App* app, InputOptions& in, bool corpus) {
    app->add_option("-i,--input", in.input, "graph file, '-' for stdin");
    app->add_option("--format", in.format, "edgelist or graph6 (default: detect)");
    if (corpus) app->add_option("--corpus", in.corpus, "process every file in DIR");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sparse cutsets in bounded-degree graphs", "sparsecut"};
    app.require_subcommand(1);

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "write a fixture graph");
    std::string family;
    std::vector<std::string> params;
    std::uint64_t seed = default_seed();
    std::string out_path, out_format = "edgelist";
    gen_cmd->add_option("family", family, "graph family")->required();
    gen_cmd->add_option("params", params, "family parameters");
    gen_cmd->add_option("--seed", seed, "RNG seed (default $SPARSECUT_SEED or 1)");
    gen_cmd->add_option("-o,--output", out_path, "output path (default stdout)");
    gen_cmd->add_option("--format", out_format, "edgelist or graph6");

    // find-cutset
    auto* find_cmd = app.add_subcommand("find-cutset", "run a cutset construction");
    InputOptions find_in;
    FindOptions fo;
    add_input(find_cmd, find_in, true);
    find_cmd->add_option("--method", fo.method, "thm1, thm2, thm3, thm4, thm5, prop2 or degenerate")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "thm3", "thm4", "thm5", "prop2", "degenerate"}));
    find_cmd->add_option("--delta", fo.delta, "degree bound (default: maximum degree)");
    find_cmd->add_option("--r", fo.r, "K_{r,r} side size for thm5 (default 2)");
    find_cmd->add_option("--u", fo.u, "start vertex for degenerate (default 0)");
    find_cmd->add_option("--max-n", fo.max_n, "order cap for the prop2 contracted search");
    find_cmd->add_flag("--allow-small", fo.allow_small, "thm2: skip the n >= 14 gate");
    find_cmd->add_option("--dot", fo.dot, "write DOT with the cutset highlighted");
    find_cmd->add_flag("--verify", fo.verify.on, "re-check the certificate with the oracles");
    find_cmd->add_flag("--no-verify", fo.verify.off, "skip the oracle re-check");
    find_cmd->add_flag("--zero-timing", fo.zero_timing, "report timing_ms = 0");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "run an exhaustive oracle");
    InputOptions oracle_in;
    OracleOptions oo;
    add_input(oracle_cmd, oracle_in, true);
    oracle_cmd->add_option("name", oo.name, "oracle name")
        ->required()
        ->check(CLI::IsMember({"independent-cutset", "constrained-cutset", "connectivity", "krr", "min-cutsets",
                               "minimal-cutsets", "squared-cycle"}));
    oracle_cmd->add_option("--max-n", oo.max_n, "order cap");
    oracle_cmd->add_option("--max-subset", oo.max_subset, "subset size cap");
    oracle_cmd->add_option("--time", oo.time, "soft time limit in seconds");
    oracle_cmd->add_option("--max-delta", oo.max_delta, "constrained-cutset: inner degree bound");
    oracle_cmd->add_option("--avg-below", oo.avg_below, "constrained-cutset: strict average degree bound p/q");
    oracle_cmd->add_option("--r", oo.r, "krr: side size");
    oracle_cmd->add_flag("--verify", oo.verify.on, "re-check certificates");
    oracle_cmd->add_flag("--no-verify", oo.verify.off, "skip the re-check");
    oracle_cmd->add_flag("--zero-timing", oo.zero_timing, "report timing_ms = 0");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a certificate against a graph");
    InputOptions verify_in;
    std::string cert_path;
    add_input(verify_cmd, verify_in, false);
    verify_cmd->add_option("--certificate", cert_path, "certificate or report JSON")->required();

    // report
    auto* report_cmd = app.add_subcommand("report", "summarize a graph");
    InputOptions report_in;
    bool report_json = false;
    add_input(report_cmd, report_in, true);
    report_cmd->add_flag("--json", report_json, "JSON output");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    }

    const bool zero_env = env_flag("SPARSECUT_ZERO_TIMING");
    try {
        if (gen_cmd->parsed()) {
            Graph g = generate(family, params, seed);
            auto text = io::emit_graph(g, io::parse_format_name(out_format));
            if (out_path.empty() || out_path == "-")
                out << text;
            else
                io::write_file(out_path, text);
            return kOk;
        }
        if (find_cmd->parsed()) {
            fo.zero_timing = fo.zero_timing || zero_env;
            const Json command = find_command(fo, find_in);
            return dispatch(find_in, [&](const Graph& g) { return run_find(g, fo, command); }, in, out, err);
        }
        if (oracle_cmd->parsed()) {
            oo.zero_timing = oo.zero_timing || zero_env;
            const Json command = oracle_command(oo, oracle_in);
            return dispatch(oracle_in, [&](const Graph& g) { return run_oracle(g, oo, command); }, in, out, err);
        }
        if (verify_cmd->parsed()) {
            Json command;
            command["operation"] = "verify";
            command["input"] = verify_in.input;
            command["certificate"] = cert_path;
            return dispatch(verify_in, [&](const Graph& g) { return run_verify(g, cert_path, command); }, in, out, err);
        }
        if (report_cmd->parsed()) {
            if (report_json || !report_in.corpus.empty())
                return dispatch(report_in, [&](const Graph& g) { return run_report(g, true); }, in, out, err);
            Graph g = load(report_in, in, report_in.input);
            out << run_report(g, false).json.get<std::string>();
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    return kPrecondition;
}

}  // namespace sparsecut::cli
