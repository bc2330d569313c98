#include "ggt/report.hpp"
#include "ggt/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string now_iso8601() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

struct RunOptions {
    ggt::suites::SuiteConfig cfg;
    std::string out_path;
    std::string format = "json";
    bool seed_set = false;
};

// config file: JSON object with the same keys as the flags; unknown keys are
// rejected with their names
void apply_config_file(const std::string& path, RunOptions& opt) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(ss.str());
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    static const std::set<std::string> known{"suite", "family", "n",      "r",     "dims",
                                             "seed",  "budget", "graph",  "radii", "out",
                                             "format", "dot_out"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            throw std::invalid_argument("config: unknown key '" + it.key() + "'");
    if (j.contains("suite")) opt.cfg.suite = j["suite"].get<std::string>();
    if (j.contains("family")) opt.cfg.family = j["family"].get<std::string>();
    if (j.contains("n")) opt.cfg.n = j["n"].get<int>();
    if (j.contains("r")) opt.cfg.r = j["r"].get<int>();
    if (j.contains("dims")) opt.cfg.dims = j["dims"].get<int>();
    if (j.contains("seed")) {
        opt.cfg.seed = j["seed"].get<uint64_t>();
        opt.seed_set = true;
    }
    if (j.contains("budget")) opt.cfg.budget = j["budget"].get<int>();
    if (j.contains("graph")) {
        const auto& g = j["graph"];
        static const std::set<std::string> gkeys{"kind", "param", "file", "perms"};
        for (auto it = g.begin(); it != g.end(); ++it)
            if (!gkeys.count(it.key()))
                throw std::invalid_argument("config: unknown graph key '" + it.key() + "'");
        if (g.contains("kind")) opt.cfg.graph_kind = g["kind"].get<std::string>();
        if (g.contains("param")) opt.cfg.graph_param = g["param"].get<int>();
        if (g.contains("file")) opt.cfg.graph_file = g["file"].get<std::string>();
        if (g.contains("perms")) opt.cfg.cayley_gens = g["perms"].get<std::vector<std::vector<int>>>();
    }
    if (j.contains("radii")) opt.cfg.radii = j["radii"].get<std::vector<int>>();
    if (j.contains("out")) opt.out_path = j["out"].get<std::string>();
    if (j.contains("format")) opt.format = j["format"].get<std::string>();
    if (j.contains("dot_out")) opt.cfg.dot_out = j["dot_out"].get<std::string>();
}

int cmd_run(RunOptions& opt) {
    if (opt.cfg.suite.empty()) {
        std::cerr << "run: no suite selected; available suites:\n";
        for (const auto& [id, desc] : ggt::suites::suite_catalog())
            std::cerr << "  " << id << "  " << desc << "\n";
        return kExitUsage;
    }
    if (!opt.seed_set) {
        std::cerr << "run: --seed is mandatory (reports must be reproducible)\n";
        return kExitUsage;
    }
    ggt::report::Report rep;
    try {
        rep = ggt::suites::run_suite(opt.cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "run: " << e.what() << "\n";
        for (const auto& [id, desc] : ggt::suites::suite_catalog()) std::cerr << "  " << id << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "run: " << e.what() << "\n";
        return kExitIo;
    }
    rep.timestamp = now_iso8601();

    std::string rendered = opt.format == "text" ? rep.render_text() : rep.to_json();
    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path);
        if (!out) {
            std::cerr << "run: cannot write report to " << opt.out_path << "\n";
            return kExitIo;
        }
        out << rendered;
        std::cout << "report written to " << opt.out_path << "\n";
    } else {
        std::cout << rendered;
    }
    std::cout << "suite " << rep.suite << ": pass " << rep.passes() << ", fail " << rep.failures()
              << ", inconclusive " << rep.inconclusive() << "\n";
    return rep.failures() ? kExitVerificationFailed : 0;
}

int cmd_list(const std::string& format) {
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [id, desc] : ggt::suites::suite_catalog())
            arr.push_back({{"id", id}, {"description", desc}});
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& [id, desc] : ggt::suites::suite_catalog())
            std::cout << id << "\n    " << desc << "\n";
    }
    return 0;
}

int cmd_explain(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "explain: cannot read " << path << "\n";
        return kExitIo;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    ggt::report::Report rep;
    try {
        rep = ggt::report::Report::from_json(ss.str());
    } catch (const std::exception& e) {
        std::cerr << "explain: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cout << rep.render_text();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"batch verification front-end for the group-action toolkit"};
    app.require_subcommand(1);

    RunOptions opt;
    std::string config_path, list_format = "text", explain_path;

    CLI::App* run = app.add_subcommand("run", "run a verification suite and emit a report");
    run->add_option("--config", config_path, "JSON config file");
    auto* suite_opt = run->add_option("--suite", opt.cfg.suite, "suite id (see `list`)");
    auto* family_opt = run->add_option("--family", opt.cfg.family, "element family: V, sV, SVG or T");
    auto* n_opt = run->add_option("--n", opt.cfg.n, "branching degree for V families");
    auto* r_opt = run->add_option("--r", opt.cfg.r, "root count for V families");
    auto* dims_opt = run->add_option("--dims", opt.cfg.dims, "coordinate count for sV/SVG");
    auto* seed_opt = run->add_option("--seed", opt.cfg.seed, "random seed (mandatory)");
    auto* budget_opt = run->add_option("--budget", opt.cfg.budget, "sample budget");
    auto* graph_opt = run->add_option("--graph", opt.cfg.graph_file, "edge-list graph file for graph suites");
    auto* radii_opt = run->add_option("--radii", opt.cfg.radii, "cone-off radius sweep");
    auto* out_opt = run->add_option("--out", opt.out_path, "report output path (stdout when absent)");
    auto* format_opt = run->add_option("--format", opt.format, "report format: json or text")
                           ->check(CLI::IsMember({"json", "text"}));
    auto* dot_opt = run->add_option("--dot", opt.cfg.dot_out, "DOT export path (coneoff suite)");

    CLI::App* list = app.add_subcommand("list", "list available suites");
    list->add_option("--format", list_format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* explain = app.add_subcommand("explain", "render a report file as a human summary");
    explain->add_option("report", explain_path, "report JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (run->parsed()) {
            if (!config_path.empty()) {
                // the config file is the base; explicit flags override it
                RunOptions flags = opt;
                apply_config_file(config_path, opt);
                if (suite_opt->count()) opt.cfg.suite = flags.cfg.suite;
                if (family_opt->count()) opt.cfg.family = flags.cfg.family;
                if (n_opt->count()) opt.cfg.n = flags.cfg.n;
                if (r_opt->count()) opt.cfg.r = flags.cfg.r;
                if (dims_opt->count()) opt.cfg.dims = flags.cfg.dims;
                if (seed_opt->count()) opt.cfg.seed = flags.cfg.seed;
                if (budget_opt->count()) opt.cfg.budget = flags.cfg.budget;
                if (graph_opt->count()) opt.cfg.graph_file = flags.cfg.graph_file;
                if (radii_opt->count()) opt.cfg.radii = flags.cfg.radii;
                if (out_opt->count()) opt.out_path = flags.out_path;
                if (format_opt->count()) opt.format = flags.format;
                if (dot_opt->count()) opt.cfg.dot_out = flags.cfg.dot_out;
            }
            if (seed_opt->count() > 0) opt.seed_set = true;
            if (!opt.cfg.graph_file.empty()) opt.cfg.graph_kind = "file";
            return cmd_run(opt);
        }
        if (list->parsed()) return cmd_list(list_format);
        if (explain->parsed()) return cmd_explain(explain_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
