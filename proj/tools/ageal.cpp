// ageal: profiles, decompositions, series, age-algebra probes and groupoid
// invariants from the command line.  Exit codes: 0 success, 1 property
// violation, 2 input error, 3 resource cap exceeded.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ageal/builtins.hpp"
#include "ageal/checks.hpp"
#include "ageal/errors.hpp"
#include "ageal/json_io.hpp"
#include "ageal/reports.hpp"

namespace {

using namespace ageal;

struct Options {
    std::string builtin;
    std::string input;
    int N = -1;  // command-specific default when negative
    int D = 3;
    int t_max = 5;
    int window = 6;
    std::string format = "text";
    std::uint64_t seed = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// one of --builtin and --input must be present
void require_source(const Options& opt) {
    if (opt.builtin.empty() == opt.input.empty())
        throw input_error("give exactly one of --builtin NAME or --input PATH");
}

Blueprint load_blueprint(const Options& opt) {
    require_source(opt);
    if (!opt.builtin.empty()) return builtin_blueprint(opt.builtin);
    std::string text = read_file(opt.input);
    if (classify_input(text) != InputKind::blueprint)
        throw input_error(opt.input + " does not hold a blueprint");
    return blueprint_from_json(text);
}

PermutationGroupoid load_groupoid(const Options& opt) {
    require_source(opt);
    if (!opt.builtin.empty()) return builtin_groupoid(opt.builtin);
    std::string text = read_file(opt.input);
    if (classify_input(text) != InputKind::groupoid)
        throw input_error(opt.input + " does not hold a groupoid");
    return groupoid_from_json(text);
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long ms() const {
        return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - t0)
                                     .count());
    }
};

RunInfo make_run(const std::string& command, const Options& opt,
                 std::vector<std::pair<std::string, std::string>> extra, long elapsed_ms) {
    RunInfo run;
    run.command = command;
    if (!opt.builtin.empty()) run.config.emplace_back("builtin", opt.builtin);
    if (!opt.input.empty()) run.config.emplace_back("input", opt.input);
    for (auto& kv : extra) run.config.push_back(std::move(kv));
    run.seed = opt.seed;
    run.elapsed_ms = elapsed_ms;
    return run;
}

int cmd_profile(const Options& opt) {
    int N = opt.N < 0 ? 10 : opt.N;
    Timer timer;
    Blueprint b = load_blueprint(opt);
    SeriesPrefix phi = SeriesPrefix::from_counts(profile_prefix(b, N));
    GrowthReport growth = growth_degree(phi);
    RunInfo run = make_run("profile", opt, {{"N", std::to_string(N)}}, timer.ms());
    std::cout << render_profile(run, phi, growth, parse_format(opt.format));
    return 0;
}

int cmd_decompose(const Options& opt) {
    Timer timer;
    Blueprint b = load_blueprint(opt);
    DecomposeSummary summary = summarize_decomposition(b, opt.t_max);
    RunInfo run = make_run("decompose", opt,
                           {{"t-max", std::to_string(opt.t_max)}, {"window", std::to_string(opt.window)}},
                           timer.ms());
    std::cout << render_decompose(run, summary, parse_format(opt.format));
    return 0;
}

// blueprints analyze their profile with k = monomorphic dimension, groupoids
// their Hilbert prefix with k = ground size, raw series the least staircase
// denominator that fits
int cmd_series(const Options& opt) {
    int N = opt.N < 0 ? 14 : opt.N;
    Timer timer;
    require_source(opt);
    SeriesPrefix prefix;
    int k = 0;
    if (!opt.builtin.empty()) {
        Blueprint b = builtin_blueprint(opt.builtin);
        prefix = SeriesPrefix::from_counts(profile_prefix(b, N));
        k = decomposition_of_blueprint(b, opt.t_max).dimension;
    } else {
        std::string text = read_file(opt.input);
        switch (classify_input(text)) {
            case InputKind::blueprint: {
                Blueprint b = blueprint_from_json(text);
                prefix = SeriesPrefix::from_counts(profile_prefix(b, N));
                k = decomposition_of_blueprint(b, opt.t_max).dimension;
                break;
            }
            case InputKind::groupoid: {
                PermutationGroupoid g = groupoid_from_json(text);
                prefix = hilbert_prefix(g, N);
                k = g.k;
                break;
            }
            case InputKind::series: {
                prefix = series_from_json(text);
                k = 1;
                while (k <= 8 && !fit_rational(prefix, k).ok) ++k;
                if (k > 8) k = 0;
                break;
            }
            case InputKind::structure:
                throw input_error("series needs a blueprint, groupoid or series input");
        }
    }
    SeriesAnalysis analysis = analyze_series(prefix, k);
    RunInfo run = make_run("series", opt, {{"N", std::to_string(N)}, {"k", std::to_string(k)}}, timer.ms());
    std::cout << render_series(run, analysis, parse_format(opt.format));
    return 0;
}

int cmd_algebra(const Options& opt) {
    int N = opt.N < 0 ? 6 : opt.N;
    Timer timer;
    Blueprint b = load_blueprint(opt);
    AlgebraSummary summary = summarize_algebra(b, N, opt.D);
    RunInfo run =
        make_run("algebra", opt, {{"N", std::to_string(N)}, {"D", std::to_string(opt.D)}}, timer.ms());
    std::cout << render_algebra(run, summary, parse_format(opt.format));
    return summary.addlayer.ok ? 0 : 1;
}

int cmd_groupoid(const Options& opt) {
    int N = opt.N < 0 ? 8 : opt.N;
    Timer timer;
    PermutationGroupoid g = load_groupoid(opt);
    GroupoidSummary summary = summarize_groupoid(g, N, opt.D);
    RunInfo run =
        make_run("groupoid", opt, {{"N", std::to_string(N)}, {"D", std::to_string(opt.D)}}, timer.ms());
    std::cout << render_groupoid(run, summary, parse_format(opt.format));
    return summary.closed ? 0 : 1;
}

int cmd_check(const Options& opt) {
    Timer timer;
    std::vector<CheckResult> results = run_all_checks(opt.seed);
    RunInfo run = make_run("check", opt, {}, timer.ms());
    std::cout << render_checks(run, results, parse_format(opt.format));
    for (const CheckResult& r : results)
        if (!r.ok) return 1;
    return 0;
}

void add_common(CLI::App* cmd, Options& opt, bool with_source) {
    if (with_source) {
        cmd->add_option("--builtin", opt.builtin, "built-in example name");
        cmd->add_option("--input", opt.input, "JSON input file");
    }
    cmd->add_option("--format", opt.format, "json, csv or text")->default_str("text");
    cmd->add_option("--seed", opt.seed, "seed recorded in the report");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"age algebras of relational structures: profiles, decompositions, series and invariants"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* profile = app.add_subcommand("profile", "profile prefix and growth degree");
    add_common(profile, opt, true);
    profile->add_option("-N", opt.N, "top profile index (default 10)");

    CLI::App* decompose = app.add_subcommand("decompose", "minimal decomposition and generation verdict");
    add_common(decompose, opt, true);
    decompose->add_option("--t-max", opt.t_max, "largest window (default 5)");
    decompose->add_option("--window", opt.window, "kernel age-comparison bound (default 6)");

    CLI::App* series = app.add_subcommand("series", "rational form, quasi-polynomial and numerator search");
    add_common(series, opt, true);
    series->add_option("-N", opt.N, "top series index (default 14)");
    series->add_option("--t-max", opt.t_max, "decomposition window for blueprints (default 5)");

    CLI::App* algebra = app.add_subcommand("algebra", "basis dimensions, constants and generation probes");
    add_common(algebra, opt, true);
    algebra->add_option("-N", opt.N, "top degree (default 6)");
    algebra->add_option("-D", opt.D, "generator degree bound (default 3)");

    CLI::App* groupoid = app.add_subcommand("groupoid", "closure, Hilbert prefix and orbit bases");
    add_common(groupoid, opt, true);
    groupoid->add_option("-N", opt.N, "top degree (default 8)");
    groupoid->add_option("-D", opt.D, "generator degree bound (default 3)");

    CLI::App* check = app.add_subcommand("check", "run the full invariant suite");
    add_common(check, opt, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (profile->parsed()) return cmd_profile(opt);
        if (decompose->parsed()) return cmd_decompose(opt);
        if (series->parsed()) return cmd_series(opt);
        if (algebra->parsed()) return cmd_algebra(opt);
        if (groupoid->parsed()) return cmd_groupoid(opt);
        if (check->parsed()) return cmd_check(opt);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const cap_exceeded& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const internal_inconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
