#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ageal/algebra.hpp"
#include "ageal/blueprint.hpp"
#include "ageal/checks.hpp"
#include "ageal/decomposition.hpp"
#include "ageal/groupoid.hpp"
#include "ageal/series.hpp"

namespace ageal {

// ---------------------------------------------------------------------------
// Command reports: the CLI computes through the core, hands the results to
// these assemblers/renderers, and prints the returned string.  The result
// subtree of a JSON report depends only on the inputs; timing lives in the
// envelope.
// ---------------------------------------------------------------------------

enum class OutputFormat { json, csv, text };
OutputFormat parse_format(const std::string& name);  // throws input_error

struct RunInfo {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::uint64_t seed = 0;
    long elapsed_ms = 0;
};

// the bare decomposition shape used in files and tests:
// {"blocks":[[ids]],"dimension":k,"stabilized":bool,"window":t}
std::string decomposition_report_json(const DecompositionReport& rep, int indent = -1);

// ---------------------------------------------------------------------------
// Assembled summaries
// ---------------------------------------------------------------------------

struct SeriesAnalysis {
    SeriesPrefix prefix;
    int dimension = 0;       // k both fits use
    FitResult power_form;    // over (1-Z)^k
    FitResult theorem_form;  // over (1-Z)(1-Z^2)...(1-Z^k)
    bool have_qp = false;    // quasi-polynomial extracted from the theorem form
    QuasiPolynomial qp;
    int matched_from = -1;   // least n0 with qp(n) = phi(n) for n0 <= n <= top
    NonnegSearchResult nonneg;
};
SeriesAnalysis analyze_series(const SeriesPrefix& prefix, int k, int nonneg_bound = 8);

struct DecomposeSummary {
    DecompositionReport decomposition;
    bool hereditary_minimal = false;
    bool finitely_generated = false;
    std::string rule;  // statement the verdict rests on
    bool tournament = false;
    KernelReport kernel;
};
DecomposeSummary summarize_decomposition(const Blueprint& b, int t_max);

struct AlgebraSummary {
    struct Constant {
        std::string rho, sigma, tau;  // representative composition vectors
        Int value;
    };
    std::vector<long> dimensions;        // basis sizes, degrees 0..N
    std::vector<bool> e1_full_rank;      // degrees 0..N-1
    std::vector<Constant> constants;     // all degree-1 x degree-1 products
    AddlayerReport addlayer;
    GenerationReport generation;
};
AlgebraSummary summarize_algebra(const Blueprint& b, int N, int D);

struct GroupoidSummary {
    int k = 0;
    long element_count = 0;
    bool closed = false;
    SeriesPrefix hilbert;                   // degrees 0..N
    std::vector<MonomialOrbitBasis> bases;  // degrees 0..min(N,4)
    GenerationReport generation;            // products of orbit sums up to D
};
GroupoidSummary summarize_groupoid(const PermutationGroupoid& g, int N, int D);

// ---------------------------------------------------------------------------
// Renderers
// ---------------------------------------------------------------------------

std::string render_profile(const RunInfo& run, const SeriesPrefix& phi, const GrowthReport& growth,
                           OutputFormat format);
std::string render_decompose(const RunInfo& run, const DecomposeSummary& summary, OutputFormat format);
std::string render_series(const RunInfo& run, const SeriesAnalysis& analysis, OutputFormat format);
std::string render_algebra(const RunInfo& run, const AlgebraSummary& summary, OutputFormat format);
std::string render_groupoid(const RunInfo& run, const GroupoidSummary& summary, OutputFormat format);
std::string render_checks(const RunInfo& run, const std::vector<CheckResult>& results, OutputFormat format);

// standalone CSV exports
std::string series_csv(const SeriesPrefix& prefix, const QuasiPolynomial* qp);  // n, phi(n), qp(n)
std::string structure_constants_csv(const Blueprint& b, int max_degree);        // rho, sigma, tau, c

}
