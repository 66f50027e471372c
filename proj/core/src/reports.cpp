#include "ageal/reports.hpp"

#include <limits>
#include <sstream>

#include "ageal/errors.hpp"
#include "ageal/version.hpp"
#include "json.hpp"

namespace ageal {

namespace {

using ordered = nlohmann::ordered_json;

long long to_ll(const Int& x) {
    if (x > Int(std::numeric_limits<long long>::max()) || x < Int(std::numeric_limits<long long>::min()))
        throw input_error("value too large for report export");
    return x.convert_to<long long>();
}

std::string vector_text(const CompositionVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

ordered phi_to_value(const SeriesPrefix& prefix) {
    ordered arr = ordered::array();
    for (const Int& x : prefix.phi) arr.push_back(to_ll(x));
    return arr;
}

ordered poly_to_value(const Poly& p) {
    ordered coeffs = ordered::array();
    for (const Int& c : p.c) coeffs.push_back(to_ll(c));
    return ordered{{"coefficients", std::move(coeffs)}, {"text", p.text()}};
}

ordered fit_to_value(const FitResult& fit) {
    ordered out;
    out["ok"] = fit.ok;
    if (!fit.ok) {
        out["reason"] = fit.reason;
        return out;
    }
    out["numerator"] = poly_to_value(fit.form.numerator);
    out["denominator_exponents"] = fit.form.denominator_exponents;
    out["text"] = form_text(fit.form);
    return out;
}

ordered qp_to_value(const QuasiPolynomial& qp) {
    ordered residues = ordered::array();
    for (const std::vector<Rat>& poly : qp.residue_polys) {
        ordered row = ordered::array();
        for (const Rat& c : poly) row.push_back(c.str());
        residues.push_back(std::move(row));
    }
    return ordered{{"period", qp.period}, {"start", qp.start}, {"degree", qp.degree()},
                   {"residue_polys", std::move(residues)}};
}

ordered envelope(const RunInfo& run, ordered result) {
    ordered config = ordered::object();
    for (const auto& [key, value] : run.config) config[key] = value;
    return ordered{{"tool", "ageal"},          {"version", version_string}, {"command", run.command},
                   {"config", std::move(config)}, {"seed", run.seed},          {"elapsed_ms", run.elapsed_ms},
                   {"result", std::move(result)}};
}

std::string text_header(const RunInfo& run) {
    std::ostringstream os;
    os << "ageal " << version_string << " " << run.command;
    for (const auto& [key, value] : run.config) os << " " << key << "=" << value;
    os << " seed=" << run.seed << "\n";
    return os.str();
}

std::string csv_header(const RunInfo& run) { return "# " + text_header(run); }

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "text") return OutputFormat::text;
    throw input_error("unknown format: " + name + " (expected json, csv or text)");
}

std::string decomposition_report_json(const DecompositionReport& rep, int indent) {
    ordered doc{{"blocks", rep.blocks},
                {"dimension", rep.dimension},
                {"stabilized", rep.stabilized},
                {"window", rep.window}};
    return indent < 0 ? doc.dump() : doc.dump(indent);
}

// ---------------------------------------------------------------------------
// Assembly
// ---------------------------------------------------------------------------

SeriesAnalysis analyze_series(const SeriesPrefix& prefix, int k, int nonneg_bound) {
    if (k < 0) throw input_error("dimension must be nonnegative");
    SeriesAnalysis a;
    a.prefix = prefix;
    a.dimension = k;
    if (k == 0) {
        a.power_form.reason = "dimension is zero, no denominator to fit";
        a.theorem_form.reason = a.power_form.reason;
        a.nonneg.base_reason = a.power_form.reason;
        a.nonneg.bound = nonneg_bound;
        return a;
    }
    a.power_form = fit_rational(prefix, std::vector<int>(k, 1));
    a.theorem_form = fit_rational(prefix, k);
    if (a.theorem_form.ok && k >= 1) {
        a.qp = to_quasi_polynomial(a.theorem_form.form);
        a.have_qp = true;
        a.matched_from = validate_quasi_polynomial(a.qp, prefix);
    }
    a.nonneg = numerator_nonneg_search(prefix, k, nonneg_bound);
    return a;
}

DecomposeSummary summarize_decomposition(const Blueprint& b, int t_max) {
    DecomposeSummary s;
    s.decomposition = decomposition_of_blueprint(b, t_max);
    s.hereditary_minimal = is_hereditary_minimal(b, t_max);
    const Signature& sig = b.template_structure().signature();
    bool tournament_like = sig.size() == 1 && sig.relations[0].arity == 2 && !sig.relations[0].symmetric;
    if (tournament_like) {
        try {
            TournamentFgReport rep = tournament_finite_generation(b, t_max);
            s.tournament = true;
            s.finitely_generated = rep.finitely_generated;
            s.rule = "tournament rule: " + rep.reason;
        } catch (const input_error&) {
            tournament_like = false;  // non-symmetric template that is not a tournament
        }
    }
    if (!tournament_like) {
        s.finitely_generated = s.hereditary_minimal;
        s.rule = s.finitely_generated
                     ? "every restriction to a subset of the infinite blocks keeps the decomposition "
                       "minimal, so the age algebra is finitely generated"
                     : "some restriction to a subset of the infinite blocks is not minimal, so the age "
                       "algebra is not finitely generated";
    }
    s.kernel = kernel_elements(b, t_max);
    return s;
}

AlgebraSummary summarize_algebra(const Blueprint& b, int N, int D) {
    if (N < 0) throw input_error("degree bound must be nonnegative");
    AlgebraSummary s;
    std::vector<GradedBasis> bases;
    for (int n = 0; n <= N; ++n) {
        bases.push_back(basis(b, n));
        s.dimensions.push_back(static_cast<long>(bases.back().types.size()));
    }
    for (int n = 0; n + 1 <= N; ++n) s.e1_full_rank.push_back(e1_full_column_rank(b, n));
    if (N >= 2)
        for (const IsoType& sigma : bases[1].types)
            for (const IsoType& tau : bases[1].types)
                for (const IsoType& rho : bases[2].types) {
                    Int c = structure_constant(b, rho, sigma, tau);
                    if (c == 0) continue;
                    s.constants.push_back(AlgebraSummary::Constant{vector_text(rho.representative),
                                                                   vector_text(sigma.representative),
                                                                   vector_text(tau.representative), c});
                }
    s.addlayer = addlayer_check(b, std::min(N, 5));
    s.generation = generated_in_degree(b, std::min(D, N), N);
    return s;
}

GroupoidSummary summarize_groupoid(const PermutationGroupoid& g, int N, int D) {
    if (N < 0) throw input_error("degree bound must be nonnegative");
    GroupoidSummary s;
    s.k = g.k;
    s.element_count = static_cast<long>(g.elements.size());
    s.closed = is_closed(g);
    s.hilbert = hilbert_prefix(g, N);
    for (int n = 0; n <= std::min(N, 4); ++n) s.bases.push_back(orbit_basis(g, n));
    s.generation = generation_probe(g, std::max(1, std::min(D, N)), N);
    return s;
}

// ---------------------------------------------------------------------------
// Renderers
// ---------------------------------------------------------------------------

namespace {

ordered growth_to_value(const GrowthReport& growth) {
    ordered out;
    out["fitted"] = growth.fitted;
    out["degree"] = growth.degree;
    out["leading"] = growth.leading.str();
    out["tail_low"] = growth.a_low.str();
    out["tail_high"] = growth.b_high.str();
    out["unbounded_looking"] = growth.unbounded_looking;
    if (!growth.note.empty()) out["note"] = growth.note;
    return out;
}

}  // namespace

std::string render_profile(const RunInfo& run, const SeriesPrefix& phi, const GrowthReport& growth,
                           OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            ordered result{{"phi", phi_to_value(phi)}, {"growth", growth_to_value(growth)}};
            return envelope(run, std::move(result)).dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::ostringstream os;
            os << csv_header(run) << "n,phi\n";
            for (int n = 0; n <= phi.top(); ++n) os << n << "," << phi.phi[n].str() << "\n";
            return os.str();
        }
        case OutputFormat::text: {
            std::ostringstream os;
            os << text_header(run) << "phi:";
            for (const Int& x : phi.phi) os << " " << x.str();
            os << "\n";
            if (growth.fitted)
                os << "growth: degree " << growth.degree << ", leading coefficient " << growth.leading.str()
                   << "\n";
            else if (growth.degree >= 0)
                os << "growth: empirical degree " << growth.degree
                   << (growth.unbounded_looking ? " (looks unbounded)" : "") << "\n";
            else
                os << "growth: no estimate\n";
            if (!growth.note.empty()) os << "note: " << growth.note << "\n";
            return os.str();
        }
    }
    throw input_error("unhandled format");
}

std::string render_decompose(const RunInfo& run, const DecomposeSummary& s, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            ordered result{{"blocks", s.decomposition.blocks},
                           {"dimension", s.decomposition.dimension},
                           {"stabilized", s.decomposition.stabilized},
                           {"window", s.decomposition.window},
                           {"hereditary_minimal", s.hereditary_minimal},
                           {"finitely_generated", s.finitely_generated},
                           {"rule", s.rule},
                           {"tournament", s.tournament},
                           {"kernel", ordered{{"elements", s.kernel.elements},
                                              {"template_blocks", s.kernel.template_blocks},
                                              {"window", s.kernel.window},
                                              {"bound", s.kernel.bound},
                                              {"stabilized", s.kernel.stabilized}}}};
            return envelope(run, std::move(result)).dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::ostringstream os;
            os << csv_header(run) << "block,members\n";
            for (std::size_t i = 0; i < s.decomposition.blocks.size(); ++i) {
                os << i << ",";
                const std::vector<int>& block = s.decomposition.blocks[i];
                for (std::size_t j = 0; j < block.size(); ++j) os << (j ? " " : "") << block[j];
                os << "\n";
            }
            return os.str();
        }
        case OutputFormat::text: {
            std::ostringstream os;
            os << text_header(run);
            os << "blocks:";
            for (const std::vector<int>& block : s.decomposition.blocks) {
                os << " {";
                for (std::size_t j = 0; j < block.size(); ++j) os << (j ? "," : "") << block[j];
                os << "}";
            }
            os << "\n";
            os << "dimension: " << s.decomposition.dimension << "\n";
            os << "stabilized: " << (s.decomposition.stabilized ? "yes" : "no") << " (window "
               << s.decomposition.window << ")\n";
            os << "hereditary minimal: " << (s.hereditary_minimal ? "yes" : "no") << "\n";
            os << "finitely generated: " << (s.finitely_generated ? "yes" : "no") << "\n";
            os << "rule: " << s.rule << "\n";
            os << "kernel elements (window labels):";
            if (s.kernel.elements.empty())
                os << " none";
            else
                for (int x : s.kernel.elements) os << " " << x;
            os << "\n";
            return os.str();
        }
    }
    throw input_error("unhandled format");
}

std::string render_series(const RunInfo& run, const SeriesAnalysis& a, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            ordered result;
            result["phi"] = phi_to_value(a.prefix);
            result["dimension"] = a.dimension;
            result["power_form"] = fit_to_value(a.power_form);
            result["theorem_form"] = fit_to_value(a.theorem_form);
            if (a.have_qp) {
                result["quasi_polynomial"] = qp_to_value(a.qp);
                result["matched_from"] = a.matched_from;
            }
            ordered nn;
            nn["found"] = a.nonneg.found;
            nn["bound"] = a.nonneg.bound;
            if (a.nonneg.found) {
                nn["exponents"] = a.nonneg.exponents;
                nn["numerator"] = poly_to_value(a.nonneg.numerator);
            }
            if (!a.nonneg.base_reason.empty()) nn["base_reason"] = a.nonneg.base_reason;
            result["nonneg_search"] = std::move(nn);
            return envelope(run, std::move(result)).dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::ostringstream os;
            os << csv_header(run) << "n,phi,quasi_polynomial\n";
            for (int n = 0; n <= a.prefix.top(); ++n) {
                os << n << "," << a.prefix.phi[n].str() << ",";
                if (a.have_qp && n >= a.qp.start) os << a.qp.eval(n).str();
                os << "\n";
            }
            return os.str();
        }
        case OutputFormat::text: {
            std::ostringstream os;
            os << text_header(run) << "phi:";
            for (const Int& x : a.prefix.phi) os << " " << x.str();
            os << "\n";
            if (a.power_form.ok)
                os << "series over (1-Z)^" << a.dimension << ": " << form_text(a.power_form.form) << "\n";
            else
                os << "series over (1-Z)^" << a.dimension << ": no fit (" << a.power_form.reason << ")\n";
            if (a.theorem_form.ok)
                os << "series over the staircase denominator: " << form_text(a.theorem_form.form) << "\n";
            else
                os << "series over the staircase denominator: no fit (" << a.theorem_form.reason << ")\n";
            if (a.have_qp)
                os << "quasi-polynomial: degree " << a.qp.degree() << ", period " << a.qp.period
                   << ", matches from n = " << a.matched_from << "\n";
            if (a.nonneg.found)
                os << "nonnegative numerator: " << a.nonneg.numerator.text() << " over exponents "
                   << vector_text(CompositionVector(a.nonneg.exponents.begin(), a.nonneg.exponents.end()))
                   << "\n";
            else
                os << "nonnegative numerator: none up to exponent bound " << a.nonneg.bound << "\n";
            return os.str();
        }
    }
    throw input_error("unhandled format");
}

std::string render_algebra(const RunInfo& run, const AlgebraSummary& s, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            ordered constants = ordered::array();
            for (const AlgebraSummary::Constant& c : s.constants)
                constants.push_back(ordered{{"rho", c.rho}, {"sigma", c.sigma}, {"tau", c.tau},
                                            {"value", to_ll(c.value)}});
            ordered violations = ordered::array();
            for (const AddlayerViolation& v : s.addlayer.violations)
                violations.push_back(ordered{{"degree", v.degree},
                                             {"source", v.source},
                                             {"layer", v.layer},
                                             {"target", v.target}});
            ordered rows = ordered::array();
            for (const GenerationRow& r : s.generation.rows)
                rows.push_back(ordered{{"degree", r.degree}, {"spanned", r.spanned},
                                       {"dimension", r.dimension}});
            std::vector<int> ranks(s.e1_full_rank.begin(), s.e1_full_rank.end());
            ordered result{{"dimensions", s.dimensions},
                           {"e1_full_rank", ranks},
                           {"constants", std::move(constants)},
                           {"addlayer", ordered{{"ok", s.addlayer.ok},
                                                {"checked", s.addlayer.checked},
                                                {"violations", std::move(violations)}}},
                           {"generation", ordered{{"generator_bound", s.generation.generator_bound},
                                                  {"rows", std::move(rows)},
                                                  {"first_gap", s.generation.first_gap}}}};
            return envelope(run, std::move(result)).dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::ostringstream os;
            os << csv_header(run) << "rho,sigma,tau,c\n";
            for (const AlgebraSummary::Constant& c : s.constants)
                os << "\"" << c.rho << "\",\"" << c.sigma << "\",\"" << c.tau << "\"," << c.value.str()
                   << "\n";
            return os.str();
        }
        case OutputFormat::text: {
            std::ostringstream os;
            os << text_header(run) << "dimensions:";
            for (long d : s.dimensions) os << " " << d;
            os << "\n";
            os << "e1 full column rank:";
            bool all = true;
            for (std::size_t n = 0; n < s.e1_full_rank.size(); ++n) {
                if (!s.e1_full_rank[n]) {
                    all = false;
                    os << " degree " << n << ": NO;";
                }
            }
            os << (all ? " all degrees" : "") << "\n";
            os << "degree-2 structure constants:\n";
            for (const AlgebraSummary::Constant& c : s.constants)
                os << "  c[" << c.rho << "; " << c.sigma << ", " << c.tau << "] = " << c.value.str() << "\n";
            os << "addlayer: " << (s.addlayer.ok ? "ok" : "violated") << " (" << s.addlayer.checked
               << " bumps checked, " << s.addlayer.violations.size() << " violations)\n";
            os << "generation (generators up to degree " << s.generation.generator_bound << "):\n";
            for (const GenerationRow& r : s.generation.rows)
                os << "  degree " << r.degree << ": spanned " << r.spanned << " of " << r.dimension << "\n";
            if (s.generation.first_gap >= 0)
                os << "first gap: degree " << s.generation.first_gap << "\n";
            else
                os << "no gaps in the probed range\n";
            return os.str();
        }
    }
    throw input_error("unhandled format");
}

std::string render_groupoid(const RunInfo& run, const GroupoidSummary& s, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            ordered bases = ordered::array();
            for (const MonomialOrbitBasis& basis : s.bases) {
                ordered orbits = ordered::array();
                for (const std::vector<Monomial>& orbit : basis.orbits) orbits.push_back(orbit);
                bases.push_back(ordered{{"degree", basis.degree}, {"orbits", std::move(orbits)}});
            }
            ordered rows = ordered::array();
            for (const GenerationRow& r : s.generation.rows)
                rows.push_back(ordered{{"degree", r.degree}, {"spanned", r.spanned},
                                       {"dimension", r.dimension}});
            ordered result{{"k", s.k},
                           {"elements", s.element_count},
                           {"closed", s.closed},
                           {"hilbert", phi_to_value(s.hilbert)},
                           {"orbit_bases", std::move(bases)},
                           {"generation", ordered{{"generator_bound", s.generation.generator_bound},
                                                  {"rows", std::move(rows)},
                                                  {"first_gap", s.generation.first_gap}}}};
            return envelope(run, std::move(result)).dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::ostringstream os;
            os << csv_header(run) << "n,dimension\n";
            for (int n = 0; n <= s.hilbert.top(); ++n) os << n << "," << s.hilbert.phi[n].str() << "\n";
            return os.str();
        }
        case OutputFormat::text: {
            std::ostringstream os;
            os << text_header(run);
            os << "ground size: " << s.k << ", elements: " << s.element_count << ", closed: "
               << (s.closed ? "yes" : "no") << "\n";
            os << "hilbert:";
            for (const Int& x : s.hilbert.phi) os << " " << x.str();
            os << "\n";
            for (const MonomialOrbitBasis& basis : s.bases) {
                os << "degree " << basis.degree << " orbits:";
                for (const std::vector<Monomial>& orbit : basis.orbits) {
                    os << " {";
                    for (std::size_t i = 0; i < orbit.size(); ++i) {
                        if (i) os << " ";
                        os << "(";
                        for (std::size_t j = 0; j < orbit[i].size(); ++j)
                            os << (j ? "," : "") << orbit[i][j];
                        os << ")";
                    }
                    os << "}";
                }
                os << "\n";
            }
            os << "generation (orbit sums up to degree " << s.generation.generator_bound << "): ";
            if (s.generation.first_gap >= 0)
                os << "first gap at degree " << s.generation.first_gap << "\n";
            else
                os << "no gaps in the probed range\n";
            return os.str();
        }
    }
    throw input_error("unhandled format");
}

std::string render_checks(const RunInfo& run, const std::vector<CheckResult>& results, OutputFormat format) {
    long failed = 0;
    for (const CheckResult& r : results)
        if (!r.ok) ++failed;
    switch (format) {
        case OutputFormat::json: {
            ordered rows = ordered::array();
            for (const CheckResult& r : results)
                rows.push_back(ordered{{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
            ordered result{{"total", static_cast<long>(results.size())},
                           {"failed", failed},
                           {"checks", std::move(rows)}};
            return envelope(run, std::move(result)).dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::ostringstream os;
            os << csv_header(run) << "name,ok,detail\n";
            for (const CheckResult& r : results)
                os << r.name << "," << (r.ok ? "1" : "0") << ",\"" << r.detail << "\"\n";
            return os.str();
        }
        case OutputFormat::text: {
            std::ostringstream os;
            os << text_header(run);
            for (const CheckResult& r : results) {
                os << (r.ok ? "ok   " : "FAIL ") << r.name;
                if (!r.detail.empty()) os << ": " << r.detail;
                os << "\n";
            }
            os << (failed == 0 ? "all checks passed" : "checks FAILED") << " (" << results.size() - failed
               << "/" << results.size() << ")\n";
            return os.str();
        }
    }
    throw input_error("unhandled format");
}

std::string series_csv(const SeriesPrefix& prefix, const QuasiPolynomial* qp) {
    std::ostringstream os;
    os << "n,phi,quasi_polynomial\n";
    for (int n = 0; n <= prefix.top(); ++n) {
        os << n << "," << prefix.phi[n].str() << ",";
        if (qp != nullptr && n >= qp->start) os << qp->eval(n).str();
        os << "\n";
    }
    return os.str();
}

std::string structure_constants_csv(const Blueprint& b, int max_degree) {
    if (max_degree < 0) throw input_error("degree bound must be nonnegative");
    std::ostringstream os;
    os << "rho,sigma,tau,c\n";
    std::vector<GradedBasis> bases;
    for (int n = 0; n <= max_degree; ++n) bases.push_back(basis(b, n));
    for (int dr = 0; dr <= max_degree; ++dr)
        for (const IsoType& rho : bases[dr].types)
            for (int ds = 0; ds <= dr; ++ds) {
                int dt = dr - ds;
                for (const IsoType& sigma : bases[ds].types)
                    for (const IsoType& tau : bases[dt].types) {
                        Int c = structure_constant(b, rho, sigma, tau);
                        if (c == 0) continue;
                        os << "\"" << vector_text(rho.representative) << "\",\""
                           << vector_text(sigma.representative) << "\",\"" << vector_text(tau.representative)
                           << "\"," << c.str() << "\n";
                    }
            }
    return os.str();
}

}
