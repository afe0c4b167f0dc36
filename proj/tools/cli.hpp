#pragma once

// Command-line front end. run() is separate from main() so tests can drive it
// with captured streams.

#include "perlick/closedform.hpp"
#include "perlick/degeneracy.hpp"
#include "perlick/oracle.hpp"
#include "perlick/quantize.hpp"
#include "perlick/rational.hpp"
#include "perlick/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace perlick::cli {

inline constexpr const char* conventions_version = "1";

enum ExitCode : int { ok = 0, domain_error = 1, verification_failed = 2, usage = 64 };

using Json = nlohmann::ordered_json;

class SerializationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 15 significant digits; non-finite values are rejected.
inline double round15(double x)
{
    if (!std::isfinite(x)) throw SerializationError("non-finite value in output");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

inline std::string format15(double x)
{
    if (!std::isfinite(x)) throw SerializationError("non-finite value in output");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

inline std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

/// A report in table form: named columns, cells already formatted for CSV,
/// typed values for JSON.
struct Table {
    std::vector<std::string> columns;
    std::vector<Json> rows; // objects keyed by column

    void write_csv(std::ostream& out) const
    {
        for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_cell(columns[i]);
        out << "\r\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < columns.size(); ++i) {
                const Json& v = row.at(columns[i]);
                std::string cell;
                if (v.is_string())
                    cell = v.get<std::string>();
                else if (v.is_number_float())
                    cell = format15(v.get<double>());
                else if (v.is_null())
                    cell = "";
                else
                    cell = v.dump();
                out << (i ? "," : "") << csv_cell(cell);
            }
            out << "\r\n";
        }
    }
};

struct Options {
    std::string format = "json";
    double mu = 5.0;
    double k = 0.5;
    std::string beta = "1";
    double g_shift = 0.0;
    std::string a;
    std::optional<int> nmax;
    std::optional<int> lmax;
    int n = 0;
    int l = 0;
    std::string rep = "conformal_vm";
    double q = 1.0;
    int levels = 3;
    int max_sum = 5;
    std::optional<double> rmin;
    std::optional<double> rmax;
    std::optional<int> points;
    int threads = 1;
    unsigned seed = 20240607u;
    bool timing = false;
    std::string suite;
};

namespace detail {

inline PerlickIParams params_of(const Options& o, const Rational& beta)
{
    PerlickIParams p{to_double(beta), o.k, o.mu, o.g_shift};
    p.validate();
    return p;
}

inline Json params_json(const Options& o)
{
    return Json{{"mu", round15(o.mu)}, {"k", round15(o.k)}, {"beta", o.beta}, {"G", round15(o.g_shift)}};
}

inline Representation parse_rep(const std::string& s)
{
    for (auto r : {Representation::hyperbolic, Representation::flat_radius_lb, Representation::conformal_lb,
                   Representation::conformal_vm})
        if (s == to_string(r)) return r;
    throw std::invalid_argument("unknown representation '" + s + "'");
}

struct Result {
    Table table;
    Json diagnostics = Json::object();
    Json extra_meta = Json::object();
    bool verification_failed = false;
};

inline Result spectrum(const Options& o)
{
    const Rational beta = parse_exact_decimal(o.beta);
    if (!(beta > 0)) throw DomainError("beta must be positive");
    params_of(o, beta);
    const int nmax = o.nmax.value_or(5), lmax = o.lmax.value_or(5);
    if (nmax < 0 || lmax < 0) throw DomainError("nmax and lmax must be non-negative");
    const RationalExponent a(Rational(1) / beta);
    Result r;
    r.table.columns = {"n", "l", "w", "E"};
    int skipped = 0;
    for (int n = 0; n <= nmax; ++n) {
        for (int l = 0; l <= lmax; ++l) {
            const auto lab = make_label(n, l, a);
            if (!is_bound(lab, o.mu, o.k)) {
                ++skipped;
                continue;
            }
            r.table.rows.push_back(
                {{"n", n}, {"l", l}, {"w", to_string(lab.w)}, {"E", round15(energy(lab, o.mu, o.k) + o.g_shift)}});
        }
    }
    r.diagnostics["tolerances"] = Json::object();
    r.diagnostics["grid"] = nullptr;
    r.diagnostics["unbound_skipped"] = skipped;
    r.extra_meta["a"] = to_string(a.value());
    return r;
}

inline Result wavefunction(const Options& o)
{
    const Rational beta = parse_exact_decimal(o.beta);
    if (!(beta > 0)) throw DomainError("beta must be positive");
    PerlickIParams p = params_of(o, beta);
    p.require_curved();
    const Representation rep = parse_rep(o.rep);
    const Rational a = Rational(1) / beta;
    const double q = to_double(general_beta_reduce(o.l, a));
    if (o.n < 0) throw DomainError("n must be non-negative");
    const auto psi = build_eigenfunction<double>(o.n, q, p.mu, p.k);
    PerlickIParams chain = p;
    chain.beta = 1.0;
    RadialFunction hyper = [psi](double r) { return psi(r); };
    auto state = transport_along_chain(hyper, Representation::hyperbolic, rep, chain);

    const int points = o.points.value_or(100);
    if (points < 2) throw DomainError("need at least 2 points");
    const Interval dom = representation_domain(rep, p.k);
    double lo = 0.0, hi = 0.0;
    if (std::isfinite(dom.upper)) {
        lo = o.rmin.value_or(dom.upper / (points + 1));
        hi = o.rmax.value_or(dom.upper * points / (points + 1));
    } else {
        lo = o.rmin.value_or(1e-3);
        hi = o.rmax.value_or(20.0);
    }
    if (!(lo > dom.lower) || !(hi < dom.upper) || !(hi > lo)) throw DomainError("sample range outside the chart domain");

    QuadratureSpec spec;
    spec.graded_layers = 40;
    const double k = p.k;
    const double norm2 = integrate(
        [&](double x) {
            const double v = state(x);
            return v * v * representation_weight(rep, x, k);
        },
        dom.lower, dom.upper, spec);
    double scale = 1.0 / std::sqrt(norm2);
    if (state(lo) < 0.0) scale = -scale;

    Result r;
    r.table.columns = {"x", "psi"};
    for (int i = 0; i < points; ++i) {
        const double x = lo + (hi - lo) * i / (points - 1);
        r.table.rows.push_back({{"x", round15(x)}, {"psi", round15(scale * state(x))}});
    }
    RadialGrid grid{1e-3, 30.0, 3000, 1};
    r.diagnostics["tolerances"] = Json::object();
    r.diagnostics["grid"] = Json{{"lower", round15(lo)}, {"upper", round15(hi)}, {"points", points}};
    r.diagnostics["q"] = round15(q);
    r.diagnostics["nodes"] = node_count(hyper, grid);
    r.diagnostics["energy_hyperbolic"] = round15(factorization_energy(q + o.n, p.mu, p.k));
    r.extra_meta["representation"] = to_string(rep);
    r.extra_meta["n"] = o.n;
    r.extra_meta["l"] = o.l;
    return r;
}

inline Result degeneracy(const Options& o)
{
    Rational a_value;
    if (!o.a.empty()) {
        try {
            a_value = parse_rational(o.a);
        } catch (const std::invalid_argument&) {
            throw CLI::ValidationError("--a", "must be an exact fraction such as 1/2 (decimals are not accepted)");
        }
    } else {
        Rational beta;
        try {
            beta = parse_rational(o.beta);
        } catch (const std::invalid_argument&) {
            throw CLI::ValidationError("--beta", "must be an exact fraction for degeneracy tables");
        }
        if (!(beta > 0)) throw DomainError("beta must be positive");
        a_value = Rational(1) / beta;
    }
    const RationalExponent a(a_value);
    if (!(o.mu > 0.0)) throw DomainError("mu must be positive");
    if (!(o.k >= 0.0)) throw DomainError("k must be non-negative");
    const auto table = multiplet_table(a, o.mu, o.k, o.nmax.value_or(5), o.lmax.value_or(5));
    Result r;
    r.table.columns = {"w", "energy", "multiplicity", "members"};
    for (const auto& g : table) {
        Json members = Json::array();
        for (const auto& m : g.members) members.push_back(Json::array({m.n, m.l}));
        Json row{{"w", to_string(g.w)}, {"energy", round15(g.energy + o.g_shift)}, {"multiplicity", g.multiplicity}};
        row["members"] = members;
        r.table.rows.push_back(std::move(row));
    }
    r.diagnostics["tolerances"] = Json::object();
    r.diagnostics["grid"] = nullptr;
    r.diagnostics["shift_rule"] = "n' = n - s*m1, l' = l + s*m2";
    r.diagnostics["note"] = "the alternative rule with m2 in both shifts does not preserve w unless m1 = m2";
    r.extra_meta["a"] = to_string(a.value());
    return r;
}

inline Result curvature(const Options& o)
{
    const Rational beta = parse_exact_decimal(o.beta);
    if (!(beta > 0)) throw DomainError("beta must be positive");
    PerlickIParams p = params_of(o, beta);
    p.require_curved();
    const double edge = std::pow(p.k, -1.0 / p.beta);
    const int points = o.points.value_or(50);
    if (points < 2) throw DomainError("need at least 2 points");
    const double lo = o.rmin.value_or(0.02 * edge);
    const double hi = o.rmax.value_or(0.98 * edge);
    if (!(lo > 0.0) || !(hi < edge) || !(hi > lo)) throw DomainError("rho range must lie inside (0, k^(-1/beta))");
    Result r;
    r.table.columns = {"rho", "f", "R", "R_conformal_fd"};
    for (int i = 0; i < points; ++i) {
        const double rho = lo + (hi - lo) * i / (points - 1);
        auto field = [&](const std::array<double, 3>& x) {
            return perlick_conformal_factor(std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]), p);
        };
        const double c = rho / std::sqrt(3.0);
        const double numeric = conformal_curvature(field, {c, c, c}, 1e-4 * rho);
        r.table.rows.push_back({{"rho", round15(rho)},
                                {"f", round15(perlick_conformal_factor(rho, p))},
                                {"R", round15(perlick_curvature(rho, p))},
                                {"R_conformal_fd", round15(numeric)}});
    }
    r.diagnostics["tolerances"] = Json::object();
    r.diagnostics["grid"] = Json{{"lower", round15(lo)}, {"upper", round15(hi)}, {"points", points}};
    r.diagnostics["chart_edge"] = round15(edge);
    return r;
}

inline Result verify(const Options& o)
{
    const Rational beta = parse_exact_decimal(o.beta);
    if (!(beta > 0)) throw DomainError("beta must be positive");
    VerifyOptions v;
    v.params = params_of(o, beta);
    v.q = o.q;
    v.levels = o.levels;
    if (o.rmin) v.r_min = *o.rmin;
    if (o.rmax) v.r_max = *o.rmax;
    if (o.points) v.points = *o.points;
    v.threads = o.threads;
    v.seed = o.seed;
    if (!o.a.empty()) v.a = parse_exact_decimal(o.a);
    if (!(v.a > 0)) throw DomainError("a must be positive");
    if (o.nmax) v.n_max = *o.nmax;
    if (o.lmax) v.l_max = *o.lmax;
    v.max_sum = o.max_sum;

    std::vector<std::string> suites;
    if (o.suite == "all")
        suites = suite_names();
    else
        suites = {o.suite};

    Result r;
    r.table.columns = {"suite", "check", "measured", "lower", "upper", "passed"};
    Json tolerances = Json::object();
    Json per_suite = Json::object();
    for (const auto& name : suites) {
        const SuiteReport rep = run_suite(name, v);
        for (const auto& c : rep.checks) {
            Json upper = std::isinf(c.upper) ? Json(nullptr) : Json(round15(c.upper));
            r.table.rows.push_back({{"suite", rep.suite},
                                    {"check", c.name},
                                    {"measured", round15(c.measured)},
                                    {"lower", round15(c.lower)},
                                    {"upper", upper},
                                    {"passed", c.passed}});
            tolerances[rep.suite + ": " + c.name] = Json::array({round15(c.lower), upper});
        }
        Json d = Json::object();
        for (const auto& [key, value] : rep.diagnostics) d[key] = round15(value);
        if (!rep.notes.empty()) d["notes"] = rep.notes;
        d["passed"] = rep.passed();
        per_suite[rep.suite] = d;
        if (!rep.passed()) r.verification_failed = true;
    }
    r.diagnostics["tolerances"] = tolerances;
    r.diagnostics["grid"] = Json{{"r_min", round15(v.r_min)}, {"r_max", round15(v.r_max)}, {"points", v.points}};
    r.diagnostics["suites"] = per_suite;
    r.extra_meta["suite"] = o.suite;
    r.extra_meta["passed"] = !r.verification_failed;
    return r;
}

inline Result conventions()
{
    Result r;
    r.table.columns = {"variant", "chart", "energy_scale", "constant_term_k2", "eigenvalue_shift_k2",
                       "level_parameter", "eigenvalue"};
    for (auto v : all_variants) {
        const auto& d = describe(v);
        r.table.rows.push_back({{"variant", std::string(d.id)},
                                {"chart", to_string(d.chart)},
                                {"energy_scale", round15(d.energy_scale)},
                                {"constant_term_k2", round15(d.constant_term_k2)},
                                {"eigenvalue_shift_k2", round15(d.shift_k2)},
                                {"level_parameter", std::string(d.level_parameter)},
                                {"eigenvalue", std::string(d.eigenvalue_formula)}});
    }
    r.diagnostics["tolerances"] = Json::object();
    r.diagnostics["grid"] = nullptr;
    return r;
}

inline void error_line(std::ostream& err, const std::string& kind, const std::string& message)
{
    err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

} // namespace detail

/// Parses args (program name excluded), writes the report to out, and
/// returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exactly solvable Perlick family I radial systems", "perlick_cli"};
    app.require_subcommand(0, 1);
    bool show_conventions = false;
    app.add_flag("--convention", show_conventions, "Print the Hamiltonian variant conventions and exit");

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--mu", o.mu, "Coupling mu > 0");
        sub->add_option("--k", o.k, "Curvature scale k");
        sub->add_option("--beta", o.beta, "Deformation exponent (fraction or decimal)");
        sub->add_option("--G", o.g_shift, "Additive constant in the potential");
        sub->add_flag("--timing", o.timing, "Add runtime_ms to diagnostics");
    };
    app.fallthrough();
    common(&app);

    auto* spectrum = app.add_subcommand("spectrum", "Bound levels E(n,l)");
    spectrum->add_option("--nmax", o.nmax);
    spectrum->add_option("--lmax", o.lmax);

    auto* wave = app.add_subcommand("wavefunction", "Tabulate a normalized bound state");
    wave->add_option("--n", o.n);
    wave->add_option("--l", o.l);
    wave->add_option("--rep", o.rep, "hyperbolic | flat_radius_lb | conformal_lb | conformal_vm");
    wave->add_option("--points", o.points);
    wave->add_option("--rmin", o.rmin);
    wave->add_option("--rmax", o.rmax);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_choices));
    verify->add_option("--q", o.q);
    verify->add_option("--levels", o.levels);
    verify->add_option("--rmin", o.rmin);
    verify->add_option("--rmax", o.rmax);
    verify->add_option("--points", o.points);
    verify->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
    verify->add_option("--a", o.a, "Exponent a = 1/beta for the degeneracy suite");
    verify->add_option("--nmax", o.nmax);
    verify->add_option("--lmax", o.lmax);
    verify->add_option("--seed", o.seed);
    verify->add_option("--maxsum", o.max_sum, "Largest n + l for the ladder and flatlimit suites");

    auto* degen = app.add_subcommand("degeneracy", "Accidental degeneracy multiplets");
    degen->add_option("--a", o.a, "Exact exponent a = m1/m2");
    degen->add_option("--nmax", o.nmax);
    degen->add_option("--lmax", o.lmax);

    auto* curv = app.add_subcommand("curvature", "Scalar curvature profile in the conformal radius");
    curv->add_option("--points", o.points);
    curv->add_option("--rmin", o.rmin, "Smallest conformal radius");
    curv->add_option("--rmax", o.rmax, "Largest conformal radius");

    for (auto* sub : {spectrum, wave, verify, degen, curv}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        detail::error_line(err, "usage", e.what());
        err << app.help();
        return usage;
    }

    std::string command;
    if (show_conventions)
        command = "convention";
    else if (!app.get_subcommands().empty())
        command = app.get_subcommands().front()->get_name();
    else {
        detail::error_line(err, "usage", "a command is required");
        err << app.help();
        return usage;
    }

    const auto start = std::chrono::steady_clock::now();
    detail::Result result;
    try {
        if (command == "convention") result = detail::conventions();
        else if (command == "spectrum") result = detail::spectrum(o);
        else if (command == "wavefunction") result = detail::wavefunction(o);
        else if (command == "verify") result = detail::verify(o);
        else if (command == "degeneracy") result = detail::degeneracy(o);
        else result = detail::curvature(o);

        if (o.timing)
            result.diagnostics["runtime_ms"] = round15(
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());

        std::ostringstream buf;
        if (o.format == "csv") {
            result.table.write_csv(buf);
        } else {
            Json meta{{"command", command}, {"params", detail::params_json(o)}, {"conventions-version", conventions_version}};
            for (auto it = result.extra_meta.begin(); it != result.extra_meta.end(); ++it) meta[it.key()] = it.value();
            Json doc{{"meta", meta}, {"data", result.table.rows}, {"diagnostics", result.diagnostics}};
            buf << doc.dump(2) << "\n";
        }
        out << buf.str();
    } catch (const CLI::ValidationError& e) {
        detail::error_line(err, "usage", e.what());
        return usage;
    } catch (const std::invalid_argument& e) {
        detail::error_line(err, "usage", e.what());
        return usage;
    } catch (const SerializationError& e) {
        detail::error_line(err, "serialization", e.what());
        return domain_error;
    } catch (const std::domain_error& e) {
        detail::error_line(err, "domain", e.what());
        return domain_error;
    } catch (const std::exception& e) {
        detail::error_line(err, "internal", e.what());
        return domain_error;
    }
    return result.verification_failed ? verification_failed : ok;
}

} // namespace perlick::cli
