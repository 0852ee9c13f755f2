#pragma once

// Command-line front end. run() parses argv, dispatches to one subcommand and
// writes the report to `out`; diagnostics go to `err`.
//
// Exit codes: 0 clean, 1 usage error, 2 domain error, 3 counterexample candidate.

#include "freytools/denes.hpp"
#include "freytools/frey.hpp"
#include "freytools/report.hpp"
#include "freytools/search.hpp"
#include "freytools/tate.hpp"
#include "freytools/traces.hpp"
#include "freytools/version.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace freytools::cli {

enum ExitCode : int { ok = 0, usage = 1, domain = 2, counterexample = 3 };

enum class OutputFormat { json, csv, human };

struct RunConfig {
    std::string command;
    OutputFormat format = OutputFormat::json;
    bool format_given = false;

    std::int64_t p = 0;
    std::int64_t alpha = 1;
    std::int64_t L = 2;
    std::int64_t height = 1;
    bool allow_imprimitive = false;
    std::int64_t scan_max = 0;
    std::string triple;
    std::string model, model1, model2;
    std::int64_t lmax = default_lmax;
    std::uint64_t factor_bound = default_factor_bound();
    unsigned parallelism = 1;
    unsigned n = 2;
    unsigned k = 3;
    bool include_constant = false;
    std::vector<std::int64_t> p_list, alpha_list;
};

namespace detail {

inline std::vector<ExactInt> parse_int_list(const std::string& s, std::size_t expected, const char* what) {
    std::vector<ExactInt> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) throw CLI::ValidationError(what, "empty entry");
        item = item.substr(first, last - first + 1);
        const std::size_t start = (item[0] == '-' || item[0] == '+') ? 1 : 0;
        if (start == item.size() || !std::all_of(item.begin() + static_cast<std::ptrdiff_t>(start), item.end(),
                                                 [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw CLI::ValidationError(what, "not an integer: " + item);
        out.emplace_back(item[0] == '+' ? item.substr(1) : item);
    }
    if (out.size() != expected)
        throw CLI::ValidationError(what, "expected " + std::to_string(expected) + " comma-separated integers");
    return out;
}

inline WeierstrassModel parse_model(const std::string& s, const char* what) {
    const auto v = parse_int_list(s, 5, what);
    return {v[0], v[1], v[2], v[3], v[4]};
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

inline json with_envelope(const char* kind, const json& body) {
    json j = envelope(kind);
    for (const auto& [k, v] : body.items()) j[k] = v;
    return j;
}

inline int run_analyze(const RunConfig& cfg, std::ostream& out) {
    const auto t = parse_int_list(cfg.triple, 3, "--triple");
    const auto [alpha, b] = reduce_alpha(cfg.alpha, t[1], cfg.p);
    if (alpha == 0) throw domain_error("Fermat case (alpha = 0 after reduction): not a solution");
    const auto params = normalize(cfg.p, alpha, t[0], b, t[2]);
    const auto [triple, model] = build_frey(params);
    const auto inv = invariants(triple, cfg.p, cfg.factor_bound);
    const auto oracle = global_conductor_data(model, cfg.factor_bound);
    unsigned oracle_t = 0;
    for (const auto& ld : oracle.local)
        if (ld.prime == 2) oracle_t = ld.conductor_exponent;
    const bool agrees = oracle.conductor == inv.conductor && oracle_t == inv.t;

    json body{{"params", params},
              {"monomials", triple},
              {"model", model},
              {"invariants", inv},
              {"cartan_type", to_string(cartan_type(cfg.p))},
              {"is_trivial_level", is_trivial_level(inv)},
              {"oracle", {{"conductor", exact_to_json(oracle.conductor)},
                          {"t", oracle_t},
                          {"local_data", oracle.local},
                          {"agrees_with_table", agrees}}}};
    if (cfg.format == OutputFormat::human) {
        out << "a,b,c        " << params.a << ',' << params.b << ',' << params.c << " (p=" << params.p
            << ", alpha=" << params.alpha << ")\n"
            << "A,B,C        " << triple.A << ',' << triple.B << ',' << triple.C << '\n'
            << "t            " << inv.t << '\n'
            << "conductor    " << inv.conductor << " (oracle " << oracle.conductor << ")\n"
            << "u            " << inv.u << '\n'
            << "semistable   " << (inv.semistable ? "yes" : "no") << '\n'
            << "cartan       " << to_string(cartan_type(cfg.p)) << '\n'
            << "trivial      " << (is_trivial_level(inv) ? "yes" : "no") << '\n';
    } else {
        emit(out, with_envelope("analyze", body));
    }
    return agrees ? ok : counterexample;
}

inline int run_denes(const RunConfig& cfg, std::ostream& out) {
    std::vector<DenesReport> reports;
    if (cfg.scan_max > 0) reports = denes_scan(cfg.scan_max, cfg.parallelism);
    else reports.push_back(denes_criterion(cfg.p));
    switch (cfg.format) {
    case OutputFormat::csv: out << denes_csv(reports); break;
    case OutputFormat::human:
        for (const auto& r : reports) {
            out << "p=" << std::setw(5) << r.p << "  regular=" << r.is_regular << "  ord2=" << std::setw(5) << r.ord2
                << "  wieferich=" << r.wieferich_violation << "  holds=" << r.criterion_holds << '\n';
        }
        break;
    case OutputFormat::json:
        for (const auto& r : reports) out << with_envelope("denes", json(r)).dump() << '\n';
        break;
    }
    return ok;
}

inline int run_search(const RunConfig& cfg, std::ostream& out) {
    SearchSpec spec{cfg.p, cfg.alpha, cfg.L, cfg.height, !cfg.allow_imprimitive, cfg.parallelism};
    const auto found = search_star(spec);
    std::vector<SolutionRecord> primitive;
    std::copy_if(found.begin(), found.end(), std::back_inserter(primitive),
                 [](const SolutionRecord& r) { return r.content == 1; });
    const auto expected = expected_outcome(cfg.p, cfg.alpha, cfg.L);
    const bool ok_ = conforms(expected, primitive);
    const bool empirical = cfg.L != 2;
    if (cfg.format == OutputFormat::csv) {
        out << solutions_csv(found);
    } else if (cfg.format == OutputFormat::human) {
        out << "a^" << cfg.p << " + " << cfg.L << "^" << cfg.alpha << " b^" << cfg.p << " + c^" << cfg.p
            << " = 0, |a|,|b|,|c| <= " << cfg.height << ": " << found.size() << " solution(s)\n";
        for (const auto& r : found) out << "  (" << r.a << ", " << r.b << ", " << r.c << ")" << (r.trivial ? " trivial" : "") << '\n';
        out << "expected " << to_string(expected) << ": " << (ok_ ? "conforms" : "DEVIATES") << '\n';
    } else {
        json body{{"p", cfg.p},
                  {"alpha", cfg.alpha},
                  {"L", cfg.L},
                  {"height", cfg.height},
                  {"require_primitive", !cfg.allow_imprimitive},
                  {"expected", to_string(expected)},
                  {"empirical", empirical},
                  {"solutions", found},
                  {"conforms", ok_}};
        emit(out, with_envelope("search", body));
    }
    return ok_ ? ok : counterexample;
}

inline int run_ap_search(const RunConfig& cfg, std::ostream& out) {
    const auto found = search_ap_powers(cfg.n, cfg.k, cfg.height, !cfg.include_constant);
    // Known nonexistence results for distinct progressions.
    const bool claim_empty = !cfg.include_constant && ((cfg.n == 2 && cfg.k == 4) || (cfg.n == 4 && cfg.k == 3));
    const bool ok_ = !claim_empty || found.empty();
    if (cfg.format == OutputFormat::csv) {
        out << progressions_csv(found);
    } else if (cfg.format == OutputFormat::human) {
        out << found.size() << " progression(s) of " << cfg.k << " " << cfg.n << "-th powers, bases <= " << cfg.height << '\n';
        for (const auto& t : found) {
            for (std::size_t i = 0; i < t.size(); ++i) out << (i ? ", " : "  ") << t[i];
            out << '\n';
        }
    } else {
        json body{{"n", cfg.n},
                  {"k", cfg.k},
                  {"height", cfg.height},
                  {"distinct_only", !cfg.include_constant},
                  {"expected_empty", claim_empty},
                  {"progressions", found},
                  {"conforms", ok_}};
        emit(out, with_envelope("ap-search", body));
    }
    return ok_ ? ok : counterexample;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
    const auto summary = verify_theorem_claims(cfg.p_list, cfg.alpha_list, cfg.height, cfg.parallelism);
    if (cfg.format == OutputFormat::human) {
        for (const auto& c : summary.checks)
            out << "p=" << std::setw(3) << c.p << " alpha=" << std::setw(3) << c.alpha << "  " << std::setw(12)
                << to_string(c.expected) << "  found=" << c.solutions.size() << "  "
                << (c.conforms ? "conforms" : "COUNTEREXAMPLE CANDIDATE") << '\n';
    } else if (cfg.format == OutputFormat::csv) {
        out << "p,alpha,height,expected,solutions,conforms\n";
        for (const auto& c : summary.checks)
            out << c.p << ',' << c.alpha << ',' << c.height << ',' << to_string(c.expected) << ','
                << c.solutions.size() << ',' << (c.conforms ? 1 : 0) << '\n';
    } else {
        emit(out, with_envelope("verify", json(summary)));
    }
    return summary.all_conform ? ok : counterexample;
}

inline int run_traces(const RunConfig& cfg, std::ostream& out) {
    const auto model = parse_model(cfg.model, "--model");
    if (model.is_singular()) throw domain_error("singular model");
    const auto rows = trace_table(model, cfg.lmax);
    if (cfg.format == OutputFormat::json) {
        emit(out, with_envelope("traces", json{{"model", model}, {"lmax", cfg.lmax}, {"records", rows}}));
    } else if (cfg.format == OutputFormat::human) {
        for (const auto& r : rows) {
            out << std::setw(6) << r.ell << "  ";
            if (r.a_ell) out << std::setw(5) << *r.a_ell;
            else out << "  bad";
            out << '\n';
        }
    } else {
        out << trace_table_csv(rows);
    }
    return ok;
}

inline int run_congruence(const RunConfig& cfg, std::ostream& out) {
    const auto m1 = parse_model(cfg.model1, "--model1");
    const auto m2 = parse_model(cfg.model2, "--model2");
    if (m1.is_singular() || m2.is_singular()) throw domain_error("singular model");
    const auto rep = mod_p_congruent(m1, m2, cfg.p, cfg.lmax);
    if (cfg.format == OutputFormat::human) {
        out << "compared " << rep.compared_primes.size() << " primes mod " << rep.p << ": "
            << (rep.congruent ? "congruent" : "violation");
        if (rep.first_violation)
            out << " at ell=" << rep.first_violation->ell << " (" << rep.first_violation->a_ell_1 << " vs "
                << rep.first_violation->a_ell_2 << ")";
        out << '\n';
    } else {
        emit(out, with_envelope("congruence", json(rep)));
    }
    return ok;
}

inline int run_conductor(const RunConfig& cfg, std::ostream& out) {
    const auto model = parse_model(cfg.model, "--model");
    const auto res = global_conductor_data(model, cfg.factor_bound);
    if (cfg.format == OutputFormat::human) {
        out << "conductor " << res.conductor << '\n';
        for (const auto& ld : res.local)
            out << "  " << std::setw(6) << ld.prime << "  f=" << ld.conductor_exponent << "  v(Dmin)="
                << ld.min_disc_valuation << "  " << ld.kodaira_type << "  " << to_string(ld.reduction) << '\n';
    } else {
        json body{{"model", model}, {"discriminant", exact_to_json(model.discriminant())}};
        const json local = res;
        for (const auto& [k, v] : local.items()) body[k] = v;
        emit(out, with_envelope("conductor", body));
    }
    return ok;
}

} // namespace detail

inline int dispatch(const RunConfig& cfg, std::ostream& out) {
    if (cfg.command == "analyze") return detail::run_analyze(cfg, out);
    if (cfg.command == "denes") return detail::run_denes(cfg, out);
    if (cfg.command == "search") return detail::run_search(cfg, out);
    if (cfg.command == "ap-search") return detail::run_ap_search(cfg, out);
    if (cfg.command == "verify") return detail::run_verify(cfg, out);
    if (cfg.command == "traces") return detail::run_traces(cfg, out);
    if (cfg.command == "congruence") return detail::run_congruence(cfg, out);
    if (cfg.command == "conductor") return detail::run_conductor(cfg, out);
    throw CLI::ValidationError("command", "unknown subcommand " + cfg.command);
}

namespace detail {

struct PrimeValidator : CLI::Validator {
    PrimeValidator() : CLI::Validator("PRIME") {
        func_ = [](const std::string& s) -> std::string {
            try {
                const ExactInt v(s);
                if (v < 2 || v >= primality_bound() || !is_prime(v)) return "value " + s + " is not a supported prime";
            } catch (const std::exception&) {
                return "value " + s + " is not an integer";
            }
            return {};
        };
    }
};

} // namespace detail

/// Parses and validates the arguments, then dispatches.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"freytools: Frey curves, Denes criterion, traces and bounded searches for a^p + 2^alpha b^p + c^p = 0"};
    app.require_subcommand(1);
    app.set_version_flag("--version", toolkit_version);
    std::string format = "json";
    const detail::PrimeValidator prime;
    const auto odd = CLI::Validator([](std::string& s) { return std::stoll(s) % 2 != 0 ? std::string{} : "must be odd"; }, "ODD");

    auto add_format = [&](CLI::App* sc, const char* def) {
        format = def;
        sc->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "human"}));
    };
    auto add_jobs = [&](CLI::App* sc) {
        sc->add_option("--jobs,--parallelism", cfg.parallelism, "Worker count")->check(CLI::Range(1u, 256u));
    };

    auto* analyze = app.add_subcommand("analyze", "Frey curve invariants for a solution, cross-checked by Tate's algorithm");
    analyze->add_option("--p", cfg.p, "Odd prime exponent")->required()->check(prime & odd);
    analyze->add_option("--alpha", cfg.alpha, "Power of 2")->required()->check(CLI::NonNegativeNumber);
    analyze->add_option("--triple", cfg.triple, "a,b,c")->required();
    analyze->add_option("--factor-bound", cfg.factor_bound, "Trial division bound")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));

    auto* denes = app.add_subcommand("denes", "Denes criterion for one prime or a range");
    auto* dp = denes->add_option("--p", cfg.p, "Prime p >= 5")->check(prime & CLI::Range(std::int64_t{5}, std::int64_t{1} << 20));
    auto* ds = denes->add_option("--scan", cfg.scan_max, "Scan all primes 5 <= p <= MAX")->check(CLI::Range(std::int64_t{5}, std::int64_t{1} << 20));
    dp->excludes(ds);
    add_jobs(denes);

    auto* search = app.add_subcommand("search", "Exhaustive search of a^p + L^alpha b^p + c^p = 0");
    search->add_option("--p", cfg.p, "Odd prime exponent")->required()->check(prime & odd & CLI::Range(3, 1000));
    search->add_option("--alpha", cfg.alpha, "Exponent of L")->required()->check(CLI::Range(std::int64_t{0}, std::int64_t{100000}));
    search->add_option("--L", cfg.L, "Prime base (default 2)")->check(prime & CLI::Range(2, 1000000));
    search->add_option("--height", cfg.height, "Bound on |a|, |b|, |c|")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{10000}));
    search->add_flag("--allow-imprimitive", cfg.allow_imprimitive, "Report non-primitive solutions too");
    add_jobs(search);

    auto* ap = app.add_subcommand("ap-search", "Arithmetic progressions of perfect powers");
    ap->add_option("--n", cfg.n, "Power")->required()->check(CLI::Range(2u, 1000u));
    ap->add_option("--k", cfg.k, "Progression length (3 or 4)")->required()->check(CLI::IsMember({3u, 4u}));
    ap->add_option("--height", cfg.height, "Bound on the bases")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{100000}));
    ap->add_flag("--include-constant", cfg.include_constant, "Keep constant progressions");

    auto* verify = app.add_subcommand("verify", "Check search outcomes against the L = 2 theorems");
    verify->add_option("--p-list", cfg.p_list, "Odd primes")->required()->delimiter(',')->check(prime & odd & CLI::Range(3, 1000));
    verify->add_option("--alpha-list", cfg.alpha_list, "Values of alpha")->required()->delimiter(',')->check(CLI::PositiveNumber);
    verify->add_option("--height", cfg.height, "Bound on |a|, |b|, |c|")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{10000}));
    add_jobs(verify);

    auto* traces = app.add_subcommand("traces", "Trace of Frobenius table");
    traces->add_option("--model", cfg.model, "a1,a2,a3,a4,a6")->required();
    traces->add_option("--lmax", cfg.lmax, "Largest ell")->check(CLI::Range(std::int64_t{3}, std::int64_t{10000000}));

    auto* cong = app.add_subcommand("congruence", "Compare traces of two curves mod p");
    cong->add_option("--model1", cfg.model1, "a1,a2,a3,a4,a6")->required();
    cong->add_option("--model2", cfg.model2, "a1,a2,a3,a4,a6")->required();
    cong->add_option("--p", cfg.p, "Prime modulus")->required()->check(prime);
    cong->add_option("--lmax", cfg.lmax, "Largest ell")->check(CLI::Range(std::int64_t{3}, std::int64_t{10000000}));

    auto* cond = app.add_subcommand("conductor", "Conductor and local data by Tate's algorithm");
    cond->add_option("--model", cfg.model, "a1,a2,a3,a4,a6")->required();
    cond->add_option("--factor-bound", cfg.factor_bound, "Trial division bound")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));

    for (auto* sc : {analyze, denes, search, ap, verify, cond}) add_format(sc, "json");
    // traces defaults to CSV; registered separately so the default differs.
    std::string traces_format = "csv";
    traces->add_option("--format", traces_format, "Output format")->check(CLI::IsMember({"json", "csv", "human"}));

    std::vector<std::string> argv_store{"freytools"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        cfg.command = app.get_subcommands().front()->get_name();
        if (cfg.command == "denes" && cfg.p == 0 && cfg.scan_max == 0)
            throw CLI::ValidationError("denes", "one of --p or --scan is required");
        if (cfg.command == "traces") format = traces_format;
        cfg.format = format == "csv" ? OutputFormat::csv : format == "human" ? OutputFormat::human : OutputFormat::json;
        if (cfg.command == "analyze" || cfg.command == "conductor") {
            // Validate integer lists before dispatch.
            if (cfg.command == "analyze") (void)detail::parse_int_list(cfg.triple, 3, "--triple");
            else (void)detail::parse_model(cfg.model, "--model");
        }
        if (cfg.command == "traces") (void)detail::parse_model(cfg.model, "--model");
        if (cfg.command == "congruence") {
            (void)detail::parse_model(cfg.model1, "--model1");
            (void)detail::parse_model(cfg.model2, "--model2");
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::CallForVersion&) {
        out << toolkit_version << '\n';
        return ok;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    try {
        return dispatch(cfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return domain;
    }
}

} // namespace freytools::cli
