#pragma once

// JSON and CSV encodings of every report type. Exact integers are emitted as
// JSON numbers when they fit in 64 bits and as decimal strings otherwise.

#include "freytools/denes.hpp"
#include "freytools/frey.hpp"
#include "freytools/search.hpp"
#include "freytools/tate.hpp"
#include "freytools/traces.hpp"
#include "freytools/version.hpp"

#include <json.hpp>

#include <limits>
#include <sstream>
#include <string>

namespace freytools {

using json = nlohmann::ordered_json;

inline json exact_to_json(const ExactInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline ExactInt exact_from_json(const json& j) {
    if (j.is_string()) return ExactInt(j.get<std::string>());
    if (j.is_number_integer()) return ExactInt(j.get<std::int64_t>());
    throw domain_error("expected an integer");
}

inline json envelope(const char* kind) {
    json j;
    j["schema_version"] = schema_version;
    j["toolkit_version"] = toolkit_version;
    j["report"] = kind;
    return j;
}

// DenesReport

inline void to_json(json& j, const DenesReport& r) {
    j = json{{"p", r.p},
             {"is_regular", r.is_regular},
             {"irregular_indices", r.irregular_indices},
             {"ord2", r.ord2},
             {"ord2_even", r.ord2_even},
             {"ord2_is_half", r.ord2_is_half},
             {"order_condition", r.order_condition},
             {"wieferich_violation", r.wieferich_violation},
             {"criterion_holds", r.criterion_holds},
             {"failed_conditions", r.failed_conditions}};
}

inline void from_json(const json& j, DenesReport& r) {
    j.at("p").get_to(r.p);
    j.at("is_regular").get_to(r.is_regular);
    j.at("irregular_indices").get_to(r.irregular_indices);
    j.at("ord2").get_to(r.ord2);
    j.at("ord2_even").get_to(r.ord2_even);
    j.at("ord2_is_half").get_to(r.ord2_is_half);
    j.at("order_condition").get_to(r.order_condition);
    j.at("wieferich_violation").get_to(r.wieferich_violation);
    j.at("criterion_holds").get_to(r.criterion_holds);
    j.at("failed_conditions").get_to(r.failed_conditions);
}

// Weierstrass models and local data

inline void to_json(json& j, const WeierstrassModel& m) {
    j = json{{"a1", exact_to_json(m.a1)}, {"a2", exact_to_json(m.a2)}, {"a3", exact_to_json(m.a3)},
             {"a4", exact_to_json(m.a4)}, {"a6", exact_to_json(m.a6)}};
}

inline void from_json(const json& j, WeierstrassModel& m) {
    m.a1 = exact_from_json(j.at("a1"));
    m.a2 = exact_from_json(j.at("a2"));
    m.a3 = exact_from_json(j.at("a3"));
    m.a4 = exact_from_json(j.at("a4"));
    m.a6 = exact_from_json(j.at("a6"));
}

inline void to_json(json& j, const LocalData& d) {
    j = json{{"prime", d.prime},
             {"conductor_exponent", d.conductor_exponent},
             {"min_disc_valuation", d.min_disc_valuation},
             {"kodaira_type", d.kodaira_type},
             {"reduction", to_string(d.reduction)},
             {"scaling_steps", d.scaling_steps},
             {"minimal_model", d.minimal_model}};
}

inline void from_json(const json& j, LocalData& d) {
    j.at("prime").get_to(d.prime);
    j.at("conductor_exponent").get_to(d.conductor_exponent);
    j.at("min_disc_valuation").get_to(d.min_disc_valuation);
    j.at("kodaira_type").get_to(d.kodaira_type);
    d.reduction = reduction_from_string(j.at("reduction").get<std::string>());
    j.at("scaling_steps").get_to(d.scaling_steps);
    j.at("minimal_model").get_to(d.minimal_model);
}

inline void to_json(json& j, const ConductorResult& r) {
    j = json{{"conductor", exact_to_json(r.conductor)}, {"local_data", r.local}};
}

inline void from_json(const json& j, ConductorResult& r) {
    r.conductor = exact_from_json(j.at("conductor"));
    j.at("local_data").get_to(r.local);
}

// Frey data

inline void to_json(json& j, const FreyParams& f) {
    j = json{{"p", f.p},
             {"alpha", f.alpha},
             {"a", exact_to_json(f.a)},
             {"b", exact_to_json(f.b)},
             {"c", exact_to_json(f.c)},
             {"normalized", f.normalized}};
}

inline void from_json(const json& j, FreyParams& f) {
    j.at("p").get_to(f.p);
    j.at("alpha").get_to(f.alpha);
    f.a = exact_from_json(j.at("a"));
    f.b = exact_from_json(j.at("b"));
    f.c = exact_from_json(j.at("c"));
    j.at("normalized").get_to(f.normalized);
}

inline void to_json(json& j, const MonomialTriple& m) {
    j = json{{"A", exact_to_json(m.A)}, {"B", exact_to_json(m.B)}, {"C", exact_to_json(m.C)}};
}

inline void from_json(const json& j, MonomialTriple& m) {
    m.A = exact_from_json(j.at("A"));
    m.B = exact_from_json(j.at("B"));
    m.C = exact_from_json(j.at("C"));
}

inline void to_json(json& j, const CurveInvariants& inv) {
    json vals = json::object();
    for (const auto& [q, v] : inv.odd_disc_valuations) vals[q.str()] = v;
    j = json{{"t", inv.t},
             {"odd_radical", exact_to_json(inv.odd_radical)},
             {"conductor", exact_to_json(inv.conductor)},
             {"semistable", inv.semistable},
             {"u", inv.u},
             {"odd_disc_valuations", vals}};
}

inline void from_json(const json& j, CurveInvariants& inv) {
    j.at("t").get_to(inv.t);
    inv.odd_radical = exact_from_json(j.at("odd_radical"));
    inv.conductor = exact_from_json(j.at("conductor"));
    j.at("semistable").get_to(inv.semistable);
    j.at("u").get_to(inv.u);
    inv.odd_disc_valuations.clear();
    for (const auto& [k, v] : j.at("odd_disc_valuations").items()) inv.odd_disc_valuations.emplace(ExactInt(k), v.get<unsigned>());
}

// Traces

inline void to_json(json& j, const TraceRecord& r) {
    j = json{{"ell", r.ell}, {"a_ell", r.a_ell ? json(*r.a_ell) : json(nullptr)}, {"reduction", r.good ? "Good" : "Bad"}};
}

inline void from_json(const json& j, TraceRecord& r) {
    j.at("ell").get_to(r.ell);
    r.good = j.at("reduction").get<std::string>() == "Good";
    r.a_ell = j.at("a_ell").is_null() ? std::nullopt : std::optional<std::int64_t>(j.at("a_ell").get<std::int64_t>());
}

inline void to_json(json& j, const CongruenceReport& r) {
    json viol = nullptr;
    if (r.first_violation)
        viol = json{{"ell", r.first_violation->ell},
                    {"a_ell_1", r.first_violation->a_ell_1},
                    {"a_ell_2", r.first_violation->a_ell_2}};
    j = json{{"p", r.p},
             {"lmax", r.lmax},
             {"compared_primes", r.compared_primes},
             {"congruent", r.congruent},
             {"first_violation", viol},
             {"disclaimer", r.disclaimer}};
}

inline void from_json(const json& j, CongruenceReport& r) {
    j.at("p").get_to(r.p);
    j.at("lmax").get_to(r.lmax);
    j.at("compared_primes").get_to(r.compared_primes);
    j.at("congruent").get_to(r.congruent);
    const auto& v = j.at("first_violation");
    if (v.is_null()) r.first_violation.reset();
    else r.first_violation = TraceViolation{v.at("ell").get<std::int64_t>(), v.at("a_ell_1").get<std::int64_t>(),
                                            v.at("a_ell_2").get<std::int64_t>()};
    j.at("disclaimer").get_to(r.disclaimer);
}

// Search

inline void to_json(json& j, const SolutionRecord& r) {
    j = json{{"a", exact_to_json(r.a)},
             {"b", exact_to_json(r.b)},
             {"c", exact_to_json(r.c)},
             {"normalized_form", json::array({exact_to_json(r.normalized_form[0]), exact_to_json(r.normalized_form[1]),
                                              exact_to_json(r.normalized_form[2])})},
             {"trivial", r.trivial},
             {"content", exact_to_json(r.content)}};
}

inline void from_json(const json& j, SolutionRecord& r) {
    r.a = exact_from_json(j.at("a"));
    r.b = exact_from_json(j.at("b"));
    r.c = exact_from_json(j.at("c"));
    const auto& nf = j.at("normalized_form");
    for (std::size_t i = 0; i < 3; ++i) r.normalized_form[i] = exact_from_json(nf.at(i));
    j.at("trivial").get_to(r.trivial);
    r.content = exact_from_json(j.at("content"));
}

inline void to_json(json& j, const ClaimCheck& c) {
    j = json{{"p", c.p},
             {"alpha", c.alpha},
             {"height", c.height},
             {"expected", to_string(c.expected)},
             {"solutions", c.solutions},
             {"conforms", c.conforms},
             {"counterexample_candidates", c.counterexample_candidates}};
}

inline ExpectedOutcome expected_from_string(const std::string& s) {
    if (s == "empty") return ExpectedOutcome::Empty;
    if (s == "trivial_only") return ExpectedOutcome::TrivialOnly;
    if (s == "no_claim") return ExpectedOutcome::NoClaim;
    throw domain_error("unknown expectation: " + s);
}

inline void from_json(const json& j, ClaimCheck& c) {
    j.at("p").get_to(c.p);
    j.at("alpha").get_to(c.alpha);
    j.at("height").get_to(c.height);
    c.expected = expected_from_string(j.at("expected").get<std::string>());
    j.at("solutions").get_to(c.solutions);
    j.at("conforms").get_to(c.conforms);
    j.at("counterexample_candidates").get_to(c.counterexample_candidates);
}

inline void to_json(json& j, const ClaimSummary& s) { j = json{{"all_conform", s.all_conform}, {"checks", s.checks}}; }

inline void from_json(const json& j, ClaimSummary& s) {
    j.at("all_conform").get_to(s.all_conform);
    j.at("checks").get_to(s.checks);
}

// CSV

inline std::string trace_table_csv(const std::vector<TraceRecord>& rows) {
    std::ostringstream os;
    os << "ell,a_ell,reduction\n";
    for (const auto& r : rows) {
        os << r.ell << ',';
        if (r.a_ell) os << *r.a_ell;
        os << ',' << (r.good ? "Good" : "Bad") << '\n';
    }
    return os.str();
}

inline std::string solutions_csv(const std::vector<SolutionRecord>& rows) {
    std::ostringstream os;
    os << "a,b,c,trivial,content\n";
    for (const auto& r : rows) os << r.a << ',' << r.b << ',' << r.c << ',' << (r.trivial ? 1 : 0) << ',' << r.content << '\n';
    return os.str();
}

inline std::string denes_csv(const std::vector<DenesReport>& rows) {
    std::ostringstream os;
    os << "p,is_regular,irregular_indices,ord2,order_condition,wieferich_violation,criterion_holds\n";
    for (const auto& r : rows) {
        os << r.p << ',' << r.is_regular << ',';
        for (std::size_t i = 0; i < r.irregular_indices.size(); ++i) os << (i ? ";" : "") << r.irregular_indices[i];
        os << ',' << r.ord2 << ',' << r.order_condition << ',' << r.wieferich_violation << ',' << r.criterion_holds << '\n';
    }
    return os.str();
}

inline std::string progressions_csv(const std::vector<PowerProgression>& rows) {
    std::ostringstream os;
    for (const auto& t : rows) {
        for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
        os << '\n';
    }
    return os.str();
}

} // namespace freytools
