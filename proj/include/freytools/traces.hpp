#pragma once

// Naive point counting mod ell and the mod-p trace comparator.

#include "freytools/arith.hpp"
#include "freytools/tate.hpp"
#include "freytools/weierstrass.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace freytools {

inline constexpr std::int64_t default_lmax = 10000;

struct TraceRecord {
    std::int64_t ell = 0;
    std::optional<std::int64_t> a_ell; // absent at bad primes
    bool good = false;

    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct TraceViolation {
    std::int64_t ell = 0;
    std::int64_t a_ell_1 = 0;
    std::int64_t a_ell_2 = 0;

    friend bool operator==(const TraceViolation&, const TraceViolation&) = default;
};

inline const std::string& congruence_disclaimer() {
    static const std::string text =
        "congruent traces at finitely many primes are necessary for isomorphic mod-p representations; "
        "they are evidence, not proof";
    return text;
}

struct CongruenceReport {
    std::int64_t p = 0;
    std::int64_t lmax = 0;
    std::vector<std::int64_t> compared_primes;
    bool congruent = true;
    std::optional<TraceViolation> first_violation;
    std::string disclaimer = congruence_disclaimer();

    friend bool operator==(const CongruenceReport&, const CongruenceReport&) = default;
};

namespace detail {

// A model that is minimal at ell, or nullopt when ell is a bad prime.
inline std::optional<WeierstrassModel> good_model_at(const WeierstrassModel& model, std::int64_t ell) {
    if (mod_floor(model.discriminant(), ell) != 0) return model;
    const auto ld = local_data(model, ell);
    if (ld.reduction != Reduction::Good) return std::nullopt;
    return ld.minimal_model;
}

// -sum_x (4x^3 + b2 x^2 + 2 b4 x + b6 / ell), the completed-square character sum.
inline std::int64_t character_sum_trace(const WeierstrassModel& m, std::int64_t ell) {
    const std::int64_t b2 = mod_floor(m.b2(), ell);
    const std::int64_t b4 = mod_floor(2 * m.b4(), ell);
    const std::int64_t b6 = mod_floor(m.b6(), ell);
    std::int64_t sum = 0;
    for (std::int64_t x = 0; x < ell; ++x) {
        // Horner with reductions keeps every intermediate below ell^2.
        std::int64_t f = 4 % ell;
        f = (f * x + b2) % ell;
        f = (f * x + b4) % ell;
        f = (f * x + b6) % ell;
        sum += legendre_u64(f, ell);
    }
    return -sum;
}

} // namespace detail

/// a_ell = ell + 1 - #E(F_ell) at an odd prime of good reduction.
inline std::int64_t count_points(const WeierstrassModel& model, std::int64_t ell,
                                 std::int64_t lmax = default_lmax) {
    if (ell == 2) throw domain_error("ell = 2 is not supported");
    require_odd_prime(ell, "ell");
    if (ell > lmax) throw domain_error("ell exceeds configured lmax");
    if (ell > 3037000499) throw domain_error("ell too large for naive counting");
    const auto good = detail::good_model_at(model, ell);
    if (!good) throw domain_error("bad reduction");
    return detail::character_sum_trace(*good, ell);
}

inline std::vector<TraceRecord> trace_table(const WeierstrassModel& model, std::int64_t lmax) {
    if (lmax < 3) throw domain_error("lmax must be at least 3");
    std::vector<TraceRecord> out;
    for (auto ell : primes_up_to(lmax)) {
        if (ell == 2) continue;
        TraceRecord rec{ell, std::nullopt, false};
        if (const auto good = detail::good_model_at(model, ell)) {
            rec.good = true;
            rec.a_ell = detail::character_sum_trace(*good, ell);
        }
        out.push_back(rec);
    }
    return out;
}

/// Compares a_ell mod p at odd primes ell <= lmax, ell != p, good for both curves.
inline CongruenceReport mod_p_congruent(const WeierstrassModel& m1, const WeierstrassModel& m2, std::int64_t p,
                                        std::int64_t lmax) {
    require_prime(p, "p");
    const auto t1 = trace_table(m1, lmax);
    const auto t2 = trace_table(m2, lmax);
    CongruenceReport rep;
    rep.p = p;
    rep.lmax = lmax;
    for (std::size_t i = 0; i < t1.size(); ++i) {
        const auto& r1 = t1[i];
        const auto& r2 = t2[i];
        if (!r1.good || !r2.good || r1.ell == p) continue;
        rep.compared_primes.push_back(r1.ell);
        if (!rep.first_violation && detail::mod_i64(*r1.a_ell - *r2.a_ell, p) != 0)
            rep.first_violation = TraceViolation{r1.ell, *r1.a_ell, *r2.a_ell};
    }
    rep.congruent = !rep.first_violation.has_value();
    return rep;
}

} // namespace freytools
