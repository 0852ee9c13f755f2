#pragma once

// Exhaustive bounded-height searches: a^p + L^alpha b^p + c^p = 0 and
// arithmetic progressions of perfect powers.

#include "freytools/arith.hpp"
#include "freytools/frey.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <string>
#include <tuple>
#include <vector>

namespace freytools {

/// Primes L covered by the Serre-style family result (with p >= 11, p != L).
inline constexpr std::array<std::int64_t, 11> sigma_family = {3, 5, 7, 11, 13, 17, 19, 23, 29, 53, 59};

inline bool in_sigma_family(std::int64_t L) {
    return std::find(sigma_family.begin(), sigma_family.end(), L) != sigma_family.end();
}

struct SearchSpec {
    std::int64_t p = 5;
    std::int64_t alpha = 1;
    std::int64_t L = 2;
    std::int64_t height = 1;
    bool require_primitive = true;
    unsigned workers = 1;
};

using Triple = std::array<ExactInt, 3>;

struct SolutionRecord {
    ExactInt a, b, c;
    Triple normalized_form;
    bool trivial = false;
    ExactInt content = 1; // gcd(a, b, c)

    friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

/// Orbit representative under global sign flip and a <-> c swap: prefer
/// a == 3 mod 4, then the lexicographically smallest (a, b, c).
inline Triple canonical_triple(const ExactInt& a, const ExactInt& b, const ExactInt& c) {
    const std::array<Triple, 4> orbit = {Triple{a, b, c}, Triple{-a, -b, -c}, Triple{c, b, a}, Triple{-c, -b, -a}};
    auto key = [](const Triple& t) { return std::make_tuple(mod_floor(t[0], ExactInt(4)) == 3 ? 0 : 1, t[0], t[1], t[2]); };
    return *std::min_element(orbit.begin(), orbit.end(), [&](const Triple& x, const Triple& y) { return key(x) < key(y); });
}

namespace detail {

struct ReducedSpec {
    std::int64_t alpha;
    ExactInt coefficient; // L^alpha
};

inline ReducedSpec reduce_search_spec(const SearchSpec& spec) {
    if (spec.height < 1) throw domain_error("height must be at least 1");
    if (spec.p < 3 || spec.p % 2 == 0) throw domain_error("p must be an odd prime");
    require_odd_prime(spec.p, "p");
    require_prime(spec.L, "L");
    if (spec.alpha < 0) throw domain_error("alpha must be non-negative");
    // L^alpha b^p = L^(alpha mod p) (L^(alpha div p) b)^p; the box bounds the reduced b.
    const std::int64_t a = spec.alpha % spec.p;
    return {a, ipow(ExactInt(spec.L), static_cast<unsigned>(a))};
}

inline SolutionRecord make_record(const ExactInt& a, const ExactInt& b, const ExactInt& c, const SearchSpec& spec,
                                  std::int64_t alpha) {
    SolutionRecord r;
    r.normalized_form = canonical_triple(a, b, c);
    r.a = r.normalized_form[0];
    r.b = r.normalized_form[1];
    r.c = r.normalized_form[2];
    r.content = gcd_all({a, b, c});
    r.trivial = spec.L == 2 && alpha == 1 && r.normalized_form == Triple{-1, 1, -1};
    return r;
}

inline bool record_less(const SolutionRecord& x, const SolutionRecord& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
}

inline void sort_unique(std::vector<SolutionRecord>& v) {
    std::sort(v.begin(), v.end(), record_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Solutions with a in [a_lo, a_hi] (zero skipped); c is forced by exact root extraction.
inline std::vector<SolutionRecord> search_slab(const SearchSpec& spec, const ReducedSpec& red, std::int64_t a_lo,
                                               std::int64_t a_hi) {
    const auto e = static_cast<unsigned>(spec.p);
    const std::int64_t H = spec.height;
    std::vector<ExactInt> powers(static_cast<std::size_t>(2 * H + 1));
    for (std::int64_t x = -H; x <= H; ++x) powers[static_cast<std::size_t>(x + H)] = ipow(ExactInt(x), e);
    auto pw = [&](std::int64_t x) -> const ExactInt& { return powers[static_cast<std::size_t>(x + H)]; };

    std::vector<SolutionRecord> out;
    for (std::int64_t a = a_lo; a <= a_hi; ++a) {
        if (a == 0) continue;
        for (std::int64_t b = -H; b <= H; ++b) {
            if (b == 0) continue;
            const ExactInt target = -pw(a) - red.coefficient * pw(b);
            if (target == 0) continue;
            const auto c = exact_root(target, e);
            if (!c || abs_value(*c) > H) continue;
            if (spec.require_primitive && gcd_all({ExactInt(a), ExactInt(b), *c}) != 1) continue;
            // Re-verify with full exact arithmetic before emitting.
            if (!satisfies_equation(spec.p, red.alpha, a, b, *c, spec.L))
                throw std::logic_error("search emitted a non-solution");
            out.push_back(make_record(a, b, *c, spec, red.alpha));
        }
    }
    return out;
}

} // namespace detail

inline std::vector<SolutionRecord> search_star(const SearchSpec& spec) {
    const auto red = detail::reduce_search_spec(spec);
    const std::int64_t H = spec.height;
    const unsigned workers = std::max(1u, spec.workers);
    std::vector<std::future<std::vector<SolutionRecord>>> tasks;
    const std::int64_t span = 2 * H + 1;
    for (unsigned w = 0; w < workers; ++w) {
        const std::int64_t lo = -H + span * w / workers;
        const std::int64_t hi = -H + span * (w + 1) / workers - 1;
        if (lo > hi) continue;
        tasks.push_back(std::async(std::launch::async, [&spec, red, lo, hi] { return detail::search_slab(spec, red, lo, hi); }));
    }
    std::vector<SolutionRecord> out;
    for (auto& t : tasks) {
        auto part = t.get();
        out.insert(out.end(), part.begin(), part.end());
    }
    detail::sort_unique(out);
    return out;
}

enum class ExpectedOutcome { Empty, TrivialOnly, NoClaim };

inline const char* to_string(ExpectedOutcome e) {
    switch (e) {
    case ExpectedOutcome::Empty: return "empty";
    case ExpectedOutcome::TrivialOnly: return "trivial_only";
    case ExpectedOutcome::NoClaim: return "no_claim";
    }
    return "?";
}

/// What the known theorems predict for a primitive search with these parameters.
inline ExpectedOutcome expected_outcome(std::int64_t p, std::int64_t alpha, std::int64_t L) {
    const std::int64_t a = alpha % p;
    if (L == 2) {
        if (a == 0) return ExpectedOutcome::Empty; // Fermat
        return a == 1 ? ExpectedOutcome::TrivialOnly : ExpectedOutcome::Empty;
    }
    if (in_sigma_family(L) && p >= 11 && p != L) return ExpectedOutcome::Empty;
    return ExpectedOutcome::NoClaim;
}

inline bool conforms(ExpectedOutcome expected, const std::vector<SolutionRecord>& found) {
    switch (expected) {
    case ExpectedOutcome::Empty: return found.empty();
    case ExpectedOutcome::TrivialOnly:
        return std::all_of(found.begin(), found.end(), [](const SolutionRecord& r) { return r.trivial; });
    case ExpectedOutcome::NoClaim: return true;
    }
    return true;
}

struct ClaimCheck {
    std::int64_t p = 0;
    std::int64_t alpha = 0;
    std::int64_t height = 0;
    ExpectedOutcome expected = ExpectedOutcome::Empty;
    std::vector<SolutionRecord> solutions;
    bool conforms = true;
    std::vector<SolutionRecord> counterexample_candidates;

    friend bool operator==(const ClaimCheck&, const ClaimCheck&) = default;
};

struct ClaimSummary {
    std::vector<ClaimCheck> checks;
    bool all_conform = true;

    friend bool operator==(const ClaimSummary&, const ClaimSummary&) = default;
};

inline ClaimCheck check_claim(std::int64_t p, std::int64_t alpha, std::int64_t height, unsigned workers) {
    SearchSpec spec{p, alpha, 2, height, true, workers};
    ClaimCheck c;
    c.p = p;
    c.alpha = alpha;
    c.height = height;
    c.expected = expected_outcome(p, alpha, 2);
    c.solutions = search_star(spec);
    c.conforms = conforms(c.expected, c.solutions);
    for (const auto& r : c.solutions)
        if (!(c.expected == ExpectedOutcome::TrivialOnly && r.trivial)) c.counterexample_candidates.push_back(r);
    return c;
}

/// Runs every (p, alpha) with 1 <= alpha < p against the L = 2 expectations.
inline ClaimSummary verify_theorem_claims(const std::vector<std::int64_t>& p_list,
                                          const std::vector<std::int64_t>& alpha_list, std::int64_t height,
                                          unsigned workers = 1) {
    ClaimSummary s;
    for (auto p : p_list) {
        require_odd_prime(p, "p");
        for (auto alpha : alpha_list) {
            if (alpha < 1 || alpha >= p) continue;
            s.checks.push_back(check_claim(p, alpha, height, workers));
            s.all_conform = s.all_conform && s.checks.back().conforms;
        }
    }
    return s;
}

struct CubicReport {
    ClaimCheck alpha1; // a^3 + 2b^3 + c^3 = 0: trivial solutions only
    ClaimCheck alpha2; // a^3 + 4b^3 + c^3 = 0: no solutions
    bool failure = false;
};

inline CubicReport verify_cubic_cases(std::int64_t height, unsigned workers = 1) {
    CubicReport r;
    r.alpha1 = check_claim(3, 1, height, workers);
    r.alpha2 = check_claim(3, 2, height, workers);
    r.failure = !r.alpha1.conforms || !r.alpha2.conforms;
    return r;
}

using PowerProgression = std::vector<std::int64_t>;

/// Base tuples 1 <= x1 <= ... <= xk <= H whose n-th powers are in arithmetic
/// progression; distinct_only drops tuples with repeated bases.
inline std::vector<PowerProgression> search_ap_powers(unsigned n, unsigned k, std::int64_t height, bool distinct_only) {
    if (n < 2) throw domain_error("power must be at least 2");
    if (k != 3 && k != 4) throw domain_error("progression length must be 3 or 4");
    if (height < 1) throw domain_error("height must be at least 1");
    std::vector<ExactInt> powers(static_cast<std::size_t>(height) + 1);
    for (std::int64_t x = 0; x <= height; ++x) powers[static_cast<std::size_t>(x)] = ipow(ExactInt(x), n);
    const ExactInt top = powers.back();

    std::vector<PowerProgression> out;
    for (std::int64_t x1 = 1; x1 <= height; ++x1) {
        for (std::int64_t x2 = x1; x2 <= height; ++x2) {
            const ExactInt d = powers[static_cast<std::size_t>(x2)] - powers[static_cast<std::size_t>(x1)];
            PowerProgression tuple{x1, x2};
            ExactInt next = powers[static_cast<std::size_t>(x2)];
            bool ok = true;
            while (tuple.size() < k) {
                next += d;
                if (next > top) {
                    ok = false;
                    break;
                }
                const auto root = exact_root(next, n);
                if (!root) {
                    ok = false;
                    break;
                }
                tuple.push_back(static_cast<std::int64_t>(*root));
            }
            if (!ok) continue;
            if (distinct_only && d == 0) continue;
            // Exact re-check on the powers.
            for (std::size_t i = 2; i < tuple.size(); ++i) {
                const auto& p0 = powers[static_cast<std::size_t>(tuple[i - 2])];
                const auto& p1 = powers[static_cast<std::size_t>(tuple[i - 1])];
                const auto& p2 = powers[static_cast<std::size_t>(tuple[i])];
                if (p2 - p1 != p1 - p0) throw std::logic_error("progression search emitted a non-progression");
            }
            out.push_back(std::move(tuple));
        }
    }
    return out;
}

} // namespace freytools
