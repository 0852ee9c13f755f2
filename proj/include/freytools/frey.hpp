#pragma once

// Normalized solutions of a^p + 2^alpha b^p + c^p = 0, their Frey curves
// y^2 = x(x - A)(x + B), and the closed-form conductor/discriminant data.

#include "freytools/arith.hpp"
#include "freytools/tate.hpp"
#include "freytools/weierstrass.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace freytools {

struct FreyParams {
    std::int64_t p = 0;
    std::int64_t alpha = 0;
    ExactInt a, b, c;
    bool normalized = false;

    friend bool operator==(const FreyParams&, const FreyParams&) = default;
};

struct MonomialTriple {
    ExactInt A, B, C;

    friend bool operator==(const MonomialTriple&, const MonomialTriple&) = default;
};

struct CurveInvariants {
    unsigned t = 0;
    ExactInt odd_radical;
    ExactInt conductor;
    bool semistable = false;
    int u = 0;
    std::map<ExactInt, unsigned> odd_disc_valuations;

    friend bool operator==(const CurveInvariants&, const CurveInvariants&) = default;
};

enum class CartanType { Split, NonSplit };

inline const char* to_string(CartanType c) { return c == CartanType::Split ? "Split" : "NonSplit"; }

/// Moves 2^alpha into b: returns (alpha mod p, 2^(alpha div p) b).
/// A zero first component is the Fermat case.
inline std::pair<std::int64_t, ExactInt> reduce_alpha(std::int64_t alpha, const ExactInt& b, std::int64_t p,
                                                      std::int64_t base = 2) {
    if (alpha < 0) throw domain_error("alpha must be non-negative");
    if (p < 2) throw domain_error("p must be a prime");
    const auto q = static_cast<unsigned>(alpha / p);
    return {alpha % p, ipow(ExactInt(base), q) * b};
}

inline bool satisfies_equation(std::int64_t p, std::int64_t alpha, const ExactInt& a, const ExactInt& b,
                               const ExactInt& c, std::int64_t base = 2) {
    const auto e = static_cast<unsigned>(p);
    return ipow(a, e) + ipow(ExactInt(base), static_cast<unsigned>(alpha)) * ipow(b, e) + ipow(c, e) == 0;
}

inline FreyParams normalize(std::int64_t p, std::int64_t alpha, ExactInt a, ExactInt b, ExactInt c) {
    require_odd_prime(p, "p");
    if (alpha < 1 || alpha >= p) throw domain_error("alpha must satisfy 1 <= alpha < p");
    if (a == 0 || b == 0 || c == 0) throw domain_error("a, b, c must be nonzero");
    if (!satisfies_equation(p, alpha, a, b, c)) throw domain_error("not a solution");
    if (gcd_all({a, b, c}) != 1) throw domain_error("not primitive");
    if (mod_floor(a, ExactInt(2)) == 0 || mod_floor(c, ExactInt(2)) == 0) throw domain_error("parity violation");
    if (mod_floor(a, ExactInt(4)) != 3) {
        a = -a;
        b = -b;
        c = -c;
    }
    return {p, alpha, std::move(a), std::move(b), std::move(c), true};
}

/// y^2 = x(x - A)(x + B) = x^3 + (B - A) x^2 - AB x
inline WeierstrassModel frey_model(const ExactInt& A, const ExactInt& B) { return {0, B - A, 0, -A * B, 0}; }

inline std::pair<MonomialTriple, WeierstrassModel> build_frey(const FreyParams& params) {
    if (!params.normalized) throw domain_error("params must be normalized");
    const auto e = static_cast<unsigned>(params.p);
    MonomialTriple m{ipow(params.a, e), ipow(ExactInt(2), static_cast<unsigned>(params.alpha)) * ipow(params.b, e),
                     ipow(params.c, e)};
    return {m, frey_model(m.A, m.B)};
}

/// Conductor exponent at 2 keyed on ord_2(B), for A == -1 mod 4.
inline unsigned conductor_exponent_at_2(unsigned ord2_B) {
    switch (ord2_B) {
    case 1: return 5;
    case 2:
    case 3: return 3;
    case 4: return 0;
    default: return 1;
    }
}

inline void validate_triple(const MonomialTriple& m) {
    if (m.A == 0 || m.B == 0 || m.C == 0) throw domain_error("monomials must be nonzero");
    if (m.A + m.B + m.C != 0) throw domain_error("A + B + C != 0");
    if (mod_floor(m.B, ExactInt(2)) != 0) throw domain_error("not a Frey triple");
    if (gcd_all({m.A, m.B, m.C}) != 1) throw domain_error("not primitive");
    if (mod_floor(m.A, ExactInt(4)) != 3) throw domain_error("A must be -1 mod 4");
}

/// Closed-form invariants; u comes from Tate's algorithm at 2.
inline CurveInvariants invariants(const MonomialTriple& m, std::int64_t p,
                                  std::uint64_t factor_bound = default_factor_bound()) {
    validate_triple(m);
    require_odd_prime(p, "p");
    CurveInvariants inv;
    const unsigned v2 = valuation(m.B, 2);
    inv.t = conductor_exponent_at_2(v2);
    inv.semistable = v2 >= 4;

    const ExactInt abc = m.A * m.B * m.C;
    const auto factors = factor_trial(abc, factor_bound);
    if (!factors) throw domain_error("factorization bound exceeded");
    inv.odd_radical = 1;
    for (const auto& [q, e] : *factors) {
        if (q == 2) continue;
        inv.odd_radical *= q;
        inv.odd_disc_valuations.emplace(q, 2 * e);
    }
    inv.conductor = ipow(ExactInt(2), inv.t) * inv.odd_radical;

    inv.u = minimal_disc_valuation_at_2(frey_model(m.A, m.B)).u();
    if (inv.t == 1 && inv.u != -8)
        throw domain_error("minimal discriminant exponent disagrees with u = -8 at t = 1");
    return inv;
}

inline bool is_trivial_level(const CurveInvariants& inv) { return inv.odd_radical == 1; }

inline CartanType cartan_type(std::int64_t p) {
    require_odd_prime(p, "p");
    return p % 4 == 1 ? CartanType::Split : CartanType::NonSplit;
}

} // namespace freytools
