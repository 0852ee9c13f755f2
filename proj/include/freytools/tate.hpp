#pragma once

// Tate's algorithm over Q: local conductor exponent, minimal discriminant
// valuation and Kodaira symbol at a prime, for any integral model.

#include "freytools/arith.hpp"
#include "freytools/weierstrass.hpp"

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

namespace freytools {

enum class Reduction { Good, MultiplicativeSplit, MultiplicativeNonsplit, Additive };

inline const char* to_string(Reduction r) {
    switch (r) {
    case Reduction::Good: return "Good";
    case Reduction::MultiplicativeSplit: return "MultiplicativeSplit";
    case Reduction::MultiplicativeNonsplit: return "MultiplicativeNonsplit";
    case Reduction::Additive: return "Additive";
    }
    return "?";
}

inline Reduction reduction_from_string(const std::string& s) {
    if (s == "Good") return Reduction::Good;
    if (s == "MultiplicativeSplit") return Reduction::MultiplicativeSplit;
    if (s == "MultiplicativeNonsplit") return Reduction::MultiplicativeNonsplit;
    if (s == "Additive") return Reduction::Additive;
    throw domain_error("unknown reduction type: " + s);
}

struct LocalData {
    std::int64_t prime = 0;
    unsigned conductor_exponent = 0;
    unsigned min_disc_valuation = 0;
    std::string kodaira_type; // "I0", "I5", "I2*", "II", "III*", ...
    Reduction reduction = Reduction::Good;
    unsigned scaling_steps = 0;       // divisions by prime^i performed while minimizing
    WeierstrassModel minimal_model;   // the model the final classification ran on

    bool multiplicative() const {
        return reduction == Reduction::MultiplicativeSplit || reduction == Reduction::MultiplicativeNonsplit;
    }

    friend bool operator==(const LocalData&, const LocalData&) = default;
};

namespace detail {

struct LocalField {
    ExactInt p;

    unsigned val(const ExactInt& x) const {
        return x == 0 ? std::numeric_limits<unsigned>::max() : valuation(x, p);
    }
    bool divides(const ExactInt& x) const { return x % p == 0; }
    ExactInt reduce(const ExactInt& x) const { return mod_floor(x, p); }
    ExactInt inverse(const ExactInt& x) const {
        const ExactInt r = reduce(x);
        if (r == 0) throw domain_error("not a unit");
        return powmod(r, p - 2, p);
    }
    // Number of x in F_p with a x^2 + b x + c == 0, counted by enumeration for
    // p = 2, 3 and by the discriminant otherwise.
    int quadratic_roots(const ExactInt& a, const ExactInt& b, const ExactInt& c) const {
        if (p <= 3) {
            int n = 0;
            for (ExactInt x = 0; x < p; ++x)
                if (reduce(a * x * x + b * x + c) == 0) ++n;
            return n;
        }
        if (divides(a)) return divides(b) ? (divides(c) ? static_cast<int>(p) : 0) : 1;
        const int chi = legendre_symbol(b * b - 4 * a * c, p);
        return chi + 1;
    }
};

} // namespace detail

/// Local data at ell of a minimal model reached from `model` by Tate's algorithm.
inline LocalData local_data(const WeierstrassModel& model, std::int64_t ell) {
    require_prime(ell, "ell");
    if (model.is_singular()) throw domain_error("singular model");
    const detail::LocalField F{ExactInt(ell)};
    const ExactInt& pi = F.p;
    const bool p2 = ell == 2, p3 = ell == 3;

    LocalData out;
    out.prime = ell;
    WeierstrassModel C = model;
    unsigned scalings = 0;

    auto finish = [&](unsigned vD, unsigned f, std::string kodaira, Reduction red) {
        out.min_disc_valuation = vD;
        out.conductor_exponent = f;
        out.kodaira_type = std::move(kodaira);
        out.reduction = red;
        out.scaling_steps = scalings;
        out.minimal_model = C;
        return out;
    };

    for (;;) {
        const ExactInt disc = C.discriminant();
        const unsigned vD = F.val(disc);
        if (vD == 0) return finish(0, 0, "I0", Reduction::Good);

        // Singular point (r, t) of the reduction.
        ExactInt r, t;
        {
            const ExactInt b2 = C.b2(), b4 = C.b4(), b6 = C.b6(), c4 = C.c4(), c6 = C.c6();
            if (p2) {
                if (F.divides(b2)) {
                    r = F.reduce(C.a4);
                    t = F.reduce(r * (1 + C.a2 + C.a4) + C.a6);
                } else {
                    r = F.reduce(C.a3);
                    t = F.reduce(r + C.a4);
                }
            } else if (p3) {
                if (F.divides(b2)) r = F.reduce(-b6);
                else r = F.reduce(-F.inverse(b2) * b4);
                t = F.reduce(C.a1 * r + C.a3);
            } else {
                if (F.divides(c4)) r = -F.inverse(12) * b2;
                else r = -F.inverse(12 * c4) * (c6 + b2 * c4);
                t = -F.inverse(2) * (C.a1 * r + C.a3);
                r = F.reduce(r);
                t = F.reduce(t);
            }
        }

        if (!F.divides(C.c4())) {
            // Multiplicative: tangent cone at (0,0) is T^2 + a1 T - a2.
            const WeierstrassModel M = C.rst_transform(r, 0, t);
            const bool split = F.quadratic_roots(1, M.a1, -M.a2) > 0;
            return finish(vD, 1, "I" + std::to_string(vD),
                          split ? Reduction::MultiplicativeSplit : Reduction::MultiplicativeNonsplit);
        }

        C = C.rst_transform(r, 0, t);
        if (F.val(C.a6) < 2) return finish(vD, vD, "II", Reduction::Additive);
        if (F.val(C.b8()) < 3) return finish(vD, vD - 1, "III", Reduction::Additive);
        if (F.val(C.b6()) < 3) return finish(vD, vD - 2, "IV", Reduction::Additive);

        // Arrange pi | a1, a2; pi^2 | a3, a4; pi^3 | a6.
        {
            ExactInt s, tt;
            if (p2) {
                s = F.reduce(C.a2);
                tt = pi * F.reduce(C.a6 / (pi * pi));
            } else if (p3) {
                s = C.a1;
                tt = C.a3;
            } else {
                s = -C.a1 * F.inverse(2);
                tt = -C.a3 * F.inverse(2);
            }
            C = C.rst_transform(0, s, tt);
        }

        // Auxiliary cubic T^3 + b T^2 + c T + d.
        const ExactInt pi2 = pi * pi, pi3 = pi2 * pi;
        const ExactInt b = C.a2 / pi, c = C.a4 / pi2, d = C.a6 / pi3;
        const ExactInt w = 27 * d * d - b * b * c * c + 4 * b * b * b * d - 18 * b * c * d + 4 * c * c * c;
        const ExactInt x = 3 * c - b * b;
        const int sw = !F.divides(w) ? 1 : (!F.divides(x) ? 2 : 3);

        if (sw == 1) return finish(vD, vD - 4, "I0*", Reduction::Additive);

        if (sw == 2) {
            // Double root: move it to T = 0, then peel off I_m^*.
            ExactInt rr;
            if (p2) rr = F.reduce(c);
            else if (p3) rr = c * F.inverse(b);
            else rr = (b * c - 9 * d) * F.inverse(2 * x);
            rr = pi * F.reduce(rr);
            C = C.rst_transform(rr, 0, 0);
            unsigned ix = 3, iy = 3;
            ExactInt mx = pi2, my = pi2;
            for (;;) {
                const ExactInt a2t = C.a2 / pi;
                ExactInt a3t = C.a3 / my;
                ExactInt a4t = C.a4 / (pi * mx);
                ExactInt a6t = C.a6 / (mx * my);
                if (!F.divides(a3t * a3t + 4 * a6t)) break;
                ExactInt tt = p2 ? my * F.reduce(a6t) : my * F.reduce(-a3t * F.inverse(2));
                C = C.rst_transform(0, 0, tt);
                my *= pi;
                ++iy;
                a4t = C.a4 / (pi * mx);
                a6t = C.a6 / (mx * my);
                if (!F.divides(a4t * a4t - 4 * a6t * a2t)) break;
                ExactInt r2 = p2 ? mx * F.reduce(a6t * F.inverse(a2t))
                                 : mx * F.reduce(-a4t * F.inverse(2 * a2t));
                C = C.rst_transform(r2, 0, 0);
                mx *= pi;
                ++ix;
            }
            const unsigned m = ix + iy - 5;
            return finish(vD, vD - m - 4, "I" + std::to_string(m) + "*", Reduction::Additive);
        }

        // Triple root: move it to T = 0.
        {
            ExactInt rr;
            if (p2) rr = b;
            else if (p3) rr = F.reduce(-d); // cube root mod 3 is the identity
            else rr = -b * F.inverse(3);
            rr = pi * F.reduce(rr);
            C = C.rst_transform(rr, 0, 0);
        }
        const ExactInt pi4 = pi2 * pi2;
        const ExactInt a3t = C.a3 / pi2, a6t = C.a6 / pi4;
        if (!F.divides(a3t * a3t + 4 * a6t)) return finish(vD, vD - 6, "IV*", Reduction::Additive);
        {
            const ExactInt tt = p2 ? ExactInt(-pi2 * F.reduce(a6t)) : ExactInt(pi2 * F.reduce(-a3t * F.inverse(2)));
            C = C.rst_transform(0, 0, tt);
        }
        if (F.val(C.a4) < 4) return finish(vD, vD - 7, "III*", Reduction::Additive);
        if (F.val(C.a6) < 6) return finish(vD, vD - 8, "II*", Reduction::Additive);

        // Non-minimal at ell: scale by u = ell and restart.
        C = C.scaled_down(pi);
        ++scalings;
    }
}

/// Default trial-division bound; FREYTOOLS_FACTOR_BOUND overrides it.
inline std::uint64_t default_factor_bound() {
    if (const char* env = std::getenv("FREYTOOLS_FACTOR_BOUND")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v >= 2) return v;
    }
    return 1000000;
}

struct ConductorResult {
    ExactInt conductor;
    std::vector<LocalData> local; // one entry per prime dividing the model discriminant
};

/// Conductor as the product of ell^f over primes dividing the discriminant.
inline ConductorResult global_conductor_data(const WeierstrassModel& model,
                                            std::uint64_t factor_bound = default_factor_bound()) {
    const ExactInt disc = model.discriminant();
    if (disc == 0) throw domain_error("singular model");
    const auto factors = factor_trial(disc, factor_bound);
    if (!factors) throw domain_error("factorization bound exceeded");
    ConductorResult res;
    res.conductor = 1;
    for (const auto& [q, e] : *factors) {
        if (q > std::numeric_limits<std::int64_t>::max())
            throw domain_error("factorization bound exceeded");
        const auto ld = local_data(model, static_cast<std::int64_t>(q));
        res.conductor *= ipow(q, ld.conductor_exponent);
        res.local.push_back(ld);
    }
    return res;
}

inline ExactInt global_conductor(const WeierstrassModel& model,
                                 std::uint64_t factor_bound = default_factor_bound()) {
    return global_conductor_data(model, factor_bound).conductor;
}

struct TwoAdicDiscriminant {
    unsigned min_disc_valuation = 0; // ord_2 of the minimal discriminant
    unsigned scaling_steps = 0;
    // Exponent u in minimal discriminant = 2^u (ABC)^2, valid for Frey models
    // y^2 = x(x - A)(x + B) whose model discriminant is 16 (ABC)^2.
    int u() const { return 4 - 12 * static_cast<int>(scaling_steps); }
};

inline TwoAdicDiscriminant minimal_disc_valuation_at_2(const WeierstrassModel& model) {
    const auto ld = local_data(model, 2);
    return {ld.min_disc_valuation, ld.scaling_steps};
}

} // namespace freytools
