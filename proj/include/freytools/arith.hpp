#pragma once

// Exact integer and modular arithmetic shared by every other module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace freytools {

using ExactInt = boost::multiprecision::cpp_int;

/// Raised for precondition violations on domain inputs.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline ExactInt abs_value(const ExactInt& n) { return n < 0 ? ExactInt(-n) : n; }

/// Least non-negative residue of n modulo m (m > 0).
inline ExactInt mod_floor(const ExactInt& n, const ExactInt& m) {
    ExactInt r = n % m;
    if (r < 0) r += m;
    return r;
}

inline std::int64_t mod_floor(const ExactInt& n, std::int64_t m) {
    return static_cast<std::int64_t>(mod_floor(n, ExactInt(m)));
}

inline ExactInt ipow(const ExactInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

/// Largest e with ell^e | n.
inline unsigned valuation(const ExactInt& n, const ExactInt& ell) {
    if (n == 0) throw domain_error("valuation of zero undefined");
    if (ell < 2) throw domain_error("valuation base must be at least 2");
    ExactInt m = abs_value(n);
    unsigned e = 0;
    ExactInt q, r;
    for (;;) {
        boost::multiprecision::divide_qr(m, ell, q, r);
        if (r != 0) return e;
        m = std::move(q);
        ++e;
    }
}

/// base^exp mod m by square-and-multiply, result in [0, m).
inline ExactInt powmod(const ExactInt& base, const ExactInt& exp, const ExactInt& m) {
    if (m < 2) throw domain_error("powmod modulus must be at least 2");
    if (exp < 0) throw domain_error("powmod exponent must be non-negative");
    ExactInt result = 1;
    ExactInt b = mod_floor(base, m);
    ExactInt e = exp;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) result = (result * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return result % m;
}

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline std::int64_t mod_i64(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Euler's criterion on a machine-word prime; ell odd, a reduced or not.
inline int legendre_u64(std::int64_t a, std::int64_t ell) {
    const auto r = static_cast<std::uint64_t>(mod_i64(a, ell));
    if (r == 0) return 0;
    const auto e = powmod_u64(r, static_cast<std::uint64_t>(ell - 1) / 2, static_cast<std::uint64_t>(ell));
    return e == 1 ? 1 : -1;
}

inline std::int64_t inverse_mod_i64(std::int64_t a, std::int64_t m) {
    std::int64_t old_r = mod_i64(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    }
    if (old_r != 1) throw domain_error("not a unit");
    return mod_i64(old_s, m);
}

} // namespace detail

/// Deterministic Miller-Rabin; the first 13 prime witnesses are exact below this bound.
inline const ExactInt& primality_bound() {
    static const ExactInt bound("3317044064679887385961981");
    return bound;
}

inline bool is_prime(const ExactInt& n) {
    if (n < 2) return false;
    static constexpr unsigned witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned w : witnesses) {
        if (n == w) return true;
        if (n % w == 0) return false;
    }
    if (n >= primality_bound())
        throw domain_error("primality test input exceeds deterministic bound");
    ExactInt d = n - 1;
    unsigned s = 0;
    while (!boost::multiprecision::bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }
    const ExactInt n_minus_1 = n - 1;
    for (unsigned w : witnesses) {
        ExactInt x = powmod(w, d, n);
        if (x == 1 || x == n_minus_1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == n_minus_1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline void require_prime(const ExactInt& p, const char* what) {
    if (!is_prime(p)) throw domain_error(std::string(what) + " must be prime");
}

inline void require_odd_prime(const ExactInt& p, const char* what) {
    require_prime(p, what);
    if (p == 2) throw domain_error(std::string(what) + " must be an odd prime");
}

/// Smallest d > 0 with g^d == 1 mod p.
inline ExactInt mult_order(const ExactInt& g, const ExactInt& p) {
    require_prime(p, "modulus");
    if (mod_floor(g, p) == 0) throw domain_error("not a unit");
    if (p == 2) return 1;
    // Strip prime factors of p - 1 from the group order while g^order stays 1.
    ExactInt order = p - 1;
    ExactInt rest = order;
    for (ExactInt q = 2; q * q <= rest; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        while (order % q == 0 && powmod(g, order / q, p) == 1) order /= q;
    }
    if (rest > 1) {
        while (order % rest == 0 && powmod(g, order / rest, p) == 1) order /= rest;
    }
    return order;
}

/// Non-negative gcd of all entries; 0 for an all-zero list.
inline ExactInt gcd_all(const std::vector<ExactInt>& values) {
    ExactInt g = 0;
    for (const auto& v : values) g = boost::multiprecision::gcd(g, abs_value(v));
    return g;
}

inline int legendre_symbol(const ExactInt& a, const ExactInt& ell) {
    if (ell == 2) throw domain_error("legendre symbol needs an odd prime");
    require_odd_prime(ell, "legendre modulus");
    const ExactInt e = powmod(a, (ell - 1) / 2, ell);
    if (e == 0) return 0;
    return e == 1 ? 1 : -1;
}

/// Exact k-th root of n when one exists (odd k accepts negative n).
inline std::optional<ExactInt> exact_root(const ExactInt& n, unsigned k) {
    if (k == 0) throw domain_error("root degree must be positive");
    if (k == 1) return n;
    if (n < 0 && k % 2 == 0) return std::nullopt;
    const ExactInt m = abs_value(n);
    if (m < 2) return n;
    // 2^(floor(bits/k)) <= root < 2^(floor(bits/k) + 1)
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(m)) + 1;
    ExactInt lo = ExactInt(1) << ((bits - 1) / k);
    ExactInt hi = ExactInt(1) << ((bits - 1) / k + 1);
    while (lo < hi) {
        const ExactInt mid = (lo + hi) / 2;
        const ExactInt pw = ipow(mid, k);
        if (pw == m) return n < 0 ? ExactInt(-mid) : mid;
        if (pw < m) lo = mid + 1;
        else hi = mid;
    }
    if (ipow(lo, k) == m) return n < 0 ? ExactInt(-lo) : lo;
    return std::nullopt;
}

/// Prime factorization of |n| by trial division, or nullopt if a cofactor
/// above bound^2 survives (the cofactor is then not certified prime).
inline std::optional<std::vector<std::pair<ExactInt, unsigned>>>
factor_trial(const ExactInt& n, std::uint64_t bound) {
    if (n == 0) throw domain_error("cannot factor zero");
    std::vector<std::pair<ExactInt, unsigned>> out;
    ExactInt m = abs_value(n);
    auto strip = [&](std::uint64_t q) {
        unsigned e = 0;
        ExactInt qq, r;
        for (;;) {
            boost::multiprecision::divide_qr(m, ExactInt(q), qq, r);
            if (r != 0) break;
            m = std::move(qq);
            ++e;
        }
        if (e > 0) out.emplace_back(ExactInt(q), e);
    };
    strip(2);
    for (std::uint64_t q = 3; q <= bound; q += 2) {
        if (m == 1) break;
        if (ExactInt(q) * q > m) break;
        strip(q);
    }
    if (m > 1) {
        const ExactInt b = bound;
        if (m > b * b && !(m < primality_bound() && is_prime(m))) return std::nullopt;
        out.emplace_back(m, 1);
    }
    return out;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t i = 2; i <= n; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

inline std::string to_string(const ExactInt& n) { return n.str(); }

} // namespace freytools
