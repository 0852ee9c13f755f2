#pragma once

// Hypotheses of Denes's criterion for a^p + 2b^p + c^p = 0: regularity of p,
// the order of 2 modulo p, and the Wieferich congruence 2^(p-1) == 1 mod p^2.

#include "freytools/arith.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <string>
#include <vector>

namespace freytools {

struct DenesReport {
    std::int64_t p = 0;
    bool is_regular = false;
    std::vector<std::int64_t> irregular_indices;
    std::int64_t ord2 = 0;
    bool ord2_even = false;
    bool ord2_is_half = false; // ord2 == (p - 1) / 2
    bool order_condition = false;
    bool wieferich_violation = false;
    bool criterion_holds = false;
    std::vector<std::string> failed_conditions;

    friend bool operator==(const DenesReport&, const DenesReport&) = default;
};

namespace detail {

inline void require_denes_prime(std::int64_t p) {
    if (p < 5) throw domain_error("Bernoulli regularity test needs a prime p >= 5");
    require_prime(p, "p");
}

} // namespace detail

/// B_k mod p for every even k in [2, p - 3], via the recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0 carried out in F_p.
inline std::map<std::int64_t, std::int64_t> bernoulli_mod_p(std::int64_t p) {
    detail::require_denes_prime(p);
    using detail::mod_i64;
    const std::int64_t top = p - 3;

    // Binomial rows mod p built incrementally; row m+1 needed for B_m.
    std::vector<std::int64_t> bern(static_cast<std::size_t>(top) + 1, 0);
    std::vector<std::int64_t> row{1}; // C(0, .)
    bern[0] = 1;
    row = {1, 1};                      // C(1, .)
    for (std::int64_t m = 1; m <= top; ++m) {
        // advance row to C(m+1, .)
        std::vector<std::int64_t> next(static_cast<std::size_t>(m) + 2, 1);
        for (std::int64_t j = 1; j <= m; ++j)
            next[static_cast<std::size_t>(j)] = (row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)]) % p;
        row = std::move(next);
        if (m > 1 && m % 2 == 1) continue; // B_odd = 0 beyond B_1
        std::int64_t sum = 0;
        for (std::int64_t j = 0; j < m; ++j) {
            const auto bj = bern[static_cast<std::size_t>(j)];
            if (bj == 0) continue;
            sum = (sum + row[static_cast<std::size_t>(j)] * bj) % p;
        }
        bern[static_cast<std::size_t>(m)] = mod_i64(-sum * detail::inverse_mod_i64(m + 1, p), p);
    }

    std::map<std::int64_t, std::int64_t> out;
    for (std::int64_t k = 2; k <= top; k += 2) out.emplace(k, bern[static_cast<std::size_t>(k)]);
    return out;
}

struct RegularityResult {
    bool regular = true;
    std::vector<std::int64_t> irregular_indices;
};

inline RegularityResult is_regular(std::int64_t p) {
    RegularityResult r;
    for (const auto& [k, residue] : bernoulli_mod_p(p)) {
        if (residue == 0) r.irregular_indices.push_back(k);
    }
    r.regular = r.irregular_indices.empty();
    return r;
}

/// True when 2^(p-1) == 1 mod p^2, i.e. the Wieferich hypothesis fails.
inline bool wieferich_test(std::int64_t p) {
    require_odd_prime(p, "p");
    const ExactInt pp = ExactInt(p) * p;
    return powmod(2, p - 1, pp) == 1;
}

inline DenesReport denes_criterion(std::int64_t p) {
    const auto reg = is_regular(p);
    DenesReport r;
    r.p = p;
    r.is_regular = reg.regular;
    r.irregular_indices = reg.irregular_indices;
    r.ord2 = static_cast<std::int64_t>(mult_order(2, p));
    r.ord2_even = r.ord2 % 2 == 0;
    r.ord2_is_half = r.ord2 == (p - 1) / 2;
    r.order_condition = r.ord2_even || r.ord2_is_half;
    r.wieferich_violation = wieferich_test(p);
    r.criterion_holds = r.is_regular && r.order_condition && !r.wieferich_violation;
    if (!r.is_regular) r.failed_conditions.emplace_back("regularity");
    if (!r.order_condition) r.failed_conditions.emplace_back("order_of_2");
    if (r.wieferich_violation) r.failed_conditions.emplace_back("wieferich");
    return r;
}

/// Reports for every prime 5 <= p <= p_max, ascending; primes are split
/// round-robin over `workers` tasks and merged by p.
inline std::vector<DenesReport> denes_scan(std::int64_t p_max, unsigned workers = 1) {
    std::vector<std::int64_t> primes;
    for (auto q : primes_up_to(p_max))
        if (q >= 5) primes.push_back(q);
    std::vector<DenesReport> out(primes.size());
    workers = std::max(1u, workers);
    std::vector<std::future<void>> tasks;
    for (unsigned w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < primes.size(); i += workers) out[i] = denes_criterion(primes[i]);
        }));
    }
    for (auto& t : tasks) t.get();
    return out;
}

} // namespace freytools
