#pragma once

#include "freytools/arith.hpp"

#include <array>
#include <ostream>
#include <string>

namespace freytools {

/// Integral long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassModel {
    ExactInt a1, a2, a3, a4, a6;

    ExactInt b2() const { return a1 * a1 + 4 * a2; }
    ExactInt b4() const { return 2 * a4 + a1 * a3; }
    ExactInt b6() const { return a3 * a3 + 4 * a6; }
    ExactInt b8() const { return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4; }
    ExactInt c4() const {
        const ExactInt b2_ = b2();
        return b2_ * b2_ - 24 * b4();
    }
    ExactInt c6() const {
        const ExactInt b2_ = b2();
        return -b2_ * b2_ * b2_ + 36 * b2_ * b4() - 216 * b6();
    }
    ExactInt discriminant() const {
        const ExactInt b2_ = b2(), b4_ = b4(), b6_ = b6(), b8_ = b8();
        return -b2_ * b2_ * b8_ - 8 * b4_ * b4_ * b4_ - 27 * b6_ * b6_ + 9 * b2_ * b4_ * b6_;
    }
    bool is_singular() const { return discriminant() == 0; }

    /// Substitution x = x' + r, y = y' + s x' + t.
    WeierstrassModel rst_transform(const ExactInt& r, const ExactInt& s, const ExactInt& t) const {
        WeierstrassModel m;
        m.a1 = a1 + 2 * s;
        m.a2 = a2 - s * a1 + 3 * r - s * s;
        m.a3 = a3 + r * a1 + 2 * t;
        m.a4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
        m.a6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
        return m;
    }

    /// Divide a_i by u^i; caller guarantees divisibility.
    WeierstrassModel scaled_down(const ExactInt& u) const {
        const ExactInt u2 = u * u, u3 = u2 * u;
        return {a1 / u, a2 / u2, a3 / u3, a4 / (u2 * u2), a6 / (u3 * u3)};
    }

    std::array<ExactInt, 5> coefficients() const { return {a1, a2, a3, a4, a6}; }

    friend bool operator==(const WeierstrassModel&, const WeierstrassModel&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const WeierstrassModel& m) {
    return os << '[' << m.a1 << ',' << m.a2 << ',' << m.a3 << ',' << m.a4 << ',' << m.a6 << ']';
}

/// y^2 = x^3 + a4 x + a6
inline WeierstrassModel short_model(const ExactInt& a4, const ExactInt& a6) { return {0, 0, 0, a4, a6}; }

} // namespace freytools
