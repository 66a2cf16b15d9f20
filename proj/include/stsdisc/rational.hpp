#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "stsdisc/errors.hpp"
#include "stsdisc/scaled_disc.hpp"

namespace stsdisc {

// Small exact rational for closed-form values. Kept unreduced so that
// twelfths stay twelfths until explicitly converted.
struct Rational {
    std::int64_t num;
    std::int64_t den;

    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (d <= 0) throw DomainError("rational denominator must be positive");
        if (n < 0) throw DomainError("negative rational not supported here");
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    Rational reduced() const {
        std::int64_t g = std::gcd(num, den);
        return g == 0 ? *this : Rational(num / g, den / g);
    }

    std::string str() const {
        // exact values in this codebase are all half-integers once reduced
        std::int64_t scaled = (num * 10 + den / 2) / den;
        return std::to_string(scaled / 10) + "." + std::to_string(scaled % 10);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.num * b.den <= b.num * a.den;
    }
};

// Conversion into the half-integer discrepancy scale. Rejects values that are
// not exact multiples of 1/2, so exactness is never silently lost.
inline ScaledDiscrepancy to_scaled_disc(const Rational& q) {
    if ((q.num * 2) % q.den != 0) {
        throw DomainError("rational " + std::to_string(q.num) + "/" + std::to_string(q.den) +
                          " is not a half-integer");
    }
    return ScaledDiscrepancy(q.num * 2 / q.den, 2);
}

}  // namespace stsdisc
