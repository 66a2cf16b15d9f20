#pragma once

#include <cstdint>
#include <string>

#include "stsdisc/errors.hpp"

namespace stsdisc {

// Exact discrepancy value numerator/denominator, where the denominator is the
// number of colours r. Never goes through floating point; comparisons between
// values with the same denominator reduce to integer comparisons.
class ScaledDiscrepancy {
  public:
    ScaledDiscrepancy(std::int64_t numerator, int denominator)
        : num_(numerator), den_(denominator) {
        if (numerator < 0 || denominator < 1) {
            throw DomainError("scaled discrepancy needs numerator >= 0 and denominator >= 1");
        }
    }

    std::int64_t num() const { return num_; }
    int den() const { return den_; }

    double value() const { return static_cast<double>(num_) / den_; }

    // Halves render with one decimal, everything else with two.
    std::string str() const {
        int places = den_ == 2 ? 1 : 2;
        std::int64_t pow10 = places == 1 ? 10 : 100;
        std::int64_t scaled = (num_ * pow10 + den_ / 2) / den_;
        std::string digits = std::to_string(scaled / pow10);
        std::string frac = std::to_string(scaled % pow10);
        while (static_cast<int>(frac.size()) < places) frac.insert(frac.begin(), '0');
        return digits + "." + frac;
    }

    friend bool operator==(const ScaledDiscrepancy& a, const ScaledDiscrepancy& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const ScaledDiscrepancy& a, const ScaledDiscrepancy& b) {
        return !(a == b);
    }
    friend bool operator<(const ScaledDiscrepancy& a, const ScaledDiscrepancy& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const ScaledDiscrepancy& a, const ScaledDiscrepancy& b) {
        return a.num_ * b.den_ <= b.num_ * a.den_;
    }
    friend bool operator>(const ScaledDiscrepancy& a, const ScaledDiscrepancy& b) { return b < a; }
    friend bool operator>=(const ScaledDiscrepancy& a, const ScaledDiscrepancy& b) { return b <= a; }

  private:
    std::int64_t num_;
    int den_;
};

}  // namespace stsdisc
