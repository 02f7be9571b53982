#pragma once

#include <cassert>
#include <stdexcept>
#include <string>

#include "gdual/rational.hpp"

namespace gdual {

/// Value in [0, infinity] with the arithmetic conventions the duality
/// formulas rely on:
///   a + inf = inf,  a * inf = inf for a > 0,
///   a / 0 = inf and a / inf = 0 for finite a > 0,  sup(empty) = 0.
/// The combination 0 * inf never arises in any formula here and is asserted
/// against rather than defined.
class ExtValue {
public:
    ExtValue() = default;
    ExtValue(Rational v) : finite_(true), value_(v) {} // NOLINT: implicit by design
    ExtValue(std::int64_t v) : finite_(true), value_(v) {}

    static ExtValue infinity() {
        ExtValue e;
        e.finite_ = false;
        return e;
    }

    bool is_finite() const { return finite_; }
    bool is_infinite() const { return !finite_; }
    bool is_zero() const { return finite_ && value_.is_zero(); }

    const Rational& value() const {
        if (!finite_) throw std::domain_error("ExtValue: infinite value has no rational part");
        return value_;
    }

    std::string to_string() const { return finite_ ? value_.to_string() : "inf"; }

    friend ExtValue operator+(const ExtValue& a, const ExtValue& b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return ExtValue(a.value_ + b.value_);
    }

    /// c * v for strictly positive rational c; inf stays inf.
    friend ExtValue operator*(const Rational& c, const ExtValue& v) {
        assert(!c.is_zero());
        if (!v.finite_) return infinity();
        return ExtValue(c * v.value_);
    }

    /// v / c for strictly positive rational c; inf stays inf.
    ExtValue div_by(const Rational& c) const {
        assert(!c.is_zero());
        if (!finite_) return infinity();
        return ExtValue(value_ / c);
    }

    /// num / den for strictly positive finite num, with a/0 = inf, a/inf = 0.
    static ExtValue ratio(const Rational& num, const ExtValue& den) {
        assert(!num.is_zero());
        if (!den.finite_) return ExtValue(Rational(0));
        if (den.value_.is_zero()) return infinity();
        return ExtValue(num / den.value_);
    }

    friend bool operator==(const ExtValue& a, const ExtValue& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }

    friend bool operator!=(const ExtValue& a, const ExtValue& b) { return !(a == b); }

    friend bool operator<(const ExtValue& a, const ExtValue& b) {
        if (!a.finite_) return false;          // inf < x never
        if (!b.finite_) return true;           // finite < inf
        return a.value_ < b.value_;
    }

    friend bool operator>(const ExtValue& a, const ExtValue& b) { return b < a; }
    friend bool operator<=(const ExtValue& a, const ExtValue& b) { return !(b < a); }
    friend bool operator>=(const ExtValue& a, const ExtValue& b) { return !(a < b); }

private:
    bool finite_ = true;
    Rational value_;
};

inline ExtValue min(const ExtValue& a, const ExtValue& b) { return a < b ? a : b; }
inline ExtValue max(const ExtValue& a, const ExtValue& b) { return a < b ? b : a; }

} // namespace gdual
