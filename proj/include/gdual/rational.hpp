#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gdual {

/// Exact nonnegative rational with reduced num/den representation.
///
/// All engine quantities (character pairings, quasi-norm values, scale
/// factors) are nonnegative, so the negative half is rejected outright.
/// Intermediates run through 128-bit integers; a result that does not fit
/// int64 after reduction throws std::overflow_error.
class Rational {
public:
    Rational() = default;

    Rational(std::int64_t value) { // NOLINT: implicit by design
        if (value < 0) throw std::invalid_argument("Rational: negative value");
        num_ = value;
    }

    Rational(std::int64_t num, std::int64_t den) {
        if (den <= 0) throw std::invalid_argument("Rational: nonpositive denominator");
        if (num < 0) throw std::invalid_argument("Rational: negative numerator");
        const std::int64_t g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// "num" for integers, "num/den" otherwise.
    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        using I = __int128;
        return from_i128(I(a.num_) * b.den_ + I(b.num_) * a.den_, I(a.den_) * b.den_);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        using I = __int128;
        return from_i128(I(a.num_) * b.num_, I(a.den_) * b.den_);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        using I = __int128;
        return from_i128(I(a.num_) * b.den_, I(a.den_) * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator<(const Rational& a, const Rational& b) {
        using I = __int128;
        return I(a.num_) * b.den_ < I(b.num_) * a.den_;
    }

    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    static Rational from_i128(__int128 num, __int128 den) {
        if (num < 0 || den <= 0) throw std::invalid_argument("Rational: sign violation");
        const __int128 g = gcd128(num, den);
        num /= g;
        den /= g;
        constexpr __int128 kMax = INT64_MAX;
        if (num > kMax || den > kMax) throw std::overflow_error("Rational: value exceeds 64-bit range");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace gdual
