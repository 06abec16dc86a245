#ifndef BOXIKIT_RATIONAL_HPP
#define BOXIKIT_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>

#include "boxikit/errors.hpp"

namespace boxikit {

/// Exact rational with canonical representation: denominator > 0 and
/// gcd(|num|, den) = 1.  All interval endpoints in the library are
/// Rationals; floating point never enters any adjacency decision.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator-() const { return Rational(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        using wide = __int128;
        return fromWide(static_cast<wide>(a.num_) * b.den_ + static_cast<wide>(b.num_) * a.den_,
                        static_cast<wide>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        using wide = __int128;
        return fromWide(static_cast<wide>(a.num_) * b.den_ - static_cast<wide>(b.num_) * a.den_,
                        static_cast<wide>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        using wide = __int128;
        return fromWide(static_cast<wide>(a.num_) * b.num_, static_cast<wide>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw InputError("Rational: division by zero");
        using wide = __int128;
        return fromWide(static_cast<wide>(a.num_) * b.den_, static_cast<wide>(a.den_) * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        using wide = __int128;
        return static_cast<wide>(a.num_) * b.den_ < static_cast<wide>(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    bool isZero() const { return num_ == 0; }
    bool isInteger() const { return den_ == 1; }

    /// Canonical "p/q" form, e.g. "-3/2", "0/1", "7/1".
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "p/q" or a bare integer "p"; normalizes on the way in.
    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(std::stoll(std::string(s)));
            std::int64_t p = std::stoll(std::string(s.substr(0, slash)));
            std::int64_t q = std::stoll(std::string(s.substr(slash + 1)));
            return Rational(p, q);
        } catch (const std::logic_error&) {
            throw InputError("Rational: cannot parse '" + std::string(s) + "'");
        }
    }

private:
    void normalize() {
        if (den_ == 0) throw InputError("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    // Reduce in 128-bit, then insist the result fits; wrapping would turn an
    // exact certificate into a silent lie.
    static Rational fromWide(__int128 num, __int128 den) {
        if (den == 0) throw InputError("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { num /= a; den /= a; }
        constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
        constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
        if (num < lo || num > hi || den > hi)
            throw InputError("Rational: arithmetic result exceeds 64-bit range");
        return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace boxikit

#endif
