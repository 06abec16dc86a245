#ifndef BOXIKIT_INTERVAL_HPP
#define BOXIKIT_INTERVAL_HPP

#include "boxikit/rational.hpp"

namespace boxikit {

/// Closed interval [lo, hi] on the rational line.  Degenerate (lo == hi)
/// intervals are allowed.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational l, Rational h) : lo(l), hi(h) {
        if (hi < lo) throw InputError("Interval: hi < lo");
    }

    Rational length() const { return hi - lo; }

    /// Closed-interval overlap: touching endpoints count as intersecting.
    friend bool overlaps(const Interval& a, const Interval& b) {
        const Rational& lo = a.lo < b.lo ? b.lo : a.lo;
        const Rational& hi = a.hi < b.hi ? a.hi : b.hi;
        return lo <= hi;
    }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
    friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }
};

} // namespace boxikit

#endif
