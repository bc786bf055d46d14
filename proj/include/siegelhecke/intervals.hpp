#pragma once

#include <string>

#include "siegelhecke/rational.hpp"

namespace hecke {

/// Certified enclosure [lo, hi] of a real value. Endpoints are dyadic
/// rationals produced by directed rounding; all interval arithmetic on top
/// is exact rational arithmetic, so enclosure is preserved by construction.
class Interval {
public:
    Interval() : lo_(0), hi_(0) {}
    explicit Interval(const Rat& point) : lo_(point), hi_(point) {}
    Interval(Rat lo, Rat hi);

    /// Enclosure of ln(x) for rational x > 0, from mpfr_log rounded down and
    /// up at the given working precision.
    static Interval log_of(const Rat& x, unsigned prec_bits);
    /// Enclosure of exp(x) for rational x.
    static Interval exp_of(const Rat& x, unsigned prec_bits);

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return Rat(hi_ - lo_); }

    Interval& operator+=(const Interval& rhs);
    Interval& operator-=(const Interval& rhs);
    friend Interval operator+(Interval a, const Interval& b) { return a += b; }
    friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator*(const Rat& s, const Interval& a);
    friend Interval operator+(const Interval& a, const Rat& s);

    /// [lo, hi]^e for intervals with lo >= 0.
    Interval pow_nonneg(unsigned e) const;

    bool certainly_greater(const Rat& q) const { return lo_ > q; }
    bool certainly_less(const Rat& q) const { return hi_ < q; }
    bool certainly_ge(const Rat& q) const { return lo_ >= q; }
    bool contains(const Rat& q) const { return lo_ <= q && q <= hi_; }

    std::string str() const;
    /// Decimal rendering of both endpoints with the given number of digits,
    /// rounded outward.
    std::string str_decimal(unsigned digits) const;

private:
    Rat lo_, hi_;
};

/// Round-to-nearest decimal rendering of a rational, for display only.
std::string decimal_str(const Rat& value, unsigned digits);

} // namespace hecke
