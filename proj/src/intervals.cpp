#include "siegelhecke/intervals.hpp"

#include <mpfr.h>

#include <algorithm>
#include <sstream>

#include "siegelhecke/errors.hpp"

namespace hecke {

Interval::Interval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    require(lo_ <= hi_, "interval endpoints out of order");
}

namespace {

// Applies an mpfr function to a rational argument with both rounding modes
// and returns the exact dyadic endpoints.
Interval directed(const Rat& x,
                  int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t),
                  unsigned prec_bits) {
    require(prec_bits >= 8, "precision too small");
    mpfr_t arg, out;
    mpfr_init2(arg, std::max<unsigned>(prec_bits, 64));
    mpfr_init2(out, prec_bits);

    Rat lo, hi;
    // Round the argument itself in the matching direction so the enclosure
    // stays valid even when x is not exactly representable.
    mpfr_set_q(arg, x.get_mpq_t(), MPFR_RNDD);
    fn(out, arg, MPFR_RNDD);
    mpfr_get_q(lo.get_mpq_t(), out);
    mpfr_set_q(arg, x.get_mpq_t(), MPFR_RNDU);
    fn(out, arg, MPFR_RNDU);
    mpfr_get_q(hi.get_mpq_t(), out);

    mpfr_clear(arg);
    mpfr_clear(out);
    return Interval(std::move(lo), std::move(hi));
}

} // namespace

Interval Interval::log_of(const Rat& x, unsigned prec_bits) {
    require(x > 0, "log of a nonpositive value");
    if (x == 1) return Interval(Rat(0));
    return directed(x, mpfr_log, prec_bits);
}

Interval Interval::exp_of(const Rat& x, unsigned prec_bits) {
    if (x == 0) return Interval(Rat(1));
    return directed(x, mpfr_exp, prec_bits);
}

Interval& Interval::operator+=(const Interval& rhs) {
    lo_ += rhs.lo_;
    hi_ += rhs.hi_;
    return *this;
}

Interval& Interval::operator-=(const Interval& rhs) {
    lo_ -= rhs.hi_;
    hi_ -= rhs.lo_;
    return *this;
}

Interval operator*(const Interval& a, const Interval& b) {
    const Rat p1 = Rat(a.lo_ * b.lo_);
    const Rat p2 = Rat(a.lo_ * b.hi_);
    const Rat p3 = Rat(a.hi_ * b.lo_);
    const Rat p4 = Rat(a.hi_ * b.hi_);
    return Interval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval operator*(const Rat& s, const Interval& a) {
    if (s >= 0) return Interval(Rat(s * a.lo_), Rat(s * a.hi_));
    return Interval(Rat(s * a.hi_), Rat(s * a.lo_));
}

Interval operator+(const Interval& a, const Rat& s) {
    return Interval(Rat(a.lo_ + s), Rat(a.hi_ + s));
}

Interval Interval::pow_nonneg(unsigned e) const {
    require(lo_ >= 0, "pow_nonneg needs a nonnegative interval");
    Rat lo(1), hi(1);
    for (unsigned i = 0; i < e; ++i) {
        lo *= lo_;
        hi *= hi_;
    }
    return Interval(std::move(lo), std::move(hi));
}

std::string Interval::str() const {
    return "[" + rat_str(lo_) + ", " + rat_str(hi_) + "]";
}

std::string decimal_str(const Rat& value, unsigned digits) {
    mpfr_t v;
    mpfr_init2(v, 128);
    mpfr_set_q(v, value.get_mpq_t(), MPFR_RNDN);
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*RNf", static_cast<int>(digits), v);
    mpfr_clear(v);
    return buf;
}

std::string Interval::str_decimal(unsigned digits) const {
    mpfr_t v;
    mpfr_init2(v, 128);
    char buf[128];
    std::ostringstream out;
    mpfr_set_q(v, lo_.get_mpq_t(), MPFR_RNDD);
    mpfr_snprintf(buf, sizeof buf, "%.*RDf", static_cast<int>(digits), v);
    out << "[" << buf << ", ";
    mpfr_set_q(v, hi_.get_mpq_t(), MPFR_RNDU);
    mpfr_snprintf(buf, sizeof buf, "%.*RUf", static_cast<int>(digits), v);
    out << buf << "]";
    mpfr_clear(v);
    return out.str();
}

} // namespace hecke
