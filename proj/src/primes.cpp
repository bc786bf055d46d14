#include "siegelhecke/primes.hpp"

#include <algorithm>
#include <sstream>

#include "siegelhecke/errors.hpp"

namespace hecke {

namespace {
constexpr unsigned kMaxPrecisionBits = 1u << 14;
} // namespace

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit), composite_(limit + 1, false) {
    require(limit >= 2, "sieve limit must be >= 2");
    composite_[0] = composite_[1] = true;
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (composite_[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) composite_[j] = true;
    }
    for (std::uint64_t i = 3; i <= limit; i += 4)
        if (!composite_[i]) primes_3mod4_.push_back(i);
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
    require(n <= limit_, "query beyond sieve limit");
    return n >= 2 && !composite_[n];
}

Interval theta3(const Rat& x, const PrimeSieve& sieve, unsigned prec_bits) {
    require(Rat(sieve.limit()) >= x, "sieve too small for theta3 argument");
    Interval sum;
    for (std::uint64_t q : sieve.primes_3mod4()) {
        if (Rat(Int(q)) > x) break;
        sum += Interval::log_of(Rat(Int(q)), prec_bits);
    }
    return sum;
}

namespace {

Theta3SweepResult sweep_theta3(const Rat& x_max, const Rat& x_min, unsigned prec_bits) {
    Theta3SweepResult result{true, std::nullopt, ""};
    if (x_max < x_min) {
        result.detail = "range is empty; nothing to check";
        return result;
    }
    const Rat three_xmax = Rat(3 * x_max);
    std::uint64_t limit = 16;
    if (three_xmax > 8) {
        Int ceil_3x = Int(three_xmax.get_num() / three_xmax.get_den()) + 2;
        require(ceil_3x.fits_ulong_p(), "theta3 sweep range too large");
        limit = ceil_3x.get_ui();
    }
    PrimeSieve sieve(limit);

    // Running enclosure of theta3 at the current jump; seeded with every
    // prime q <= 3*x_min.
    Interval sum;
    const auto& qs = sieve.primes_3mod4();
    std::size_t i = 0;
    const Rat three_xmin = Rat(3 * x_min);
    for (; i < qs.size() && Rat(Int(qs[i])) <= three_xmin; ++i)
        sum += Interval::log_of(Rat(Int(qs[i])), prec_bits);

    Rat segment_start = x_min;
    while (true) {
        // Supremum of x on the current constant segment of theta3(3x).
        const bool last = i >= qs.size() || Rat(Int(qs[i])) > three_xmax;
        const Rat sup = last ? x_max : Rat(Rat(Int(qs[i])) / 3);
        const bool attained = last; // x_max belongs to the range; q/3 starts the next segment

        if (attained ? sum.certainly_greater(sup) : sum.certainly_ge(sup)) {
            // segment certified
        } else if (sum.certainly_less(sup)) {
            Rat witness = Rat((std::max(sum.hi(), segment_start) + sup) / 2);
            // Prefer an integer witness when one fits strictly inside.
            Int k = Int(sum.hi().get_num() / sum.hi().get_den()) + 1;
            if (Rat(k) > sum.hi() && Rat(k) < sup && Rat(k) >= segment_start) witness = Rat(k);
            std::ostringstream detail;
            detail << "theta3(3x) > x fails on x in (" << decimal_str(sum.hi(), 6) << ", "
                   << rat_str(sup) << (attained ? "]" : ")") << " where theta3(3x) is enclosed by "
                   << sum.str_decimal(6) << "; certified counterexample x = " << rat_str(witness)
                   << " with theta3(" << rat_str(Rat(3 * witness)) << ") <= "
                   << decimal_str(sum.hi(), 6) << " < " << rat_str(witness);
            return Theta3SweepResult{false, witness, detail.str()};
        } else {
            return Theta3SweepResult{false, std::nullopt, "undecided"};
        }
        if (last) break;
        sum += Interval::log_of(Rat(Int(qs[i])), prec_bits);
        segment_start = Rat(Rat(Int(qs[i])) / 3);
        ++i;
    }
    std::ostringstream detail;
    detail << "theta3(3x) > x certified for all x in [" << rat_str(x_min) << ", "
           << rat_str(x_max) << "]";
    result.detail = detail.str();
    return result;
}

} // namespace

Theta3SweepResult check_theta3_lemma(const Rat& x_max, const Rat& x_min, unsigned prec_bits) {
    for (unsigned bits = prec_bits; bits <= kMaxPrecisionBits; bits *= 2) {
        Theta3SweepResult r = sweep_theta3(x_max, x_min, bits);
        if (r.holds || r.counterexample.has_value()) return r;
        // Undecided at this precision; refine instead of guessing.
    }
    throw internal_error("theta3 sweep undecided at maximal precision");
}

namespace {

// Certified decision of p <= mult*ln(N) + add, refining precision as needed.
bool bound_holds_certified(std::uint64_t p, const Int& n, long mult, long add,
                           unsigned prec_bits, Interval* out_bound) {
    for (unsigned bits = prec_bits; bits <= kMaxPrecisionBits; bits *= 2) {
        Interval b = Rat(mult) * Interval::log_of(Rat(n), bits) + Rat(add);
        if (out_bound) *out_bound = b;
        if (b.certainly_ge(Rat(Int(p)))) return true;
        if (b.certainly_less(Rat(Int(p)))) return false;
    }
    throw internal_error("prime bound undecided at maximal precision");
}

PrimeWithBound smallest_with_bound(const Int& n, bool mod4_variant, unsigned prec_bits) {
    require(n >= 1, "N must be >= 1");
    PrimeSieve sieve(1u << 16);
    std::uint64_t p = 0;
    for (std::uint64_t q = 2; q <= sieve.limit(); ++q) {
        if (!sieve.is_prime(q)) continue;
        if (mod4_variant && q % 4 != 3) continue;
        if (!mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            p = q;
            break;
        }
    }
    check_internal(p != 0, "no candidate prime below the search limit");
    const long mult = mod4_variant ? 3 : 2;
    const long add = mod4_variant ? 4 : 2;
    Interval bound;
    bool ok = bound_holds_certified(p, n, mult, add, prec_bits, &bound);
    return PrimeWithBound{p, bound, ok};
}

} // namespace

PrimeWithBound smallest_prime_not_dividing(const Int& n, unsigned prec_bits) {
    return smallest_with_bound(n, false, prec_bits);
}

PrimeWithBound smallest_prime_3mod4_not_dividing(const Int& n, unsigned prec_bits) {
    return smallest_with_bound(n, true, prec_bits);
}

Interval m_bound(const Int& n, unsigned prec_bits) {
    require(n >= 1, "N must be >= 1");
    return (Rat(2) * Interval::log_of(Rat(n), prec_bits) + Rat(2)).pow_nonneg(6);
}

Interval det_bound(const Int& n, unsigned prec_bits) {
    require(n >= 1, "N must be >= 1");
    return (Rat(3) * Interval::log_of(Rat(n), prec_bits) + Rat(4)).pow_nonneg(12);
}

BoundSweepResult sweep_prime_bound(std::uint64_t n_max, bool mod4_variant, unsigned prec_bits) {
    require(n_max >= 1, "sweep limit must be >= 1");
    const long mult = mod4_variant ? 3 : 2;
    const long add = mod4_variant ? 4 : 2;

    // Candidate answers: once the running product of candidates exceeds
    // n_max, no N <= n_max can be divisible by all of them, so the smallest
    // non-divisor is already in the list.
    PrimeSieve sieve(4096);
    std::vector<std::uint64_t> candidates;
    Int primorial = 1;
    for (std::uint64_t q = 2; q <= sieve.limit(); ++q) {
        if (!sieve.is_prime(q) || (mod4_variant && q % 4 != 3)) continue;
        candidates.push_back(q);
        if (primorial > Int(n_max)) break;
        primorial *= Int(q);
    }

    // For each candidate p, a certified threshold: any N >= threshold has
    // p <= mult*ln(N) + add, because N > exp((p-add)/mult).
    std::vector<std::uint64_t> threshold(candidates.size(), 0);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Rat exponent = make_rat(Int(candidates[i]) - add, Int(mult));
        if (exponent <= 0) {
            threshold[i] = 1;
            continue;
        }
        Interval e = Interval::exp_of(exponent, prec_bits);
        Int t = Int(e.hi().get_num() / e.hi().get_den()) + 1;
        if (!t.fits_ulong_p() || t.get_ui() > n_max + 1) {
            threshold[i] = n_max + 1; // never certified wholesale; checked per N
        } else {
            threshold[i] = t.get_ui();
        }
    }

    for (std::uint64_t n = 1; n <= n_max; ++n) {
        std::size_t idx = 0;
        while (idx < candidates.size() && n % candidates[idx] == 0) ++idx;
        check_internal(idx < candidates.size(), "candidate prime list exhausted");
        if (n >= threshold[idx]) continue;
        if (!bound_holds_certified(candidates[idx], Int(n), mult, add, prec_bits, nullptr))
            return BoundSweepResult{false, n};
    }
    return BoundSweepResult{true, 0};
}

} // namespace hecke
