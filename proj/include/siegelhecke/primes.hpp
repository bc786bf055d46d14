#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "siegelhecke/intervals.hpp"

namespace hecke {

inline constexpr unsigned kDefaultPrecisionBits = 64;

/// Sieve of Eratosthenes up to a fixed limit, with the primes congruent to
/// 3 mod 4 cached in order.
class PrimeSieve {
public:
    explicit PrimeSieve(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    bool is_prime(std::uint64_t n) const;
    const std::vector<std::uint64_t>& primes_3mod4() const { return primes_3mod4_; }

private:
    std::uint64_t limit_;
    std::vector<bool> composite_;
    std::vector<std::uint64_t> primes_3mod4_;
};

/// theta_3(x) = sum of ln(p) over primes p <= x with p = 3 mod 4, as a
/// certified enclosure. Requires x <= sieve limit.
Interval theta3(const Rat& x, const PrimeSieve& sieve,
                unsigned prec_bits = kDefaultPrecisionBits);

struct Theta3SweepResult {
    bool holds;
    /// A certified counterexample when holds is false: theta3(3x) < x there.
    std::optional<Rat> counterexample;
    std::string detail;
};

/// Certified sweep of "theta3(3x) > x" over [x_min, x_max]. The left side is
/// a step function with jumps at x = q/3 for primes q = 3 mod 4, so it
/// suffices to test the left limit at every jump: theta3(q') >= q''/3 where
/// q'' is the next jump after q', plus the endpoint x_max itself. Decisions
/// use certified interval bounds and refine the precision instead of
/// guessing when an endpoint is too close to call.
Theta3SweepResult check_theta3_lemma(const Rat& x_max, const Rat& x_min = Rat(11, 3),
                                     unsigned prec_bits = kDefaultPrecisionBits);

struct PrimeWithBound {
    std::uint64_t prime;
    Interval bound;
    bool bound_certified; // bound.lo >= prime
};

/// Smallest prime not dividing N, with the certified check p <= 2 ln N + 2.
PrimeWithBound smallest_prime_not_dividing(const Int& n,
                                           unsigned prec_bits = kDefaultPrecisionBits);

/// Smallest prime congruent to 3 mod 4 not dividing N, with the certified
/// check p <= 3 ln N + 4.
PrimeWithBound smallest_prime_3mod4_not_dividing(const Int& n,
                                                 unsigned prec_bits = kDefaultPrecisionBits);

/// Enclosure of (2 ln N + 2)^6.
Interval m_bound(const Int& n, unsigned prec_bits = kDefaultPrecisionBits);

/// Enclosure of (3 ln N + 4)^12.
Interval det_bound(const Int& n, unsigned prec_bits = kDefaultPrecisionBits);

struct BoundSweepResult {
    bool holds;
    std::uint64_t first_failure; // 0 when holds
};

/// Certified sweep of the smallest-non-divisor bound for all 1 <= N <= n_max.
/// mod4_variant selects p = 3 mod 4 with bound 3 ln N + 4; otherwise all
/// primes with bound 2 ln N + 2.
BoundSweepResult sweep_prime_bound(std::uint64_t n_max, bool mod4_variant,
                                   unsigned prec_bits = kDefaultPrecisionBits);

} // namespace hecke
