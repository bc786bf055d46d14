#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace hecke {

// Arbitrary-precision scalars. GMP's canonical form for mpq_class is exactly
// the invariant we need: lowest terms, positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

/// base^e for e >= 0.
Int int_pow(const Int& base, unsigned long e);

/// base^e for any integer e (base != 0 when e < 0).
Rat rat_pow(const Int& base, long e);

/// Rational from a numerator/denominator pair, canonicalized.
Rat make_rat(const Int& num, const Int& den);

bool is_prime(const Int& n);

/// If value == p^e for some integer e (possibly negative), returns e.
/// Requires p >= 2. Returns nullopt for value <= 0 or non-powers.
std::optional<long> exact_power_exponent(const Rat& value, const Int& p);

/// Parses "num/den" or a plain integer. Throws usage_error on junk.
Rat parse_rat(const std::string& text);

std::string rat_str(const Rat& value);

} // namespace hecke
