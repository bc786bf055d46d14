#pragma once

#include <iosfwd>

#include "siegelhecke/intervals.hpp"
#include "siegelhecke/profiles.hpp"

namespace hecke {

/// 2x2 symmetric positive-semidefinite half-integral matrix
/// [[a, b/2], [b/2, c]] with integer a, c, b.
struct HalfIntegralForm {
    Int a, b, c;

    HalfIntegralForm(Int a_, Int b_, Int c_);

    /// b^2 - 4ac.
    Int discriminant() const { return b * b - 4 * a * c; }
    /// ac - b^2/4 as an exact rational.
    Rat determinant() const { return make_rat(4 * a * c - b * b, Int(4)); }
    Int content() const; // gcd(a, b, c)
};

/// Number of primitive reduced binary quadratic forms of discriminant d < 0,
/// by direct enumeration: |b| <= a <= c, b^2 - 4ac = d, gcd(a,b,c) = 1, with
/// b >= 0 whenever |b| = a or a = c.
unsigned long class_number(const Int& d);

/// d = 1 mod 4 squarefree, or d = 4m with m = 2,3 mod 4 squarefree.
bool is_fundamental_discriminant(const Int& d);

/// Legendre symbol of d modulo an odd prime p, via Euler's criterion.
int kronecker_symbol(const Int& d, const Int& p);

struct PreconditionReport {
    bool ok;
    std::vector<std::string> failures;
};

/// Checks the hypotheses under which the Hecke action moves Fourier indices:
/// S primitive, disc(S) a fundamental discriminant with class number 1, p
/// inert in Q(sqrt(d)), gcd(m, p) = 1. Every failed bullet is named.
PreconditionReport arakawa_preconditions(const HalfIntegralForm& s, const Int& p, const Int& m);

/// Fourier coefficients c(p^r I) for r = 0..r_max of one form: exact
/// rational vectors of a common length (length 1 for scalar-valued forms).
struct CoefficientTable {
    std::string label;
    Weight weight;
    Int p;
    std::vector<std::vector<Rat>> coeff; // index r, contiguous from 0

    std::size_t r_max() const { return coeff.size() - 1; }
};

/// Line-oriented table format:
///   label <string>
///   prime p
///   weight l1 l2
///   coeff <r> <rational> <rational> ...
CoefficientTable parse_coefficient_table(std::istream& in);
CoefficientTable parse_coefficient_table_file(const std::string& path);

/// Decision procedure over c(p^r I), r = 0..6. Requires p = 3 mod 4 and the
/// tables to cover r = 0..6 with equal vector lengths. Hypothesis failures
/// (equal weight sums, or both c(I) zero) produce a HypothesisNotMet verdict.
Verdict distinguish_by_fourier(const CoefficientTable& f, const CoefficientTable& g);

} // namespace hecke
