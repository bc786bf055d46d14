#pragma once

#include <array>

#include "siegelhecke/relations.hpp"
#include "siegelhecke/series.hpp"

namespace hecke {

// Degree-2 spin Euler factor f(X) = X^4 + e1 X^3 + e2 X^2 + e3 X + e4 with
//   e1 = -T(p)
//   e2 = T(p)^2 - T(p^2) - p^2 T_2(p^2)
//   e3 = -p^3 T(p) T_2(p^2)
//   e4 = p^6 T_2(p^2)^2
// in the degree-2 generator ring (T(p^2) expanded through its alias).
struct EulerFactor {
    Int p;
    std::array<HeckePolynomial, 5> coeff; // coeff[i] multiplies X^{4-i}; coeff[0] = 1

    /// Coefficients of z^4 f(1/z) = 1 + e1 z + e2 z^2 + e3 z^3 + e4 z^4 as a
    /// truncated series.
    TruncatedSeries reversed_series(std::size_t order) const;
};

EulerFactor build_euler_factor(const Int& p);

/// T(p^0), ..., T(p^{r_max}) as polynomials in the degree-2 generators,
/// solved from the generating identity
///   z^4 f(1/z) * sum_i T(p^i) z^i = 1 - p^2 T_2(p^2) z^2
/// by equating coefficients of z^m.
class HeckePowerTable {
public:
    HeckePowerTable(Int p, std::vector<HeckePolynomial> entries);

    const Int& p() const { return p_; }
    std::size_t r_max() const { return entries_.size() - 1; }
    /// T(p^r); the zero polynomial for r < 0 by convention (see at()).
    const HeckePolynomial& operator[](std::size_t r) const;
    /// Signed access with T(p^r) = 0 for r < 0.
    HeckePolynomial at(long r) const;

private:
    Int p_;
    std::vector<HeckePolynomial> entries_;
};

HeckePowerTable solve_hecke_powers(const Int& p, std::size_t r_max);

/// sum_{i=0}^{r_max} T(p^i) z^i as a truncated series.
TruncatedSeries power_series(const HeckePowerTable& table, std::size_t order);

/// True iff T(p^{2i+1}) with T(p) -> 0 is the zero polynomial for all
/// 0 <= i <= i_max.
bool odd_powers_vanish(const Int& p, std::size_t i_max);

/// The three eigenvalue identities for degree-2 eigenforms, named by the
/// highest Hecke power they constrain.
enum class EulerIdentity { P3, P4, P6 };

/// Left-hand side of the chosen identity as a polynomial: Hecke powers come
/// from solve_hecke_powers, then T_2(p^2) -> p^{l1+l2-6} is bound, and for P4
/// and P6 also T(p) -> 0. The result must be the zero polynomial; a nonzero
/// residual is returned to the caller (never swallowed).
HeckePolynomial identity_residual(EulerIdentity which, const Weight& w, const Int& p);

/// Round-trip check of the generating identity through the given order:
/// z^4 f(1/z) * sum T(p^i) z^i == 1 - p^2 T_2(p^2) z^2 as truncated series.
bool generating_identity_roundtrip(const Int& p, std::size_t order);

/// Text of the z^m coefficient identity, e.g. for m = 3:
/// "T(p^3) - 2*T(p)*T(p^2) + T(p)^3 - p^2(p+1)*T(p)*T_2(p^2) = 0" rendered in
/// the generator basis.
std::string coefficient_identity_str(const Int& p, std::size_t m);

} // namespace hecke
