#pragma once

#include <vector>

#include "siegelhecke/polynomial.hpp"

namespace hecke {

/// Nonincreasing integer tuple (lambda_1 >= ... >= lambda_n).
struct Weight {
    std::vector<long> parts;

    explicit Weight(std::vector<long> p);
    std::size_t degree() const { return parts.size(); }
    long sum() const;
    std::string str() const;
    bool operator==(const Weight& rhs) const = default;
};

/// Number of l-dimensional subspaces of F_p^m; 0 when l > m.
Int q_binomial(unsigned long m, unsigned long l, const Int& p);

/// c_s, computed both as sum_{i=1}^{s} p^{i(i+1)/2} * qbinom(s, i)_p and as
/// prod_{i=1}^{s}(p^i + 1) - 1; the two forms are asserted equal and the
/// common (positive) value returned.
Int relation_coefficient(unsigned long s, const Int& p);

/// sum_{i=0}^{s} p^{i(i+1)/2} * qbinom(s, i)_p == prod_{j=1}^{s}(1 + p^j)?
bool gauss_binomial_identity_holds(unsigned long s, const Int& p);

/// Context for the rescaled generator basis: degree n >= 1, scalar weight
/// k >= n+1, prime p.
struct TildeContext {
    std::size_t degree;
    long scalar_weight;
    Int p;

    TildeContext(std::size_t n, long k, Int prime);
};

/// The operator p^{j(k-n-1)} * sum_{t=0}^{j} qbinom(n-t, j-t)_p * T_{n-t}(p^2)
/// expressed in the standard generator basis.
HeckePolynomial tilde_operator(std::size_t j, const TildeContext& ctx);

// Machine derivation of the T(p^2) relation. Starting from the axiom
//
//   tilde_n(p^2) = curl_T(p)^2 - sum_{j=0}^{n-1} p^{k(n-j)+j(j+1)/2-n(n+1)/2} tilde_j(p^2)
//
// with curl_T(p)^2 = p^{n(k-n-1)} T(p)^2, expands everything in the standard
// basis and divides by p^{n(k-n-1)}. The result is the formal polynomial
//
//   T(p)^2 - T(p^2) - sum_{s=1}^{n} c_s T_s(p^2)
//
// with T(p^2) expanded as sum_{s=0}^{n} T_s(p^2). Asserted on every call:
// the output is identical for k and k+1 (the k-dependence must cancel), all
// coefficients are integers, the T(p)^2 coefficient is 1, the T_0(p^2)
// coefficient is -1, and the T_s(p^2) coefficient is -(1 + c_s) for s >= 1.
// Violations throw internal_error.
HeckePolynomial main_relation(std::size_t n, const Int& p, long k);

/// c_1..c_n as read off a main_relation derivation (index 0 holds c_1).
std::vector<Int> relation_coefficients(std::size_t n, const Int& p);

/// Human-readable solved form "T(p^2) = T(p)^2 - c_1*T_1(p^2) - ...".
std::string solved_relation_str(std::size_t n, const Int& p);

/// Scalar by which T_n(p^2) acts: p^{sum(lambda) - n(n+1)}.
Rat tn_eigenvalue(const Weight& w, const Int& p);

/// Inverse of tn_eigenvalue: recovers sum(lambda) from an exact power of p.
/// Throws data_error when the value is not an exact power of p.
long weight_sum_from_tn(const Rat& value, const Int& p, std::size_t n);

} // namespace hecke
