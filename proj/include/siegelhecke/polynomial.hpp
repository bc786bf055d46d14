#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "siegelhecke/rational.hpp"

namespace hecke {

// The polynomial ring of the degree-n local Hecke algebra, modelled as a
// commutative ring over the generator set
//
//   slot 0      T(p)
//   slot 1 + j  T_j(p^2)   for j = 0..n
//
// T_0(p^2) is carried explicitly; the operator T(p^2) is not a generator but
// the alias sum_{j=0}^{n} T_j(p^2). Canonical generator order is slot order
// (which agrees with lexicographic order on the generator names), and terms
// are kept sorted by descending lexicographic order on exponent vectors so
// that printing is deterministic.

inline std::size_t generator_count(std::size_t degree) { return degree + 2; }

/// Slot of T_j(p^2) in a degree-n ring.
inline std::size_t tj_slot(std::size_t j) { return 1 + j; }

std::string generator_name(std::size_t degree, std::size_t slot);

class HeckePolynomial {
public:
    using Monomial = std::vector<std::uint32_t>;
    struct MonomialOrder {
        bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
    };
    using TermMap = std::map<Monomial, Rat, MonomialOrder>;

    explicit HeckePolynomial(std::size_t degree);

    static HeckePolynomial constant(std::size_t degree, const Rat& value);
    static HeckePolynomial generator(std::size_t degree, std::size_t slot);
    static HeckePolynomial t_p(std::size_t degree) { return generator(degree, 0); }
    static HeckePolynomial t_j_p2(std::size_t degree, std::size_t j);
    /// The alias T(p^2) = sum_{j=0}^{n} T_j(p^2).
    static HeckePolynomial t_p2_alias(std::size_t degree);

    std::size_t degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;
    const TermMap& terms() const { return terms_; }
    Rat coefficient(const Monomial& m) const;
    /// Coefficient of the degree-one monomial in the given generator.
    Rat generator_coefficient(std::size_t slot) const;
    bool integer_coefficients() const;

    HeckePolynomial& operator+=(const HeckePolynomial& rhs);
    HeckePolynomial& operator-=(const HeckePolynomial& rhs);
    HeckePolynomial& operator*=(const HeckePolynomial& rhs);
    HeckePolynomial& operator*=(const Rat& scalar);

    friend HeckePolynomial operator+(HeckePolynomial a, const HeckePolynomial& b) { return a += b; }
    friend HeckePolynomial operator-(HeckePolynomial a, const HeckePolynomial& b) { return a -= b; }
    friend HeckePolynomial operator*(HeckePolynomial a, const HeckePolynomial& b) { return a *= b; }
    friend HeckePolynomial operator*(HeckePolynomial a, const Rat& s) { return a *= s; }
    friend HeckePolynomial operator*(const Rat& s, HeckePolynomial a) { return a *= s; }
    HeckePolynomial operator-() const;

    bool operator==(const HeckePolynomial& rhs) const = default;

    HeckePolynomial pow(unsigned e) const;

    /// Substitutes polynomials for the bound generator slots; unbound slots
    /// stay symbolic. A ring homomorphism by construction.
    HeckePolynomial substitute(const std::map<std::size_t, HeckePolynomial>& bindings) const;
    HeckePolynomial substitute(const std::map<std::size_t, Rat>& bindings) const;

    /// Canonical textual form, e.g. "T(p)^2 - 2*T_1(p^2) - 14*T_2(p^2)".
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rat& c);
    void require_same_context(const HeckePolynomial& rhs) const;

    std::size_t degree_;
    TermMap terms_;
};

} // namespace hecke
