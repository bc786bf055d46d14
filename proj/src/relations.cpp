#include "siegelhecke/relations.hpp"

#include <sstream>

#include "siegelhecke/errors.hpp"

namespace hecke {

Weight::Weight(std::vector<long> p) : parts(std::move(p)) {
    require(!parts.empty(), "weight must have at least one part");
    for (std::size_t i = 1; i < parts.size(); ++i)
        require(parts[i - 1] >= parts[i], "weight parts must be nonincreasing");
}

long Weight::sum() const {
    long s = 0;
    for (long v : parts) s += v;
    return s;
}

std::string Weight::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ",";
        out << parts[i];
    }
    out << ")";
    return out.str();
}

Int q_binomial(unsigned long m, unsigned long l, const Int& p) {
    require(p >= 2, "p must be >= 2");
    if (l > m) return 0;
    Int num = 1, den = 1;
    for (unsigned long i = 1; i <= l; ++i) {
        num *= int_pow(p, m - l + i) - 1;
        den *= int_pow(p, i) - 1;
    }
    check_internal(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0,
                   "q_binomial product form is not integral");
    Int out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

Int relation_coefficient(unsigned long s, const Int& p) {
    require(s >= 1, "s must be >= 1");
    Int sum_form = 0;
    for (unsigned long i = 1; i <= s; ++i)
        sum_form += int_pow(p, i * (i + 1) / 2) * q_binomial(s, i, p);
    Int product_form = 1;
    for (unsigned long i = 1; i <= s; ++i) product_form *= int_pow(p, i) + 1;
    product_form -= 1;
    check_internal(sum_form == product_form,
                   "relation coefficient: sum and product forms disagree");
    check_internal(product_form > 0, "relation coefficient must be positive");
    return product_form;
}

bool gauss_binomial_identity_holds(unsigned long s, const Int& p) {
    require(s >= 1, "s must be >= 1");
    Int lhs = 0;
    for (unsigned long i = 0; i <= s; ++i)
        lhs += int_pow(p, i * (i + 1) / 2) * q_binomial(s, i, p);
    Int rhs = 1;
    for (unsigned long j = 1; j <= s; ++j) rhs *= 1 + int_pow(p, j);
    return lhs == rhs;
}

TildeContext::TildeContext(std::size_t n, long k, Int prime)
    : degree(n), scalar_weight(k), p(std::move(prime)) {
    require(n >= 1, "degree must be >= 1");
    require(k >= static_cast<long>(n) + 1, "scalar weight must satisfy k >= n+1");
    require(is_prime(p), "p must be prime");
}

HeckePolynomial tilde_operator(std::size_t j, const TildeContext& ctx) {
    const std::size_t n = ctx.degree;
    require(j <= n, "tilde operator index out of range");
    const long k = ctx.scalar_weight;
    HeckePolynomial out(n);
    Rat scale = rat_pow(ctx.p, static_cast<long>(j) * (k - static_cast<long>(n) - 1));
    for (std::size_t t = 0; t <= j; ++t) {
        Rat coeff = scale * Rat(q_binomial(n - t, j - t, ctx.p));
        out += coeff * HeckePolynomial::t_j_p2(n, n - t);
    }
    return out;
}

namespace {

// One pass of the derivation at a fixed k: expand the axiom in the standard
// basis and divide out the normalizing power of p.
HeckePolynomial expand_relation(std::size_t n, const Int& p, long k) {
    const long ln = static_cast<long>(n);
    TildeContext ctx(n, k, p);
    // curl_T(p)^2 = p^{n(k-n-1)} T(p)^2; only the square is needed, so the
    // half-integral exponent of curl_T(p) itself never appears.
    HeckePolynomial acc =
        rat_pow(p, ln * (k - ln - 1)) * (HeckePolynomial::t_p(n) * HeckePolynomial::t_p(n));
    for (std::size_t j = 0; j < n; ++j) {
        const long lj = static_cast<long>(j);
        long exponent = k * (ln - lj) + lj * (lj + 1) / 2 - ln * (ln + 1) / 2;
        acc -= rat_pow(p, exponent) * tilde_operator(j, ctx);
    }
    acc -= tilde_operator(n, ctx);
    acc *= rat_pow(p, -(ln * (k - ln - 1)));
    return acc;
}

} // namespace

HeckePolynomial main_relation(std::size_t n, const Int& p, long k) {
    HeckePolynomial rel = expand_relation(n, p, k);
    check_internal(rel == expand_relation(n, p, k + 1),
                   "main relation: k-dependence did not cancel");
    check_internal(rel.integer_coefficients(), "main relation: fractional coefficients");

    HeckePolynomial expected =
        HeckePolynomial::t_p(n) * HeckePolynomial::t_p(n) - HeckePolynomial::t_p2_alias(n);
    for (std::size_t s = 1; s <= n; ++s)
        expected -= Rat(relation_coefficient(s, p)) * HeckePolynomial::t_j_p2(n, s);
    check_internal(rel == expected,
                   "main relation: derived polynomial does not match the coefficient formula");
    return rel;
}

std::vector<Int> relation_coefficients(std::size_t n, const Int& p) {
    HeckePolynomial rel = main_relation(n, p, static_cast<long>(n) + 1);
    std::vector<Int> cs;
    cs.reserve(n);
    for (std::size_t s = 1; s <= n; ++s) {
        Rat c = rel.generator_coefficient(tj_slot(s));
        // coefficient of T_s(p^2) is -(1 + c_s)
        Rat value = -c - 1;
        check_internal(value.get_den() == 1, "relation coefficient is not integral");
        cs.push_back(Int(value.get_num()));
    }
    return cs;
}

std::string solved_relation_str(std::size_t n, const Int& p) {
    std::vector<Int> cs = relation_coefficients(n, p);
    HeckePolynomial rhs = HeckePolynomial::t_p(n) * HeckePolynomial::t_p(n);
    for (std::size_t s = 1; s <= n; ++s)
        rhs -= Rat(cs[s - 1]) * HeckePolynomial::t_j_p2(n, s);
    return "T(p^2) = " + rhs.str();
}

// The exponent is sum(lambda) - n(n+1): eta(pI)^{sum - n(n+1)/2} times
// rho(pI)^{-1} with eta(pI) = p^2 and rho(pI) = p^{sum}. At n = 2 this is the
// p^{l1+l2-6} scalar the degree-2 identities are built on, and at n = 1 it is
// the classical p^{k-2}.
Rat tn_eigenvalue(const Weight& w, const Int& p) {
    require(is_prime(p), "p must be prime");
    const long n = static_cast<long>(w.degree());
    return rat_pow(p, w.sum() - n * (n + 1));
}

long weight_sum_from_tn(const Rat& value, const Int& p, std::size_t n) {
    require(is_prime(p), "p must be prime");
    auto e = exact_power_exponent(value, p);
    if (!e)
        throw data_error("T_n(p^2) eigenvalue " + rat_str(value) +
                         " is not an exact power of " + p.get_str());
    const long ln = static_cast<long>(n);
    return *e + ln * (ln + 1);
}

} // namespace hecke
