#include "siegelhecke/fourier.hpp"

#include <fstream>
#include <sstream>

#include "siegelhecke/errors.hpp"

namespace hecke {

HalfIntegralForm::HalfIntegralForm(Int a_, Int b_, Int c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    require(a >= 0 && c >= 0 && 4 * a * c - b * b >= 0,
            "form must be positive semidefinite");
}

Int HalfIntegralForm::content() const {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

namespace {

long mod4(const Int& d) {
    Int r = d % 4; // sign follows the dividend
    if (r < 0) r += 4;
    return r.get_si();
}

bool squarefree(const Int& n) {
    Int m = abs(n);
    require(m >= 1, "squarefree check needs a nonzero argument");
    for (Int f = 2; f * f <= m; ++f) {
        if (!mpz_divisible_p(m.get_mpz_t(), f.get_mpz_t())) continue;
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), f.get_mpz_t());
        if (mpz_divisible_p(m.get_mpz_t(), f.get_mpz_t())) return false;
    }
    return true;
}

} // namespace

unsigned long class_number(const Int& d) {
    require(d < 0, "class number enumeration needs d < 0");
    const long residue = mod4(d);
    require(residue == 0 || residue == 1, "d must be 0 or 1 mod 4");
    unsigned long count = 0;
    for (Int a = 1; 3 * a * a <= -d; ++a) {
        for (Int b = -a; b <= a; ++b) {
            // b^2 - d = 0 mod 4 forces b and d to share parity.
            if ((mpz_odd_p(b.get_mpz_t()) != 0) != (mpz_odd_p(d.get_mpz_t()) != 0)) continue;
            Int num = b * b - d;
            Int four_a = 4 * a;
            if (!mpz_divisible_p(num.get_mpz_t(), four_a.get_mpz_t())) continue;
            Int c;
            mpz_divexact(c.get_mpz_t(), num.get_mpz_t(), four_a.get_mpz_t());
            if (c < a) continue;
            if (b < 0 && (-b == a || a == c)) continue;
            Int g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g != 1) continue;
            ++count;
        }
    }
    return count;
}

bool is_fundamental_discriminant(const Int& d) {
    require(d < 0, "only negative discriminants are considered");
    const long residue = mod4(d);
    if (residue == 1) return squarefree(d);
    if (residue == 0) {
        Int m = d / 4;
        const long mr = mod4(m);
        return (mr == 2 || mr == 3) && squarefree(m);
    }
    return false;
}

int kronecker_symbol(const Int& d, const Int& p) {
    require(is_prime(p) && p % 2 != 0, "p must be an odd prime");
    Int a = d % p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    Int exponent = (p - 1) / 2;
    Int t;
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), exponent.get_mpz_t(), p.get_mpz_t());
    if (t == 1) return 1;
    check_internal(t == p - 1, "Euler criterion produced a nonunit");
    return -1;
}

PreconditionReport arakawa_preconditions(const HalfIntegralForm& s, const Int& p, const Int& m) {
    require(is_prime(p), "p must be prime");
    require(m >= 1, "m must be a positive integer");
    PreconditionReport report{true, {}};
    auto fail = [&](const std::string& why) {
        report.ok = false;
        report.failures.push_back(why);
    };
    if (s.content() != 1) fail("not primitive: gcd(a, b, c) = " + s.content().get_str());
    const Int d = s.discriminant();
    if (d >= 0) {
        fail("discriminant " + d.get_str() + " is not negative");
    } else if (!is_fundamental_discriminant(d)) {
        fail("discriminant " + d.get_str() + " is not fundamental");
    } else {
        if (unsigned long h = class_number(d); h != 1)
            fail("class number of " + d.get_str() + " is " + std::to_string(h) + ", not 1");
        // Inert test: Legendre symbol -1 for odd p; for p = 2, d = 5 mod 8.
        bool inert;
        if (p == 2) {
            Int r = d % 8;
            if (r < 0) r += 8;
            inert = r == 5;
        } else {
            inert = kronecker_symbol(d, p) == -1;
        }
        if (!inert) fail("p = " + p.get_str() + " is not inert in Q(sqrt(" + d.get_str() + "))");
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (g != 1) fail("m = " + m.get_str() + " is not coprime to p");
    return report;
}

CoefficientTable parse_coefficient_table(std::istream& in) {
    std::optional<std::string> label;
    std::optional<Int> prime;
    std::optional<Weight> weight;
    std::vector<std::vector<Rat>> coeff;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw) || kw[0] == '#') continue;
        auto fail = [&](const std::string& msg) -> usage_error {
            return usage_error("table line " + std::to_string(lineno) + ": " + msg);
        };
        if (kw == "label") {
            std::string value;
            if (!(ls >> value)) throw fail("missing label");
            label = value;
        } else if (kw == "prime") {
            std::string tok;
            if (!(ls >> tok)) throw fail("missing prime");
            Int p(tok);
            if (!is_prime(p)) throw fail("'" + tok + "' is not prime");
            prime = p;
        } else if (kw == "weight") {
            std::vector<long> parts;
            long v;
            while (ls >> v) parts.push_back(v);
            if (parts.size() != 2) throw fail("weight must have two parts");
            try {
                weight = Weight(parts);
            } catch (const error& e) {
                throw fail(e.what());
            }
        } else if (kw == "coeff") {
            std::size_t r;
            if (!(ls >> r)) throw fail("coeff needs an index");
            if (r != coeff.size()) throw fail("coefficient indices must be contiguous from 0");
            std::vector<Rat> vec;
            std::string tok;
            while (ls >> tok) vec.push_back(parse_rat(tok));
            if (vec.empty()) throw fail("empty coefficient vector");
            if (!coeff.empty() && vec.size() != coeff.front().size())
                throw fail("coefficient vectors must all have the same length");
            coeff.push_back(std::move(vec));
        } else {
            throw fail("unknown keyword '" + kw + "'");
        }
    }
    require(label.has_value(), "table is missing a label line");
    require(prime.has_value(), "table is missing a prime line");
    require(weight.has_value(), "table is missing a weight line");
    require(!coeff.empty(), "table has no coefficients");
    return CoefficientTable{*label, *weight, *prime, std::move(coeff)};
}

CoefficientTable parse_coefficient_table_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open coefficient table: " + path);
    return parse_coefficient_table(in);
}

Verdict distinguish_by_fourier(const CoefficientTable& f, const CoefficientTable& g) {
    require(f.p == g.p, "tables disagree on the prime");
    require(mod4(f.p) == 3, "p must be congruent to 3 mod 4");
    require(f.r_max() >= 6 && g.r_max() >= 6, "tables must cover r = 0..6");
    require(f.coeff.front().size() == g.coeff.front().size(),
            "coefficient vector lengths differ");

    auto is_zero = [](const std::vector<Rat>& v) {
        for (const Rat& x : v)
            if (x != 0) return false;
        return true;
    };
    if (f.weight.sum() == g.weight.sum())
        return Verdict::hypothesis_not_met("weight sums are equal (" +
                                           std::to_string(f.weight.sum()) +
                                           "); no separation is promised");
    if (is_zero(f.coeff[0]) && is_zero(g.coeff[0]))
        return Verdict::hypothesis_not_met(
            "both c(I) vanish; the separation argument needs a nonzero c(I)");

    for (std::size_t r = 0; r <= 6; ++r) {
        if (f.coeff[r] != g.coeff[r]) {
            std::string where = "c(p^" + std::to_string(r) + "*I)";
            return Verdict::distinguished(where, "Fourier coefficients differ at " + where +
                                                     " (r = " + std::to_string(r) + ")");
        }
    }
    return Verdict::inconsistent(
        "all coefficients c(p^r*I), r = 0..6, agree although the weight sums differ (" +
        std::to_string(f.weight.sum()) + " vs " + std::to_string(g.weight.sum()) +
        "); some separating r <= 6 must exist for consistent data");
}

} // namespace hecke
