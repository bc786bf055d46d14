#include "siegelhecke/euler.hpp"

#include <sstream>

#include "siegelhecke/errors.hpp"

namespace hecke {

namespace {
constexpr std::size_t kDeg2 = 2;
constexpr std::size_t kTpSlot = 0;
} // namespace

TruncatedSeries EulerFactor::reversed_series(std::size_t order) const {
    TruncatedSeries out(kDeg2, order);
    for (std::size_t i = 0; i <= 4 && i <= order; ++i) out.set(i, coeff[i]);
    return out;
}

EulerFactor build_euler_factor(const Int& p) {
    require(is_prime(p), "p must be prime");
    const HeckePolynomial tp = HeckePolynomial::t_p(kDeg2);
    const HeckePolynomial tp2 = HeckePolynomial::t_p2_alias(kDeg2);
    const HeckePolynomial t2 = HeckePolynomial::t_j_p2(kDeg2, 2);
    EulerFactor f{p,
                  {HeckePolynomial::constant(kDeg2, Rat(1)),
                   -tp,
                   tp * tp - tp2 - rat_pow(p, 2) * t2,
                   Rat(-rat_pow(p, 3)) * (tp * t2),
                   rat_pow(p, 6) * (t2 * t2)}};
    return f;
}

HeckePowerTable::HeckePowerTable(Int p, std::vector<HeckePolynomial> entries)
    : p_(std::move(p)), entries_(std::move(entries)) {
    require(!entries_.empty(), "power table must contain T(p^0)");
}

const HeckePolynomial& HeckePowerTable::operator[](std::size_t r) const {
    require(r < entries_.size(), "power table index out of range");
    return entries_[r];
}

HeckePolynomial HeckePowerTable::at(long r) const {
    if (r < 0) return HeckePolynomial(kDeg2);
    return (*this)[static_cast<std::size_t>(r)];
}

HeckePowerTable solve_hecke_powers(const Int& p, std::size_t r_max) {
    require(r_max >= 1, "r_max must be >= 1");
    EulerFactor f = build_euler_factor(p);
    // Right-hand side 1 - p^2 T_2(p^2) z^2 as coefficient list.
    auto rhs = [&](std::size_t m) -> HeckePolynomial {
        if (m == 0) return HeckePolynomial::constant(kDeg2, Rat(1));
        if (m == 2) return Rat(-rat_pow(p, 2)) * HeckePolynomial::t_j_p2(kDeg2, 2);
        return HeckePolynomial(kDeg2);
    };
    std::vector<HeckePolynomial> entries;
    entries.reserve(r_max + 1);
    entries.push_back(HeckePolynomial::constant(kDeg2, Rat(1)));
    for (std::size_t m = 1; m <= r_max; ++m) {
        HeckePolynomial value = rhs(m);
        for (std::size_t j = 1; j <= 4 && j <= m; ++j) value -= f.coeff[j] * entries[m - j];
        entries.push_back(std::move(value));
    }
    return HeckePowerTable(p, std::move(entries));
}

TruncatedSeries power_series(const HeckePowerTable& table, std::size_t order) {
    TruncatedSeries out(kDeg2, order);
    for (std::size_t r = 0; r <= order && r <= table.r_max(); ++r) out.set(r, table[r]);
    return out;
}

bool odd_powers_vanish(const Int& p, std::size_t i_max) {
    HeckePowerTable table = solve_hecke_powers(p, 2 * i_max + 1);
    const std::map<std::size_t, Rat> kill_tp{{kTpSlot, Rat(0)}};
    for (std::size_t i = 0; i <= i_max; ++i)
        if (!table[2 * i + 1].substitute(kill_tp).is_zero()) return false;
    return true;
}

HeckePolynomial identity_residual(EulerIdentity which, const Weight& w, const Int& p) {
    require(w.degree() == 2, "identities require a degree-2 weight");
    const long wsum = w.sum();
    const Rat t2_value = tn_eigenvalue(w, p); // p^{l1+l2-6}
    const Rat pw4 = rat_pow(p, wsum - 4);
    const Rat pw6 = rat_pow(p, 2 * wsum - 6);

    const std::size_t r_needed = which == EulerIdentity::P3 ? 3 : 6;
    HeckePowerTable table = solve_hecke_powers(p, r_needed);

    HeckePolynomial lhs(kDeg2);
    switch (which) {
        case EulerIdentity::P3:
            lhs = table[3] - Rat(2) * (table[1] * table[2]) + table[1].pow(3) -
                  Rat(pw4 * (Rat(p) + 1)) * table[1];
            break;
        case EulerIdentity::P4:
            lhs = table[4] - table[2].pow(2) - pw4 * table[2] +
                  HeckePolynomial::constant(kDeg2, pw6);
            break;
        case EulerIdentity::P6:
            lhs = table[6] - table[4] * table[2] - pw4 * table[4] + pw6 * table[2];
            break;
    }
    // T_2(p^2) is bound first, then (for the conditional identities) T(p).
    lhs = lhs.substitute(std::map<std::size_t, Rat>{{tj_slot(2), t2_value}});
    if (which != EulerIdentity::P3)
        lhs = lhs.substitute(std::map<std::size_t, Rat>{{kTpSlot, Rat(0)}});
    return lhs;
}

bool generating_identity_roundtrip(const Int& p, std::size_t order) {
    EulerFactor f = build_euler_factor(p);
    HeckePowerTable table = solve_hecke_powers(p, order);
    TruncatedSeries product = f.reversed_series(order) * power_series(table, order);
    TruncatedSeries expected(kDeg2, order);
    expected.set(0, HeckePolynomial::constant(kDeg2, Rat(1)));
    if (order >= 2) expected.set(2, Rat(-rat_pow(p, 2)) * HeckePolynomial::t_j_p2(kDeg2, 2));
    return product == expected;
}

std::string coefficient_identity_str(const Int& p, std::size_t m) {
    require(m >= 1, "m must be >= 1");
    EulerFactor f = build_euler_factor(p);
    std::ostringstream out;
    out << "T(p^" << m << ")";
    for (std::size_t j = 1; j <= 4 && j <= m; ++j) {
        out << " + (" << f.coeff[j].str() << ")";
        if (m - j >= 1) out << "*T(p^" << (m - j) << ")";
    }
    out << " = ";
    if (m == 2)
        out << "-" << rat_str(rat_pow(p, 2)) << "*T_2(p^2)";
    else
        out << "0";
    return out.str();
}

} // namespace hecke
