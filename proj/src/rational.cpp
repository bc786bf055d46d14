#include "siegelhecke/rational.hpp"

#include "siegelhecke/errors.hpp"

namespace hecke {

Int int_pow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

Rat rat_pow(const Int& base, long e) {
    if (e >= 0) return Rat(int_pow(base, static_cast<unsigned long>(e)));
    require(base != 0, "rat_pow: negative power of zero");
    Rat out(1, int_pow(base, static_cast<unsigned long>(-e)));
    out.canonicalize();
    return out;
}

Rat make_rat(const Int& num, const Int& den) {
    require(den != 0, "make_rat: zero denominator");
    Rat out(num, den);
    out.canonicalize();
    return out;
}

bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::optional<long> exact_power_exponent(const Rat& value, const Int& p) {
    if (p < 2) return std::nullopt;
    if (value <= 0) return std::nullopt;
    const Int& num = value.get_num();
    const Int& den = value.get_den();
    auto strip = [&p](Int t) -> std::optional<long> {
        long e = 0;
        while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        if (t != 1) return std::nullopt;
        return e;
    };
    if (den == 1) return strip(num);
    if (num == 1) {
        auto e = strip(den);
        if (!e) return std::nullopt;
        return -*e;
    }
    return std::nullopt;
}

Rat parse_rat(const std::string& text) {
    Rat out;
    if (mpq_set_str(out.get_mpq_t(), text.c_str(), 10) != 0)
        throw usage_error("cannot parse rational: '" + text + "'");
    require(out.get_den() != 0, "zero denominator in rational: '" + text + "'");
    out.canonicalize();
    return out;
}

std::string rat_str(const Rat& value) {
    return value.get_str();
}

} // namespace hecke
