#include "siegelhecke/polynomial.hpp"

#include <sstream>

#include "siegelhecke/errors.hpp"

namespace hecke {

std::string generator_name(std::size_t degree, std::size_t slot) {
    require(slot < generator_count(degree), "generator slot out of range");
    if (slot == 0) return "T(p)";
    return "T_" + std::to_string(slot - 1) + "(p^2)";
}

HeckePolynomial::HeckePolynomial(std::size_t degree) : degree_(degree) {
    require(degree >= 1, "degree context must be >= 1");
}

HeckePolynomial HeckePolynomial::constant(std::size_t degree, const Rat& value) {
    HeckePolynomial out(degree);
    if (value != 0) out.terms_.emplace(Monomial(generator_count(degree), 0), value);
    return out;
}

HeckePolynomial HeckePolynomial::generator(std::size_t degree, std::size_t slot) {
    require(slot < generator_count(degree), "generator slot out of range");
    HeckePolynomial out(degree);
    Monomial m(generator_count(degree), 0);
    m[slot] = 1;
    out.terms_.emplace(std::move(m), Rat(1));
    return out;
}

HeckePolynomial HeckePolynomial::t_j_p2(std::size_t degree, std::size_t j) {
    require(j <= degree, "T_j(p^2) index out of range");
    return generator(degree, tj_slot(j));
}

HeckePolynomial HeckePolynomial::t_p2_alias(std::size_t degree) {
    HeckePolynomial out(degree);
    for (std::size_t j = 0; j <= degree; ++j) out += t_j_p2(degree, j);
    return out;
}

bool HeckePolynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    for (auto e : m)
        if (e != 0) return false;
    return true;
}

Rat HeckePolynomial::constant_term() const {
    return coefficient(Monomial(generator_count(degree_), 0));
}

Rat HeckePolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat HeckePolynomial::generator_coefficient(std::size_t slot) const {
    require(slot < generator_count(degree_), "generator slot out of range");
    Monomial m(generator_count(degree_), 0);
    m[slot] = 1;
    return coefficient(m);
}

bool HeckePolynomial::integer_coefficients() const {
    for (const auto& [m, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

void HeckePolynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void HeckePolynomial::require_same_context(const HeckePolynomial& rhs) const {
    require(degree_ == rhs.degree_, "mismatched degree contexts");
}

HeckePolynomial& HeckePolynomial::operator+=(const HeckePolynomial& rhs) {
    require_same_context(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

HeckePolynomial& HeckePolynomial::operator-=(const HeckePolynomial& rhs) {
    require_same_context(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, Rat(-c));
    return *this;
}

HeckePolynomial& HeckePolynomial::operator*=(const HeckePolynomial& rhs) {
    require_same_context(rhs);
    HeckePolynomial out(degree_);
    const std::size_t width = generator_count(degree_);
    Monomial prod(width);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < width; ++i) prod[i] = ma[i] + mb[i];
            out.add_term(prod, Rat(ca * cb));
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

HeckePolynomial& HeckePolynomial::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

HeckePolynomial HeckePolynomial::operator-() const {
    HeckePolynomial out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

HeckePolynomial HeckePolynomial::pow(unsigned e) const {
    HeckePolynomial out = constant(degree_, Rat(1));
    for (unsigned i = 0; i < e; ++i) out *= *this;
    return out;
}

HeckePolynomial HeckePolynomial::substitute(
    const std::map<std::size_t, HeckePolynomial>& bindings) const {
    const std::size_t width = generator_count(degree_);
    for (const auto& [slot, value] : bindings) {
        require(slot < width, "substitution slot out of range");
        require(value.degree_ == degree_, "mismatched degree contexts in binding");
    }
    HeckePolynomial result(degree_);
    for (const auto& [m, c] : terms_) {
        HeckePolynomial acc = constant(degree_, c);
        Monomial residual(width, 0);
        for (std::size_t slot = 0; slot < width; ++slot) {
            if (m[slot] == 0) continue;
            auto it = bindings.find(slot);
            if (it == bindings.end())
                residual[slot] = m[slot];
            else
                acc *= it->second.pow(m[slot]);
        }
        HeckePolynomial residual_poly(degree_);
        residual_poly.terms_.emplace(residual, Rat(1));
        acc *= residual_poly;
        result += acc;
    }
    return result;
}

HeckePolynomial HeckePolynomial::substitute(const std::map<std::size_t, Rat>& bindings) const {
    std::map<std::size_t, HeckePolynomial> lifted;
    for (const auto& [slot, value] : bindings) lifted.emplace(slot, constant(degree_, value));
    return substitute(lifted);
}

std::string HeckePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    const std::size_t width = generator_count(degree_);
    auto monomial_str = [&](const Monomial& m) {
        std::string s;
        for (std::size_t slot = 0; slot < width; ++slot) {
            if (m[slot] == 0) continue;
            if (!s.empty()) s += "*";
            s += generator_name(degree_, slot);
            if (m[slot] > 1) s += "^" + std::to_string(m[slot]);
        }
        return s;
    };
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mon = monomial_str(m);
        if (first) {
            if (mon.empty())
                out << rat_str(c);
            else if (c == 1)
                out << mon;
            else
                out << rat_str(c) << "*" << mon;
            first = false;
            continue;
        }
        Rat a = c < 0 ? Rat(-c) : c;
        out << (c < 0 ? " - " : " + ");
        if (mon.empty())
            out << rat_str(a);
        else
            out << rat_str(a) << "*" << mon;
    }
    return out.str();
}

} // namespace hecke
