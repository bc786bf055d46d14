#include "siegelhecke/series.hpp"

#include <sstream>

#include "siegelhecke/errors.hpp"

namespace hecke {

TruncatedSeries::TruncatedSeries(std::size_t degree, std::size_t order)
    : degree_(degree), order_(order), coeffs_(order + 1, HeckePolynomial(degree)) {}

TruncatedSeries TruncatedSeries::one(std::size_t degree, std::size_t order) {
    TruncatedSeries out(degree, order);
    out.coeffs_[0] = HeckePolynomial::constant(degree, Rat(1));
    return out;
}

const HeckePolynomial& TruncatedSeries::operator[](std::size_t k) const {
    require(k <= order_, "series index beyond truncation order");
    return coeffs_[k];
}

void TruncatedSeries::set(std::size_t k, HeckePolynomial value) {
    require(k <= order_, "series index beyond truncation order");
    require(value.degree() == degree_, "mismatched degree contexts");
    coeffs_[k] = std::move(value);
}

void TruncatedSeries::require_compatible(const TruncatedSeries& rhs) const {
    require(degree_ == rhs.degree_, "mismatched degree contexts");
    require(order_ == rhs.order_, "mismatched truncation orders");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    require_compatible(rhs);
    for (std::size_t k = 0; k <= order_; ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    require_compatible(rhs);
    for (std::size_t k = 0; k <= order_; ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_compatible(b);
    TruncatedSeries out(a.degree_, a.order_);
    for (std::size_t k = 0; k <= a.order_; ++k) {
        HeckePolynomial acc(a.degree_);
        for (std::size_t i = 0; i <= k; ++i) acc += a.coeffs_[i] * b.coeffs_[k - i];
        out.coeffs_[k] = std::move(acc);
    }
    return out;
}

std::string TruncatedSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k <= order_; ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) out << " + ";
        out << "(" << coeffs_[k].str() << ")";
        if (k >= 1) out << "*z" << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

} // namespace hecke
