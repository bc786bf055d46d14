#pragma once

#include <vector>

#include "siegelhecke/polynomial.hpp"

namespace hecke {

/// Formal power series over HeckePolynomial coefficients, truncated at a
/// fixed order. Arithmetic never consults indices beyond the order.
class TruncatedSeries {
public:
    TruncatedSeries(std::size_t degree, std::size_t order);

    static TruncatedSeries one(std::size_t degree, std::size_t order);

    std::size_t degree() const { return degree_; }
    std::size_t order() const { return order_; }

    const HeckePolynomial& operator[](std::size_t k) const;
    void set(std::size_t k, HeckePolynomial value);

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    /// Cauchy product truncated at the common order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    bool operator==(const TruncatedSeries& rhs) const = default;

    std::string str() const;

private:
    void require_compatible(const TruncatedSeries& rhs) const;

    std::size_t degree_;
    std::size_t order_;
    std::vector<HeckePolynomial> coeffs_;
};

} // namespace hecke
