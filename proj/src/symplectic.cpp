#include "siegelhecke/symplectic.hpp"

#include <sstream>

#include "siegelhecke/errors.hpp"

namespace hecke {

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, Int(0)) {
    require(dim >= 2 && dim % 2 == 0, "matrix dimension must be even and >= 2");
}

IntMatrix IntMatrix::identity(std::size_t dim) {
    IntMatrix out(dim);
    for (std::size_t i = 0; i < dim; ++i) out.at(i, i) = 1;
    return out;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& entries) {
    IntMatrix out(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) out.at(i, i) = entries[i];
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    require(a.dim_ == b.dim_, "matrix dimension mismatch");
    IntMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
        for (std::size_t k = 0; k < a.dim_; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < a.dim_; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

IntMatrix operator*(const Int& s, IntMatrix m) {
    for (auto& x : m.a_) x *= s;
    return m;
}

std::string IntMatrix::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            if (j) out << ' ';
            out << at(i, j).get_str();
        }
        out << '\n';
    }
    return out.str();
}

IntMatrix IntMatrix::parse(std::istream& in) {
    std::vector<std::vector<Int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Int> row;
        std::string tok;
        while (ls >> tok) {
            Int v;
            if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
                throw usage_error("bad matrix entry: '" + tok + "'");
            row.push_back(std::move(v));
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    require(!rows.empty(), "empty matrix");
    IntMatrix out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == rows.size(), "matrix is not square");
        for (std::size_t j = 0; j < rows.size(); ++j) out.at(i, j) = rows[i][j];
    }
    return out;
}

IntMatrix IntMatrix::parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

IntMatrix standard_j(std::size_t n) {
    require(n >= 1, "n must be >= 1");
    IntMatrix out(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        out.at(i, n + i) = 1;
        out.at(n + i, i) = -1;
    }
    return out;
}

std::optional<Int> similitude(const IntMatrix& m) {
    const std::size_t n = m.dim() / 2;
    IntMatrix lhs = m * standard_j(n) * m.transposed();
    // eta is pinned by the (0, n) entry of J.
    Int eta = lhs.at(0, n);
    if (eta == 0) return std::nullopt;
    if (lhs == eta * standard_j(n)) return eta;
    return std::nullopt;
}

bool in_similitude_set(const IntMatrix& m, const Int& p, unsigned r) {
    const std::size_t n = m.dim() / 2;
    IntMatrix lhs = m.transposed() * standard_j(n) * m;
    return lhs == int_pow(p, r) * standard_j(n);
}

IntMatrix coset_representative(CosetKind kind, std::size_t n, const Int& p, std::size_t j) {
    require(n >= 1, "n must be >= 1");
    std::vector<Int> d;
    d.reserve(2 * n);
    unsigned r = 0;
    if (kind == CosetKind::TP) {
        for (std::size_t i = 0; i < n; ++i) d.push_back(1);
        for (std::size_t i = 0; i < n; ++i) d.push_back(p);
        r = 1;
    } else {
        require(j <= n, "T_j(p^2) index out of range");
        for (std::size_t i = 0; i < n - j; ++i) d.push_back(1);
        for (std::size_t i = 0; i < j; ++i) d.push_back(p);
        for (std::size_t i = 0; i < n - j; ++i) d.push_back(p * p);
        for (std::size_t i = 0; i < j; ++i) d.push_back(p);
        r = 2;
    }
    IntMatrix out = IntMatrix::diagonal(d);
    check_internal(in_similitude_set(out, p, r), "coset representative failed its membership check");
    return out;
}

} // namespace hecke
