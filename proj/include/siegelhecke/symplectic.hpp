#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "siegelhecke/rational.hpp"

namespace hecke {

/// Square integer matrix of even dimension 2n.
class IntMatrix {
public:
    IntMatrix(std::size_t dim);

    static IntMatrix identity(std::size_t dim);
    static IntMatrix diagonal(const std::vector<Int>& entries);

    std::size_t dim() const { return dim_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    IntMatrix transposed() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const Int& s, IntMatrix m);

    bool operator==(const IntMatrix& rhs) const = default;

    /// Rows of whitespace-separated integers, one row per line.
    std::string str() const;
    static IntMatrix parse(std::istream& in);
    static IntMatrix parse(const std::string& text);

private:
    std::size_t dim_;
    std::vector<Int> a_;
};

/// The standard symplectic form [[0, I_n], [-I_n, 0]].
IntMatrix standard_j(std::size_t n);

/// Similitude factor eta with m J m^t = eta J, if one exists (eta != 0).
/// eta == 1 exactly for symplectic matrices.
std::optional<Int> similitude(const IntMatrix& m);

/// Membership in {gamma : gamma^t J gamma = p^r J}.
bool in_similitude_set(const IntMatrix& m, const Int& p, unsigned r);

enum class CosetKind {
    TP, // diag(1,...,1, p,...,p)
    TJ, // diag(1^{n-j}, p^j, (p^2)^{n-j}, p^j)
};

/// Diagonal double-coset representative for T(p) or T_j(p^2); the result is
/// cross-checked against in_similitude_set with r = 1 or 2.
IntMatrix coset_representative(CosetKind kind, std::size_t n, const Int& p, std::size_t j = 0);

} // namespace hecke
