#include <doctest.h>

#include <random>

#include "siegelhecke/errors.hpp"
#include "siegelhecke/symplectic.hpp"

using hecke::CosetKind;
using hecke::Int;
using hecke::IntMatrix;

TEST_CASE("standard form matrix") {
    CHECK(hecke::standard_j(1).str() == "0 1\n-1 0\n");
    IntMatrix j2 = hecke::standard_j(2);
    CHECK(j2.at(0, 2) == 1);
    CHECK(j2.at(1, 3) == 1);
    CHECK(j2.at(2, 0) == -1);
    CHECK(j2.at(3, 1) == -1);
    CHECK(j2.at(0, 1) == 0);
    // J J^t = I.
    CHECK(j2 * j2.transposed() == IntMatrix::identity(4));
}

TEST_CASE("similitude factors") {
    CHECK(hecke::similitude(IntMatrix::identity(4)) == Int(1));

    // diag(1,...,1, p,...,p) scales the form by p.
    IntMatrix rep = hecke::coset_representative(CosetKind::TP, 3, 5);
    CHECK(hecke::similitude(rep) == Int(5));

    // Not a similitude: gamma J gamma^t is not proportional to J.
    IntMatrix bad = IntMatrix::diagonal({Int(1), Int(1), Int(1), Int(2)});
    CHECK(!hecke::similitude(bad).has_value());
    // Oracle: gamma J gamma^t differs from eta J in some entry for every eta.
    IntMatrix lhs = bad * hecke::standard_j(2) * bad.transposed();
    Int eta = lhs.at(0, 2);
    CHECK(lhs != eta * hecke::standard_j(2));

    // Singular matrices are never similitudes (eta must be nonzero).
    IntMatrix zero(2);
    CHECK(!hecke::similitude(zero).has_value());
}

TEST_CASE("similitude set membership") {
    CHECK(hecke::in_similitude_set(hecke::coset_representative(CosetKind::TP, 2, 3), 3, 1));
    CHECK(hecke::in_similitude_set(hecke::coset_representative(CosetKind::TJ, 2, 3, 1), 3, 2));
    CHECK(!hecke::in_similitude_set(IntMatrix::identity(4), 3, 1));
}

TEST_CASE("coset representatives") {
    CHECK(hecke::coset_representative(CosetKind::TP, 2, 3) ==
          IntMatrix::diagonal({Int(1), Int(1), Int(3), Int(3)}));
    CHECK(hecke::coset_representative(CosetKind::TJ, 2, 3, 2) == Int(3) * IntMatrix::identity(4));
    CHECK(hecke::coset_representative(CosetKind::TJ, 2, 3, 0) ==
          IntMatrix::diagonal({Int(1), Int(1), Int(9), Int(9)}));
    CHECK_THROWS_AS(hecke::coset_representative(CosetKind::TJ, 2, 3, 5), hecke::usage_error);

    for (std::size_t n = 1; n <= 5; ++n)
        for (long p : {2, 3, 5, 7}) {
            CHECK(hecke::in_similitude_set(hecke::coset_representative(CosetKind::TP, n, p), p, 1));
            for (std::size_t j = 0; j <= n; ++j)
                CHECK(hecke::in_similitude_set(
                    hecke::coset_representative(CosetKind::TJ, n, p, j), p, 2));
        }
}

namespace {

// Random similitudes: products of coset representatives and symplectic
// generators (form matrix, unit upper-triangular translations).
IntMatrix random_similitude(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<long> entry(-2, 2);
    IntMatrix acc = IntMatrix::identity(2 * n);
    for (int step = 0; step < 4; ++step) {
        switch (kind(rng)) {
            case 0: acc = acc * hecke::standard_j(n); break;
            case 1: {
                IntMatrix t = IntMatrix::identity(2 * n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i; j < n; ++j) {
                        Int b = entry(rng);
                        t.at(i, n + j) = b;
                        t.at(j, n + i) = b;
                    }
                acc = acc * t;
                break;
            }
            case 2: acc = acc * hecke::coset_representative(CosetKind::TP, n, 2); break;
            case 3: acc = acc * hecke::coset_representative(CosetKind::TJ, n, 3, n >= 1 ? 1 : 0); break;
        }
    }
    return acc;
}

} // namespace

TEST_CASE("similitude factor is multiplicative") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = 1 + iter % 3;
        IntMatrix a = random_similitude(rng, n);
        IntMatrix b = random_similitude(rng, n);
        auto ea = hecke::similitude(a);
        auto eb = hecke::similitude(b);
        REQUIRE(ea.has_value());
        REQUIRE(eb.has_value());
        CHECK(hecke::similitude(a * b) == Int(*ea * *eb));
        // symplectic iff eta == 1 (direct check of the defining equation)
        const bool symplectic =
            a * hecke::standard_j(n) * a.transposed() == hecke::standard_j(n);
        CHECK(symplectic == (*ea == 1));
    }
}

TEST_CASE("matrix parse and render round trip") {
    IntMatrix m = hecke::coset_representative(CosetKind::TJ, 2, 7, 1);
    CHECK(IntMatrix::parse(m.str()) == m);
    CHECK_THROWS_AS(IntMatrix::parse("1 2\n3"), hecke::usage_error);
    CHECK_THROWS_AS(IntMatrix::parse("1 x\n3 4"), hecke::usage_error);
}
