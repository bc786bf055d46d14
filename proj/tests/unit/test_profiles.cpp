#include <doctest.h>

#include <random>
#include <sstream>

#include "siegelhecke/errors.hpp"
#include "siegelhecke/profiles.hpp"

using hecke::EigenvalueProfile;
using hecke::Int;
using hecke::OperatorKey;
using hecke::Rat;
using hecke::Verdict;
using hecke::Weight;

TEST_CASE("operator keys") {
    CHECK(OperatorKey::parse("Tp") == OperatorKey::tp());
    CHECK(OperatorKey::parse("Tpr:1") == OperatorKey::tp());
    CHECK(OperatorKey::parse("Tpr:2") == OperatorKey::tp2());
    CHECK(OperatorKey::parse("Tjp2:2").name() == "T_2(p^2)");
    CHECK(OperatorKey::tpr(6).token() == "Tpr:6");
    CHECK_THROWS_AS(OperatorKey::parse("bogus"), hecke::usage_error);
    CHECK_THROWS_AS(OperatorKey::parse("Tpr:x"), hecke::usage_error);
}

TEST_CASE("profile file parsing") {
    std::istringstream in(
        "# a degree-2 profile\n"
        "degree 2\n"
        "prime 3\n"
        "weight 10 8\n"
        "op Tp 5\n"
        "op Tp2 -7/2\n"
        "op Tjp2:1 4\n"
        "op Tpr:3 99\n");
    auto parsed = hecke::parse_profile(in);
    CHECK(parsed.profile.degree == 2);
    CHECK(parsed.profile.p == 3);
    CHECK(parsed.weight == Weight({10, 8}));
    CHECK(parsed.profile.value(OperatorKey::tp()) == 5);
    CHECK(parsed.profile.value(OperatorKey::tp2()) == hecke::make_rat(Int(-7), Int(2)));
    CHECK(parsed.profile.value(OperatorKey::tpr(3)) == 99);

    // Render and reparse.
    std::istringstream again(hecke::render_profile(parsed.profile, parsed.weight));
    auto reparsed = hecke::parse_profile(again);
    CHECK(reparsed.profile.values == parsed.profile.values);
    CHECK(reparsed.weight == parsed.weight);

    std::istringstream bad("degree 2\nprime 4\nweight 3 3\n");
    CHECK_THROWS_AS(hecke::parse_profile(bad), hecke::usage_error);
    std::istringstream short_weight("degree 2\nprime 3\nweight 3\n");
    CHECK_THROWS_AS(hecke::parse_profile(short_weight), hecke::usage_error);
}

TEST_CASE("implied T_n eigenvalue") {
    SUBCASE("n = 1 closed form (t^2 - u)/p") {
        EigenvalueProfile pr{Int(5), 1, {}};
        pr.values[OperatorKey::tp()] = Rat(7);
        pr.values[OperatorKey::tp2()] = Rat(4);
        CHECK(hecke::implied_tn_eigenvalue(pr) == hecke::make_rat(Int(45), Int(5)));
    }
    SUBCASE("round trip through a forward-built profile") {
        const Weight w({9, 7, 4});
        auto pr = hecke::forward_profile(w, 3, Rat(11), {Rat(2), hecke::make_rat(Int(1), Int(3))});
        CHECK(hecke::implied_tn_eigenvalue(pr) == hecke::tn_eigenvalue(w, 3));
    }
    SUBCASE("missing entries are reported") {
        EigenvalueProfile pr{Int(3), 3, {}};
        pr.values[OperatorKey::tp()] = Rat(1);
        pr.values[OperatorKey::tp2()] = Rat(1);
        pr.values[OperatorKey::tj(2)] = Rat(1);
        CHECK_THROWS_AS(hecke::implied_tn_eigenvalue(pr), hecke::usage_error);
    }
}

TEST_CASE("profile comparison") {
    const Int p = 3;
    SUBCASE("equal weight sums, identical profiles: consistent") {
        const Weight wf({10, 10}), wg({12, 8});
        auto f = hecke::forward_profile(wf, p, Rat(5), {Rat(2)});
        auto g = hecke::forward_profile(wg, p, Rat(5), {Rat(2)});
        // same weight sum forces the same T(p^2) value here
        Verdict v = hecke::compare_profiles(f, g, wf, wg);
        CHECK(v.outcome == Verdict::Outcome::ProfilesEqualConsistent);
        CHECK(v.exit_code() == 0);
    }
    SUBCASE("distinct weight sums, forward-built: distinguished") {
        const Weight wf({10, 10}), wg({12, 10});
        auto f = hecke::forward_profile(wf, p, Rat(5), {Rat(2)});
        auto g = hecke::forward_profile(wg, p, Rat(5), {Rat(2)});
        Verdict v = hecke::compare_profiles(f, g, wf, wg);
        CHECK(v.outcome == Verdict::Outcome::Distinguished);
        CHECK(v.witness == "T(p^2)");
    }
    SUBCASE("byte-identical profiles, distinct sums: inconsistent") {
        const Weight wf({10, 10}), wg({12, 10});
        auto f = hecke::forward_profile(wf, p, Rat(5), {Rat(2)});
        Verdict v = hecke::compare_profiles(f, f, wf, wg);
        CHECK(v.outcome == Verdict::Outcome::Inconsistent);
        CHECK(v.exit_code() == 2);
    }
    SUBCASE("deterministic witness: first operator in canonical order") {
        const Weight wf({10, 10}), wg({12, 8});
        auto f = hecke::forward_profile(wf, p, Rat(5), {Rat(2)});
        auto g = hecke::forward_profile(wg, p, Rat(6), {Rat(3)});
        Verdict v = hecke::compare_profiles(f, g, wf, wg);
        CHECK(v.outcome == Verdict::Outcome::Distinguished);
        CHECK(v.witness == "T(p)");
    }
    SUBCASE("mismatched primes are a usage error") {
        const Weight w({10, 10});
        auto f = hecke::forward_profile(w, 3, Rat(5), {Rat(2)});
        auto g = hecke::forward_profile(w, 5, Rat(5), {Rat(2)});
        CHECK_THROWS_AS(hecke::compare_profiles(f, g, w, w), hecke::usage_error);
    }
}

TEST_CASE("T(p^r) comparison") {
    const Int p = 3;
    SUBCASE("case ii forced values differ across weight sums") {
        const Weight wf({10, 10}), wg({11, 10});
        auto f = hecke::forward_tpr_profile(wf, p, Rat(0), hecke::rat_pow(3, 18));
        auto g = hecke::forward_tpr_profile(wg, p, Rat(0), hecke::rat_pow(3, 19));
        // a(p^2) = p^{l1+l2-2} as the proof forces
        CHECK(f.value(OperatorKey::tp2()) == hecke::rat_pow(3, 18));
        Verdict v = hecke::compare_tpr(f, g, wf, wg);
        CHECK(v.outcome == Verdict::Outcome::Distinguished);
        CHECK(v.witness == "T(p^2)");
    }
    SUBCASE("identity violation is inconsistent") {
        const Weight w({10, 10});
        auto f = hecke::forward_tpr_profile(w, p, Rat(5), Rat(7));
        auto g = f;
        g.values[OperatorKey::tpr(3)] += 1;
        Verdict v = hecke::compare_tpr(f, g, w, w);
        CHECK(v.outcome == Verdict::Outcome::Inconsistent);
    }
    SUBCASE("reflexivity") {
        const Weight w({10, 10});
        auto f = hecke::forward_tpr_profile(w, p, Rat(5), Rat(7));
        Verdict v = hecke::compare_tpr(f, f, w, w);
        CHECK(v.outcome == Verdict::Outcome::ProfilesEqualConsistent);
    }
    SUBCASE("equal tuples with distinct sums are inconsistent") {
        const Weight wf({10, 10}), wg({12, 10});
        auto f = hecke::forward_tpr_profile(wf, p, Rat(0), Rat(7));
        EigenvalueProfile g = f; // same numbers, claimed for a different weight
        // g now violates its own p^4 identity
        Verdict v = hecke::compare_tpr(f, g, wf, wg);
        CHECK(v.outcome == Verdict::Outcome::Inconsistent);
    }
    SUBCASE("degree must be 2") {
        EigenvalueProfile f{Int(3), 3, {}};
        CHECK_THROWS_AS(hecke::compare_tpr(f, f, Weight({3, 2, 1}), Weight({4, 2, 1})),
                        hecke::usage_error);
    }
}

TEST_CASE("weight sum recovery") {
    const Int p = 2;
    SUBCASE("round trip") {
        const Weight w({10, 10});
        auto f = hecke::forward_tpr_profile(w, p, Rat(9), hecke::make_rat(Int(5), Int(2)));
        CHECK(hecke::recover_weight_sum_case_i(f) == 20);
    }
    SUBCASE("a(p) = 0 is rejected") {
        const Weight w({10, 10});
        auto f = hecke::forward_tpr_profile(w, p, Rat(0), Rat(5));
        CHECK_THROWS_AS(hecke::recover_weight_sum_case_i(f), hecke::usage_error);
    }
    SUBCASE("perturbed a(p^3) is not a power of p") {
        const Weight w({10, 10});
        auto f = hecke::forward_tpr_profile(w, p, Rat(9), Rat(5));
        f.values[OperatorKey::tpr(3)] += 1;
        CHECK_THROWS_AS(hecke::recover_weight_sum_case_i(f), hecke::data_error);
    }
}

TEST_CASE("randomized round trips") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> small(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::uniform_int_distribution<long> top(5, 15);
    for (int iter = 0; iter < 200; ++iter) {
        const Int p = iter % 2 ? 2 : 5;
        const long l1 = top(rng);
        const long l2 = l1 - (iter % 4);
        const Weight w({l1, l2});
        Rat a1 = hecke::make_rat(Int(small(rng)), Int(den(rng)));
        if (a1 == 0) a1 = 1;
        const Rat a2 = hecke::make_rat(Int(small(rng)), Int(den(rng)));
        auto f = hecke::forward_tpr_profile(w, p, a1, a2);
        CHECK(hecke::recover_weight_sum_case_i(f) == w.sum());
        CHECK(hecke::compare_tpr(f, f, w, w).outcome ==
              Verdict::Outcome::ProfilesEqualConsistent);
    }
}
