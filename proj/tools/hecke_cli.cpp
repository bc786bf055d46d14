// Command line front end: exact Hecke-algebra relations, degree-2 Euler
// recurrences, eigenform distinguishers, and certified prime bounds.
//
// Exit codes: 0 success (including distinguished / consistent /
// hypothesis-not-met verdicts), 1 usage or parse errors, 2 certified
// mathematical inconsistency, 3 internal assertion failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <iostream>
#include <sstream>

#include "siegelhecke/acceptance.hpp"
#include "siegelhecke/errors.hpp"
#include "siegelhecke/euler.hpp"
#include "siegelhecke/fourier.hpp"
#include "siegelhecke/primes.hpp"
#include "siegelhecke/profiles.hpp"

namespace {

using hecke::Int;
using hecke::Rat;
using json = nlohmann::json;

int g_exit = 0;
bool g_json = false;

void emit(const json& payload, const std::string& text) {
    if (g_json)
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << text;
}

Int parse_prime(const std::string& text) {
    Int p;
    if (mpz_set_str(p.get_mpz_t(), text.c_str(), 10) != 0)
        throw hecke::usage_error("bad integer: '" + text + "'");
    hecke::require(hecke::is_prime(p), "'" + text + "' is not prime");
    return p;
}

void check_level(const Int& p, long level) {
    if (level <= 0) return;
    hecke::require(Int(level) % p != 0,
                   "p divides the level N; the separation statements assume p does not divide N");
}

void cmd_relation(std::size_t n, const std::string& p_text, long k) {
    const Int p = parse_prime(p_text);
    if (k == 0) k = static_cast<long>(n) + 1;
    hecke::HeckePolynomial rel = hecke::main_relation(n, p, k);
    std::vector<Int> cs = hecke::relation_coefficients(n, p);
    std::ostringstream text;
    text << hecke::solved_relation_str(n, p) << "\n";
    for (std::size_t s = 1; s <= n; ++s) text << "c_" << s << " = " << cs[s - 1].get_str() << "\n";
    text << "relation polynomial: " << rel.str() << "\n";
    json payload{{"command", "relation"}, {"n", n}, {"p", p.get_str()}, {"k", k},
                 {"relation", hecke::solved_relation_str(n, p)},
                 {"polynomial", rel.str()}};
    json cs_json = json::array();
    for (const Int& c : cs) cs_json.push_back(c.get_str());
    payload["c"] = cs_json;
    emit(payload, text.str());
}

void cmd_euler(const std::string& p_text, std::size_t r_max) {
    const Int p = parse_prime(p_text);
    hecke::HeckePowerTable table = hecke::solve_hecke_powers(p, r_max);
    std::ostringstream text;
    json entries = json::array();
    for (std::size_t r = 0; r <= table.r_max(); ++r) {
        text << "T(p^" << r << ") = " << table[r].str() << "\n";
        entries.push_back({{"r", r}, {"polynomial", table[r].str()}});
    }
    emit(json{{"command", "euler"}, {"p", p.get_str()}, {"entries", entries}}, text.str());
}

void cmd_identities(const std::string& p_text, long l1, long l2) {
    const Int p = parse_prime(p_text);
    const hecke::Weight w({l1, l2});
    std::ostringstream text;
    json residuals = json::array();
    bool all_zero = true;
    const std::array<std::pair<hecke::EulerIdentity, const char*>, 3> kinds{{
        {hecke::EulerIdentity::P3, "p^3"},
        {hecke::EulerIdentity::P4, "p^4"},
        {hecke::EulerIdentity::P6, "p^6"},
    }};
    for (const auto& [which, name] : kinds) {
        hecke::HeckePolynomial residual = hecke::identity_residual(which, w, p);
        const bool zero = residual.is_zero();
        all_zero = all_zero && zero;
        text << name << " identity residual at weight " << w.str() << ": " << residual.str()
             << (zero ? " [ok]" : " [NONZERO]") << "\n";
        residuals.push_back({{"identity", name}, {"residual", residual.str()}, {"zero", zero}});
    }
    const bool odd = hecke::odd_powers_vanish(p, 10);
    all_zero = all_zero && odd;
    text << "odd powers vanish through i = 10 with T(p) -> 0: " << (odd ? "yes" : "NO") << "\n";
    emit(json{{"command", "identities"}, {"p", p.get_str()}, {"weight", {l1, l2}},
              {"residuals", residuals}, {"odd_powers_vanish", odd}, {"all_zero", all_zero}},
         text.str());
    hecke::check_internal(all_zero, "an eigenvalue identity produced a nonzero residual");
}

void emit_verdict(const char* command, const hecke::Verdict& verdict) {
    std::ostringstream text;
    text << verdict.line() << "\n" << "explanation: " << verdict.description << "\n";
    emit(json{{"command", command},
              {"verdict", verdict.line()},
              {"witness", verdict.witness},
              {"description", verdict.description}},
         text.str());
    g_exit = verdict.exit_code();
}

void cmd_distinguish(const std::string& file_f, const std::string& file_g, long level,
                     bool tpr_mode) {
    hecke::ParsedProfile f = hecke::parse_profile_file(file_f);
    hecke::ParsedProfile g = hecke::parse_profile_file(file_g);
    check_level(f.profile.p, level);
    hecke::Verdict verdict = tpr_mode
                                 ? compare_tpr(f.profile, g.profile, f.weight, g.weight)
                                 : compare_profiles(f.profile, g.profile, f.weight, g.weight);
    emit_verdict(tpr_mode ? "distinguish-tpr" : "distinguish", verdict);
}

void cmd_fourier(const std::string& file_f, const std::string& file_g, long level) {
    hecke::CoefficientTable f = hecke::parse_coefficient_table_file(file_f);
    hecke::CoefficientTable g = hecke::parse_coefficient_table_file(file_g);
    check_level(f.p, level);
    emit_verdict("fourier", hecke::distinguish_by_fourier(f, g));
}

void cmd_prime_bounds(const std::string& n_text, std::uint64_t sweep, const std::string& theta_x,
                      const std::string& lemma_x, std::uint64_t limit, unsigned prec) {
    std::ostringstream text;
    json payload{{"command", "prime-bounds"}};
    if (!n_text.empty()) {
        Int n(n_text);
        hecke::require(n >= 1, "N must be >= 1");
        auto p1 = hecke::smallest_prime_not_dividing(n, prec);
        auto p3 = hecke::smallest_prime_3mod4_not_dividing(n, prec);
        hecke::Interval mb = hecke::m_bound(n, prec);
        hecke::Interval db = hecke::det_bound(n, prec);
        text << "N = " << n.get_str() << "\n";
        text << "smallest prime not dividing N: " << p1.prime << "; 2*ln(N)+2 in "
             << p1.bound.str_decimal(6) << (p1.bound_certified ? " [bound certified]" : " [BOUND FAILS]")
             << "\n";
        text << "smallest prime = 3 mod 4 not dividing N: " << p3.prime << "; 3*ln(N)+4 in "
             << p3.bound.str_decimal(6) << (p3.bound_certified ? " [bound certified]" : " [BOUND FAILS]")
             << "\n";
        text << "(2*ln(N)+2)^6 in " << mb.str_decimal(4) << "\n";
        text << "(3*ln(N)+4)^12 in " << db.str_decimal(4) << "\n";
        payload["N"] = n.get_str();
        payload["smallest_prime"] = {{"p", p1.prime}, {"bound", p1.bound.str_decimal(12)},
                                     {"certified", p1.bound_certified}};
        payload["smallest_prime_3mod4"] = {{"p", p3.prime}, {"bound", p3.bound.str_decimal(12)},
                                           {"certified", p3.bound_certified}};
        payload["m_bound"] = mb.str_decimal(6);
        payload["det_bound"] = db.str_decimal(6);
        hecke::check_internal(p1.bound_certified && p3.bound_certified,
                              "a certified prime bound failed");
    }
    if (sweep > 0) {
        auto all = hecke::sweep_prime_bound(sweep, false, prec);
        auto mod4 = hecke::sweep_prime_bound(sweep, true, prec);
        text << "sweep N <= " << sweep << ": p <= 2*ln(N)+2 "
             << (all.holds ? "certified" : "FAILS at N = " + std::to_string(all.first_failure))
             << "; p(3 mod 4) <= 3*ln(N)+4 "
             << (mod4.holds ? "certified" : "FAILS at N = " + std::to_string(mod4.first_failure))
             << "\n";
        payload["sweep"] = {{"n_max", sweep}, {"all_primes", all.holds}, {"mod4", mod4.holds}};
        hecke::check_internal(all.holds && mod4.holds, "a prime bound sweep failed");
    }
    if (!theta_x.empty()) {
        Rat x = hecke::parse_rat(theta_x);
        hecke::require(x >= 0, "theta3 argument must be nonnegative");
        Int needed = x.get_num() / x.get_den() + 2;
        hecke::PrimeSieve sieve(std::max<std::uint64_t>(limit, needed.get_ui()));
        hecke::Interval value = hecke::theta3(x, sieve, prec);
        text << "theta3(" << hecke::rat_str(x) << ") in " << value.str_decimal(10) << "\n";
        payload["theta3"] = {{"x", hecke::rat_str(x)}, {"value", value.str_decimal(15)}};
    }
    if (!lemma_x.empty()) {
        Rat x = hecke::parse_rat(lemma_x);
        hecke::Theta3SweepResult r = hecke::check_theta3_lemma(x, Rat(11, 3), prec);
        text << (r.holds ? "holds: " : "fails: ") << r.detail << "\n";
        payload["theta3_lemma"] = {{"x_max", hecke::rat_str(x)}, {"holds", r.holds},
                                   {"detail", r.detail}};
        if (!r.holds) g_exit = 2;
    }
    emit(payload, text.str());
}

void cmd_verify_all(const std::string& fixtures, const std::string& self) {
    hecke::AcceptanceOptions options;
    options.cli_path = self;
    options.fixtures_dir = fixtures;
    int failed = 0;
    json results = json::array();
    for (const auto& r : hecke::run_all_acceptance(options)) {
        if (!g_json) std::cout << hecke::format_result(r) << "\n";
        results.push_back({{"criterion", r.number}, {"name", r.name}, {"pass", r.pass},
                           {"detail", r.detail}, {"seconds", r.seconds}});
        if (!r.pass) ++failed;
    }
    if (g_json)
        std::cout << json{{"command", "verify-all"}, {"results", results},
                          {"failed", failed}}.dump(2)
                  << "\n";
    else
        std::cout << (failed == 0 ? "all criteria passed"
                                  : std::to_string(failed) + " criteria failed")
                  << "\n";
    if (failed != 0) g_exit = 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hecke-algebra relations and eigenform distinguishers"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "machine-readable output, big integers as decimal strings");

    std::size_t n = 2;
    std::string p_text = "2";
    long k = 0;
    auto* relation = app.add_subcommand("relation", "derive the T(p^2) relation and c_s table");
    relation->add_option("--n", n, "degree")->check(CLI::Range(1, 64));
    relation->add_option("--p", p_text, "prime")->required();
    relation->add_option("--k", k, "scalar weight (default n+1)");
    relation->callback([&] { cmd_relation(n, p_text, k); });

    std::size_t r_max = 12;
    auto* euler = app.add_subcommand("euler", "solve T(p^r) from the generating identity");
    euler->add_option("--p", p_text, "prime")->required();
    euler->add_option("--rmax", r_max, "largest power")->check(CLI::Range(1, 4096));
    euler->callback([&] { cmd_euler(p_text, r_max); });

    long l1 = 0, l2 = 0;
    auto* identities = app.add_subcommand("identities", "check the degree-2 eigenvalue identities");
    identities->add_option("--p", p_text, "prime")->required();
    identities->add_option("--l1", l1, "weight part lambda_1")->required();
    identities->add_option("--l2", l2, "weight part lambda_2")->required();
    identities->callback([&] { cmd_identities(p_text, l1, l2); });

    std::string file_f, file_g;
    long level = 0;
    auto* distinguish = app.add_subcommand("distinguish", "compare eigenvalue profiles");
    distinguish->add_option("fileF", file_f, "profile file for F")->required();
    distinguish->add_option("fileG", file_g, "profile file for G")->required();
    distinguish->add_option("--level", level, "level N; checked coprime to p when given");
    distinguish->callback([&] { cmd_distinguish(file_f, file_g, level, false); });

    auto* distinguish_tpr =
        app.add_subcommand("distinguish-tpr", "compare degree-2 T(p^r) eigenvalues");
    distinguish_tpr->add_option("fileF", file_f, "profile file for F")->required();
    distinguish_tpr->add_option("fileG", file_g, "profile file for G")->required();
    distinguish_tpr->add_option("--level", level, "level N; checked coprime to p when given");
    distinguish_tpr->callback([&] { cmd_distinguish(file_f, file_g, level, true); });

    auto* fourier = app.add_subcommand("fourier", "compare Fourier coefficient tables");
    fourier->add_option("fileF", file_f, "table file for F")->required();
    fourier->add_option("fileG", file_g, "table file for G")->required();
    fourier->add_option("--level", level, "level N; checked coprime to p when given");
    fourier->callback([&] { cmd_fourier(file_f, file_g, level); });

    std::string n_text, theta_x, lemma_x;
    std::uint64_t sweep = 0, limit = 100000;
    unsigned prec = hecke::kDefaultPrecisionBits;
    auto* bounds = app.add_subcommand("prime-bounds", "certified prime bounds and sweeps");
    bounds->add_option("--N", n_text, "single level to bound");
    bounds->add_option("--sweep", sweep, "verify both bounds for all N up to this limit");
    bounds->add_option("--theta3", theta_x, "evaluate theta3 at this point");
    bounds->add_option("--theta3-lemma", lemma_x, "sweep theta3(3x) > x on [11/3, x]");
    bounds->add_option("--limit", limit, "sieve size");
    bounds->add_option("--precision-bits", prec, "interval working precision")
        ->check(CLI::Range(8u, 16384u));
    bounds->callback([&] { cmd_prime_bounds(n_text, sweep, theta_x, lemma_x, limit, prec); });

    std::string fixtures = "tests/fixtures";
    auto* verify = app.add_subcommand("verify-all", "run the full verification suite");
    verify->add_option("--fixtures", fixtures, "fixture directory");
    verify->callback([&] { cmd_verify_all(fixtures, argv[0]); });

    try {
        app.parse(argc, argv);
        return g_exit;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const hecke::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const hecke::data_error& e) {
        std::cerr << "inconsistent data: " << e.what() << "\n";
        return 2;
    } catch (const hecke::usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
