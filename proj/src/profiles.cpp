#include "siegelhecke/profiles.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "siegelhecke/errors.hpp"

namespace hecke {

OperatorKey OperatorKey::tj(unsigned j) {
    return {Kind::TJP2, j};
}

OperatorKey OperatorKey::tpr(unsigned r) {
    require(r >= 1, "T(p^r) needs r >= 1");
    if (r == 1) return tp();
    if (r == 2) return tp2();
    return {Kind::TPR, r};
}

OperatorKey OperatorKey::parse(const std::string& token) {
    if (token == "Tp") return tp();
    if (token == "Tp2") return tp2();
    auto colon = token.find(':');
    if (colon != std::string::npos) {
        const std::string head = token.substr(0, colon);
        const std::string tail = token.substr(colon + 1);
        try {
            unsigned long v = std::stoul(tail);
            if (head == "Tjp2") return tj(static_cast<unsigned>(v));
            if (head == "Tpr") return tpr(static_cast<unsigned>(v));
        } catch (const std::exception&) {
            // fall through to the usage error below
        }
    }
    throw usage_error("unknown operator token: '" + token + "'");
}

std::string OperatorKey::token() const {
    switch (kind) {
        case Kind::TP: return "Tp";
        case Kind::TP2: return "Tp2";
        case Kind::TJP2: return "Tjp2:" + std::to_string(index);
        case Kind::TPR: return "Tpr:" + std::to_string(index);
    }
    return {};
}

std::string OperatorKey::name() const {
    switch (kind) {
        case Kind::TP: return "T(p)";
        case Kind::TP2: return "T(p^2)";
        case Kind::TJP2: return "T_" + std::to_string(index) + "(p^2)";
        case Kind::TPR: return "T(p^" + std::to_string(index) + ")";
    }
    return {};
}

const Rat& EigenvalueProfile::value(const OperatorKey& key) const {
    auto it = values.find(key);
    if (it == values.end()) throw usage_error("profile is missing entry " + key.name());
    return it->second;
}

ParsedProfile parse_profile(std::istream& in) {
    std::optional<std::size_t> degree;
    std::optional<Int> prime;
    std::optional<Weight> weight;
    std::map<OperatorKey, Rat> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw) || kw[0] == '#') continue;
        auto fail = [&](const std::string& msg) -> usage_error {
            return usage_error("profile line " + std::to_string(lineno) + ": " + msg);
        };
        if (kw == "degree") {
            std::size_t n;
            if (!(ls >> n) || n < 1) throw fail("bad degree");
            degree = n;
        } else if (kw == "prime") {
            std::string tok;
            if (!(ls >> tok)) throw fail("missing prime");
            Int p(tok);
            if (!is_prime(p)) throw fail("'" + tok + "' is not prime");
            prime = p;
        } else if (kw == "weight") {
            std::vector<long> parts;
            long v;
            while (ls >> v) parts.push_back(v);
            if (parts.empty()) throw fail("empty weight");
            try {
                weight = Weight(parts);
            } catch (const error& e) {
                throw fail(e.what());
            }
        } else if (kw == "op") {
            std::string tok, val;
            if (!(ls >> tok >> val)) throw fail("op needs a name and a value");
            try {
                values[OperatorKey::parse(tok)] = parse_rat(val);
            } catch (const error& e) {
                throw fail(e.what());
            }
        } else {
            throw fail("unknown keyword '" + kw + "'");
        }
    }
    require(degree.has_value(), "profile is missing a degree line");
    require(prime.has_value(), "profile is missing a prime line");
    require(weight.has_value(), "profile is missing a weight line");
    require(weight->degree() == *degree, "weight length does not match the degree");
    for (const auto& [key, v] : values)
        if (key.kind == OperatorKey::Kind::TJP2)
            require(key.index <= *degree, "operator " + key.name() + " out of range for degree");
    return ParsedProfile{EigenvalueProfile{*prime, *degree, std::move(values)}, *weight};
}

ParsedProfile parse_profile_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open profile file: " + path);
    return parse_profile(in);
}

std::string render_profile(const EigenvalueProfile& profile, const Weight& weight) {
    std::ostringstream out;
    out << "degree " << profile.degree << "\n";
    out << "prime " << profile.p.get_str() << "\n";
    out << "weight";
    for (long v : weight.parts) out << ' ' << v;
    out << "\n";
    for (const auto& [key, value] : profile.values)
        out << "op " << key.token() << ' ' << rat_str(value) << "\n";
    return out.str();
}

Verdict Verdict::distinguished(std::string witness, std::string description) {
    return {Outcome::Distinguished, std::move(witness), std::move(description)};
}
Verdict Verdict::equal_consistent(std::string description) {
    return {Outcome::ProfilesEqualConsistent, {}, std::move(description)};
}
Verdict Verdict::inconsistent(std::string description) {
    return {Outcome::Inconsistent, {}, std::move(description)};
}
Verdict Verdict::hypothesis_not_met(std::string description) {
    return {Outcome::HypothesisNotMet, {}, std::move(description)};
}

std::string Verdict::line() const {
    switch (outcome) {
        case Outcome::Distinguished: return "verdict=distinguished witness=" + witness;
        case Outcome::ProfilesEqualConsistent: return "verdict=equal-consistent";
        case Outcome::Inconsistent: return "verdict=inconsistent";
        case Outcome::HypothesisNotMet: return "verdict=hypothesis-not-met";
    }
    return {};
}

int Verdict::exit_code() const {
    return outcome == Outcome::Inconsistent ? 2 : 0;
}

Rat implied_tn_eigenvalue(const EigenvalueProfile& profile) {
    const std::size_t n = profile.degree;
    require(n >= 1, "profile degree must be >= 1");
    Rat acc = Rat(profile.value(OperatorKey::tp())) * profile.value(OperatorKey::tp());
    acc -= profile.value(OperatorKey::tp2());
    for (std::size_t s = 1; s + 1 <= n; ++s)
        acc -= Rat(relation_coefficient(s, profile.p)) * profile.value(OperatorKey::tj(s));
    return Rat(acc / Rat(relation_coefficient(n, profile.p)));
}

namespace {

void require_comparable(const EigenvalueProfile& f, const EigenvalueProfile& g, const Weight& wf,
                        const Weight& wg) {
    require(f.p == g.p, "profiles disagree on the prime");
    require(f.degree == g.degree, "profiles disagree on the degree");
    require(wf.degree() == f.degree && wg.degree() == g.degree,
            "weight length does not match the profile degree");
}

} // namespace

Verdict compare_profiles(const EigenvalueProfile& f, const EigenvalueProfile& g, const Weight& wf,
                         const Weight& wg) {
    require_comparable(f, g, wf, wg);
    const std::size_t n = f.degree;

    std::vector<OperatorKey> listed{OperatorKey::tp(), OperatorKey::tp2()};
    for (std::size_t s = 1; s + 1 <= n; ++s) listed.push_back(OperatorKey::tj(s));
    for (const auto& key : listed) {
        const Rat& vf = f.value(key);
        const Rat& vg = g.value(key);
        if (vf != vg)
            return Verdict::distinguished(
                key.name(), "eigenvalues differ at " + key.name() + ": " + rat_str(vf) + " vs " +
                                rat_str(vg));
    }

    const Rat implied_f = implied_tn_eigenvalue(f);
    const Rat implied_g = implied_tn_eigenvalue(g);
    check_internal(implied_f == implied_g, "equal profiles implied different T_n eigenvalues");
    const Rat scalar_f = tn_eigenvalue(wf, f.p);
    const Rat scalar_g = tn_eigenvalue(wg, g.p);
    if (implied_f != scalar_f || implied_g != scalar_g)
        return Verdict::inconsistent(
            "equal profiles imply a(T_n(p^2)) = " + rat_str(implied_f) +
            ", but the T_n(p^2) scalar action forces " + rat_str(scalar_f) + " for weight " +
            wf.str() + " and " + rat_str(scalar_g) + " for weight " + wg.str() +
            "; equal profiles require equal weight sums");
    return Verdict::equal_consistent("profiles equal; weight sums agree (" +
                                     std::to_string(wf.sum()) + ")");
}

namespace {

// a(p^3) - 2 a(p) a(p^2) + a(p)^3 - p^{sum-4}(p+1) a(p)
Rat p3_identity_lhs(const EigenvalueProfile& pr, const Weight& w) {
    const Rat a1 = pr.value(OperatorKey::tpr(1));
    const Rat a2 = pr.value(OperatorKey::tpr(2));
    const Rat a3 = pr.value(OperatorKey::tpr(3));
    return Rat(a3 - 2 * a1 * a2 + a1 * a1 * a1 -
               rat_pow(pr.p, w.sum() - 4) * (Rat(pr.p) + 1) * a1);
}

// a(p^4) - a(p^2)^2 - p^{sum-4} a(p^2) + p^{2sum-6}
Rat p4_identity_lhs(const EigenvalueProfile& pr, const Weight& w) {
    const Rat a2 = pr.value(OperatorKey::tpr(2));
    const Rat a4 = pr.value(OperatorKey::tpr(4));
    return Rat(a4 - a2 * a2 - rat_pow(pr.p, w.sum() - 4) * a2 + rat_pow(pr.p, 2 * w.sum() - 6));
}

// a(p^6) - a(p^4) a(p^2) - p^{sum-4} a(p^4) + p^{2sum-6} a(p^2)
Rat p6_identity_lhs(const EigenvalueProfile& pr, const Weight& w) {
    const Rat a2 = pr.value(OperatorKey::tpr(2));
    const Rat a4 = pr.value(OperatorKey::tpr(4));
    const Rat a6 = pr.value(OperatorKey::tpr(6));
    return Rat(a6 - a4 * a2 - rat_pow(pr.p, w.sum() - 4) * a4 + rat_pow(pr.p, 2 * w.sum() - 6) * a2);
}

std::optional<Verdict> validate_tpr_profile(const EigenvalueProfile& pr, const Weight& w,
                                            const std::string& label, bool case_two) {
    if (!case_two) {
        if (Rat lhs = p3_identity_lhs(pr, w); lhs != 0)
            return Verdict::inconsistent("profile " + label +
                                         " violates the p^3 eigenvalue identity for weight " +
                                         w.str() + " (residual " + rat_str(lhs) + ")");
        return std::nullopt;
    }
    if (Rat lhs = p4_identity_lhs(pr, w); lhs != 0)
        return Verdict::inconsistent("profile " + label +
                                     " violates the p^4 eigenvalue identity for weight " +
                                     w.str() + " (residual " + rat_str(lhs) + ")");
    if (Rat lhs = p6_identity_lhs(pr, w); lhs != 0)
        return Verdict::inconsistent("profile " + label +
                                     " violates the p^6 eigenvalue identity for weight " +
                                     w.str() + " (residual " + rat_str(lhs) + ")");
    return std::nullopt;
}

} // namespace

Verdict compare_tpr(const EigenvalueProfile& f, const EigenvalueProfile& g, const Weight& wf,
                    const Weight& wg) {
    require_comparable(f, g, wf, wg);
    require(f.degree == 2, "T(p^r) comparison requires degree 2");

    const Rat af = f.value(OperatorKey::tpr(1));
    const Rat ag = g.value(OperatorKey::tpr(1));
    const bool case_two = af == 0 && ag == 0;

    if (auto bad = validate_tpr_profile(f, wf, "F", case_two)) return *bad;
    if (auto bad = validate_tpr_profile(g, wg, "G", case_two)) return *bad;

    const std::vector<unsigned> rs = case_two ? std::vector<unsigned>{2, 4, 6}
                                              : std::vector<unsigned>{1, 2, 3};
    for (unsigned r : rs) {
        const Rat& vf = f.value(OperatorKey::tpr(r));
        const Rat& vg = g.value(OperatorKey::tpr(r));
        if (vf != vg)
            return Verdict::distinguished(OperatorKey::tpr(r).name(),
                                          "eigenvalues differ at T(p^" + std::to_string(r) +
                                              "): " + rat_str(vf) + " vs " + rat_str(vg));
    }
    if (wf.sum() != wg.sum()) {
        std::string tuple = case_two ? "(a(p^2), a(p^4), a(p^6))" : "(a(p), a(p^2), a(p^3))";
        return Verdict::inconsistent(
            "equal " + tuple + " with distinct weight sums " + std::to_string(wf.sum()) + " and " +
            std::to_string(wg.sum()) +
            (case_two ? "; the p^4 identity forces a(p^2) = p^{l1+l2-2}, which differs"
                      : "; the p^3 identity forces (p+1)a(p)(p^{l1+l2-4} - p^{m1+m2-4}) = 0"));
    }
    return Verdict::equal_consistent("eigenvalue tuples equal; weight sums agree (" +
                                     std::to_string(wf.sum()) + ")");
}

long recover_weight_sum_case_i(const EigenvalueProfile& profile) {
    require(profile.degree == 2, "weight-sum recovery requires degree 2");
    const Rat a1 = profile.value(OperatorKey::tpr(1));
    require(a1 != 0, "weight-sum recovery requires a(p) != 0");
    const Rat a2 = profile.value(OperatorKey::tpr(2));
    const Rat a3 = profile.value(OperatorKey::tpr(3));
    const Rat numerator = Rat(a3 - 2 * a1 * a2 + a1 * a1 * a1);
    const Rat quotient = Rat(numerator / ((Rat(profile.p) + 1) * a1));
    auto e = exact_power_exponent(quotient, profile.p);
    if (!e)
        throw data_error("quotient " + rat_str(quotient) + " is not an exact power of " +
                         profile.p.get_str() + "; data is inconsistent with every weight");
    return *e + 4;
}

EigenvalueProfile forward_profile(const Weight& w, const Int& p, const Rat& a_tp,
                                  const std::vector<Rat>& a_tj) {
    const std::size_t n = w.degree();
    require(a_tj.size() + 1 == n, "need a(T_s(p^2)) for s = 1..n-1");
    EigenvalueProfile out{p, n, {}};
    out.values[OperatorKey::tp()] = a_tp;
    Rat tp2 = Rat(a_tp * a_tp);
    for (std::size_t s = 1; s + 1 <= n; ++s) {
        out.values[OperatorKey::tj(s)] = a_tj[s - 1];
        tp2 -= Rat(relation_coefficient(s, p)) * a_tj[s - 1];
    }
    tp2 -= Rat(relation_coefficient(n, p)) * tn_eigenvalue(w, p);
    out.values[OperatorKey::tp2()] = tp2;
    return out;
}

std::vector<Rat> eigenvalue_power_table(const Weight& w, const Int& p, const Rat& a1,
                                        const Rat& a2, std::size_t r_max) {
    require(w.degree() == 2, "eigenvalue power table requires degree 2");
    require(r_max >= 2, "r_max must be >= 2");
    const Rat t2 = tn_eigenvalue(w, p); // p^{l1+l2-6}
    const Rat e1 = Rat(-a1);
    const Rat e2 = Rat(a1 * a1 - a2 - rat_pow(p, 2) * t2);
    const Rat e3 = Rat(-rat_pow(p, 3) * a1 * t2);
    const Rat e4 = Rat(rat_pow(p, 6) * t2 * t2);
    const std::array<Rat, 5> e{Rat(1), e1, e2, e3, e4};
    std::vector<Rat> a(r_max + 1, Rat(0));
    a[0] = 1;
    a[1] = a1;
    a[2] = a2;
    for (std::size_t m = 3; m <= r_max; ++m) {
        Rat v(0);
        for (std::size_t j = 1; j <= 4 && j <= m; ++j) v -= e[j] * a[m - j];
        a[m] = Rat(v);
    }
    return a;
}

EigenvalueProfile forward_tpr_profile(const Weight& w, const Int& p, const Rat& a1, const Rat& a2,
                                      const std::vector<unsigned>& rs) {
    unsigned r_max = 2;
    for (unsigned r : rs) r_max = std::max(r_max, r);
    std::vector<Rat> a = eigenvalue_power_table(w, p, a1, a2, r_max);
    EigenvalueProfile out{p, 2, {}};
    for (unsigned r : rs) out.values[OperatorKey::tpr(r)] = a[r];
    return out;
}

} // namespace hecke
