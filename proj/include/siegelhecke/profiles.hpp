#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "siegelhecke/relations.hpp"

namespace hecke {

/// Canonical key for an eigenvalue entry. T(p^1) and T(p^2) normalize to TP
/// and TP2 so that the same operator never appears under two names.
struct OperatorKey {
    enum class Kind { TP, TP2, TJP2, TPR };
    Kind kind = Kind::TP;
    unsigned index = 0; // j for TJP2, r for TPR

    static OperatorKey tp() { return {Kind::TP, 0}; }
    static OperatorKey tp2() { return {Kind::TP2, 0}; }
    static OperatorKey tj(unsigned j);
    static OperatorKey tpr(unsigned r);

    /// Token form used in profile files: Tp, Tp2, Tjp2:j, Tpr:r.
    static OperatorKey parse(const std::string& token);
    std::string token() const;
    /// Display name: T(p), T(p^2), T_j(p^2), T(p^r).
    std::string name() const;

    auto operator<=>(const OperatorKey&) const = default;
};

/// Exact rational eigenvalue assignments for a named set of operators at a
/// prime p in degree n.
struct EigenvalueProfile {
    Int p;
    std::size_t degree = 0;
    std::map<OperatorKey, Rat> values;

    const Rat& value(const OperatorKey& key) const; // throws usage_error if absent
    bool has(const OperatorKey& key) const { return values.count(key) != 0; }
};

struct ParsedProfile {
    EigenvalueProfile profile;
    Weight weight;
};

/// Line-oriented profile format:
///   degree n
///   prime p
///   weight l1 l2 ... ln
///   op <token> <rational>
/// Blank lines and lines starting with '#' are skipped.
ParsedProfile parse_profile(std::istream& in);
ParsedProfile parse_profile_file(const std::string& path);
std::string render_profile(const EigenvalueProfile& profile, const Weight& weight);

struct Verdict {
    enum class Outcome { Distinguished, ProfilesEqualConsistent, Inconsistent, HypothesisNotMet };
    Outcome outcome;
    std::string witness;     // first differing operator, canonical order
    std::string description; // human-readable explanation

    static Verdict distinguished(std::string witness, std::string description);
    static Verdict equal_consistent(std::string description);
    static Verdict inconsistent(std::string description);
    static Verdict hypothesis_not_met(std::string description);

    /// Machine-parsable record, e.g. "verdict=distinguished witness=T(p^2)".
    std::string line() const;
    /// CLI exit status: 0 for distinguished/consistent/hypothesis-not-met,
    /// 2 for inconsistent.
    int exit_code() const;
};

/// (a(T(p))^2 - a(T(p^2)) - sum_{s<n} c_s a(T_s(p^2))) / c_n. Requires the
/// entries T(p), T(p^2) and T_s(p^2) for 1 <= s <= n-1.
Rat implied_tn_eigenvalue(const EigenvalueProfile& profile);

/// Decision procedure over the listed operators T(p), T(p^2),
/// T_1(p^2), ..., T_{n-1}(p^2): first difference wins; equal profiles force
/// equal weight sums through the implied T_n(p^2) eigenvalue, otherwise the
/// data is inconsistent.
Verdict compare_profiles(const EigenvalueProfile& f, const EigenvalueProfile& g,
                         const Weight& wf, const Weight& wg);

/// Degree-2 decision procedure over T(p^r): case (i) compares
/// (a(p), a(p^2), a(p^3)) when a(p), a(g) are not both zero, case (ii)
/// compares (a(p^2), a(p^4), a(p^6)) when both vanish. Each profile is first
/// validated against the eigenvalue identities for its own weight.
Verdict compare_tpr(const EigenvalueProfile& f, const EigenvalueProfile& g, const Weight& wf,
                    const Weight& wg);

/// Recovers l1+l2 from (a(p), a(p^2), a(p^3)) via the p^3 identity; requires
/// a(p) != 0 and an exact power-of-p quotient.
long recover_weight_sum_case_i(const EigenvalueProfile& profile);

/// Builds a profile satisfying the T(p^2) relation and the T_n(p^2) scalar
/// for the given weight: free values are a(T(p)) and a(T_s(p^2)) for
/// 1 <= s <= n-1; a(T(p^2)) is derived.
EigenvalueProfile forward_profile(const Weight& w, const Int& p, const Rat& a_tp,
                                  const std::vector<Rat>& a_tj);

/// a(p^0..r_max) generated by the degree-2 Euler recurrence from free values
/// a(p) and a(p^2), with the T_2(p^2) eigenvalue fixed by the weight.
std::vector<Rat> eigenvalue_power_table(const Weight& w, const Int& p, const Rat& a1,
                                        const Rat& a2, std::size_t r_max);

/// Degree-2 profile with entries T(p^r) for r in rs, forward-built by
/// eigenvalue_power_table.
EigenvalueProfile forward_tpr_profile(const Weight& w, const Int& p, const Rat& a1, const Rat& a2,
                                      const std::vector<unsigned>& rs = {1, 2, 3, 4, 6});

} // namespace hecke
