// Python bindings for the main operations: relation derivation, Euler
// recurrences, distinguishers, quadratic-form utilities and certified
// bounds. Big integers map to python int, rationals to fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "siegelhecke/acceptance.hpp"
#include "siegelhecke/errors.hpp"
#include "siegelhecke/euler.hpp"
#include "siegelhecke/fourier.hpp"
#include "siegelhecke/primes.hpp"
#include "siegelhecke/profiles.hpp"
#include "siegelhecke/symplectic.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// mpz_class <-> python int via decimal strings.
template <>
struct type_caster<hecke::Int> {
    PYBIND11_TYPE_CASTER(hecke::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        object s = reinterpret_steal<object>(PyObject_Str(src.ptr()));
        if (!s) return false;
        if (mpz_set_str(value.get_mpz_t(), std::string(str(s)).c_str(), 10) != 0) return false;
        return true;
    }

    static handle cast(const hecke::Int& src, return_value_policy, handle) {
        return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
    }
};

// mpq_class <-> fractions.Fraction (python ints accepted on input).
template <>
struct type_caster<hecke::Rat> {
    PYBIND11_TYPE_CASTER(hecke::Rat, const_name("Fraction"));

    bool load(handle src, bool convert) {
        make_caster<hecke::Int> int_caster;
        if (PyLong_Check(src.ptr())) {
            if (!int_caster.load(src, convert)) return false;
            value = hecke::Rat(cast_op<hecke::Int>(int_caster));
            return true;
        }
        if (!hasattr(src, "numerator") || !hasattr(src, "denominator")) return false;
        object num = src.attr("numerator");
        object den = src.attr("denominator");
        if (!PyLong_Check(num.ptr()) || !PyLong_Check(den.ptr())) return false;
        const std::string num_text = str(num);
        const std::string den_text = str(den);
        hecke::Int n(num_text);
        hecke::Int d(den_text);
        if (d == 0) return false;
        value = hecke::make_rat(n, d);
        return true;
    }

    static handle cast(const hecke::Rat& src, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        object num = reinterpret_steal<object>(
            PyLong_FromString(src.get_num().get_str().c_str(), nullptr, 10));
        object den = reinterpret_steal<object>(
            PyLong_FromString(src.get_den().get_str().c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

} // namespace pybind11::detail

namespace {

hecke::Weight make_weight(const std::vector<long>& parts) {
    return hecke::Weight(parts);
}

hecke::EulerIdentity identity_from_name(const std::string& name) {
    if (name == "p3") return hecke::EulerIdentity::P3;
    if (name == "p4") return hecke::EulerIdentity::P4;
    if (name == "p6") return hecke::EulerIdentity::P6;
    throw hecke::usage_error("unknown identity '" + name + "'; expected p3, p4 or p6");
}

std::string verdict_outcome(const hecke::Verdict& v) {
    switch (v.outcome) {
        case hecke::Verdict::Outcome::Distinguished: return "distinguished";
        case hecke::Verdict::Outcome::ProfilesEqualConsistent: return "equal-consistent";
        case hecke::Verdict::Outcome::Inconsistent: return "inconsistent";
        case hecke::Verdict::Outcome::HypothesisNotMet: return "hypothesis-not-met";
    }
    return {};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Hecke-algebra relations and eigenform distinguishers";

    py::register_exception<hecke::usage_error>(m, "UsageError", PyExc_ValueError);
    py::register_exception<hecke::data_error>(m, "DataError", PyExc_ValueError);
    py::register_exception<hecke::internal_error>(m, "InternalError", PyExc_RuntimeError);

    py::class_<hecke::Verdict>(m, "Verdict")
        .def_property_readonly("outcome", &verdict_outcome)
        .def_readonly("witness", &hecke::Verdict::witness)
        .def_readonly("description", &hecke::Verdict::description)
        .def("__repr__", &hecke::Verdict::line);

    // Relations.
    m.def("q_binomial", &hecke::q_binomial, py::arg("m"), py::arg("l"), py::arg("p"),
          "number of l-dimensional subspaces of F_p^m");
    m.def("relation_coefficient", &hecke::relation_coefficient, py::arg("s"), py::arg("p"));
    m.def("gauss_binomial_identity_holds", &hecke::gauss_binomial_identity_holds, py::arg("s"),
          py::arg("p"));
    m.def(
        "main_relation",
        [](std::size_t n, const hecke::Int& p, long k) {
            if (k == 0) k = static_cast<long>(n) + 1;
            return hecke::main_relation(n, p, k).str();
        },
        py::arg("n"), py::arg("p"), py::arg("k") = 0,
        "the derived relation polynomial, canonical text form");
    m.def("solved_relation", &hecke::solved_relation_str, py::arg("n"), py::arg("p"));
    m.def("relation_coefficients", &hecke::relation_coefficients, py::arg("n"), py::arg("p"));
    m.def(
        "tilde_operator",
        [](std::size_t j, std::size_t n, long k, const hecke::Int& p) {
            return hecke::tilde_operator(j, hecke::TildeContext(n, k, p)).str();
        },
        py::arg("j"), py::arg("n"), py::arg("k"), py::arg("p"));
    m.def(
        "tn_eigenvalue",
        [](const std::vector<long>& w, const hecke::Int& p) {
            return hecke::tn_eigenvalue(make_weight(w), p);
        },
        py::arg("weight"), py::arg("p"));
    m.def("weight_sum_from_tn", &hecke::weight_sum_from_tn, py::arg("value"), py::arg("p"),
          py::arg("n"));

    // Euler recurrences.
    m.def(
        "hecke_powers",
        [](const hecke::Int& p, std::size_t r_max) {
            hecke::HeckePowerTable table = hecke::solve_hecke_powers(p, r_max);
            std::vector<std::string> out;
            for (std::size_t r = 0; r <= table.r_max(); ++r) out.push_back(table[r].str());
            return out;
        },
        py::arg("p"), py::arg("r_max") = 12, "T(p^r) polynomials, canonical text form");
    m.def("odd_powers_vanish", &hecke::odd_powers_vanish, py::arg("p"), py::arg("i_max") = 10);
    m.def(
        "identity_residual",
        [](const std::string& which, long l1, long l2, const hecke::Int& p) {
            return hecke::identity_residual(identity_from_name(which), hecke::Weight({l1, l2}), p)
                .str();
        },
        py::arg("which"), py::arg("l1"), py::arg("l2"), py::arg("p"),
        "residual polynomial of the chosen identity; '0' when it holds");
    m.def("generating_identity_roundtrip", &hecke::generating_identity_roundtrip, py::arg("p"),
          py::arg("order") = 12);

    // Distinguishers.
    m.def(
        "compare_profile_files",
        [](const std::string& file_f, const std::string& file_g) {
            hecke::ParsedProfile f = hecke::parse_profile_file(file_f);
            hecke::ParsedProfile g = hecke::parse_profile_file(file_g);
            return hecke::compare_profiles(f.profile, g.profile, f.weight, g.weight);
        },
        py::arg("file_f"), py::arg("file_g"));
    m.def(
        "compare_tpr_files",
        [](const std::string& file_f, const std::string& file_g) {
            hecke::ParsedProfile f = hecke::parse_profile_file(file_f);
            hecke::ParsedProfile g = hecke::parse_profile_file(file_g);
            return hecke::compare_tpr(f.profile, g.profile, f.weight, g.weight);
        },
        py::arg("file_f"), py::arg("file_g"));
    m.def(
        "eigenvalue_power_table",
        [](const std::vector<long>& w, const hecke::Int& p, const hecke::Rat& a1,
           const hecke::Rat& a2, std::size_t r_max) {
            return hecke::eigenvalue_power_table(make_weight(w), p, a1, a2, r_max);
        },
        py::arg("weight"), py::arg("p"), py::arg("a1"), py::arg("a2"), py::arg("r_max") = 6);

    // Quadratic forms and Fourier tables.
    m.def("class_number", &hecke::class_number, py::arg("d"));
    m.def("is_fundamental_discriminant", &hecke::is_fundamental_discriminant, py::arg("d"));
    m.def("kronecker_symbol", &hecke::kronecker_symbol, py::arg("d"), py::arg("p"));
    m.def(
        "arakawa_preconditions",
        [](const hecke::Int& a, const hecke::Int& b, const hecke::Int& c, const hecke::Int& p,
           const hecke::Int& mm) {
            hecke::PreconditionReport r =
                hecke::arakawa_preconditions(hecke::HalfIntegralForm(a, b, c), p, mm);
            return py::make_tuple(r.ok, r.failures);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("p"), py::arg("m") = 1);
    m.def(
        "distinguish_by_fourier_files",
        [](const std::string& file_f, const std::string& file_g) {
            return hecke::distinguish_by_fourier(hecke::parse_coefficient_table_file(file_f),
                                                 hecke::parse_coefficient_table_file(file_g));
        },
        py::arg("file_f"), py::arg("file_g"));

    // Certified bounds.
    m.def(
        "theta3",
        [](const hecke::Rat& x, unsigned prec) {
            hecke::Int needed = x.get_num() / x.get_den() + 2;
            hecke::PrimeSieve sieve(std::max<std::uint64_t>(16, needed.get_ui()));
            hecke::Interval v = hecke::theta3(x, sieve, prec);
            return py::make_tuple(v.lo(), v.hi());
        },
        py::arg("x"), py::arg("precision_bits") = hecke::kDefaultPrecisionBits,
        "certified enclosure (lo, hi) of theta3(x)");
    m.def(
        "check_theta3_lemma",
        [](const hecke::Rat& x_max) {
            hecke::Theta3SweepResult r = hecke::check_theta3_lemma(x_max);
            return py::make_tuple(r.holds, r.detail);
        },
        py::arg("x_max"));
    m.def(
        "smallest_prime_not_dividing",
        [](const hecke::Int& n) {
            auto r = hecke::smallest_prime_not_dividing(n);
            return py::make_tuple(r.prime, r.bound_certified);
        },
        py::arg("n"));
    m.def(
        "smallest_prime_3mod4_not_dividing",
        [](const hecke::Int& n) {
            auto r = hecke::smallest_prime_3mod4_not_dividing(n);
            return py::make_tuple(r.prime, r.bound_certified);
        },
        py::arg("n"));
    m.def(
        "m_bound",
        [](const hecke::Int& n) {
            hecke::Interval v = hecke::m_bound(n);
            return py::make_tuple(v.lo(), v.hi());
        },
        py::arg("n"));
    m.def(
        "det_bound",
        [](const hecke::Int& n) {
            hecke::Interval v = hecke::det_bound(n);
            return py::make_tuple(v.lo(), v.hi());
        },
        py::arg("n"));

    // Symplectic utilities.
    m.def(
        "standard_j",
        [](std::size_t n) {
            hecke::IntMatrix j = hecke::standard_j(n);
            std::vector<std::vector<hecke::Int>> rows(j.dim(),
                                                      std::vector<hecke::Int>(j.dim()));
            for (std::size_t r = 0; r < j.dim(); ++r)
                for (std::size_t c = 0; c < j.dim(); ++c) rows[r][c] = j.at(r, c);
            return rows;
        },
        py::arg("n"));
    m.def(
        "similitude",
        [](const std::vector<std::vector<hecke::Int>>& rows) -> py::object {
            hecke::IntMatrix mat(rows.size());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                hecke::require(rows[r].size() == rows.size(), "matrix is not square");
                for (std::size_t c = 0; c < rows.size(); ++c) mat.at(r, c) = rows[r][c];
            }
            auto eta = hecke::similitude(mat);
            if (!eta) return py::none();
            return py::cast(*eta);
        },
        py::arg("matrix"));

    m.def(
        "verify_all",
        [](const std::string& fixtures_dir) {
            hecke::AcceptanceOptions options;
            options.fixtures_dir = fixtures_dir;
            std::vector<py::tuple> out;
            for (const auto& r : hecke::run_all_acceptance(options))
                out.push_back(py::make_tuple(r.number, r.pass, r.name, r.detail));
            return out;
        },
        py::arg("fixtures_dir") = "tests/fixtures");
}
