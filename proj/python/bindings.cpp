#include "aklab/analytics.hpp"
#include "aklab/constructions.hpp"
#include "aklab/family.hpp"
#include "aklab/io.hpp"
#include "aklab/search.hpp"
#include "aklab/version.hpp"
#include "aklab/walks.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace aklab;

// Rationals cross the boundary as fractions.Fraction and big integers as
// Python int, both via their decimal string forms, so no precision is
// ever lost. Floats are rejected on input to keep the API exact.
namespace pybind11::detail {

template <>
struct type_caster<aklab::Rational> {
    PYBIND11_TYPE_CASTER(aklab::Rational, const_name("Fraction"));

    bool load(handle src, bool) {
        if (isinstance<pybind11::float_>(src)) return false;
        pybind11::object frac;
        try {
            frac = module_::import("fractions").attr("Fraction")(
                reinterpret_borrow<pybind11::object>(src));
        } catch (const error_already_set&) {
            return false;
        }
        value = aklab::parse_rational(
            static_cast<std::string>(pybind11::str(frac)));
        return true;
    }

    static handle cast(const aklab::Rational& src, return_value_policy,
                       handle) {
        pybind11::object fraction =
            module_::import("fractions").attr("Fraction");
        return fraction(aklab::to_string(src)).release();
    }
};

template <>
struct type_caster<aklab::BigInt> {
    PYBIND11_TYPE_CASTER(aklab::BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!isinstance<pybind11::int_>(src)) return false;
        value = aklab::BigInt(static_cast<std::string>(pybind11::str(src)));
        return true;
    }

    static handle cast(const aklab::BigInt& src, return_value_policy,
                       handle) {
        return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
    }
};

}

namespace {

Subset make_subset(const std::vector<int>& elements, int n) {
    return Subset::from_elements(elements, n);
}

SetFamily make_family(const std::vector<std::vector<int>>& sets, int n) {
    std::vector<std::uint32_t> masks;
    masks.reserve(sets.size());
    for (const auto& s : sets) masks.push_back(Subset::from_elements(s, n).bits);
    return SetFamily(std::move(masks), n);
}

std::vector<std::vector<int>> family_sets(const SetFamily& f) {
    std::vector<std::vector<int>> out;
    out.reserve(f.size());
    for (std::uint32_t m : f.masks()) out.push_back(Subset(m, f.n()).elements());
    return out;
}

}

PYBIND11_MODULE(_aklab, m) {
    m.doc() = "exact arithmetic for cross t-intersecting families";
    m.attr("__version__") = version_string;

    py::class_<Subset>(m, "Subset")
        .def(py::init(&make_subset), py::arg("elements"), py::arg("n"))
        .def_property_readonly("n", [](const Subset& s) { return s.n; })
        .def("elements", &Subset::elements)
        .def("size", &Subset::size)
        .def("contains", &Subset::contains, py::arg("element"))
        .def("prefix_count", &Subset::prefix_count, py::arg("m"))
        .def(py::self == py::self)
        .def("__repr__", [](const Subset& s) {
            return "Subset(" + format_subset(s) + " ; n=" +
                   std::to_string(s.n) + ")";
        });

    py::class_<SetFamily>(m, "SetFamily")
        .def(py::init(&make_family), py::arg("sets"), py::arg("n"))
        .def_property_readonly("n", &SetFamily::n)
        .def("sets", &family_sets)
        .def("size", &SetFamily::size)
        .def("__len__", &SetFamily::size)
        .def("contains",
             [](const SetFamily& f, const std::vector<int>& s) {
                 return f.contains(Subset::from_elements(s, f.n()).bits);
             },
             py::arg("set"))
        .def("measure", &SetFamily::measure, py::arg("p"))
        .def("is_t_intersecting", &SetFamily::is_t_intersecting, py::arg("t"))
        .def("is_up_closed", &SetFamily::is_up_closed)
        .def("is_shifted", &SetFamily::is_shifted)
        .def(py::self == py::self)
        .def("__repr__", [](const SetFamily& f) {
            return "SetFamily(" + std::to_string(f.size()) + " sets, n=" +
                   std::to_string(f.n()) + ")";
        });

    m.def("shifts_to", &shifts_to, py::arg("a"), py::arg("b"));
    m.def("dual_t", &dual_t, py::arg("a"), py::arg("t"));
    m.def("cross_t_intersecting", &cross_t_intersecting, py::arg("a"),
          py::arg("b"), py::arg("t"));
    m.def("shift_ij", &shift_ij, py::arg("family"), py::arg("i"), py::arg("j"));
    m.def("shift_fixpoint", &shift_fixpoint, py::arg("family"));
    m.def("up_closure", &up_closure, py::arg("family"));
    m.def(
        "minimal_sets",
        [](const SetFamily& f) {
            std::vector<std::vector<int>> out;
            for (std::uint32_t m : minimal_sets(f))
                out.push_back(Subset(m, f.n()).elements());
            return out;
        },
        py::arg("family"));
    m.def("powerset", &powerset, py::arg("n"));
    m.def("family_union", &family_union);
    m.def("family_intersection", &family_intersection);
    m.def("family_difference", &family_difference);
    m.def("family_sym_diff", &family_sym_diff);

    m.def("parse_family_text", &parse_family_text, py::arg("text"));
    m.def("format_family", &format_family, py::arg("family"));
    m.def("parse_subset_text", &parse_subset_text, py::arg("text"),
          py::arg("n"));
    m.def("format_subset", &format_subset, py::arg("subset"));

    py::class_<WalkProfile>(m, "WalkProfile")
        .def_readonly("max_line", &WalkProfile::max_line)
        .def_readonly("line_hits", &WalkProfile::line_hits)
        .def_readonly("first_hit", &WalkProfile::first_hit);
    m.def("walk_profile", &walk_profile, py::arg("subset"));
    m.def("max_line", &max_line, py::arg("subset"));
    m.def("family_lambda", &family_lambda, py::arg("family"));
    m.def("restricted_walk_count", &restricted_walk_count, py::arg("l"),
          py::arg("s"));
    m.def("f_line_measure", &f_line_measure, py::arg("n"), py::arg("l"),
          py::arg("p"));

    py::class_<SimResult>(m, "SimResult")
        .def_readonly("estimate", &SimResult::estimate)
        .def_readonly("std_error", &SimResult::std_error)
        .def_readonly("trials", &SimResult::trials);
    m.def("simulate_hits", &simulate_hits, py::arg("p"), py::arg("l"),
          py::arg("steps"), py::arg("trials"), py::arg("seed"),
          py::arg("jobs") = 1);

    m.def("frt", &frt, py::arg("n"), py::arg("t"), py::arg("r"));
    m.def("f_line_family", &f_line_family, py::arg("n"), py::arg("l"));
    py::class_<LinePartition>(m, "LinePartition")
        .def_readonly("tilde", &LinePartition::tilde)
        .def_readonly("dot", &LinePartition::dot)
        .def_readonly("ddot", &LinePartition::ddot)
        .def_readonly("dot_by_index", &LinePartition::dot_by_index)
        .def_readonly("ddot_by_index", &LinePartition::ddot_by_index);
    m.def("line_partition", &line_partition, py::arg("n"), py::arg("l"));
    m.def(
        "d_walk",
        [](int n, int t, int s, int i, bool tilde) {
            return d_walk(n, t, s, i,
                          tilde ? DWalkVariant::tilde_ : DWalkVariant::plain);
        },
        py::arg("n"), py::arg("t"), py::arg("s"), py::arg("i"),
        py::arg("tilde") = false);
    m.def("d_walk_i_max", &d_walk_i_max, py::arg("n"), py::arg("t"),
          py::arg("s"));
    m.def("near_extremal", &near_extremal, py::arg("n"), py::arg("t"),
          py::arg("r"));
    m.def("extremal_pair", &extremal_pair, py::arg("n"), py::arg("t"),
          py::arg("s"), py::arg("s_prime"));
    m.def("r_ex", &r_ex, py::arg("r"));

    py::enum_<PairCase>(m, "PairCase")
        .value("NE", PairCase::NE)
        .value("DE", PairCase::DE)
        .value("NDE", PairCase::NDE)
        .value("degenerate", PairCase::degenerate);
    py::class_<PairClassification>(m, "PairClassification")
        .def_readonly("u", &PairClassification::u)
        .def_readonly("v", &PairClassification::v)
        .def_readonly("s", &PairClassification::s)
        .def_readonly("s_prime", &PairClassification::s_prime)
        .def_readonly("I", &PairClassification::I)
        .def_readonly("J", &PairClassification::J)
        .def_readonly("case", &PairClassification::case_)
        .def_readonly("in_r_ex", &PairClassification::in_r_ex)
        .def_readonly("swapped", &PairClassification::swapped);
    m.def("classify_pair", &classify_pair, py::arg("a"), py::arg("b"),
          py::arg("t"), py::arg("r"));

    m.def("best_response", &best_response, py::arg("a"), py::arg("t"));
    py::class_<AkReference>(m, "AkReference")
        .def_readonly("per_r", &AkReference::per_r)
        .def_readonly("best_rs", &AkReference::best_rs)
        .def_readonly("best_value", &AkReference::best_value);
    m.def("ak_reference", &ak_reference, py::arg("n"), py::arg("t"),
          py::arg("p"));
    py::class_<SearchCertificate>(m, "SearchCertificate")
        .def_readonly("argmax", &SearchCertificate::argmax)
        .def_readonly("value", &SearchCertificate::value)
        .def_readonly("nodes_explored", &SearchCertificate::nodes_explored)
        .def_readonly("exhaustive", &SearchCertificate::exhaustive)
        .def_readonly("restricted_to_shifted",
                      &SearchCertificate::restricted_to_shifted);
    m.def(
        "max_single",
        [](int n, int t, const Rational& p, bool shifted_only, bool force) {
            SearchOptions o;
            o.shifted_only = shifted_only;
            o.force = force;
            return max_single(n, t, p, o);
        },
        py::arg("n"), py::arg("t"), py::arg("p"),
        py::arg("shifted_only") = false, py::arg("force") = false);
    m.def(
        "max_cross",
        [](int n, int t, const Rational& p, bool shifted_only, bool force) {
            SearchOptions o;
            o.shifted_only = shifted_only;
            o.force = force;
            return max_cross(n, t, p, o);
        },
        py::arg("n"), py::arg("t"), py::arg("p"),
        py::arg("shifted_only") = false, py::arg("force") = false);

    m.def("closed_form_measure", &closed_form_measure, py::arg("t"),
          py::arg("r"), py::arg("p"));
    py::enum_<Sign>(m, "Sign")
        .value("negative", Sign::negative)
        .value("zero", Sign::zero)
        .value("positive", Sign::positive);
    m.def("threshold_sign", &threshold_sign, py::arg("t"), py::arg("r"),
          py::arg("p"));
    m.def("h_eval", &h_eval, py::arg("i"), py::arg("j"), py::arg("p"));
    m.def("g_eval", &g_eval, py::arg("t"), py::arg("r"), py::arg("s"),
          py::arg("s_prime"), py::arg("p"));

    py::class_<GComparison>(m, "GComparison")
        .def_readonly("label", &GComparison::label)
        .def_readonly("lhs", &GComparison::lhs)
        .def_readonly("rhs", &GComparison::rhs)
        .def_readonly("holds", &GComparison::holds);
    py::class_<GStartPoint>(m, "GStartPoint")
        .def_readonly("label", &GStartPoint::label)
        .def_readonly("s", &GStartPoint::s)
        .def_readonly("s_prime", &GStartPoint::s_prime)
        .def_readonly("value", &GStartPoint::value)
        .def_readonly("limit", &GStartPoint::limit);
    py::class_<GRelationsReport>(m, "GRelationsReport")
        .def_readonly("s_max", &GRelationsReport::s_max)
        .def_readonly("claim_i", &GRelationsReport::claim_i)
        .def_readonly("claim_ii", &GRelationsReport::claim_ii)
        .def_readonly("claim_iii", &GRelationsReport::claim_iii)
        .def_readonly("start_points", &GRelationsReport::start_points);
    m.def("g_relations", &g_relations, py::arg("t"), py::arg("r"),
          py::arg("p"));

    py::class_<XReport>(m, "XReport")
        .def_readonly("x", &XReport::x)
        .def_readonly("x_f", &XReport::x_f)
        .def_readonly("x_delta", &XReport::x_delta)
        .def_readonly("x_star", &XReport::x_star)
        .def_readonly("weight_a", &XReport::weight_a)
        .def_readonly("weight_b", &XReport::weight_b);
    m.def("x_quantities", &x_quantities, py::arg("a"), py::arg("b"),
          py::arg("t"), py::arg("s"), py::arg("s_prime"), py::arg("p"));

    py::class_<RatioReport>(m, "RatioReport")
        .def_readonly("label", &RatioReport::label)
        .def_readonly("exact", &RatioReport::exact)
        .def_readonly("prediction", &RatioReport::prediction);
    m.def("ratio_report", &ratio_report, py::arg("t"), py::arg("r"),
          py::arg("p"));

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("eq18_upper", &BoundReport::eq18_upper)
        .def_readonly("eq19_lower", &BoundReport::eq19_lower)
        .def_readonly("eq20_upper", &BoundReport::eq20_upper)
        .def_readonly("claim21_first", &BoundReport::claim21_first)
        .def_readonly("claim21_second", &BoundReport::claim21_second);
    m.def("bound_report", &bound_report, py::arg("n"), py::arg("t"),
          py::arg("s"), py::arg("I"), py::arg("p"));
    m.def("claim21_first", &claim21_first, py::arg("t"), py::arg("r"));
    m.def("claim21_second", &claim21_second, py::arg("t"), py::arg("r"));

    py::class_<BudgetValue>(m, "BudgetValue")
        .def_readonly("exact", &BudgetValue::exact)
        .def_readonly("lo", &BudgetValue::lo)
        .def_readonly("hi", &BudgetValue::hi);
    m.def("weakstability_budget", &weakstability_budget, py::arg("delta"),
          py::arg("epsilon1"));
}
