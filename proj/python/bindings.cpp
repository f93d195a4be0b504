#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monoscroll/catalog.hpp"
#include "monoscroll/chow.hpp"
#include "monoscroll/curve.hpp"
#include "monoscroll/error.hpp"
#include "monoscroll/scroll.hpp"
#include "monoscroll/semigroup.hpp"
#include "monoscroll/theorems.hpp"

namespace py = pybind11;
using namespace monoscroll;

namespace {

py::int_ to_py(const Integer& x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::dict flags_dict(const CurveFlags& f) {
    py::dict d;
    d["gorenstein"] = f.gorenstein;
    d["kunz"] = f.kunz;
    d["almost_gorenstein"] = f.almost_gorenstein;
    d["nearly_gorenstein"] = f.nearly_gorenstein;
    d["nearly_normal"] = f.nearly_normal;
    return d;
}

py::dict analysis_dict(const MonomialCurve& c) {
    const CurveAnalysis a = analyze(c);
    py::dict d;
    d["exponents"] = c.exponents();
    d["genus"] = a.g;
    d["g_prime"] = a.g_prime;
    d["eta"] = a.eta;
    d["mu"] = a.mu;
    d["gonality"] = a.gonality;
    d["non_gorenstein_points"] = a.non_gorenstein_points;
    d["canonical_birational"] = a.canonical_birational;
    d["canonical"] = a.canonical_exponents;
    d["class"] = a.class_label();
    d["flags"] = flags_dict(a.flags);
    return d;
}

py::list structures_list(const std::vector<int>& set, int d) {
    py::list out;
    for (const auto& s : scroll_structures(set, d)) {
        py::dict x;
        x["type"] = s.type().dims;
        x["step"] = s.step;
        x["kappa"] = s.kappa;
        x["ell"] = s.ell;
        x["blocks"] = s.blocks;
        out.append(x);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Monomial curves, canonical models and rational normal scrolls";

    static py::exception<Error> error_type(m, "MonoscrollError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
            inst.attr("kind") = std::string(to_string(e.kind()));
            inst.attr("value") = e.value() ? py::object(py::int_(*e.value())) : py::object(py::none());
            PyErr_SetObject(error_type.ptr(), inst.ptr());
        }
    });

    py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
        .def(py::init<std::vector<int>>(), py::arg("generators"))
        .def_property_readonly("generators", &NumericalSemigroup::generators)
        .def_property_readonly("gaps", &NumericalSemigroup::gaps)
        .def_property_readonly("genus", &NumericalSemigroup::genus)
        .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
        .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
        .def_property_readonly("conductor", &NumericalSemigroup::conductor)
        .def_property_readonly("symmetric", [](const NumericalSemigroup& s) { return is_symmetric(s); })
        .def_property_readonly("eta", [](const NumericalSemigroup& s) { return eta_local(s); })
        .def_property_readonly("mu", [](const NumericalSemigroup& s) { return mu_local(s).mu; })
        .def_property_readonly("kappa_star", [](const NumericalSemigroup& s) { return kappa_sets(s).k_star; })
        .def("__eq__", [](const NumericalSemigroup& a, const NumericalSemigroup& b) { return a == b; })
        .def("__hash__", [](const NumericalSemigroup& s) { return py::hash(py::tuple(py::cast(s.generators()))); })
        .def("__repr__", [](const NumericalSemigroup& s) {
            std::string r = "NumericalSemigroup([";
            for (std::size_t i = 0; i < s.generators().size(); ++i)
                r += (i ? ", " : "") + std::to_string(s.generators()[i]);
            return r + "])";
        });

    m.def("enumerate_genus", [](int g) { return enumerate_genus(g); }, py::arg("genus"));
    m.def("recover_from_kappa_star", [](std::vector<int> k) { return recover_from_kappa_star(k); },
          py::arg("kappa_star"));

    py::class_<MonomialCurve>(m, "MonomialCurve")
        .def(py::init([](std::vector<int> e) { return make_curve(std::move(e)); }), py::arg("exponents"))
        .def_property_readonly("exponents", &MonomialCurve::exponents)
        .def_property_readonly("genus", &MonomialCurve::genus)
        .def_property_readonly("delta_zero", [](const MonomialCurve& c) { return c.branches().delta_zero(); })
        .def_property_readonly("delta_infinity", [](const MonomialCurve& c) { return c.branches().delta_infinity(); })
        .def_property_readonly("singular_points",
                               [](const MonomialCurve& c) { return c.branches().singular_points(); })
        .def("reversed", &MonomialCurve::reversed)
        .def("__repr__", &MonomialCurve::to_string);

    m.def("representative_curve", &representative_curve, py::arg("semigroup"));
    m.def("canonical_exponents", &canonical_exponents, py::arg("curve"));
    m.def("gonality", py::overload_cast<const MonomialCurve&>(&gonality), py::arg("curve"));
    m.def("pencil_degree", &pencil_degree, py::arg("curve"), py::arg("n"));
    m.def("analyze", &analysis_dict, py::arg("curve"));
    m.def("isomorphic_via_canonical", &isomorphic_via_canonical, py::arg("c1"), py::arg("c2"));

    m.def("scroll_structures", &structures_list, py::arg("exponents"), py::arg("d"));
    m.def("min_scroll_dimension", [](std::vector<int> s) { return min_scroll_dimension(s); }, py::arg("exponents"));

    m.def(
        "euler_characteristic",
        [](std::vector<int> dims, long long h, long long f) {
            return to_py(euler_characteristic(Ambient(std::move(dims)), {h, f}));
        },
        py::arg("dims"), py::arg("h"), py::arg("f"));
    m.def(
        "h0",
        [](std::vector<int> dims, long long h, long long f) {
            return to_py(h0_class(Ambient(std::move(dims)), {h, f}).h0);
        },
        py::arg("dims"), py::arg("h"), py::arg("f"));
    m.def(
        "pa_from_bundle",
        [](int e, long long u, long long v, long long w, long long z) {
            return to_py(pa_from_bundle(Ambient::balanced(3, e), {u, v, w, z}));
        },
        py::arg("e"), py::arg("u"), py::arg("v"), py::arg("w"), py::arg("z"));
    m.def(
        "genus_on_surface",
        [](long long deg, long long n, long long ell, bool cone) {
            return to_py(genus_on_surface(deg, n, ell, cone ? SurfaceMode::Cone : SurfaceMode::Smooth));
        },
        py::arg("deg"), py::arg("n"), py::arg("ell") = 0, py::arg("cone") = false);

    m.def(
        "catalog_json",
        [](int lo, int hi, bool non_gorenstein, std::optional<int> scroll_dim, std::optional<int> singular_points) {
            CatalogFilter f{non_gorenstein, scroll_dim, singular_points};
            return render(build_catalog(lo, hi, f), Format::Json);
        },
        py::arg("lo"), py::arg("hi"), py::arg("non_gorenstein") = false, py::arg("scroll_dim") = py::none(),
        py::arg("singular_points") = py::none());
    m.def(
        "audit_json",
        [](const std::string& name) { return render(audit_fixture(name), Format::Json); }, py::arg("fixture"));
    m.def("fixture_names", &fixture_names);
    m.def(
        "check_surface_items",
        [](const MonomialCurve& c) {
            py::list out;
            for (const auto& f : check_theorem21(surface_record(c)).findings)
                out.append(py::make_tuple(f.item, to_string(f.verdict), f.detail));
            return out;
        },
        py::arg("curve"));
}
