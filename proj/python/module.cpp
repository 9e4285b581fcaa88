#include "troproots/cone_complex.hpp"
#include "troproots/json_io.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <utility>

namespace py = pybind11;
using namespace troproots;

namespace {

Rational to_rational(const std::pair<long long, long long>& p)
{
    return Rational(p.first, p.second);
}

std::pair<long long, long long> from_rational(const Rational& r)
{
    return {r.numerator(), r.denominator()};
}

std::vector<Rational> to_lengths(const std::vector<std::pair<long long, long long>>& in)
{
    std::vector<Rational> out;
    for (const auto& p : in)
        out.push_back(to_rational(p));
    return out;
}

} // namespace

PYBIND11_MODULE(_troproots, m)
{
    m.doc() = "Moduli of roots of divisors on tropical curves";

    py::class_<CoefficientGroup>(m, "CoefficientGroup")
        .def(py::init<int, std::vector<long long>>(), py::arg("free_rank"),
             py::arg("torsion_moduli"))
        .def_property_readonly("free_rank", &CoefficientGroup::free_rank)
        .def_property_readonly("torsion_moduli", &CoefficientGroup::torsion_moduli)
        .def("is_finite", &CoefficientGroup::is_finite)
        .def("order", &CoefficientGroup::torsion_order)
        .def(py::self == py::self)
        .def("__repr__", &CoefficientGroup::to_string);
    m.def("integers", [] { return integers(); });
    m.def("cyclic", &cyclic, py::arg("m"));

    py::class_<GroupElement>(m, "GroupElement")
        .def_static("integer", &GroupElement::integer)
        .def_static("residue", &GroupElement::residue)
        .def_static("zero", &GroupElement::zero)
        .def_property_readonly("group", &GroupElement::group)
        .def("is_zero", &GroupElement::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self * std::int64_t())
        .def(py::self == py::self)
        .def("__repr__", &GroupElement::to_string);

    py::class_<Leg>(m, "Leg")
        .def(py::init([](int label, VertexId v) { return Leg{label, v}; }), py::arg("label"),
             py::arg("vertex"))
        .def_readonly("label", &Leg::label)
        .def_readonly("vertex", &Leg::vertex);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::vector<int> weights,
                         std::vector<std::pair<VertexId, VertexId>> edges,
                         std::vector<std::pair<int, VertexId>> legs) {
                 std::vector<Leg> leg_list;
                 for (const auto& [label, v] : legs)
                     leg_list.push_back({label, v});
                 return Graph(std::move(weights), std::move(edges), std::move(leg_list));
             }),
             py::arg("weights"), py::arg("edges"), py::arg("legs") = std::vector<std::pair<int, VertexId>>{})
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def_property_readonly("num_legs", &Graph::num_legs)
        .def("weight", &Graph::weight)
        .def("src", &Graph::src)
        .def("dst", &Graph::dst)
        .def("valence", &Graph::valence)
        .def("betti", &Graph::betti)
        .def("genus", &Graph::genus)
        .def("is_stable", &Graph::is_stable)
        .def("to_dot", [](const Graph& g) { return to_dot(g); })
        .def("to_json", [](const Graph& g) { return to_json(g).dump(2); })
        .def(py::self == py::self);

    m.def("canonical_key", [](const Graph& g) { return canonical_form(g).key.to_string(); });
    m.def("automorphism_count",
          [](const Graph& g) { return automorphism_group(g).size(); });
    m.def("is_isomorphic", [](const Graph& a, const Graph& b) {
        return find_isomorphism(a, b).has_value();
    });
    m.def("enumerate_stable_graphs", &enumerate_stable_graphs, py::arg("genus"),
          py::arg("legs"));

    py::class_<Flow>(m, "Flow")
        .def(py::init<CoefficientGroup, std::vector<GroupElement>>(), py::arg("group"),
             py::arg("edge_values"))
        .def_property_readonly("group", &Flow::group)
        .def("value", &Flow::value, py::return_value_policy::copy)
        .def(py::self == py::self);

    py::class_<GraphDivisor>(m, "GraphDivisor")
        .def(py::init<CoefficientGroup, std::vector<GroupElement>>(), py::arg("group"),
             py::arg("vertex_values"))
        .def_static("zero", &GraphDivisor::zero)
        .def("value", &GraphDivisor::value, py::return_value_policy::copy)
        .def("degree", &GraphDivisor::degree)
        .def(py::self == py::self);

    m.def("div_of_flow", &div_of_flow);
    m.def("enumerate_flow_fiber", &enumerate_flow_fiber);

    py::class_<RamificationSequence>(m, "RamificationSequence")
        .def(py::init([](std::vector<GroupElement> entries, GroupElement ell) {
                 return RamificationSequence{std::move(entries), std::move(ell)};
             }),
             py::arg("entries"), py::arg("ell"))
        .def_static("trivial", &RamificationSequence::trivial)
        .def_readonly("entries", &RamificationSequence::entries)
        .def_readonly("ell", &RamificationSequence::ell);

    py::class_<FlowPoset>(m, "FlowPoset")
        .def("__len__", [](const FlowPoset& p) { return p.elements.size(); })
        .def("rank", &FlowPoset::rank)
        .def("dimension", &FlowPoset::dimension)
        .def_property_readonly("num_covers",
                               [](const FlowPoset& p) { return p.covers.size(); })
        .def("to_json", [](const FlowPoset& p) { return to_json(p).dump(2); })
        .def("to_dot", [](const FlowPoset& p) { return poset_to_dot(p); });
    m.def("build_flow_poset", &build_flow_poset, py::arg("genus"), py::arg("legs"),
          py::arg("group"), py::arg("ramification"));

    py::class_<TropicalCurve>(m, "TropicalCurve")
        .def_property_readonly("model", [](const TropicalCurve& c) { return c.model; })
        .def("length", [](const TropicalCurve& c, EdgeId e) { return from_rational(c.length(e)); })
        .def("to_json", [](const TropicalCurve& c) { return to_json(c).dump(2); });
    m.def(
        "make_curve",
        [](Graph g, const std::vector<std::pair<long long, long long>>& lengths) {
            return make_curve(std::move(g), to_lengths(lengths));
        },
        py::arg("model"), py::arg("lengths"));

    py::class_<CurvePoint>(m, "CurvePoint")
        .def_static("vertex", &CurvePoint::vertex)
        .def_static("interior",
                    [](const TropicalCurve& c, EdgeId e, std::pair<long long, long long> t) {
                        return CurvePoint::interior(c, e, to_rational(t));
                    })
        .def(py::self == py::self);

    py::class_<TropicalDivisor>(m, "TropicalDivisor")
        .def(py::init<>())
        .def("add", &TropicalDivisor::add)
        .def("coeff", &TropicalDivisor::coeff)
        .def("degree", &TropicalDivisor::degree)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * std::int64_t())
        .def(py::self == py::self);

    m.def("is_principal", [](const TropicalCurve& c, const TropicalDivisor& D) {
        return is_principal(c, D).principal;
    });
    m.def("equivalent", [](const TropicalCurve& c, const TropicalDivisor& a,
                           const TropicalDivisor& b) { return equivalent(c, a, b).principal; });

    m.def(
        "enumerate_roots",
        [](const TropicalCurve& c, const TropicalDivisor& D, int r, bool verify) {
            RootInstance inst = make_root_instance(c, D, r);
            std::vector<TropicalDivisor> out;
            for (const RootClass& rc : enumerate_roots(inst, verify))
                out.push_back(rc.representative);
            return out;
        },
        py::arg("curve"), py::arg("divisor"), py::arg("r"), py::arg("verify") = false);
    m.def(
        "verify_root_bijection",
        [](const TropicalCurve& c, const TropicalDivisor& D, int r, std::uint64_t seed) {
            RootReport rep = verify_root_bijection(make_root_instance(c, D, r), seed);
            return std::make_pair(rep.pass, rep.failures);
        },
        py::arg("curve"), py::arg("divisor"), py::arg("r"), py::arg("seed") = 0);

    py::class_<ConeComplex>(m, "ConeComplex")
        .def_property_readonly("r", [](const ConeComplex& cc) { return cc.r; })
        .def("__len__", [](const ConeComplex& cc) { return cc.poset.elements.size(); })
        .def("cone_dimension", &ConeComplex::cone_dimension)
        .def("dimension", [](const ConeComplex& cc) { return cc.poset.dimension(); })
        .def("to_json", [](const ConeComplex& cc) { return to_json(cc).dump(2); });
    m.def("build_root_complex", &build_root_complex, py::arg("genus"), py::arg("legs"),
          py::arg("r"), py::arg("ramification"));

    m.def("json_to_dot", [](const std::string& doc) {
        return json_to_dot(json::parse(doc));
    });
}
