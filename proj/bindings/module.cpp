#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "evolalg/frucht.hpp"
#include "evolalg/monomial.hpp"

namespace py = pybind11;
using namespace evolalg;

namespace {

std::vector<Scalar> parse_scalars(const Field& f, const std::vector<std::string>& texts) {
    std::vector<Scalar> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(Scalar::parse(f, t));
    return out;
}

std::vector<std::string> scalar_strings(const std::vector<Scalar>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(x.str());
    return out;
}

template <typename T> std::string to_text(const T& value) {
    std::ostringstream out;
    value.write(out);
    return out.str();
}

py::dict monomial_dict(const MonomialMap& m) {
    py::dict d;
    d["perm"] = m.perm;
    d["scales"] = scalar_strings(m.scales);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "evolution algebras of finite simple graphs";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<ValidationError>(m, "ValidationError");
    py::register_exception<NotRegularError>(m, "NotRegularError");
    py::register_exception<NotInImageError>(m, "NotInImageError");
    py::register_exception<CapError>(m, "CapError");
    py::register_exception<RealizationError>(m, "RealizationError");

    py::class_<SimpleGraph>(m, "SimpleGraph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return SimpleGraph::make(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &SimpleGraph::vertex_count)
        .def_property_readonly("edges",
                               [](const SimpleGraph& g) { return g.edges(); })
        .def("to_text", &to_text<SimpleGraph>)
        .def_static("from_text",
                    [](const std::string& text) {
                        std::istringstream in(text);
                        return SimpleGraph::read(in);
                    })
        .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; })
        .def("__repr__", [](const SimpleGraph& g) {
            return "SimpleGraph(n=" + std::to_string(g.vertex_count()) + ", m=" +
                   std::to_string(g.edge_count()) + ")";
        });

    py::class_<EvolutionAlgebra>(m, "EvolutionAlgebra")
        .def(py::init([](const std::string& field,
                         const std::vector<std::vector<std::string>>& structure,
                         const std::vector<std::string>& labels) {
                 const Field f = Field::parse(field);
                 const int n = static_cast<int>(structure.size());
                 Matrix mat(f, n, n);
                 for (int r = 0; r < n; ++r) {
                     if (static_cast<int>(structure[r].size()) != n)
                         throw ValidationError("NotSquare: structure rows must have length " +
                                               std::to_string(n));
                     for (int c = 0; c < n; ++c)
                         mat.set(r, c, Scalar::parse(f, structure[r][c]));
                 }
                 return EvolutionAlgebra(std::move(mat), labels);
             }),
             py::arg("field"), py::arg("structure"),
             py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("dim", &EvolutionAlgebra::dim)
        .def_property_readonly("field",
                               [](const EvolutionAlgebra& x) { return x.field().str(); })
        .def_property_readonly("labels",
                               [](const EvolutionAlgebra& x) { return x.labels(); })
        .def("structure",
             [](const EvolutionAlgebra& x) {
                 std::vector<std::vector<std::string>> rows(x.dim(),
                                                            std::vector<std::string>(x.dim()));
                 for (int r = 0; r < x.dim(); ++r)
                     for (int c = 0; c < x.dim(); ++c) rows[r][c] = x.structure().at(r, c).str();
                 return rows;
             })
        .def("is_regular", &EvolutionAlgebra::is_regular)
        .def("square_rank", &EvolutionAlgebra::square_rank)
        .def("determinant",
             [](const EvolutionAlgebra& x) { return x.structure().determinant().str(); })
        .def("multiply",
             [](const EvolutionAlgebra& x, const std::vector<std::string>& a,
                const std::vector<std::string>& b) {
                 const Element prod = x.multiply(Element{parse_scalars(x.field(), a)},
                                                 Element{parse_scalars(x.field(), b)});
                 return scalar_strings(prod.coords);
             })
        .def("to_text", &to_text<EvolutionAlgebra>)
        .def_static("from_text",
                    [](const std::string& text) {
                        std::istringstream in(text);
                        return EvolutionAlgebra::read(in);
                    })
        .def("__eq__",
             [](const EvolutionAlgebra& a, const EvolutionAlgebra& b) { return a == b; })
        .def("__repr__", [](const EvolutionAlgebra& x) {
            return "EvolutionAlgebra(dim=" + std::to_string(x.dim()) + ", field=" +
                   x.field().str() + ")";
        });

    py::class_<FiniteGroup>(m, "FiniteGroup")
        .def_static("from_table", &FiniteGroup::from_table)
        .def_static("from_permutations", &FiniteGroup::from_permutations, py::arg("degree"),
                    py::arg("generators"), py::arg("cap") = 10000)
        .def_property_readonly("order", &FiniteGroup::order)
        .def("mul", &FiniteGroup::mul)
        .def("element_order", &FiniteGroup::element_order)
        .def("to_text", &to_text<FiniteGroup>)
        .def_static("from_text", [](const std::string& text) {
            std::istringstream in(text);
            return FiniteGroup::read(in);
        });

    m.def("build_algebra",
          [](const SimpleGraph& g, const std::string& field) {
              return build_algebra(g, Field::parse(field));
          },
          py::arg("graph"), py::arg("field") = "Q");

    m.def("graph_automorphisms", [](const SimpleGraph& g) {
        const PermGroup aut = graph_automorphisms(g);
        py::dict d;
        d["order"] = aut.order;
        d["generators"] = aut.generators;
        return d;
    });

    m.def("graph_isomorphism",
          [](const SimpleGraph& a, const SimpleGraph& b) -> py::object {
              const auto w = graph_isomorphism(a, b);
              if (!w) return py::none();
              return py::cast(*w);
          });

    m.def("rebase",
          [](const EvolutionAlgebra& x, const std::vector<int>& perm,
             const std::vector<std::string>& scales) {
              return rebase(x, MonomialMap::make(perm, parse_scalars(x.field(), scales)));
          },
          py::arg("algebra"), py::arg("perm"), py::arg("scales"));

    m.def("recover_graph", [](const EvolutionAlgebra& x) {
        const RecoveredGraph r = recover_graph(x);
        return py::make_tuple(r.graph, monomial_dict(r.normalizer));
    });

    m.def("is_automorphism",
          [](const EvolutionAlgebra& x, const std::vector<int>& perm,
             const std::vector<std::string>& scales) {
              return is_automorphism(x, MonomialMap::make(perm, parse_scalars(x.field(), scales)));
          },
          py::arg("algebra"), py::arg("perm"), py::arg("scales"));

    m.def("algebra_automorphisms",
          [](const EvolutionAlgebra& x, std::uint64_t cap) {
              const AlgebraAutomorphisms aut = algebra_automorphisms(x, cap);
              py::list gens;
              for (const MonomialMap& g : aut.generators) gens.append(monomial_dict(g));
              py::dict d;
              d["order"] = aut.order;
              d["all_scales_one"] = aut.all_scales_one;
              d["sigma_group_order"] = aut.sigma_group.order;
              d["generators"] = gens;
              return d;
          },
          py::arg("algebra"), py::arg("cap") = 1000000);

    m.def("algebra_isomorphism",
          [](const EvolutionAlgebra& a, const EvolutionAlgebra& b) -> py::object {
              const auto w = algebra_isomorphism(a, b);
              if (!w) return py::none();
              return monomial_dict(*w);
          });

    m.def("minimal_generators", &minimal_generators);
    m.def("group_isomorphic",
          [](const FiniteGroup& a, const FiniteGroup& b) { return group_isomorphic(a, b); });

    m.def("realize_graph", &realize_graph, py::arg("group"), py::arg("variant") = 0);
    m.def("realize_algebra",
          [](const FiniteGroup& g, const std::string& field, unsigned variant) {
              return realize_algebra(g, Field::parse(field), variant);
          },
          py::arg("group"), py::arg("field") = "Q", py::arg("variant") = 0);

    m.def("verify_realization", [](const FiniteGroup& g, const EvolutionAlgebra& x) {
        const VerificationReport r = verify_realization(g, x);
        py::dict d;
        d["aut_order"] = r.aut_order;
        d["sigma_group_order"] = r.sigma_group_order;
        d["isomorphic"] = r.isomorphic;
        d["all_scales_one"] = r.all_scales_one;
        d["scales_observed"] = r.scales_observed;
        return d;
    });
}
