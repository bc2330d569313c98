#include "ggt/circle.hpp"
#include "ggt/criterion.hpp"
#include "ggt/hypgraph.hpp"
#include "ggt/quasi.hpp"
#include "ggt/suites.hpp"

#include <json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <span>

namespace py = pybind11;
using namespace ggt;

namespace {

suites::SuiteConfig config_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    suites::SuiteConfig cfg;
    cfg.suite = j.at("suite").get<std::string>();
    cfg.seed = j.at("seed").get<uint64_t>();
    if (j.contains("family")) cfg.family = j["family"].get<std::string>();
    if (j.contains("n")) cfg.n = j["n"].get<int>();
    if (j.contains("r")) cfg.r = j["r"].get<int>();
    if (j.contains("dims")) cfg.dims = j["dims"].get<int>();
    if (j.contains("budget")) cfg.budget = j["budget"].get<int>();
    if (j.contains("graph")) {
        cfg.graph_kind = j["graph"].value("kind", "path");
        cfg.graph_param = j["graph"].value("param", 40);
        cfg.graph_file = j["graph"].value("file", "");
    }
    if (j.contains("radii")) cfg.radii = j["radii"].get<std::vector<int>>();
    return cfg;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact algebra for Thompson-like groups, circle maps, and hyperbolic graph kernels";

    // ---- cantor -----------------------------------------------------------
    py::class_<cantor::Arity>(m, "Arity")
        .def(py::init<int, int>(), py::arg("n") = 2, py::arg("r") = 1)
        .def_readonly("n", &cantor::Arity::n)
        .def_readonly("r", &cantor::Arity::r);

    py::class_<cantor::ClopenSet>(m, "ClopenSet")
        .def_static("parse", &cantor::ClopenSet::parse, py::arg("arity"), py::arg("text"))
        .def_static("empty", &cantor::ClopenSet::empty)
        .def_static("full", &cantor::ClopenSet::full)
        .def("__str__", &cantor::ClopenSet::to_string)
        .def("__eq__", [](const cantor::ClopenSet& a, const cantor::ClopenSet& b) { return a == b; })
        .def_property_readonly("is_empty", &cantor::ClopenSet::is_empty)
        .def_property_readonly("is_full", &cantor::ClopenSet::is_full)
        .def_property_readonly("is_proper_nonempty", &cantor::ClopenSet::is_proper_nonempty)
        .def("complement", [](const cantor::ClopenSet& s) { return cantor::complement(s); })
        .def("union", [](const cantor::ClopenSet& a, const cantor::ClopenSet& b) { return cantor::set_union(a, b); })
        .def("intersect", [](const cantor::ClopenSet& a, const cantor::ClopenSet& b) { return cantor::set_intersect(a, b); })
        .def("minus", [](const cantor::ClopenSet& a, const cantor::ClopenSet& b) { return cantor::set_minus(a, b); });

    m.def("tuple_admissible", [](const std::vector<cantor::ClopenSet>& ts) {
        return cantor::tuple_admissible(ts);
    });

    // ---- elements ----------------------------------------------------------
    py::class_<elements::VElement>(m, "VElement")
        .def_static("identity", &elements::VElement::identity)
        .def_static("random",
                    [](cantor::Arity a, uint64_t seed, int size) {
                        Rng rng(seed);
                        return elements::random_v_element(rng, a, size);
                    },
                    py::arg("arity"), py::arg("seed"), py::arg("size"))
        .def("__str__", &elements::VElement::to_string)
        .def("__eq__", [](const elements::VElement& a, const elements::VElement& b) { return a == b; })
        .def_property_readonly("is_identity", &elements::VElement::is_identity)
        .def("compose", [](const elements::VElement& g, const elements::VElement& h) { return elements::compose(g, h); })
        .def("inverse", [](const elements::VElement& g) { return elements::inverse(g); })
        .def("image", [](const elements::VElement& g, const cantor::ClopenSet& c) { return elements::image_clopen(g, c); })
        .def("fixed_set", [](const elements::VElement& g) { return elements::fixed_clopen(g); });

    m.def("transitivity_witness",
          [](cantor::Arity a, const std::vector<cantor::ClopenSet>& src,
             const std::vector<cantor::ClopenSet>& dst) {
              families::TreeFamily fam{a};
              return criterion::transitivity_witness(fam, std::span<const cantor::ClopenSet>(src),
                                                     std::span<const cantor::ClopenSet>(dst));
          },
          "element mapping src_i to dst_i for admissible tuples");

    m.def("decompose_bounded",
          [](cantor::Arity a, const elements::VElement& g) {
              families::TreeFamily fam{a};
              auto cover = criterion::build_cover_A(fam);
              return criterion::decompose_A(fam, g, cover);
          },
          "decompose into at most 3 elements fixing a cover member");

    m.def("extremely_proximal_witness",
          [](cantor::Arity a, const cantor::ClopenSet& u, const cantor::ClopenSet& v) {
              families::TreeFamily fam{a};
              return criterion::extremely_proximal_witness(fam, u, v);
          });

    // ---- circle ------------------------------------------------------------
    py::class_<circle::CircleMap>(m, "CircleMap")
        .def_static("identity", &circle::CircleMap::identity)
        .def_static("rotation",
                    [](const std::string& d) { return circle::CircleMap::rotation(Dyadic::parse(d)); })
        .def("__str__", &circle::CircleMap::to_string)
        .def("__eq__", [](const circle::CircleMap& a, const circle::CircleMap& b) { return a == b; })
        .def("eval", [](const circle::CircleMap& f, const std::string& x) {
            return f.eval(Dyadic::parse(x)).to_string();
        })
        .def("compose", [](const circle::CircleMap& g, const circle::CircleMap& f) { return circle::circle_compose(g, f); })
        .def("inverse", [](const circle::CircleMap& f) { return circle::circle_inverse(f); });

    m.def("ordered_witness", [](const std::vector<std::string>& src, const std::vector<std::string>& dst) {
        std::vector<Dyadic> s, d;
        for (const auto& x : src) s.push_back(Dyadic::parse(x));
        for (const auto& x : dst) d.push_back(Dyadic::parse(x));
        return circle::ordered_witness(s, d);
    });

    // ---- hypgraph ----------------------------------------------------------
    py::class_<hypgraph::FiniteGraph>(m, "FiniteGraph")
        .def_static("path", &hypgraph::FiniteGraph::path)
        .def_static("cycle", &hypgraph::FiniteGraph::cycle)
        .def_static("binary_tree", &hypgraph::FiniteGraph::binary_tree)
        .def_static("from_edge_list", &hypgraph::FiniteGraph::from_edge_list)
        .def_property_readonly("size", &hypgraph::FiniteGraph::size)
        .def("edges", &hypgraph::FiniteGraph::edges)
        .def("to_dot", [](const hypgraph::FiniteGraph& g) { return g.to_dot(); });

    m.def("delta_four_point", [](const hypgraph::FiniteGraph& g) {
        auto r = hypgraph::delta_four_point(hypgraph::DistanceMatrix::compute(g));
        return py::make_tuple(r.delta.to_string(), r.exact);
    });

    m.def("cone_off_edges", [](const hypgraph::FiniteGraph& g, const std::vector<int>& orbit, int radius) {
        return hypgraph::cone_off(g, orbit, radius).coned.edges();
    });

    m.def("cone_off_dot", [](const hypgraph::FiniteGraph& g, const std::vector<int>& orbit, int radius) {
        auto co = hypgraph::cone_off(g, orbit, radius);
        return g.to_dot(&co.coned);
    });

    // ---- quasi -------------------------------------------------------------
    m.def("quasiline_word_lengths", [](long long c_num, long long c_den, long long radius) {
        quasi::IntGroup z;
        quasi::Quasimorphism<long long> ident{"id", [](const long long& k) { return Rat(k); }};
        auto rep = quasi::quasiline_generators(z, ident, Rat::from_ll(c_num, c_den), radius);
        if (!rep.ok) throw std::invalid_argument(rep.reject_reason);
        py::dict out;
        out["generating_set"] = rep.generating_set;
        out["word_length"] = rep.word_length;
        out["bound_a"] = rep.bound_a;
        out["bound_b"] = rep.bound_b;
        return out;
    });

    // ---- suites ------------------------------------------------------------
    m.def("list_suites", [] {
        std::vector<std::pair<std::string, std::string>> out = suites::suite_catalog();
        return out;
    });

    m.def("run_suite", [](const std::string& config_json) {
        return suites::run_suite(config_from_json(config_json)).to_json();
    },
          "run a suite from a JSON config string; returns the JSON report");
}
