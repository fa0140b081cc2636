#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "sphtwist/artin_groups.hpp"
#include "sphtwist/cli.hpp"
#include "sphtwist/config.hpp"
#include "sphtwist/errors.hpp"
#include "sphtwist/lambda_algebra.hpp"
#include "sphtwist/mesh_model.hpp"
#include "sphtwist/picard.hpp"
#include "sphtwist/suites.hpp"
#include "sphtwist/twist_engine.hpp"

namespace py = pybind11;
using namespace sphtwist;

namespace {

// pybind11 holders cannot be const; the library takes the const view.
using ModelPtr = std::shared_ptr<MeshModel>;

ModelPtr make_model(const std::string& diagram, int lo, int hi) {
  if (lo > hi) throw InvalidInput("window bounds out of order");
  return std::make_shared<MeshModel>(MeshModel::build(parse_diagram(diagram), {lo, hi}));
}

Vertex to_vertex(const std::pair<int, int>& p) { return {p.first, p.second}; }
std::pair<int, int> from_vertex(const Vertex& v) { return {v.row, v.pos}; }

SphericalSequenceSpec make_sequence(const std::string& label, const std::vector<std::pair<int, int>>& members,
                                    const std::vector<int>& degrees, std::optional<int> sphericity) {
  SphericalSequenceSpec s;
  s.label = label;
  for (const auto& m : members) s.members.push_back(to_vertex(m));
  s.degrees = degrees;
  s.sphericity = 0;
  if (sphericity) {
    s.sphericity = *sphericity;
  } else {
    for (int d : degrees) s.sphericity += d;
  }
  return s;
}

py::list suite_rows(const SuiteReport& r) {
  py::list out;
  for (const auto& c : r.checks) out.append(py::make_tuple(c.name, c.passed, c.detail));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spherical twist groups on Dynkin derived categories";

  // Raw type pointers: the module attribute keeps each one alive.
  static PyObject* computation_error =
      py::exception<ComputationError>(m, "ComputationError", PyExc_RuntimeError).release().ptr();
  static PyObject* insufficient_window =
      py::exception<InsufficientWindow>(m, "InsufficientWindow", computation_error).release().ptr();
  static PyObject* hypothesis_violated =
      py::exception<HypothesisViolated>(m, "HypothesisViolated", computation_error).release().ptr();
  static PyObject* parse_error = py::exception<ParseError>(m, "ParseError", PyExc_ValueError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InsufficientWindow& e) {
      PyErr_SetString(insufficient_window, e.what());
    } catch (const HypothesisViolated& e) {
      PyErr_SetString(hypothesis_violated, e.what());
    } catch (const ComputationError& e) {
      PyErr_SetString(computation_error, e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(parse_error, e.what());
    }
  });

  // --- mesh category
  py::class_<MeshModel, ModelPtr>(m, "MeshModel")
      .def(py::init(&make_model), py::arg("diagram"), py::arg("lo"), py::arg("hi"))
      .def_property_readonly("diagram", [](const MeshModel& mm) { return to_string(mm.diagram()); })
      .def_property_readonly("window", [](const MeshModel& mm) {
        return py::make_tuple(mm.window().lo, mm.window().hi);
      })
      .def_property_readonly("vertices", [](const MeshModel& mm) {
        std::vector<std::pair<int, int>> out;
        for (const auto& v : mm.vertices()) out.push_back(from_vertex(v));
        return out;
      })
      .def("shift", [](const MeshModel& mm, std::pair<int, int> v, int n) { return from_vertex(mm.shift(to_vertex(v), n)); },
           py::arg("v"), py::arg("power") = 1)
      .def("serre", [](const MeshModel& mm, std::pair<int, int> v, int n) { return from_vertex(mm.serre(to_vertex(v), n)); },
           py::arg("v"), py::arg("power") = 1)
      .def("hom_dim", [](const MeshModel& mm, std::pair<int, int> x, std::pair<int, int> y) {
        return hom_dim(mm, to_vertex(x), to_vertex(y));
      })
      .def("hom_dim_oracle", [](const MeshModel& mm, std::pair<int, int> x, std::pair<int, int> y) {
        return hom_dim_oracle(mm, to_vertex(x), to_vertex(y));
      })
      .def("total_hom", [](const MeshModel& mm, std::pair<int, int> x, std::pair<int, int> y) {
        return total_hom(mm, to_vertex(x), to_vertex(y));
      })
      .def("euler_form", [](const MeshModel& mm, std::pair<int, int> x, std::pair<int, int> y) {
        return euler_form(mm, to_vertex(x), to_vertex(y));
      })
      .def("__repr__", [](const MeshModel& mm) {
        std::ostringstream s;
        s << "MeshModel('" << to_string(mm.diagram()) << "', " << mm.window().lo << ", " << mm.window().hi << ")";
        return s.str();
      });

  py::class_<SphericalSequenceSpec>(m, "SphericalSequence")
      .def(py::init(&make_sequence), py::arg("label"), py::arg("members"), py::arg("degrees"),
           py::arg("sphericity") = py::none())
      .def_readonly("label", &SphericalSequenceSpec::label)
      .def_readonly("sphericity", &SphericalSequenceSpec::sphericity)
      .def_readonly("degrees", &SphericalSequenceSpec::degrees)
      .def_property_readonly("members", [](const SphericalSequenceSpec& s) {
        std::vector<std::pair<int, int>> out;
        for (const auto& v : s.members) out.push_back(from_vertex(v));
        return out;
      });

  m.def("standard_sequences", [](const std::string& d) { return standard_sequences(parse_diagram(d)); },
        "The E and E' of the worked D4 and A3 examples.");
  m.def("check_spherical", [](const MeshModel& mm, const SphericalSequenceSpec& s) {
    const auto r = check_spherical(mm, s);
    return py::make_tuple(r.valid, r.violations);
  });

  // --- twists
  py::class_<QuiverAutomorphism>(m, "Twist")
      .def_property_readonly("label", &QuiverAutomorphism::label)
      .def_property_readonly("domain_size", &QuiverAutomorphism::domain_size)
      .def("__call__", [](const QuiverAutomorphism& a, std::pair<int, int> v) { return from_vertex(a(to_vertex(v))); })
      .def("table", [](const QuiverAutomorphism& a) {
        std::map<std::pair<int, int>, std::pair<int, int>> out;
        for (const auto& [v, img] : a.vertex_map()) out.emplace(from_vertex(v), from_vertex(img));
        return out;
      });

  m.def(
      "derive_twist",
      [](ModelPtr model, const SphericalSequenceSpec& s) { return derive_automorphism(std::move(model), s); },
      py::arg("model"), py::arg("sequence"));
  m.def("builtin_d4_twists", [](ModelPtr model) {
    auto b = builtin_d4_actions(std::move(model));
    return py::make_tuple(b.t_e, b.t_e2);
  });
  m.def(
      "verify_relation",
      [](const std::vector<QuiverAutomorphism>& gens, const std::string& lhs, const std::string& rhs) {
        std::map<int, QuiverAutomorphism> g;
        for (std::size_t i = 0; i < gens.size(); ++i) g.emplace(static_cast<int>(i) + 1, gens[i]);
        return verify_relation(parse_word(lhs), parse_word(rhs), g);
      },
      py::arg("generators"), py::arg("lhs"), py::arg("rhs"), "Generator i + 1 of the words is generators[i].");
  m.def(
      "orbit_json",
      [](const std::vector<QuiverAutomorphism>& gens, const MeshModel& mm,
         const std::vector<SphericalSequenceSpec>& seeds, int depth) {
        std::vector<LabelledGenerator> lg;
        for (const auto& g : gens) lg.push_back({g.label(), g});
        std::vector<SphClass> classes;
        for (const auto& s : seeds) classes.push_back(sph_class(mm, s.members));
        return orbit_to_json(orbit_sph(lg, classes, depth));
      },
      py::arg("generators"), py::arg("model"), py::arg("seeds"), py::arg("depth") = 4);
  m.def(
      "detect_exceptional",
      [](ModelPtr model, const SphericalSequenceSpec& e, const SphericalSequenceSpec& e2, const std::string& which) {
        if (which != "A" && which != "B") throw InvalidInput("case must be 'A' or 'B'");
        return detect_exceptional(std::move(model), e, e2, which == "A" ? ExceptionalCase::A : ExceptionalCase::B);
      },
      py::arg("model"), py::arg("e"), py::arg("e2"), py::arg("case"));

  // --- groups
  m.def("normal_form", [](const std::string& spec, const std::string& word) {
    const auto g = parse_group_spec(spec);
    return to_string(normal_form(parse_word(word), g), g);
  });
  m.def("are_equal", [](const std::string& spec, const std::string& w1, const std::string& w2) {
    return are_equal(parse_word(w1), parse_word(w2), parse_group_spec(spec));
  });
  m.def(
      "classify",
      [](long k, long mm, long k2, long m2, long hom) {
        const auto d = classify_twist_group(k, mm, k2, m2, hom);
        py::dict out;
        out["tag"] = to_string(d.tag);
        out["notes"] = d.notes;
        if (d.tag == DescriptionTag::QuotientFamily) {
          out["family"] = to_string(d.family);
          out["center_power_multiplier"] = d.center_power_multiplier;
        }
        return out;
      },
      py::arg("k"), py::arg("m"), py::arg("k2"), py::arg("m2"), py::arg("total_hom"));

  // --- Lambda_k and its Picard group
  m.def("lambda_info", [](int k) {
    const auto alg = build_lambda(k);
    const auto data = spherical_data(alg);
    py::dict out;
    out["dimension"] = alg.dimension();
    out["top_degree"] = alg.top_degree();
    out["cartan"] = cartan_matrix(alg);
    out["relations_vanish"] = relations_vanish(alg);
    out["nakayama_order"] = nakayama(alg).order;
    out["a"] = data.a;
    out["a2"] = data.a2;
    out["central_action_matches_k0"] = central_action_matches_k0(alg);
    return out;
  });
  m.def("picard_normal_form", [](const std::string& el, int k) { return to_string(pic_normal_form(parse_picard(el, k))); },
        py::arg("element"), py::arg("k"));
  m.def("picard_equal", [](const std::string& x, const std::string& y, int k) {
    return pic_equal(parse_picard(x, k), parse_picard(y, k));
  }, py::arg("x"), py::arg("y"), py::arg("k"));

  // --- suites and the command line
  m.def("verify_d4", [](int lo, int hi) { return suite_rows(verify_d4_suite({lo, hi})); }, py::arg("lo") = -12,
        py::arg("hi") = 12);
  m.def("verify_a3", [](int lo, int hi) { return suite_rows(verify_a3_suite({lo, hi})); }, py::arg("lo") = -12,
        py::arg("hi") = 12);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
