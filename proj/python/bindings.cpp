#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "quasiline/error.hpp"
#include "quasiline/fingerprint.hpp"
#include "quasiline/incidence.hpp"
#include "quasiline/io.hpp"
#include "quasiline/lines.hpp"
#include "quasiline/realization.hpp"
#include "quasiline/straighten.hpp"
#include "quasiline/surface_map.hpp"
#include "quasiline/svg.hpp"
#include "quasiline/sweep.hpp"
#include "quasiline/wiring.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
namespace ql = quasiline;

namespace {

// JSON crosses the boundary as text; the json module does the rest.
py::object to_py(const ql::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

ql::Json from_py(const py::object& o) {
  return ql::Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

ql::WiringDiagram as_diagram(const py::object& o) {
  if (py::isinstance<ql::WiringDiagram>(o)) return o.cast<ql::WiringDiagram>();
  return ql::diagram_from_json(from_py(o));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quasiline arrangements, generalized wiring diagrams and their surface maps";

  static py::exception<ql::Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ql::Error& e) {
      py::set_error(error, e.what());
    } catch (const ql::Json::exception& e) {
      py::set_error(error, (std::string("ParseError: ") + e.what()).c_str());
    }
  });

  py::class_<ql::IncidenceStructure>(m, "IncidenceStructure")
      .def_static("from_text", &ql::parse_lines_of_points, "text"_a, "Lines-of-points text, one line per row.")
      .def_property_readonly("points", &ql::IncidenceStructure::point_labels)
      .def_property_readonly("lines", &ql::IncidenceStructure::line_labels)
      .def_property_readonly("flag_count", &ql::IncidenceStructure::flag_count)
      .def("is_lineal", [](const ql::IncidenceStructure& c) { return ql::is_lineal(c); })
      .def("girth", [](const ql::IncidenceStructure& c) { return ql::girth(ql::levi_graph(c)); })
      .def("signature",
           [](const ql::IncidenceStructure& c) -> std::optional<py::tuple> {
             auto s = ql::configuration_signature(c);
             if (!s) return std::nullopt;
             return py::make_tuple(s->points, s->point_degree, s->lines, s->line_degree);
           })
      .def("isomorphic", [](const ql::IncidenceStructure& a, const ql::IncidenceStructure& b) {
        return ql::are_isomorphic(a, b).has_value();
      })
      .def("__str__", &ql::format_lines_of_points);

  py::class_<ql::PermSequence>(m, "PermSequence")
      .def(py::init([](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& moves,
                       std::vector<std::size_t> designated) {
             std::vector<ql::Move> mv;
             for (auto [s, l] : moves) mv.push_back({s, l});
             return ql::PermSequence(n, std::move(mv), std::move(designated));
           }),
           "n"_a, "moves"_a, "designated"_a = std::vector<std::size_t>{})
      .def_property_readonly("n", &ql::PermSequence::n)
      .def_property_readonly("moves",
                             [](const ql::PermSequence& s) {
                               std::vector<std::pair<std::size_t, std::size_t>> out;
                               for (const auto& mv : s.moves()) out.emplace_back(mv.start, mv.length);
                               return out;
                             })
      .def_property_readonly("designated", &ql::PermSequence::designated)
      .def("permutation_after", &ql::permutation_after, "t"_a)
      .def("pair_move_count", &ql::pair_move_count, "x"_a, "y"_a)
      .def("to_json", [](const ql::PermSequence& s) { return to_py(ql::to_json(s)); })
      .def(py::self == py::self);

  py::class_<ql::WiringDiagram>(m, "WiringDiagram")
      .def_static("from_json", [](const py::object& o) { return ql::diagram_from_json(from_py(o)); })
      .def_property_readonly("n", &ql::WiringDiagram::n)
      .def("__len__", &ql::WiringDiagram::size)
      .def_property_readonly("events",
                             [](const ql::WiringDiagram& d) {
                               py::list out;
                               for (const auto& e : d.events()) out.append(py::make_tuple(e.start, e.length, e.point));
                               return out;
                             })
      .def("to_json", [](const ql::WiringDiagram& d) { return to_py(ql::to_json(d)); })
      .def(py::self == py::self);

  m.def("classify", [](const ql::PermSequence& s) { return std::string(ql::to_string(ql::classify(s))); });
  m.def(
      "realize",
      [](const ql::IncidenceStructure& c, const std::optional<py::object>& plan) {
        auto p = plan ? ql::plan_from_json(c, from_py(*plan)) : ql::default_plan(c);
        auto r = ql::realize(c, p);
        return py::make_tuple(r.seq, ql::diagram_from_realization(r));
      },
      "structure"_a, "plan"_a = py::none(), "Returns (sequence, diagram).");
  m.def("diagram_from_sequence", &ql::diagram_from_sequence);
  m.def("sequence_from_diagram", &ql::sequence_from_diagram);
  m.def("topological_unwanted_bound", &ql::topological_unwanted_bound, "n"_a, "k"_a);
  m.def("sweep_order", [](const py::object& d) { return ql::topological_sweep(as_diagram(d)); });
  m.def(
      "diagram_from_lines",
      [](const py::object& geo, std::uint64_t seed) {
        auto g = ql::geo_from_json(from_py(geo));
        return ql::diagram_from_lines(g.lines, g.points, seed).diagram;
      },
      "geometry"_a, "seed"_a = 20240607,
      "geometry = {'lines': [{'label', 'a', 'b', 'c'}], 'points': [{'label', 'x', 'y'}]}, "
      "numbers as ints or 'p/q' strings.");
  m.def("map_scheme", [](const py::object& d) { return to_py(ql::to_json(ql::scheme_from_diagram(as_diagram(d)))); });
  m.def("map_summary", [](const py::object& d) {
    return to_py(ql::to_json(ql::trace_and_summarize(ql::scheme_from_diagram(as_diagram(d)))));
  });
  m.def("fingerprint", [](const py::object& d) { return ql::fingerprint(ql::scheme_from_diagram(as_diagram(d))); });
  m.def("straighten", [](const py::object& d) {
    auto diagram = as_diagram(d);
    auto g = ql::straighten(diagram);
    auto j = ql::to_json(g);
    j["audit_ok"] = ql::audit_drawing(diagram, g).ok();
    return to_py(j);
  });
  m.def("wiring_svg", [](const py::object& d) { return ql::diagram_svg(as_diagram(d)); });
  m.def("drawing_svg", [](const py::object& d) {
    auto diagram = as_diagram(d);
    return ql::drawing_svg(diagram, ql::straighten(diagram));
  });
}
