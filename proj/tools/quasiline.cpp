// quasiline: realize incidence structures as quasiline arrangements and
// inspect the resulting diagrams, drawings and surface maps.

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "quasiline/arrangement.hpp"
#include "quasiline/error.hpp"
#include "quasiline/faces.hpp"
#include "quasiline/incidence.hpp"
#include "quasiline/io.hpp"
#include "quasiline/lines.hpp"
#include "quasiline/mutation.hpp"
#include "quasiline/realization.hpp"
#include "quasiline/straighten.hpp"
#include "quasiline/surface_map.hpp"
#include "quasiline/svg.hpp"
#include "quasiline/sweep.hpp"

namespace ql = quasiline;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240607;

struct Options {
  std::string input;
  std::string second;
  std::string output;
  std::string format = "json";
  std::string plan;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::array<std::size_t, 2>> insert_digon;
  std::optional<std::array<std::size_t, 2>> remove_digon;
  std::optional<std::array<std::size_t, 3>> triangle;
};

int exit_code(ql::ErrorKind k) {
  switch (k) {
    case ql::ErrorKind::DegreeTooLow:
    case ql::ErrorKind::UnknownId:
    case ql::ErrorKind::DuplicateId:
    case ql::ErrorKind::DuplicateLine:
    case ql::ErrorKind::InvalidInput:
      return 2;
    case ql::ErrorKind::ParseError:
      return 3;
    default:
      return 4;
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw ql::Error(ql::ErrorKind::InvalidInput, "cannot write " + o.output);
  out << text;
}

bool looks_like_json(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

ql::Json parse_json(const std::string& text, const std::string& path) {
  try {
    return ql::Json::parse(text);
  } catch (const ql::Json::parse_error& e) {
    throw ql::ParseError(path + ": " + e.what(), 0, e.byte);
  }
}

ql::Realization realize_file(const Options& o, const std::string& text) {
  auto c = ql::parse_lines_of_points(text);
  auto plan = o.plan.empty() ? ql::default_plan(c)
                             : ql::plan_from_json(c, parse_json(ql::read_text_file(o.plan), o.plan));
  return ql::realize(c, plan);
}

// Accepts a .lines file, a sequence or realization, a diagram, or straight lines.
ql::WiringDiagram load_diagram(const Options& o, const std::string& path) {
  const std::string text = ql::read_text_file(path);
  if (!looks_like_json(text)) return ql::diagram_from_realization(realize_file(o, text));
  const ql::Json j = parse_json(text, path);
  if (j.contains("events")) return ql::diagram_from_json(j);
  if (j.contains("moves")) return ql::diagram_from_realization(ql::realization_from_json(j));
  if (j.contains("lines")) {
    auto geo = ql::geo_from_json(j);
    auto r = ql::diagram_from_lines(geo.lines, geo.points, o.seed);
    std::clog << "chart candidates rejected: " << r.chart_attempts << "\n";
    return r.diagram;
  }
  throw ql::Error(ql::ErrorKind::InvalidInput, path + ": unrecognised JSON document");
}

int cmd_validate(const Options& o) {
  auto c = ql::parse_lines_of_points(ql::read_text_file(o.input));
  auto g = ql::levi_graph(c);
  auto sig = ql::configuration_signature(c);
  bool lineal = ql::is_lineal(c);
  auto gir = ql::girth(g);
  std::string kind = "mixed degrees";
  if (sig) {
    kind = (sig->points == sig->lines && sig->point_degree == sig->line_degree)
               ? "(" + std::to_string(sig->points) + "_" + std::to_string(sig->point_degree) + ")"
               : "(" + std::to_string(sig->points) + "_" + std::to_string(sig->point_degree) + "," +
                     std::to_string(sig->lines) + "_" + std::to_string(sig->line_degree) + ")";
  }
  if (o.format == "text") {
    std::ostringstream out;
    out << (lineal ? "lineal" : "not lineal") << ", " << kind << "\n";
    out << "points " << c.point_count() << ", lines " << c.line_count() << ", flags " << c.flag_count() << "\n";
    out << "levi vertices " << g.vertex_count() << ", edges " << g.edges.size() << ", girth "
        << (gir ? std::to_string(*gir) : "inf") << "\n";
    emit(o, out.str());
    return 0;
  }
  ql::Json j{{"lineal", lineal},
             {"kind", kind},
             {"points", c.point_count()},
             {"lines", c.line_count()},
             {"flags", c.flag_count()},
             {"levi", {{"vertices", g.vertex_count()}, {"edges", g.edges.size()}, {"girth", gir ? ql::Json(*gir) : ql::Json(nullptr)}}}};
  if (sig) j["signature"] = {sig->points, sig->point_degree, sig->lines, sig->line_degree};
  emit(o, ql::dump(j));
  return 0;
}

int cmd_realize(const Options& o) {
  auto r = realize_file(o, ql::read_text_file(o.input));
  ql::Json j = ql::to_json(r);
  j["class"] = ql::to_string(ql::classify(r.seq));
  j["unwanted_crossings"] = ql::unwanted_crossing_count(r);
  emit(o, ql::dump(j));
  return 0;
}

int cmd_wiring(const Options& o) {
  auto d = load_diagram(o, o.input);
  emit(o, o.format == "svg" ? ql::diagram_svg(d) : ql::dump(ql::to_json(d)));
  return 0;
}

int cmd_sweep(const Options& o) {
  auto d = load_diagram(o, o.input);
  auto g = ql::sweep_digraph(d);
  ql::Json arcs = ql::Json::array();
  for (const auto& a : g.arcs) arcs.push_back({a.from, a.to, a.line});
  auto marking = ql::find_monotone_marking(ql::induced_arrangement(d));
  ql::Json j{{"vertices", g.vertex_count},
             {"arcs", arcs},
             {"acyclic", ql::is_acyclic(g)},
             {"order", ql::topological_order(g)},
             {"marking", marking ? ql::Json(*marking) : ql::Json(nullptr)}};
  emit(o, ql::dump(j));
  return 0;
}

int cmd_map(const Options& o) {
  auto d = load_diagram(o, o.input);
  auto s = ql::scheme_from_diagram(d);
  auto m = ql::trace_and_summarize(s);
  ql::Json j = ql::to_json(m);
  j["saws"] = ql::straight_ahead_walks(s).size();
  if (o.format == "scheme") j["scheme"] = ql::to_json(s);
  emit(o, ql::dump(j));
  return 0;
}

int cmd_straighten(const Options& o) {
  auto d = load_diagram(o, o.input);
  auto g = ql::straighten(d);
  std::clog << "method: " << g.method << "\n";
  emit(o, o.format == "svg" ? ql::drawing_svg(d, g) : ql::dump(ql::to_json(g)));
  return 0;
}

int cmd_compare(const Options& o) {
  auto a = ql::trace_and_summarize(ql::scheme_from_diagram(load_diagram(o, o.input)));
  auto b = ql::trace_and_summarize(ql::scheme_from_diagram(load_diagram(o, o.second)));
  bool same = a.fingerprint == b.fingerprint;
  emit(o, std::string(same ? "equal" : "different") + "\n");
  return same ? 0 : 1;
}

int cmd_mutate(const Options& o) {
  auto d = load_diagram(o, o.input);
  if (o.insert_digon) d = ql::insert_digon(d, (*o.insert_digon)[0], (*o.insert_digon)[1]);
  if (o.remove_digon) d = ql::remove_digon(d, (*o.remove_digon)[0], (*o.remove_digon)[1]);
  if (o.triangle) d = ql::triangle_move(d, *o.triangle);
  emit(o, ql::dump(ql::to_json(d)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasiline arrangements, generalized wiring diagrams and their surface maps"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Seed for randomized chart search")->capture_default_str();

  auto io_opts = [&](CLI::App* sub, const char* formats) {
    sub->add_option("input", o.input, "Input file")->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--output", o.output, "Output file (default stdout)");
    sub->add_option("-f,--format", o.format, formats)->capture_default_str();
  };
  auto* validate = app.add_subcommand("validate", "Check a .lines incidence structure");
  io_opts(validate, "json | text");
  auto* realize = app.add_subcommand("realize", "Realize a .lines structure as a generalized allowable sequence");
  io_opts(realize, "json");
  realize->add_option("--plan", o.plan, "Plan JSON overriding line numbering, point order or line orders");
  auto* wiring = app.add_subcommand("wiring", "Emit the generalized wiring diagram");
  io_opts(wiring, "json | svg");
  wiring->add_option("--plan", o.plan, "Plan JSON for .lines input");
  auto* sweep = app.add_subcommand("sweep", "Sweep digraph and a topological sweep order");
  io_opts(sweep, "json");
  auto* map = app.add_subcommand("map", "Surface map summary");
  io_opts(map, "json | scheme");
  map->add_option("--plan", o.plan, "Plan JSON for .lines input");
  auto* straighten = app.add_subcommand("straighten", "Bend-free straight-line drawing");
  io_opts(straighten, "json | svg");
  auto* compare = app.add_subcommand("compare", "Compare surface map fingerprints of two inputs");
  io_opts(compare, "text");
  compare->add_option("second", o.second, "Second input")->required()->check(CLI::ExistingFile);
  auto* mutate = app.add_subcommand("mutate", "Apply a digon or triangle move to a diagram");
  io_opts(mutate, "json");
  mutate->add_option("--insert-digon", o.insert_digon, "POSITION SLOT");
  mutate->add_option("--remove-digon", o.remove_digon, "FIRST SECOND (event indices)");
  mutate->add_option("--triangle", o.triangle, "I J K (event indices)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    // usage errors count as validation failures
    app.exit(e);
    return 2;
  }
  std::clog << "seed: " << o.seed << "\n";

  try {
    if (*validate) return cmd_validate(o);
    if (*realize) return cmd_realize(o);
    if (*wiring) return cmd_wiring(o);
    if (*sweep) return cmd_sweep(o);
    if (*map) return cmd_map(o);
    if (*straighten) return cmd_straighten(o);
    if (*compare) return cmd_compare(o);
    if (*mutate) return cmd_mutate(o);
  } catch (const ql::ParseError& e) {
    std::cerr << app.get_subcommands().front()->get_name() << ": " << e.what() << "\n";
    return 3;
  } catch (const ql::Error& e) {
    std::cerr << app.get_subcommands().front()->get_name() << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const ql::Json::exception& e) {
    std::cerr << app.get_subcommands().front()->get_name() << ": " << e.what() << "\n";
    return 3;
  }
  return 0;
}
