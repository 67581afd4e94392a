#include "ftpoly/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "ftpoly/errors.hpp"
#include "ftpoly/export.hpp"
#include "ftpoly/facefill.hpp"
#include "ftpoly/fixtures.hpp"
#include "ftpoly/verify.hpp"

namespace ftpoly {

namespace {

using nlohmann::json;

struct Options {
  std::string corner = "c90";
  std::string height = "1";
  std::string scale = "1";
  std::string radius = "6";
  std::string margin = "2";
  std::string format;
  int precision = kDefaultPrecision;
  std::string output;
  std::string config;
  bool swap_walls = false;

  std::string point;
  std::string neighbor;
  int figure = -1;
  std::string method = "both";
  std::string fixture = "s1";
};

// Values from --config fill in whatever the command line left unset.
void apply_config(Options& o, const CLI::App& app) {
  if (o.config.empty()) return;
  std::ifstream in(o.config);
  if (!in) throw UsageError("cannot read config file " + o.config);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config file " + o.config + " is not valid JSON: " + e.what());
  }
  auto str = [&](const char* key, std::string& dst) {
    if (!cfg.contains(key) || app.count(std::string("--") + key) > 0) return;
    const auto& v = cfg.at(key);
    dst = v.is_string() ? v.get<std::string>() : v.dump();
  };
  str("corner", o.corner);
  str("height", o.height);
  str("scale", o.scale);
  str("radius", o.radius);
  str("margin", o.margin);
  str("format", o.format);
  str("output", o.output);
  if (cfg.contains("precision") && app.count("--precision") == 0) o.precision = cfg.at("precision").get<int>();
  if (cfg.contains("swap_walls") && app.count("--swap-walls") == 0) o.swap_walls = cfg.at("swap_walls").get<bool>();
}

HoneypieConfig honeypie_config(const Options& o) {
  HoneypieConfig cfg;
  cfg.corner = parse_corner(o.corner);
  cfg.c = Rational::parse(o.height);
  cfg.scale = Rational::parse(o.scale);
  cfg.swap_walls = o.swap_walls;
  cfg.validate();
  return cfg;
}

Window window(const Options& o) { return Window(Rational::parse(o.radius), Rational::parse(o.margin)); }

Vec3Q parse_point(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 3) throw ParseError("point must be three comma-separated coordinates, got '" + text + "'");
  return {QSqrt3::parse(parts[0]), QSqrt3::parse(parts[1]), QSqrt3::parse(parts[2])};
}

json point_json(const Vec3Q& p) { return {p[0].to_string(), p[1].to_string(), p[2].to_string()}; }

json isometry_json(const Isometry& s) {
  json out = json::array();
  for (const auto& e : s.to_strings()) out.push_back(e);
  return out;
}

std::string point_text(const Vec3Q& p) { return p.to_string(); }

const Vec3Q& named(const NamedPoints& n, const std::string& name) {
  static const std::map<std::string, Vec3Q NamedPoints::*> table = {
      {"v", &NamedPoints::v},   {"w", &NamedPoints::w},   {"x", &NamedPoints::x},   {"y", &NamedPoints::y},
      {"v1", &NamedPoints::v1}, {"v2", &NamedPoints::v2}, {"w1", &NamedPoints::w1}, {"w2", &NamedPoints::w2},
      {"x1", &NamedPoints::x1}, {"x2", &NamedPoints::x2}, {"y1", &NamedPoints::y1}, {"y2", &NamedPoints::y2}};
  auto it = table.find(name);
  if (it == table.end()) throw UsageError("unknown named point '" + name + "'");
  return n.*(it->second);
}

// Planar neighbours use the in-plane group, leveled ones the full group.
GroupSpec group_for(const HoneypieConfig& cfg, const std::string& neighbor) {
  const bool planar = neighbor.size() == 1;
  return planar ? honeypie_planar_generators(cfg) : honeypie_generators(cfg);
}

class Runner {
 public:
  Runner(Options o, std::ostream& out, std::ostream& err) : o_(std::move(o)), out_(out), err_(err) {}

  int run(const std::string& cmd) {
    if (cmd == "orbit") return orbit();
    if (cmd == "stabilizer") return stabilizer();
    if (cmd == "lattice-classes") return lattice_classes();
    if (cmd == "star") return star_cmd();
    if (cmd == "graph") return graph();
    if (cmd == "vertex-figures") return vertex_figures();
    if (cmd == "trace-face") return trace();
    if (cmd == "build") return build();
    if (cmd == "s1") return s1();
    if (cmd == "verify") return verify();
    if (cmd == "export") return export_cmd();
    throw UsageError("unknown subcommand " + cmd);
  }

 private:
  std::string report_format() const {
    const std::string f = o_.format.empty() ? "json" : o_.format;
    if (f != "json" && f != "text") throw UsageError("reports support --format json or text, not '" + f + "'");
    return f;
  }

  void emit(const std::string& text) {
    if (o_.output.empty()) {
      out_ << text;
      return;
    }
    std::filesystem::path path(o_.output);
    if (path.is_relative()) {
      if (const char* dir = std::getenv("FTPOLY_OUTPUT_DIR"); dir != nullptr && *dir != '\0') path = dir / path;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write " + path.string());
    file << text;
    if (!file) throw Error("failed writing " + path.string());
    err_ << "wrote " << path.string() << "\n";
  }

  void emit_report(const json& doc, const std::string& text) {
    emit(report_format() == "json" ? doc.dump(2) + "\n" : text);
  }

  Vec3Q chosen_point(const HoneypieConfig& cfg) const {
    return o_.point.empty() ? base_point(cfg) : parse_point(o_.point);
  }

  std::string neighbor(const char* fallback) const { return o_.neighbor.empty() ? fallback : o_.neighbor; }

  SceneMetadata metadata(const HoneypieConfig& cfg, const Window& w, const std::string& what) const {
    return {{"object", what},
            {"corner", corner_name(cfg.corner)},
            {"height", cfg.c.to_string()},
            {"scale", cfg.scale.to_string()},
            {"swap_walls", cfg.swap_walls ? "true" : "false"},
            {"radius", w.radius.to_string()},
            {"margin", w.margin.to_string()}};
  }

  void emit_mesh(const Polyhedron& p, SceneMetadata meta) {
    const std::string f = o_.format.empty() ? "json" : o_.format;
    meta["vertices"] = std::to_string(p.vertices().size());
    meta["edges"] = std::to_string(p.edges().size());
    meta["faces"] = std::to_string(p.faces().size());
    emit(export_mesh(p, parse_export_format(f), o_.precision, meta));
  }

  int orbit() {
    const auto cfg = honeypie_config(o_);
    const auto w = window(o_);
    const auto pts = orbit_points(honeypie_generators(cfg), chosen_point(cfg), w);
    json doc{{"count", pts.size()}, {"points", json::array()}};
    std::string text = "orbit points: " + std::to_string(pts.size()) + "\n";
    for (const auto& p : pts) {
      doc["points"].push_back(point_json(p));
      text += point_text(p) + "\n";
    }
    emit_report(doc, text);
    return 0;
  }

  int stabilizer() {
    const auto cfg = honeypie_config(o_);
    const auto p = chosen_point(cfg);
    const auto stab = point_stabilizer(honeypie_generators(cfg), p);
    json doc{{"point", point_json(p)}, {"order", stab.size()}, {"elements", json::array()}};
    for (const auto& s : stab) doc["elements"].push_back(isometry_json(s));
    emit_report(doc, "stabilizer of " + p.to_string() + ": order " + std::to_string(stab.size()) + "\n");
    return 0;
  }

  int lattice_classes() {
    const auto cfg = honeypie_config(o_);
    const auto w = window(o_);
    const auto g = honeypie_generators(cfg);
    const auto lattice = translation_lattice(g, w);
    const auto pts = orbit_points(g, chosen_point(cfg), w);
    std::vector<Vec3Q> layer;
    for (const auto& p : pts) {
      if (p[2].is_zero()) layer.push_back(p);
    }
    json doc{{"basis", json::array()}};
    std::string text;
    for (const auto& b : lattice.vectors()) {
      doc["basis"].push_back(point_json(b));
      text += "basis " + b.to_string() + "\n";
    }
    for (const auto& [name, set] : {std::pair<std::string, const std::vector<Vec3Q>*>{"orbit", &pts}, {"h0_layer", &layer}}) {
      if (set->empty()) continue;
      const auto classes = lattice_class_partition(*set, lattice);
      json list = json::array();
      for (const auto& c : classes) list.push_back({{"representative", point_json(c.representative)}, {"members", c.members.size()}});
      doc[name] = {{"points", set->size()}, {"classes", list}};
      text += name + ": " + std::to_string(set->size()) + " points in " + std::to_string(classes.size()) + " lattice classes\n";
    }
    emit_report(doc, text);
    return 0;
  }

  int star_cmd() {
    const auto cfg = honeypie_config(o_);
    const auto n = named_points(cfg);
    const std::string nb = neighbor("v");
    const auto edges = star(group_for(cfg, nb), n.u, named(n, nb));
    json doc{{"base_point", point_json(n.u)}, {"neighbor", nb}, {"size", edges.size()}, {"endpoints", json::array()}};
    std::string text = "star of [u " + nb + "]: " + std::to_string(edges.size()) + " edges\n";
    for (const auto& p : star_endpoints(edges, n.u)) {
      doc["endpoints"].push_back(point_json(p));
      text += "  " + point_text(p) + "\n";
    }
    emit_report(doc, text);
    return 0;
  }

  int graph() {
    const auto cfg = honeypie_config(o_);
    const auto w = window(o_);
    const auto n = named_points(cfg);
    const std::string nb = neighbor("v");
    const auto g = edge_orbit(group_for(cfg, nb), Edge(n.u, named(n, nb)), w);
    const auto conn = connectivity_check(g, n.u, w);
    json doc{{"vertices", json::array()}, {"edges", json::array()}, {"connectivity", conn.describe(w)}};
    for (const auto& v : g.vertices()) doc["vertices"].push_back(point_json(v));
    for (const auto& e : g.edges()) doc["edges"].push_back({*g.index_of(e.a), *g.index_of(e.b)});
    emit_report(doc, std::to_string(g.vertices().size()) + " vertices, " + std::to_string(g.edges().size()) +
                         " edges; " + conn.describe(w) + "\n");
    return 0;
  }

  struct FigureChoice {
    HoneypieConfig cfg;
    NamedPoints n;
    std::string nb;
    GroupSpec g;
    std::vector<Isometry> stab;
    VertexFigureEnumeration figures;
    VertexFigure figure;
  };

  FigureChoice choose_figure(const char* fallback) const {
    FigureChoice c;
    c.cfg = honeypie_config(o_);
    c.n = named_points(c.cfg);
    c.nb = neighbor(fallback);
    c.g = group_for(c.cfg, c.nb);
    c.stab = point_stabilizer(c.g, c.n.u);
    c.figures = enumerate_vertex_figures(star(c.stab, c.n.u, named(c.n, c.nb)), c.stab);
    if (o_.figure >= 0) {
      if (static_cast<std::size_t>(o_.figure) >= c.figures.alternating.size()) {
        throw UsageError("--figure " + std::to_string(o_.figure) + " out of range (" +
                         std::to_string(c.figures.alternating.size()) + " alternating figures)");
      }
      c.figure = c.figures.alternating[static_cast<std::size_t>(o_.figure)];
    } else if (c.nb == "v1") {
      c.figure = select_spiral_figure(c.figures, c.n, c.stab);
    } else {
      if (c.figures.alternating.empty()) throw AlternationViolatedError("no alternating vertex figure");
      c.figure = c.figures.alternating.front();
    }
    return c;
  }

  static json classes_json(const std::vector<AngleClass>& classes) {
    json out = json::array();
    for (const auto& c : classes) {
      out.push_back({{"label", c.label}, {"cos", c.cos_value.to_string()}, {"positions", c.positions},
                     {"representative", {point_json(c.p), point_json(c.q)}}});
    }
    return out;
  }

  int vertex_figures() {
    const auto cfg = honeypie_config(o_);
    const auto n = named_points(cfg);
    const std::string nb = neighbor("v");
    const auto g = group_for(cfg, nb);
    const auto stab = point_stabilizer(g, n.u);
    const auto figs = enumerate_vertex_figures(star(stab, n.u, named(n, nb)), stab);
    json doc{{"neighbor", nb}, {"cyclic_orders", figs.all.size()}, {"alternating", json::array()}};
    std::string text = std::to_string(figs.all.size()) + " cyclic orders, " + std::to_string(figs.alternating.size()) +
                       " alternating\n";
    for (const auto& vf : figs.alternating) {
      json cyc = json::array();
      for (const auto& p : vf.cycle) cyc.push_back(point_json(p));
      const auto classes = angle_classes(vf, stab);
      doc["alternating"].push_back({{"cycle", cyc}, {"angle_classes", classes_json(classes)}});
      text += "  " + std::to_string(classes.size()) + " angle classes\n";
    }
    emit_report(doc, text);
    return 0;
  }

  static TraceMethod parse_method(const std::string& m) {
    if (m == "transport") return TraceMethod::kTransport;
    if (m == "raw") return TraceMethod::kRaw;
    if (m == "both") return TraceMethod::kBoth;
    throw UsageError("unknown trace method '" + m + "'");
  }

  int trace() {
    const auto c = choose_figure("v1");
    const auto w = window(o_);
    FaceContext ctx(c.g, c.figure, edge_orbit(c.g, Edge(c.n.u, named(c.n, c.nb)), w), w);
    const Face f = ctx.trace(c.figure.cycle[0], c.n.u, c.figure.cycle[1], parse_method(o_.method));
    json doc{{"closed", f.closed}, {"truncated", f.truncated}, {"path", json::array()}, {"angle_labels", json::array()}};
    std::string text = std::string(f.closed ? "closed" : "truncated") + " face, " + std::to_string(f.path.size()) +
                       " vertices\n";
    const std::size_t m = f.path.size();
    for (std::size_t k = 0; k < m; ++k) {
      doc["path"].push_back(point_json(f.path[k]));
      std::string label;
      if (f.closed || (k > 0 && k + 1 < m)) {
        auto cls = ctx.classify_angle(f.path[(k + m - 1) % m], f.path[k], f.path[(k + 1) % m]);
        label = cls ? ctx.classes()[*cls].label : "?";
        doc["angle_labels"].push_back(label);
      }
      text += "  " + point_text(f.path[k]) + (label.empty() ? "" : "  " + label) + "\n";
    }
    emit_report(doc, text);
    return 0;
  }

  int build() {
    const auto c = choose_figure("v1");
    const auto w = window(o_);
    const auto p = build_polyhedron(c.g, c.n.u, named(c.n, c.nb), c.figure, w);
    emit_mesh(p, metadata(c.cfg, w, "polyhedron [u " + c.nb + "]"));
    return 0;
  }

  int s1() {
    const auto cfg = honeypie_config(o_);
    const auto w = window(o_);
    emit_mesh(build_s1(cfg, w), metadata(cfg, w, "S1"));
    return 0;
  }

  struct Subject {
    Polyhedron p;
    GroupSpec g;
    Window w{Rational(6), Rational(2)};
    SceneMetadata meta;
  };

  Subject subject() const {
    if (o_.fixture == "s1") {
      const auto cfg = honeypie_config(o_);
      Subject s{build_s1(cfg, window(o_)), honeypie_generators(cfg), window(o_), {}};
      s.meta = {{"object", "S1"}, {"corner", corner_name(cfg.corner)}, {"height", cfg.c.to_string()},
                {"scale", cfg.scale.to_string()}, {"radius", s.w.radius.to_string()}, {"margin", s.w.margin.to_string()}};
      return s;
    }
    const Window fw = fixtures::fixture_window();
    if (o_.fixture == "cube") return {fixtures::cube(), fixtures::cube_group(), fw, {{"object", "cube"}}};
    if (o_.fixture == "cube-missing-face") {
      return {fixtures::cube_missing_face(), fixtures::cube_group(), fw, {{"object", "cube-missing-face"}}};
    }
    if (o_.fixture == "two-scale-cubes") {
      return {fixtures::two_scale_cubes(), fixtures::cube_group(), fw, {{"object", "two-scale-cubes"}}};
    }
    if (o_.fixture == "hex-prism") {
      return {fixtures::hexagonal_prism(), fixtures::hexagonal_prism_group(), fw, {{"object", "hex-prism"}}};
    }
    throw UsageError("unknown fixture '" + o_.fixture + "'");
  }

  int verify() {
    const Subject s = subject();
    const auto axioms = verify_axioms(s.p, s.w);
    const auto sym = symmetry_report(s.g, s.p, s.w);
    auto ax = [](const AxiomResult& a) { return json{{"pass", a.pass}, {"witness", a.witness}}; };
    json doc{{"core_radius", axioms.core_radius.to_string()},
             {"axioms",
              {{"edge_two_faces", ax(axioms.edge_two_faces)},
               {"vertex_circuit", ax(axioms.vertex_circuit)},
               {"connected", ax(axioms.connected)},
               {"locally_finite", ax(axioms.locally_finite)}}},
             {"orbits",
              {{"vertices", sym.vertex_orbits},
               {"edges", sym.edge_orbits},
               {"faces", sym.face_orbits},
               {"flags", sym.flag_orbits}}},
             {"fully_transitive", sym.fully_transitive()}};
    emit_report(doc, axioms.describe() + sym.describe());
    if (!axioms.all_pass()) {
      for (const auto* a : {&axioms.edge_two_faces, &axioms.vertex_circuit, &axioms.connected, &axioms.locally_finite}) {
        if (!a->pass) err_ << "axiom failure: " << a->witness << "\n";
      }
      return 1;
    }
    return 0;
  }

  int export_cmd() {
    const Subject s = subject();
    emit_mesh(s.p, s.meta);
    return 0;
  }

  Options o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fully transitive polyhedra from the honeypie crystallographic group", "ftpoly"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--corner", o.corner, "Footprint corner carrying the base point: c30, c90, c60");
  app.add_option("--height", o.height, "Slice height c (rational)");
  app.add_option("--scale", o.scale, "Footprint scale (rational)");
  app.add_flag("--swap-walls", o.swap_walls, "Exchange the roles of H1 and H2");
  app.add_option("--radius", o.radius, "Window radius (rational)");
  app.add_option("--margin", o.margin, "Window margin (rational)");
  app.add_option("--format", o.format, "off, obj or json for meshes; json or text for reports");
  app.add_option("--precision", o.precision, "Significant digits for decimal output");
  app.add_option("--output", o.output, "Output file (relative paths honour FTPOLY_OUTPUT_DIR)");
  app.add_option("--config", o.config, "JSON file with defaults for the options above");

  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
  auto with_point = [&](CLI::App* s) { s->add_option("--point", o.point, "Point as x,y,z in Q(sqrt3)"); };
  auto with_neighbor = [&](CLI::App* s) {
    s->add_option("--neighbor", o.neighbor, "Named neighbour of u: v, w, x, y or leveled v1, x2, ...");
  };
  auto with_figure = [&](CLI::App* s) {
    s->add_option("--figure", o.figure, "Index among alternating vertex figures");
  };
  with_point(sub("orbit", "Orbit of the base point in the window"));
  with_point(sub("stabilizer", "Stabilizer of the base point"));
  with_point(sub("lattice-classes", "Translation lattice and lattice classes of the orbit"));
  with_neighbor(sub("star", "Star of [u neighbour] under the stabilizer of u"));
  with_neighbor(sub("graph", "Edge orbit of [u neighbour] and connectivity"));
  with_neighbor(sub("vertex-figures", "Vertex figures of the star, with angle classes"));
  auto* tr = sub("trace-face", "Trace one face from the figure's first angle");
  with_neighbor(tr);
  with_figure(tr);
  tr->add_option("--method", o.method, "transport, raw or both");
  auto* bd = sub("build", "Build the polyhedron for a star and vertex figure");
  with_neighbor(bd);
  with_figure(bd);
  sub("s1", "Build the zig-zag spiralhedron S1");
  sub("verify", "Check the polyhedron axioms and orbit counts")
      ->add_option("--fixture", o.fixture, "s1, cube, cube-missing-face, two-scale-cubes, hex-prism");
  sub("export", "Export S1 or a fixture as a mesh")
      ->add_option("--fixture", o.fixture, "s1, cube, cube-missing-face, two-scale-cubes, hex-prism");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    apply_config(o, app);
    const std::string cmd = app.get_subcommands().front()->get_name();
    return Runner(o, out, err).run(cmd);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ftpoly
