// Command-line front end. Every command prints JSON (or CSV for
// enumerations) to stdout or --out. Exit codes: 0 success, 1 a check failed,
// 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "curvecx/audit.hpp"

using namespace curvecx;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string surface;
  std::string tri_file;
  std::string to_file;
  int bound = -1;
  std::uint64_t seed = 7;
  std::string out;
  std::string suite;
  int walks = 100;
  int len = 8;
  int samples = 1000;
  int max_depth = -1;
  int radius = 2;
  int edge = -1;
  int vertex = -1;
  std::string format = "json";
  std::vector<std::string> weights;
  std::vector<std::string> curve_files;
  std::string list;
};

Weights parse_ints(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ',' || c == '[' || c == ']') c = ' ';
  }
  std::istringstream in(normalized);
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + text + "'");
    }
  }
  return out;
}

class Runner {
public:
  explicit Runner(const Options& opt) : opt_(opt) {}

  SurfaceSig surface() const {
    if (opt_.surface.empty()) throw UsageError("--surface is required");
    return SurfaceSig::parse(opt_.surface);
  }

  int bound() const {
    if (opt_.bound < 0) throw UsageError("--bound is required");
    return opt_.bound;
  }

  // --tri FILE, otherwise the reference triangulation of --surface.
  Triangulation triangulation() const {
    if (!opt_.tri_file.empty()) return triangulation_from_json(read_json_file(opt_.tri_file));
    return build_reference(surface());
  }

  bool uses_reference() const { return opt_.tri_file.empty(); }

  std::vector<Weights> curves(const Triangulation& tri) const {
    std::vector<Weights> out;
    for (const auto& w : opt_.weights) out.push_back(parse_ints(w));
    for (const auto& path : opt_.curve_files) {
      const CurveFile file = curve_file_from_json(read_json_file(path));
      const Triangulation owner = resolve_triangulation(file.triangulation, &tri);
      if (!(owner == tri)) throw UsageError("curve file " + path + " belongs to a different triangulation");
      out.push_back(file.weights);
    }
    for (const auto& w : out) {
      if (static_cast<int>(w.size()) != tri.edge_count()) {
        throw UsageError("curve has " + std::to_string(w.size()) + " weights, triangulation has " +
                         std::to_string(tri.edge_count()) + " edges");
      }
    }
    return out;
  }

  Weights single_curve(const Triangulation& tri) const {
    auto all = curves(tri);
    if (all.size() != 1) throw UsageError("exactly one curve expected (--weights or --curve)");
    return all.front();
  }

  void emit(const Json& j) const {
    if (opt_.out.empty()) {
      write_json(std::cout, j);
      return;
    }
    std::ofstream file(opt_.out);
    if (!file) throw UsageError("cannot write " + opt_.out);
    write_json(file, j);
  }

  void emit_text(const std::string& text) const {
    if (opt_.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream file(opt_.out);
    if (!file) throw UsageError("cannot write " + opt_.out);
    file << text;
  }

  int surface_info() const {
    const SurfaceSig sig = surface();
    Json j{{"surface", to_json(sig)}, {"shorthand", sig.to_string()}, {"euler_char", euler_char(sig)}};
    const auto dim = complex_dimension(sig);
    j["complex_dimension"] = dim ? Json(*dim) : Json(nullptr);
    try {
      const auto range = maximal_simplex_range(sig);
      j["maximal_simplex_range"] = Json{{"lo", range.lo}, {"hi", range.hi}, {"extrapolated", range.extrapolated}};
      if (!sig.orientable) {
        Json m = Json::object();
        for (int l = range.lo; l <= range.hi; ++l) m[std::to_string(l)] = onesided_count_for_dimension(sig, l);
        j["onesided_count_by_dimension"] = m;
      }
    } catch (const HypothesisError& e) {
      j["maximal_simplex_range"] = Json{{"error", e.what()}};
    }
    try {
      j["pants_count"] = pants_count(sig);
    } catch (const HypothesisError&) {
      j["pants_count"] = nullptr;
    }
    j["small_complex"] = to_string(small_complex_table(sig));
    try {
      const auto counts = ideal_triangulation_counts(sig);
      j["ideal_triangulation"] = Json{{"triangles", counts.triangles}, {"edges", counts.edges}};
    } catch (const std::exception&) {
      j["ideal_triangulation"] = nullptr;
    }
    emit(j);
    return 0;
  }

  int tri_build() const {
    emit(to_json(build_reference(surface())));
    return 0;
  }

  int tri_validate() const {
    if (opt_.tri_file.empty()) throw UsageError("--tri is required");
    const Json j = read_json_file(opt_.tri_file);
    try {
      const ValidationReport report = validate(gluing_from_json(j));
      emit(to_json(report));
      return report.ok() ? 0 : 1;
    } catch (const InvalidTriangulation& e) {
      emit(Json{{"valid", false}, {"violations", e.violations()}});
      return 1;
    }
  }

  int tri_flip() const {
    if (opt_.edge < 0) throw UsageError("--edge is required");
    const Triangulation tri = triangulation();
    if (opt_.edge >= tri.edge_count()) throw UsageError("--edge out of range");
    emit(to_json(flip(tri, opt_.edge)));
    return 0;
  }

  int tri_bfs() const {
    const FlipGraph graph = flip_bfs(triangulation(), opt_.radius);
    Json j = to_json(graph);
    j["radius"] = opt_.radius;
    emit(j);
    return 0;
  }

  int tri_path() const {
    const Triangulation source = triangulation();
    Triangulation target = source;
    std::vector<int> walk;
    if (!opt_.to_file.empty()) {
      target = triangulation_from_json(read_json_file(opt_.to_file));
    } else {
      SeededRng rng(opt_.seed);
      for (int i = 0; i < opt_.len; ++i) {
        const auto options = flippable_edges(target);
        if (options.empty()) break;
        walk.push_back(rng.pick(options));
        target = flip(target, walk.back());
      }
    }
    const int depth = opt_.max_depth >= 0 ? opt_.max_depth : opt_.len;
    const auto path = flip_path(source, target, depth);
    Json j{{"max_depth", depth}, {"found", path.has_value()}};
    if (opt_.to_file.empty()) j["walk"] = Json{{"seed", opt_.seed}, {"flips", walk}};
    if (path) {
      j["sequence"] = *path;
      j["length"] = path->size();
      j["replay_matches"] = canonical_form(apply_flips(source, *path)) == canonical_form(target);
    }
    emit(j);
    return path ? 0 : 1;
  }

  int curves_enumerate() const {
    const Triangulation tri = triangulation();
    const auto classes = enumerate_vertices(tri, bound());
    if (opt_.format == "csv") {
      std::ostringstream out;
      write_enumeration_csv(out, classes);
      emit_text(out.str());
      return 0;
    }
    Json list = Json::array();
    for (const auto& c : classes) list.push_back(to_json(c));
    emit(Json{{"triangulation", triangulation_id(tri, uses_reference())}, {"bound", bound()},
              {"count", classes.size()}, {"curves", list}});
    return 0;
  }

  int curves_classify() const {
    const Triangulation tri = triangulation();
    const Weights w = single_curve(tri);
    if (!is_admissible(tri, w)) throw UsageError("weights are not admissible");
    emit(to_json(classify(tri, w)));
    return 0;
  }

  int curves_cut() const {
    const Triangulation tri = triangulation();
    const Weights w = single_curve(tri);
    if (!is_admissible(tri, w)) throw UsageError("weights are not admissible");
    const auto pieces = cut_along(tri, w);
    Json list = Json::array();
    int chi = 0;
    for (const auto& p : pieces) {
      list.push_back(to_json(p));
      chi += p.euler_char();
    }
    emit(Json{{"pieces", list}, {"euler_char_sum", chi}, {"surface_euler_char", tri.report().euler_char}});
    return 0;
  }

  int curves_disjoint() const {
    const Triangulation tri = triangulation();
    const auto ws = curves(tri);
    if (ws.size() != 2) throw UsageError("exactly two curves expected");
    emit(Json{{"disjoint", disjoint(tri, ws[0], ws[1])}});
    return 0;
  }

  int curves_transport() const {
    if (opt_.edge < 0) throw UsageError("--edge is required");
    const Triangulation tri = triangulation();
    const Weights w = single_curve(tri);
    if (!is_admissible(tri, w)) throw UsageError("weights are not admissible");
    const Weights moved = transport_flip(tri, w, opt_.edge);
    const Triangulation other = flip(tri, opt_.edge);
    emit(Json{{"weights", moved}, {"triangulation", to_json(other)}});
    return 0;
  }

  ComplexSnapshot snapshot() const {
    if (!opt_.tri_file.empty()) return build_snapshot(triangulation(), bound());
    return build_snapshot(surface(), bound());
  }

  int complex_build() const {
    emit(to_json(snapshot()));
    return 0;
  }

  int complex_cliques() const {
    const auto snap = snapshot();
    const auto cliques = maximal_simplices(snap);
    Json list = Json::array();
    int certified = 0;
    bool identity = true;
    for (const auto& c : cliques) {
      list.push_back(to_json(c));
      if (c.certified) {
        ++certified;
        identity = identity && c.eq1_ok.value_or(true);
      }
    }
    emit(Json{{"surface", snap.surface().to_string()}, {"bound", snap.bound()}, {"count", cliques.size()},
              {"certified", certified}, {"cliques", list}});
    return identity ? 0 : 1;
  }

  int complex_duallink() const {
    const auto snap = snapshot();
    auto describe = [&](int v) {
      const DualLinkView view = dual_link(snap, v);
      Json j = to_json(view);
      j["kind"] = to_string(snap.vertex(v).kind);
      if (snap.vertex(v).separating()) j["side_partition"] = to_json(side_partition(snap, v));
      return j;
    };
    if (opt_.vertex >= 0) {
      if (opt_.vertex >= snap.size()) throw UsageError("--vertex out of range");
      emit(describe(opt_.vertex));
      return 0;
    }
    Json list = Json::array();
    int crossing = 0;
    for (int v = 0; v < snap.size(); ++v) {
      const DualLinkView view = dual_link(snap, v);
      Json entry{{"vertex", v},
                 {"kind", to_string(snap.vertex(v).kind)},
                 {"k_separating", snap.vertex(v).k_separating ? Json(*snap.vertex(v).k_separating) : Json(nullptr)},
                 {"link_size", view.vertices.size()},
                 {"components", view.components.size()}};
      if (snap.vertex(v).separating()) {
        const auto part = side_partition(snap, v);
        entry["crossing_dual_edges"] = part.crossing_dual_edges;
        crossing += part.crossing_dual_edges;
      }
      list.push_back(entry);
    }
    emit(Json{{"surface", snap.surface().to_string()}, {"bound", snap.bound()}, {"vertices", list}});
    return crossing == 0 ? 0 : 1;
  }

  int complex_pentagon() const {
    const auto snap = snapshot();
    const Weights ids = parse_ints(opt_.list);
    if (ids.size() != 5) throw UsageError("--vertices needs 5 vertex ids");
    std::array<int, 5> five{};
    std::copy(ids.begin(), ids.end(), five.begin());
    const bool result = is_pentagon(snap, five);
    emit(Json{{"vertices", ids}, {"pentagon", result}});
    return result ? 0 : 1;
  }

  int complex_simple_pair() const {
    const SurfaceSig sig = surface();
    const Triangulation tri = build_reference(sig);
    std::array<int, 2> arcs{};
    if (!opt_.list.empty()) {
      const Weights ids = parse_ints(opt_.list);
      if (ids.size() != 2) throw UsageError("--edges needs two edge indices");
      arcs = {ids[0], ids[1]};
    } else if (const auto pair = reference_arc_pair(tri, true)) {
      arcs = *pair;
    } else {
      throw UsageError("no reference arcs with one common endpoint");
    }
    for (int e : arcs) {
      if (e < 0 || e >= tri.edge_count()) throw UsageError("edge out of range");
    }
    const Weights alpha = arc_neighborhood_curves(tri, arcs[0]).front();
    const Weights beta = arc_neighborhood_curves(tri, arcs[1]).front();
    const auto snap = build_snapshot(tri, bound());
    const auto ia = snap.find(alpha);
    const auto ib = snap.find(beta);
    Json j{{"surface", sig.to_string()}, {"bound", snap.bound()}, {"edges", arcs}, {"alpha", alpha}, {"beta", beta}};
    if (!ia || !ib) {
      j["found"] = false;
      j["note"] = "alpha or beta exceeds the bound";
      emit(j);
      return 1;
    }
    bool ok = false;
    if (sig.orientable) {
      const auto gammas = find_sphere_witness(snap, *ia, *ib);
      j["found"] = gammas.has_value();
      if (gammas) {
        Json coords = Json::array();
        for (int g : *gammas) coords.push_back(snap.vertex(g).coords);
        j["gammas"] = coords;
        ok = sphere_pentagon_check(snap, *ia, *ib, *gammas);
        j["valid"] = ok;
      }
    } else {
      const auto witness = find_simple_pair_witness(snap, *ia, *ib);
      j["found"] = witness.has_value();
      if (witness) {
        Json coords = Json::array();
        for (int g : witness->gammas) coords.push_back(snap.vertex(g).coords);
        j["gammas"] = coords;
        j["delta"] = snap.vertex(witness->delta).coords;
        const auto failures = check_simple_pair_witness(snap, *ia, *ib, *witness);
        j["failures"] = failures;
        ok = failures.empty();
      }
    }
    if (!ok) j["note"] = "not found within bound W=" + std::to_string(snap.bound()) + "; not a refutation";
    emit(j);
    return ok ? 0 : 1;
  }

  int complex_chain() const {
    const Triangulation tri = triangulation();
    const Weights edges = parse_ints(opt_.list);
    const bool result = is_chain(tri, edges);
    emit(Json{{"edges", edges}, {"chain", result}});
    return result ? 0 : 1;
  }

  int complex_good_triangles() const {
    emit(Json{{"good_triangles", good_triangles(triangulation())}});
    return 0;
  }

  int audit() const {
    AuditConfig config;
    config.suite = opt_.suite;
    if (!opt_.surface.empty()) config.surface = surface();
    if (opt_.bound >= 0) config.bound = opt_.bound;
    config.seed = opt_.seed;
    config.walks = opt_.walks;
    config.len = opt_.len;
    config.samples = opt_.samples;
    if (opt_.max_depth >= 0) config.max_depth = opt_.max_depth;
    config.radius = opt_.radius;
    const AuditReport report = run_suite(config);
    emit(report.to_json());
    return report.ok() ? 0 : 1;
  }

private:
  const Options& opt_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curves, triangulations and curve-complex snapshots on punctured surfaces"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--surface", opt.surface, "Surface, e.g. N3,1 or S{0,5}");
    cmd->add_option("--tri", opt.tri_file, "Triangulation JSON file (default: reference triangulation)");
    cmd->add_option("--out", opt.out, "Write output to FILE");
    cmd->add_option("--seed", opt.seed, "PRNG seed");
  };

  auto* info = app.add_subcommand("surface-info", "Closed-form invariants of a surface");
  add_common(info);

  auto* tri = app.add_subcommand("tri", "Ideal triangulations");
  tri->require_subcommand(1);
  auto* tri_build = tri->add_subcommand("build", "Reference triangulation");
  auto* tri_validate = tri->add_subcommand("validate", "Validate a triangulation file");
  auto* tri_flip = tri->add_subcommand("flip", "Flip one edge");
  auto* tri_bfs = tri->add_subcommand("bfs", "Flip graph within a radius");
  auto* tri_path = tri->add_subcommand("path", "Flip sequence between two triangulations");
  for (auto* cmd : {tri_build, tri_validate, tri_flip, tri_bfs, tri_path}) add_common(cmd);
  tri_flip->add_option("--edge", opt.edge, "Edge index");
  tri_bfs->add_option("--radius", opt.radius, "Number of flips");
  tri_path->add_option("--to", opt.to_file, "Target triangulation file (default: seeded random walk)");
  tri_path->add_option("--len", opt.len, "Random walk length");
  tri_path->add_option("--max-depth", opt.max_depth, "Search depth (default: --len)");

  auto* curves = app.add_subcommand("curves", "Normal curves");
  curves->require_subcommand(1);
  auto* cur_enum = curves->add_subcommand("enumerate", "All curve classes with weights <= bound");
  auto* cur_classify = curves->add_subcommand("classify", "Classify one curve");
  auto* cur_disjoint = curves->add_subcommand("disjoint", "Disjointness of two curves");
  auto* cur_cut = curves->add_subcommand("cut", "Pieces after cutting along a curve");
  auto* cur_transport = curves->add_subcommand("transport", "Coordinates after a flip");
  for (auto* cmd : {cur_enum, cur_classify, cur_disjoint, cur_cut, cur_transport}) {
    add_common(cmd);
    cmd->add_option("--weights", opt.weights, "Weights, e.g. 0,1,1 (repeatable)");
    cmd->add_option("--curve", opt.curve_files, "Curve JSON file (repeatable)");
  }
  cur_enum->add_option("--bound", opt.bound, "Maximum edge weight")->required();
  cur_enum->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cur_transport->add_option("--edge", opt.edge, "Edge to flip");

  auto* complex = app.add_subcommand("complex", "Curve-complex snapshots");
  complex->require_subcommand(1);
  auto* cx_build = complex->add_subcommand("build", "Vertices and adjacency");
  auto* cx_cliques = complex->add_subcommand("cliques", "Maximal cliques with audits");
  auto* cx_duallink = complex->add_subcommand("duallink", "Dual links and side partitions");
  auto* cx_pentagon = complex->add_subcommand("pentagon", "Pentagon predicate");
  auto* cx_pair = complex->add_subcommand("simple-pair", "Simple-pair witness search");
  auto* cx_chain = complex->add_subcommand("chain", "Chain-of-arcs predicate");
  auto* cx_good = complex->add_subcommand("good-triangles", "Good ideal triangles");
  for (auto* cmd : {cx_build, cx_cliques, cx_duallink, cx_pentagon, cx_pair, cx_chain, cx_good}) add_common(cmd);
  for (auto* cmd : {cx_build, cx_cliques, cx_duallink, cx_pentagon, cx_pair}) {
    cmd->add_option("--bound", opt.bound, "Maximum edge weight")->required();
  }
  cx_duallink->add_option("--vertex", opt.vertex, "Single vertex id");
  cx_pentagon->add_option("--vertices", opt.list, "Five vertex ids, e.g. 1,2,3,4,5")->required();
  cx_pair->add_option("--edges", opt.list, "Two reference edges (default: first pair with one common endpoint)");
  cx_chain->add_option("--edges", opt.list, "Edge indices in order")->required();

  auto* audit = app.add_subcommand("audit", "Run an audit suite");
  add_common(audit);
  audit->add_option("--suite", opt.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  audit->add_option("--bound", opt.bound, "Maximum edge weight");
  audit->add_option("--walks", opt.walks, "Random flip walks");
  audit->add_option("--len", opt.len, "Walk length");
  audit->add_option("--samples", opt.samples, "Transport samples");
  audit->add_option("--max-depth", opt.max_depth, "Flip path search depth");
  audit->add_option("--radius", opt.radius, "Flip graph radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Runner run(opt);
  try {
    if (info->parsed()) return run.surface_info();
    if (tri_build->parsed()) return run.tri_build();
    if (tri_validate->parsed()) return run.tri_validate();
    if (tri_flip->parsed()) return run.tri_flip();
    if (tri_bfs->parsed()) return run.tri_bfs();
    if (tri_path->parsed()) return run.tri_path();
    if (cur_enum->parsed()) return run.curves_enumerate();
    if (cur_classify->parsed()) return run.curves_classify();
    if (cur_disjoint->parsed()) return run.curves_disjoint();
    if (cur_cut->parsed()) return run.curves_cut();
    if (cur_transport->parsed()) return run.curves_transport();
    if (cx_build->parsed()) return run.complex_build();
    if (cx_cliques->parsed()) return run.complex_cliques();
    if (cx_duallink->parsed()) return run.complex_duallink();
    if (cx_pentagon->parsed()) return run.complex_pentagon();
    if (cx_pair->parsed()) return run.complex_simple_pair();
    if (cx_chain->parsed()) return run.complex_chain();
    if (cx_good->parsed()) return run.complex_good_triangles();
    if (audit->parsed()) return run.audit();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  std::cerr << app.help();
  return 2;
}
