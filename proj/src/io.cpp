#include "curvecx/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace curvecx {

namespace {

Json kind_json(const CurveClass& curve) {
  Json j;
  j["kind"] = to_string(curve.kind);
  j["k_separating"] = curve.k_separating ? Json(*curve.k_separating) : Json(nullptr);
  return j;
}

}  // namespace

Json to_json(const SurfaceSig& sig) {
  return Json{{"orientable", sig.orientable}, {"genus", sig.genus}, {"punctures", sig.punctures}};
}

SurfaceSig surface_from_json(const Json& j) {
  return SurfaceSig::make(j.at("orientable").get<bool>(), j.at("genus").get<int>(), j.at("punctures").get<int>());
}

Json to_json(const Triangulation& tri) {
  Json gluing = Json::array();
  for (const Edge& e : tri.edges()) gluing.push_back(Json::array({e.slot_a, e.slot_b, to_string(e.flag)}));
  return Json{{"t", tri.triangle_count()}, {"gluing", gluing}};
}

GluingData gluing_from_json(const Json& j) {
  GluingData data;
  data.triangles = j.at("t").get<int>();
  for (const Json& pair : j.at("gluing")) {
    if (!pair.is_array() || pair.size() != 3) {
      throw std::invalid_argument("gluing entries must be [slotA, slotB, flag]");
    }
    data.pairs.push_back({pair[0].get<int>(), pair[1].get<int>(), parse_gluing(pair[2].get<std::string>())});
  }
  return data;
}

Triangulation triangulation_from_json(const Json& j) { return Triangulation::from_gluing(gluing_from_json(j)); }

Json to_json(const ValidationReport& report) {
  Json j{{"connected", report.connected},
         {"euler_char", report.euler_char},
         {"orientable", report.orientable},
         {"genus", report.genus},
         {"punctures", report.punctures}};
  j["violations"] = report.violations;
  return j;
}

Json to_json(const CutPiece& piece) {
  return Json{{"orientable", piece.orientable},
              {"genus", piece.genus},
              {"punctures", piece.punctures},
              {"boundary_count", piece.boundary_count},
              {"euler_char", piece.euler_char()}};
}

Json to_json(const CurveClass& curve) {
  Json j{{"coords", curve.coords}};
  j.update(kind_json(curve));
  Json pieces = Json::array();
  for (const CutPiece& p : curve.pieces) pieces.push_back(to_json(p));
  j["pieces"] = pieces;
  return j;
}

Json to_json(const Classification& result) {
  Json j{{"verdict", to_string(result.verdict)}};
  Json pieces = Json::array();
  for (const CutPiece& p : result.pieces) pieces.push_back(to_json(p));
  j["pieces"] = pieces;
  if (result.curve) j.update(kind_json(*result.curve));
  return j;
}

Json to_json(const FlipGraph& graph) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    nodes.push_back(Json{{"form", graph.nodes[i].hex()}, {"distance", graph.distance[i]}});
  }
  return Json{{"node_count", graph.nodes.size()}, {"edge_count", graph.edges.size()}, {"nodes", nodes},
              {"edges", graph.edges}};
}

Json to_json(const CliqueAudit& audit) {
  return Json{{"clique", audit.clique},
              {"dimension", audit.dimension},
              {"m", audit.one_sided},
              {"eq1_ok", audit.eq1_ok ? Json(*audit.eq1_ok) : Json(nullptr)},
              {"certified", audit.certified}};
}

Json to_json(const DualLinkView& view) {
  return Json{{"center", view.center},
              {"vertices", view.vertices},
              {"edges", view.edges},
              {"components", view.components},
              {"connected", view.connected()}};
}

Json to_json(const SidePartition& partition) {
  Json pieces = Json::array();
  for (std::size_t p = 0; p < partition.pieces.size(); ++p) {
    Json piece = to_json(partition.pieces[p]);
    piece["members"] = partition.members(static_cast<int>(p));
    pieces.push_back(piece);
  }
  return Json{{"center", partition.center}, {"pieces", pieces},
              {"crossing_dual_edges", partition.crossing_dual_edges}};
}

Json to_json(const ComplexSnapshot& snapshot) {
  Json vertices = Json::array();
  for (int v = 0; v < snapshot.size(); ++v) {
    Json entry{{"id", v}};
    entry.update(to_json(snapshot.vertex(v)));
    vertices.push_back(entry);
  }
  return Json{{"surface", to_json(snapshot.surface())},
              {"bound", snapshot.bound()},
              {"triangulation", to_json(snapshot.triangulation())},
              {"vertex_count", snapshot.size()},
              {"edge_count", snapshot.edge_count()},
              {"vertices", vertices},
              {"adjacency", snapshot.edge_list()}};
}

std::string triangulation_id(const Triangulation& tri, bool is_reference) {
  if (is_reference) return "ref:" + tri.surface().to_string();
  return "canon:" + canonical_form(tri).hex();
}

Json to_json(const CurveFile& file) { return Json{{"triangulation", file.triangulation}, {"weights", file.weights}}; }

CurveFile curve_file_from_json(const Json& j) {
  CurveFile file;
  file.triangulation = j.at("triangulation").get<std::string>();
  file.weights = j.at("weights").get<Weights>();
  return file;
}

Triangulation resolve_triangulation(const std::string& id, const Triangulation* fallback) {
  if (id.rfind("ref:", 0) == 0) return build_reference(SurfaceSig::parse(id.substr(4)));
  if (id.rfind("canon:", 0) == 0) {
    if (fallback == nullptr) throw std::invalid_argument("curve file names triangulation " + id + "; pass it with --tri");
    if (canonical_form(*fallback).hex() != id.substr(6)) {
      throw std::invalid_argument("curve file triangulation does not match the supplied triangulation");
    }
    return *fallback;
  }
  throw std::invalid_argument("unrecognized triangulation id '" + id + "'");
}

std::string piece_summary(const CutPiece& piece) {
  std::ostringstream out;
  out << (piece.orientable ? 'S' : 'N') << piece.genus << ',' << piece.punctures.size() << '[';
  for (std::size_t i = 0; i < piece.punctures.size(); ++i) out << (i ? "," : "") << piece.punctures[i];
  out << "]b" << piece.boundary_count;
  return out.str();
}

void write_enumeration_csv(std::ostream& out, const std::vector<CurveClass>& curves) {
  out << "vector,kind,k,pieces\n";
  for (const CurveClass& c : curves) {
    for (std::size_t i = 0; i < c.coords.size(); ++i) out << (i ? " " : "") << c.coords[i];
    out << ',' << to_string(c.kind) << ',';
    if (c.k_separating) out << *c.k_separating;
    // Summaries contain commas, so the field is quoted.
    out << ",\"";
    for (std::size_t i = 0; i < c.pieces.size(); ++i) out << (i ? ";" : "") << piece_summary(c.pieces[i]);
    out << "\"\n";
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return Json::parse(in);
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace curvecx
