#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "curvecx/complexes.hpp"

namespace curvecx {

using Json = nlohmann::ordered_json;

Json to_json(const SurfaceSig& sig);
SurfaceSig surface_from_json(const Json& j);

// {"t": int, "gluing": [[slotA, slotB, "parallel"|"antiparallel"], ...]}
Json to_json(const Triangulation& tri);
GluingData gluing_from_json(const Json& j);
Triangulation triangulation_from_json(const Json& j);

Json to_json(const ValidationReport& report);
Json to_json(const CutPiece& piece);
Json to_json(const CurveClass& curve);
Json to_json(const Classification& result);
Json to_json(const FlipGraph& graph);
Json to_json(const CliqueAudit& audit);
Json to_json(const DualLinkView& view);
Json to_json(const SidePartition& partition);
Json to_json(const ComplexSnapshot& snapshot);

// Identifier written into curve files: "ref:<surface>" for reference
// triangulations, otherwise "canon:<hex canonical form>".
std::string triangulation_id(const Triangulation& tri, bool is_reference);

struct CurveFile {
  std::string triangulation;
  Weights weights;
};

Json to_json(const CurveFile& file);
CurveFile curve_file_from_json(const Json& j);

// Resolves a curve-file identifier. "ref:" ids build the reference
// triangulation; "canon:" ids must match `fallback`, which is returned.
Triangulation resolve_triangulation(const std::string& id, const Triangulation* fallback);

// Compact piece summary such as "S0,2[1,3]b1".
std::string piece_summary(const CutPiece& piece);

// CSV with columns vector,kind,k,pieces. Vectors are space separated and
// piece summaries are joined by ';' inside one quoted field.
void write_enumeration_csv(std::ostream& out, const std::vector<CurveClass>& curves);

Json read_json_file(const std::string& path);
// Pretty-printed with a trailing newline.
void write_json(std::ostream& out, const Json& j);

}  // namespace curvecx
