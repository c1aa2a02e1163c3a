#include "curvecx/audit.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

namespace curvecx {

std::uint64_t SeededRng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("SeededRng::below: empty range");
  // Lemire's multiply-shift; the small bias is irrelevant for sampling and
  // the result is identical on every platform.
  const unsigned __int128 product = static_cast<unsigned __int128>(engine_()) * n;
  return static_cast<std::uint64_t>(product >> 64);
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "[PAPER]";
    case Provenance::Trivial: return "[TRIVIAL]";
    case Provenance::Derived: return "[DERIVED]";
  }
  return "[DERIVED]";
}

int AuditReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; }));
}

Json AuditReport::to_json() const {
  Json records = Json::array();
  for (const CheckRecord& c : checks) {
    records.push_back(Json{{"name", c.name},
                           {"expected", c.expected},
                           {"provenance", to_string(c.provenance)},
                           {"observed", c.observed},
                           {"pass", c.pass}});
  }
  const int total = static_cast<int>(checks.size());
  return Json{{"tool", "curvecx"},
              {"version", kVersion},
              {"config", config},
              {"checks", records},
              {"summary", Json{{"total", total}, {"passed", passed()}, {"failed", total - passed()}}}};
}

namespace {

CheckRecord check(std::string name, std::string expected, Provenance provenance, Json observed, bool pass) {
  return CheckRecord{std::move(name), std::move(expected), provenance, std::move(observed), pass};
}

std::string label(const SurfaceSig& sig, int bound) { return sig.to_string() + " W=" + std::to_string(bound); }

int max_dimension(const std::vector<CliqueAudit>& cliques) {
  int best = -1;
  for (const auto& c : cliques) best = std::max(best, c.dimension);
  return best;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<CheckRecord> audit_small_surfaces() {
  std::vector<CheckRecord> out;
  const std::vector<std::pair<SurfaceSig, SmallComplexKind>> table = {
      {SurfaceSig::orientable_surface(0, 0), SmallComplexKind::Empty},
      {SurfaceSig::orientable_surface(0, 3), SmallComplexKind::Empty},
      {SurfaceSig::orientable_surface(0, 4), SmallComplexKind::InfiniteDiscrete},
      {SurfaceSig::nonorientable_surface(1, 0), SmallComplexKind::SingleVertex},
      {SurfaceSig::nonorientable_surface(1, 1), SmallComplexKind::SingleVertex},
      {SurfaceSig::nonorientable_surface(1, 2), SmallComplexKind::TwoVertices},
      {SurfaceSig::nonorientable_surface(1, 3), SmallComplexKind::Generic},
  };
  for (const auto& [sig, kind] : table) {
    const SmallComplexKind got = small_complex_table(sig);
    out.push_back(check("table " + sig.to_string(), std::string(to_string(kind)), Provenance::Paper,
                        std::string(to_string(got)), got == kind));
  }

  const SurfaceSig pants = SurfaceSig::orientable_surface(0, 3);
  const auto none = enumerate_vertices(build_reference(pants), 10);
  out.push_back(check("vacuity S0,3 W=10", "no vertices", Provenance::Paper, Json{{"vertices", none.size()}},
                      none.empty()));

  // Every connected admissible vector on the thrice-punctured sphere is trivial.
  {
    const Triangulation tri = build_reference(pants);
    int connected = 0;
    int trivial = 0;
    Weights w(tri.edge_count(), 0);
    std::function<void(int)> visit = [&](int i) {
      if (i == tri.edge_count()) {
        if (is_admissible(tri, w) && is_connected_curve(tri, w)) {
          ++connected;
          trivial += classify(tri, w).verdict != Triviality::Nontrivial ? 1 : 0;
        }
        return;
      }
      for (int x = 0; x <= 6; ++x) {
        w[i] = x;
        visit(i + 1);
      }
    };
    visit(0);
    out.push_back(check("all circles trivial S0,3 W=6", "every connected curve has a trivial verdict",
                        Provenance::Paper, Json{{"connected", connected}, {"trivial", trivial}},
                        connected > 0 && trivial == connected));
  }

  {
    const auto snap = build_snapshot(SurfaceSig::nonorientable_surface(1, 2), 6);
    out.push_back(check("two vertices N1,2 W=6", "2 vertices, 0 edges", Provenance::Paper,
                        Json{{"vertices", snap.size()}, {"edges", snap.edge_count()}},
                        snap.size() == 2 && snap.edge_count() == 0));
    bool one_sided = true;
    for (const auto& v : snap.vertices()) one_sided = one_sided && v.one_sided();
    out.push_back(check("kinds N1,2 W=6", "both vertices classified one-sided", Provenance::Derived,
                        Json{{"all_one_sided", one_sided}}, one_sided));
  }

  {
    const SurfaceSig sphere4 = SurfaceSig::orientable_surface(0, 4);
    const auto low = build_snapshot(sphere4, 4);
    const auto high = build_snapshot(sphere4, 8);
    out.push_back(check("infinite discrete S0,4 W=4,8", "vertex count grows, no edges at either bound",
                        Provenance::Paper,
                        Json{{"vertices", {low.size(), high.size()}}, {"edges", {low.edge_count(), high.edge_count()}}},
                        low.size() < high.size() && low.size() >= 2 && low.edge_count() == 0 &&
                            high.edge_count() == 0));
  }

  {
    const auto snap = build_snapshot(SurfaceSig::orientable_surface(1, 1), 6);
    const auto cliques = maximal_simplices(snap);
    const int dim = max_dimension(cliques);
    out.push_back(check("torus dimension S1,1 W=6", "maximum clique dimension 0", Provenance::Paper,
                        Json{{"vertices", snap.size()}, {"max_dimension", dim}}, snap.size() > 0 && dim == 0));
  }
  return out;
}

std::vector<CheckRecord> audit_dims(const SurfaceSig& sig, int bound) {
  std::vector<CheckRecord> out;
  const SimplexDimRange range = maximal_simplex_range(sig);
  const auto snap = build_snapshot(sig, bound);
  const auto cliques = maximal_simplices(snap);
  const std::string where = label(sig, bound);

  std::map<int, int> histogram;
  bool all_cliques = true;
  for (const auto& c : cliques) {
    ++histogram[c.dimension];
    all_cliques = all_cliques && is_clique(snap, c.clique);
  }
  Json hist = Json::object();
  for (auto [d, count] : histogram) hist[std::to_string(d)] = count;
  const int dim = max_dimension(cliques);

  out.push_back(check("cliques pairwise disjoint " + where, "every reported clique is pairwise adjacent",
                      Provenance::Trivial, Json{{"cliques", cliques.size()}}, all_cliques));
  out.push_back(check("dimension bound " + where, "no clique of dimension > " + std::to_string(range.hi),
                      Provenance::Paper, Json{{"max_dimension", dim}, {"histogram", hist}}, dim <= range.hi));
  if (range.degenerate()) {
    out.push_back(check("dimension attained " + where, "some clique of dimension " + std::to_string(range.hi),
                        Provenance::Paper, Json{{"count", histogram[range.hi]}}, histogram[range.hi] > 0));
  } else {
    std::set<int> certified;
    for (const auto& c : cliques) {
      if (c.certified) certified.insert(c.dimension);
    }
    const bool inside = std::all_of(certified.begin(), certified.end(),
                                    [&](int d) { return range.lo <= d && d <= range.hi; });
    out.push_back(check("certified range " + where,
                        "certified dimensions within [" + std::to_string(range.lo) + ", " +
                            std::to_string(range.hi) + "]",
                        Provenance::Paper, Json{{"certified_dimensions", certified}}, inside));
  }
  return out;
}

std::vector<CheckRecord> audit_eq1(const SurfaceSig& sig, int bound) {
  if (sig.orientable || sig.genus < 3) {
    throw std::invalid_argument("eq1 audit needs a nonorientable surface of genus >= 3, got " + sig.to_string());
  }
  std::vector<CheckRecord> out;
  const SimplexDimRange range = maximal_simplex_range(sig);
  const int k = pants_count(sig);
  const auto snap = build_snapshot(sig, bound);
  const auto cliques = maximal_simplices(snap);
  const std::string where = label(sig, bound);

  Json records = Json::array();
  std::set<int> dims;
  bool identity = true;
  bool parity = true;
  bool predicted_m = true;
  int snapshot_only = 0;
  for (const auto& c : cliques) {
    if (!c.certified) {
      ++snapshot_only;
      continue;
    }
    records.push_back(to_json(c));
    dims.insert(c.dimension);
    identity = identity && c.eq1_ok.value_or(false);
    parity = parity && c.one_sided % 2 == sig.genus % 2;
    if (c.dimension >= range.lo && c.dimension <= range.hi) {
      predicted_m = predicted_m && onesided_count_for_dimension(sig, c.dimension) == c.one_sided;
    } else {
      predicted_m = false;
    }
  }
  const std::string formula = "3*" + std::to_string(k) + " = " + std::to_string(sig.punctures) + " + m + 2(l+1-m)";
  out.push_back(check("pants identity " + where, formula + " for every certified clique", Provenance::Paper,
                      Json{{"certified", records.size()}, {"snapshot_maximal_only", snapshot_only}},
                      !records.empty() && identity));
  out.push_back(check("one-sided parity " + where,
                      std::string("m ") + (sig.genus % 2 ? "odd" : "even") + " for every certified clique",
                      Provenance::Paper, Json{{"ok", parity}}, !records.empty() && parity));
  out.push_back(check("one-sided count " + where, "m matches the dimension formula", Provenance::Paper,
                      Json{{"ok", predicted_m}}, !records.empty() && predicted_m));
  const bool inside =
      std::all_of(dims.begin(), dims.end(), [&](int d) { return range.lo <= d && d <= range.hi; });
  out.push_back(check("certified dimensions " + where,
                      "subset of [" + std::to_string(range.lo) + ", " + std::to_string(range.hi) + "]",
                      Provenance::Paper, Json{{"dimensions", dims}}, inside));
  const bool both = dims.count(range.lo) && dims.count(range.hi);
  out.push_back(check("range endpoints witnessed " + where,
                      "certified cliques of dimension " + std::to_string(range.lo) + " and " +
                          std::to_string(range.hi),
                      Provenance::Paper, Json{{"dimensions", dims}}, both));
  out.push_back(check("certified cliques " + where, "audit records", Provenance::Derived, records, true));
  return out;
}

std::vector<CheckRecord> audit_duallink_connectivity(const SurfaceSig& sig, int bound) {
  const auto snap = build_snapshot(sig, bound);
  int checked = 0;
  std::vector<int> failing;
  for (int v = 0; v < snap.size(); ++v) {
    const CurveClass& c = snap.vertex(v);
    if (!c.one_sided() && !c.is_k_separating(2)) continue;
    ++checked;
    if (!dual_link(snap, v).connected()) failing.push_back(v);
  }
  // Truncation can isolate a link vertex whose intersecting partners lie
  // just above the bound, so failures are re-examined one bound higher.
  int recovered = 0;
  if (!failing.empty()) {
    const auto wider = build_snapshot(snap.triangulation(), bound + 1);
    for (int v : failing) {
      const auto id = wider.find(snap.vertex(v).coords);
      if (id && dual_link(wider, *id).connected()) ++recovered;
    }
  }
  Json observed{{"checked", checked},
                {"connected_at_bound", checked - static_cast<int>(failing.size())},
                {"escalated_bound", failing.empty() ? Json(nullptr) : Json(bound + 1)},
                {"connected_after_escalation", checked - static_cast<int>(failing.size()) + recovered}};
  return {check("dual link connected " + label(sig, bound),
                "connected for every one-sided and 2-separating vertex (bounded evidence)", Provenance::Paper,
                observed, checked > 0 && recovered == static_cast<int>(failing.size()))};
}

std::vector<CheckRecord> audit_side_partitions(const SurfaceSig& sig, int bound) {
  const auto snap = build_snapshot(sig, bound);
  std::map<int, int> counted;
  int failures = 0;
  int crossing = 0;
  int empty_nontrivial_side = 0;
  int too_few_components = 0;
  int reconstruct = 0;
  for (int v = 0; v < snap.size(); ++v) {
    const CurveClass& c = snap.vertex(v);
    if (!c.separating() || !c.k_separating || *c.k_separating < 3) continue;
    ++counted[*c.k_separating];
    SidePartition part;
    try {
      part = side_partition(snap, v);
    } catch (const std::exception&) {
      ++failures;
      continue;
    }
    crossing += part.crossing_dual_edges;
    std::size_t total = 0;
    int nonempty = 0;
    for (int p = 0; p < static_cast<int>(part.pieces.size()); ++p) {
      const auto members = part.members(p);
      total += members.size();
      nonempty += members.empty() ? 0 : 1;
      if (members.empty() && small_complex_table(part.pieces[p].as_surface()) != SmallComplexKind::Empty) {
        ++empty_nontrivial_side;
      }
    }
    if (total != part.link_vertices.size()) ++reconstruct;
    if (nonempty == 2 && dual_link(snap, v).components.size() < 2) ++too_few_components;
  }
  Json per_k = Json::object();
  for (auto [k, n] : counted) per_k[std::to_string(k)] = n;
  const std::string where = label(sig, bound);
  return {
      check("side partition succeeds " + where, "every k-separating vertex (k>=3) partitions its link",
            Provenance::Paper, Json{{"vertices_by_k", per_k}, {"failures", failures}},
            !counted.empty() && failures == 0),
      check("no crossing dual edges " + where, "0 dual-link edges between different sides", Provenance::Trivial,
            Json{{"crossing", crossing}}, crossing == 0),
      check("sides reconstruct link " + where, "union of sides equals the link", Provenance::Trivial,
            Json{{"mismatches", reconstruct}}, reconstruct == 0),
      check("nontrivial sides populated " + where, "each side supporting curves has link vertices",
            Provenance::Derived, Json{{"empty_sides", empty_nontrivial_side}}, empty_nontrivial_side == 0),
      check("dual link splits " + where, "at least 2 components when both sides are populated", Provenance::Paper,
            Json{{"violations", too_few_components}}, too_few_components == 0),
  };
}

std::optional<std::array<int, 2>> reference_arc_pair(const Triangulation& tri, bool with_common) {
  for (int a = 0; a < tri.edge_count(); ++a) {
    for (int b = a + 1; b < tri.edge_count(); ++b) {
      const auto pa = tri.endpoints(a);
      const auto pb = tri.endpoints(b);
      if (pa[0] == pa[1] || pb[0] == pb[1]) continue;
      int shared = 0;
      for (int x : pa) shared += (x == pb[0] || x == pb[1]) ? 1 : 0;
      if ((with_common && shared == 1) || (!with_common && shared == 0)) return std::array<int, 2>{a, b};
    }
  }
  return std::nullopt;
}

std::vector<CheckRecord> audit_simple_pair(const SurfaceSig& sig, int start_bound, int max_bound) {
  std::vector<CheckRecord> out;
  const Triangulation tri = build_reference(sig);
  const int n = sig.punctures;
  const auto pair = reference_arc_pair(tri, true);
  if (!pair) {
    out.push_back(check("simple pair arcs " + sig.to_string(), "two reference arcs with one common endpoint",
                        Provenance::Derived, nullptr, false));
    return out;
  }
  const Weights alpha = arc_neighborhood_curves(tri, (*pair)[0]).front();
  const Weights beta = arc_neighborhood_curves(tri, (*pair)[1]).front();

  std::optional<SimplePairWitness> witness;
  int used = start_bound;
  std::optional<ComplexSnapshot> snap;
  int ia = -1;
  int ib = -1;
  for (int w = start_bound; w <= max_bound && !witness; ++w) {
    used = w;
    snap.emplace(build_snapshot(tri, w));
    const auto fa = snap->find(alpha);
    const auto fb = snap->find(beta);
    if (!fa || !fb) continue;
    ia = *fa;
    ib = *fb;
    witness = find_simple_pair_witness(*snap, ia, ib);
  }
  const std::string where = sig.to_string();
  out.push_back(check("witness found " + where, "witness for the simple pair at some W <= " + std::to_string(max_bound),
                      Provenance::Derived,
                      Json{{"edges", *pair}, {"bound", used}, {"found", witness.has_value()}}, witness.has_value()));
  if (!witness) return out;

  const auto failures = check_simple_pair_witness(*snap, ia, ib, *witness);
  Json coords = Json::object();
  for (int k = 1; k <= n - 1; ++k) coords["gamma_" + std::to_string(k)] = snap->vertex(witness->gammas[k - 1]).coords;
  coords["delta"] = snap->vertex(witness->delta).coords;
  coords["alpha"] = alpha;
  coords["beta"] = beta;
  out.push_back(check("witness revalidates " + where, "conditions (i)-(iii) hold", Provenance::Trivial,
                      Json{{"failures", failures}, {"witness", coords}}, failures.empty()));
  const auto& g = witness->gammas;
  const bool pentagon = is_pentagon(*snap, {g[0], g[1], ia, g[2], ib});
  out.push_back(check("pentagon " + where, "(gamma_1, gamma_2, alpha, gamma_3, beta) is a pentagon",
                      Provenance::Paper, Json{{"pentagon", pentagon}}, pentagon));

  std::vector<int> sigma(g.begin() + 3, g.end());
  int dims_ok = 0;
  for (auto [a, b] : {std::pair{ia, g[2]}, std::pair{ia, g[1]}, std::pair{ib, g[2]}, std::pair{g[0], g[1]}}) {
    std::vector<int> simplex = sigma;
    simplex.insert(simplex.end(), {a, b, witness->delta});
    if (is_clique(*snap, simplex) && static_cast<int>(simplex.size()) - 1 == n - 2) ++dims_ok;
  }
  out.push_back(check("maximal simplices " + where, "four simplices of dimension " + std::to_string(n - 2),
                      Provenance::Paper, Json{{"count", dims_ok}}, dims_ok == 4));

  if (const auto apart = reference_arc_pair(tri, false)) {
    const Weights a2 = arc_neighborhood_curves(tri, (*apart)[0]).front();
    const Weights b2 = arc_neighborhood_curves(tri, (*apart)[1]).front();
    const auto fa = snap->find(a2);
    const auto fb = snap->find(b2);
    std::optional<SimplePairWitness> none;
    if (fa && fb) none = find_simple_pair_witness(*snap, *fa, *fb);
    out.push_back(check("no witness without common endpoint " + where,
                        "not found at W=" + std::to_string(used) + " (bounded search)", Provenance::Derived,
                        Json{{"edges", *apart}, {"in_snapshot", fa && fb}, {"found", none.has_value()}},
                        fa && fb && !none));
  }
  return out;
}

namespace {

int sphere_type(int k, int n) {
  if (k == 1 || k == n - 2) return 2;
  if (k == 2) return 3;
  return 2 * k <= n ? k : n - k;
}

}  // namespace

std::optional<std::vector<int>> find_sphere_witness(const ComplexSnapshot& snapshot, int alpha, int beta) {
  const int n = snapshot.surface().punctures;
  if (alpha == beta || snapshot.adjacent(alpha, beta)) return std::nullopt;
  auto select = [&](int k, bool near_a, bool near_b) {
    std::vector<int> pool;
    for (int v = 0; v < snapshot.size(); ++v) {
      if (v == alpha || v == beta || !snapshot.vertex(v).is_k_separating(sphere_type(k, n))) continue;
      if (snapshot.adjacent(v, alpha) == near_a && snapshot.adjacent(v, beta) == near_b) pool.push_back(v);
    }
    return pool;
  };
  const auto g1_pool = select(1, false, true);
  const auto g2_pool = select(2, true, false);
  const auto g3_pool = select(3, true, true);

  std::vector<int> gammas(n - 2, -1);
  std::function<bool(int, const std::vector<int>&)> fill = [&](int k, const std::vector<int>& common) -> bool {
    if (k > n - 2) return sphere_pentagon_check(snapshot, alpha, beta, gammas);
    for (int v : common) {
      if (!snapshot.vertex(v).is_k_separating(sphere_type(k, n))) continue;
      gammas[k - 1] = v;
      std::vector<int> next;
      for (int u : common) {
        if (snapshot.adjacent(u, v)) next.push_back(u);
      }
      if (fill(k + 1, next)) return true;
    }
    return false;
  };
  for (int g3 : g3_pool) {
    for (int g2 : g2_pool) {
      if (g2 == g3 || snapshot.adjacent(g2, g3)) continue;
      for (int g1 : g1_pool) {
        if (!snapshot.adjacent(g1, g2) || snapshot.adjacent(g1, g3)) continue;
        std::vector<int> common;
        for (int v = 0; v < snapshot.size(); ++v) {
          bool ok = true;
          for (int u : {alpha, beta, g1, g2, g3}) ok = ok && snapshot.adjacent(v, u);
          if (ok) common.push_back(v);
        }
        gammas[0] = g1;
        gammas[1] = g2;
        gammas[2] = g3;
        if (fill(4, common)) return gammas;
      }
    }
  }
  return std::nullopt;
}

std::vector<CheckRecord> audit_sphere_pentagon(const SurfaceSig& sig, int bound) {
  std::vector<CheckRecord> out;
  const Triangulation tri = build_reference(sig);
  const auto snap = build_snapshot(tri, bound);
  const auto pair = reference_arc_pair(tri, true);
  const std::string where = label(sig, bound);
  std::optional<int> ia, ib;
  if (pair) {
    ia = snap.find(arc_neighborhood_curves(tri, (*pair)[0]).front());
    ib = snap.find(arc_neighborhood_curves(tri, (*pair)[1]).front());
  }
  std::optional<std::vector<int>> witness;
  if (ia && ib) witness = find_sphere_witness(snap, *ia, *ib);
  out.push_back(check("sphere witness found " + where, "gamma_1..gamma_" + std::to_string(sig.punctures - 2) +
                                                            " for a chain-built simple pair",
                      Provenance::Derived, Json{{"found", witness.has_value()}}, witness.has_value()));
  if (!witness) return out;
  const bool valid = sphere_pentagon_check(snap, *ia, *ib, *witness);
  out.push_back(check("sphere characterization " + where, "check accepts the witness", Provenance::Derived,
                      Json{{"valid", valid}}, valid));
  auto swapped = *witness;
  std::swap(swapped[0], swapped[2]);
  const bool permuted = sphere_pentagon_check(snap, *ia, *ib, swapped);
  out.push_back(check("sphere permuted order " + where, "rejected", Provenance::Trivial,
                      Json{{"accepted", permuted}}, !permuted));
  return out;
}

std::vector<CheckRecord> audit_flips(const SurfaceSig& sig, int walks, int len, int max_depth, int radius,
                                     std::uint64_t seed) {
  const Triangulation start = build_reference(sig);
  const CanonicalForm start_form = canonical_form(start);
  const int e = start.edge_count();
  SeededRng rng(seed);
  int found = 0;
  int replay_ok = 0;
  int steps_ok = 0;
  int steps = 0;
  int longest = 0;
  for (int walk = 0; walk < walks; ++walk) {
    Triangulation current = start;
    for (int step = 0; step < len; ++step) {
      const auto options = flippable_edges(current);
      if (options.empty()) break;
      Triangulation next = flip(current, rng.pick(options));
      const auto report = next.report();
      ++steps;
      if (report.ok() && report.surface() == sig && shared_edge_count(current, next) >= e - 1) ++steps_ok;
      current = std::move(next);
    }
    const auto path = flip_path(current, start, max_depth);
    if (path && static_cast<int>(path->size()) <= len) {
      ++found;
      longest = std::max(longest, static_cast<int>(path->size()));
      if (canonical_form(apply_flips(current, *path)) == start_form) ++replay_ok;
    }
  }
  const FlipGraph graph = flip_bfs(start, radius);
  const std::string where = sig.to_string();
  return {
      check("flip steps valid " + where, "every step validates with the same surface and shares e-1 edges",
            Provenance::Paper, Json{{"steps", steps}, {"ok", steps_ok}}, steps_ok == steps),
      check("return paths " + where,
            std::to_string(walks) + "/" + std::to_string(walks) + " paths of length <= " + std::to_string(len),
            Provenance::Trivial, Json{{"found", found}, {"longest", longest}, {"seed", seed}}, found == walks),
      check("path replay " + where, "replayed paths reach the start class", Provenance::Trivial,
            Json{{"ok", replay_ok}}, replay_ok == found),
      check("flip graph radius " + std::to_string(radius) + " " + where, "codimension-one edges", Provenance::Trivial,
            Json{{"nodes", graph.nodes.size()}, {"edges", graph.edges.size()}}, !graph.nodes.empty()),
  };
}

std::vector<CheckRecord> audit_transport(const SurfaceSig& sig, int bound, int samples, std::uint64_t seed) {
  const Triangulation tri = build_reference(sig);
  const auto curves = enumerate_vertices(tri, bound);
  const auto edges = flippable_edges(tri);
  std::map<int, Triangulation> flipped;
  SeededRng rng(seed);
  int accepted = 0;
  int rejected = 0;
  int invariant = 0;
  int round_trip = 0;
  const long cap = 50L * samples;
  for (long attempt = 0; attempt < cap && accepted < samples && !curves.empty() && !edges.empty(); ++attempt) {
    const CurveClass& curve = rng.pick(curves);
    const int e = rng.pick(edges);
    Weights moved;
    try {
      moved = transport_flip(tri, curve.coords, e);
    } catch (const Untransportable&) {
      ++rejected;
      continue;
    }
    ++accepted;
    auto it = flipped.find(e);
    if (it == flipped.end()) it = flipped.emplace(e, flip(tri, e)).first;
    const Triangulation& other = it->second;
    const Classification cls = classify(other, moved);
    if (cls.curve && cls.curve->kind == curve.kind && cls.curve->k_separating == curve.k_separating) ++invariant;
    if (transport_flip(other, moved, e) == curve.coords) ++round_trip;
  }
  const std::string where = label(sig, bound);
  return {
      check("samples drawn " + where, std::to_string(samples) + " transportable (curve, flip) samples",
            Provenance::Trivial, Json{{"accepted", accepted}, {"rejected_degenerate", rejected}, {"seed", seed}},
            accepted == samples),
      check("kind invariant " + where, std::to_string(samples) + "/" + std::to_string(samples) + " kind-invariant",
            Provenance::Derived, Json{{"invariant", invariant}}, accepted == samples && invariant == accepted),
      check("round trip " + where, "transport back across the new diagonal restores the vector", Provenance::Trivial,
            Json{{"identity", round_trip}}, accepted == samples && round_trip == accepted),
  };
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"small-surfaces", "dims", "eq1", "duallink",
                                                 "pentagon", "flips", "transport"};
  return names;
}

AuditReport run_suite(const AuditConfig& config) {
  AuditReport report;
  report.config = Json{{"suite", config.suite},
                       {"surface", config.surface ? Json(config.surface->to_string()) : Json(nullptr)},
                       {"bound", config.bound ? Json(*config.bound) : Json(nullptr)},
                       {"seed", config.seed},
                       {"walks", config.walks},
                       {"len", config.len},
                       {"samples", config.samples},
                       {"max_depth", config.max_depth ? Json(*config.max_depth) : Json(nullptr)},
                       {"radius", config.radius}};
  auto sig_or = [&](const char* fallback) { return config.surface.value_or(SurfaceSig::parse(fallback)); };
  auto append = [&](std::vector<CheckRecord> records) {
    for (auto& r : records) report.checks.push_back(std::move(r));
  };
  const std::string& suite = config.suite;
  if (suite == "small-surfaces") {
    append(audit_small_surfaces());
  } else if (suite == "dims") {
    append(audit_dims(sig_or("N1,4"), config.bound.value_or(4)));
  } else if (suite == "eq1") {
    append(audit_eq1(sig_or("N3,1"), config.bound.value_or(3)));
  } else if (suite == "duallink") {
    if (config.surface) {
      append(audit_duallink_connectivity(*config.surface, config.bound.value_or(4)));
      append(audit_side_partitions(*config.surface, config.bound.value_or(4)));
    } else {
      append(audit_duallink_connectivity(SurfaceSig::parse("N1,4"), config.bound.value_or(4)));
      append(audit_side_partitions(SurfaceSig::parse("N1,5"), config.bound.value_or(3)));
    }
  } else if (suite == "pentagon") {
    const int start = config.bound.value_or(3);
    if (!config.surface || !config.surface->orientable) {
      append(audit_simple_pair(sig_or("N1,5"), start, std::max(start, 5)));
    }
    if (!config.surface || config.surface->orientable) {
      append(audit_sphere_pentagon(sig_or("S0,5"), start));
    }
  } else if (suite == "flips") {
    append(audit_flips(sig_or("N1,3"), config.walks, config.len, config.max_depth.value_or(config.len), config.radius,
                       config.seed));
  } else if (suite == "transport") {
    append(audit_transport(sig_or("N1,3"), config.bound.value_or(4), config.samples, config.seed));
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return report;
}

}  // namespace curvecx
