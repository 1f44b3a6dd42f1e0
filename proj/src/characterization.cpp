#include "evc/characterization.hpp"

#include "evc/errors.hpp"
#include "evc/structure.hpp"

namespace evc {

std::string to_string(EvidenceKind kind) {
  switch (kind) {
    case EvidenceKind::every_block_locally_connected: return "every-block-locally-connected";
    case EvidenceKind::chordal: return "chordal";
    case EvidenceKind::exhaustive: return "exhaustive";
    case EvidenceKind::assumed: return "assumed";
    case EvidenceKind::unknown: break;
  }
  return "unknown";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::evc_equals_mvc: return "evc-equals-mvc";
    case Verdict::evc_equals_mvc_plus_1: return "evc-equals-mvc-plus-1";
    case Verdict::evc_exceeds_mvc: return "evc-exceeds-mvc";
    case Verdict::undetermined: break;
  }
  return "undetermined";
}

namespace {

void require_connected(const Graph& g, const char* what) {
  if (g.order() < 2 || !is_connected(g))
    throw PreconditionError(std::string(what) + " requires a connected graph with at least two vertices");
}

}  // namespace

NecessaryCondition necessary_condition(const Graph& g, SolverMode mode, const SolverLimits& limits) {
  require_connected(g, "necessary_condition");
  if (g.order() >= 3) {
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) == 1) return {false, v};
  }
  VertexSet cut = cut_vertices_and_blocks(g).cut_vertices;
  int mvc = mvc_size(g, mode, limits);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (cut.contains(v)) continue;
    VertexSet forced = cut;
    forced.insert(v);
    if (!has_min_cover_containing(g, forced, mvc, mode, limits)) return {false, v};
  }
  return {true, std::nullopt};
}

ClassFEvidence class_f_membership(const Graph& g, ClassFMode mode, const SolverLimits& limits) {
  require_connected(g, "class_f_membership");
  switch (mode) {
    case ClassFMode::assume:
      return {EvidenceKind::assumed, false};
    case ClassFMode::exhaustive: {
      VertexSet cut = cut_vertices_and_blocks(g).cut_vertices;
      if (all_forced_min_covers_connected(g, cut, limits)) return {EvidenceKind::exhaustive, false};
      return {EvidenceKind::unknown, true};
    }
    case ClassFMode::sufficient:
      break;
  }
  if (every_block_locally_connected(g)) return {EvidenceKind::every_block_locally_connected, false};
  // Chordal graphs always pass the block test; this branch only fires if that test
  // and chordality disagree, in which case desk-scale instances are certified directly.
  if (is_chordal(g).chordal && g.order() <= limits.enumeration_max_vertices &&
      all_forced_min_covers_connected(g, cut_vertices_and_blocks(g).cut_vertices, limits))
    return {EvidenceKind::chordal, false};
  return {EvidenceKind::unknown, false};
}

CharReport decide_evc_equals_mvc(const Graph& g, const ClassFEvidence& evidence, SolverMode mode,
                                 const SolverLimits& limits) {
  require_connected(g, "decide_evc_equals_mvc");
  CharReport report;
  report.mvc = mvc_size(g, mode, limits);
  report.cut_vertices = cut_vertices_and_blocks(g).cut_vertices;
  report.biconnected = report.cut_vertices.empty();
  NecessaryCondition nc = necessary_condition(g, mode, limits);
  report.necessary_condition = nc.holds;
  report.failing_vertex = nc.failing_vertex;
  report.class_f_evidence = evidence.kind;

  if (!evidence.established()) {
    report.verdict = Verdict::undetermined;
  } else if (nc.holds) {
    report.verdict = Verdict::evc_equals_mvc;
    report.evc = report.mvc;
  } else if (report.biconnected) {
    report.verdict = Verdict::evc_equals_mvc_plus_1;
    report.evc = report.mvc + 1;
  } else {
    report.verdict = Verdict::evc_exceeds_mvc;
  }
  return report;
}

CharReport characterize(const Graph& g, ClassFMode mode, SolverMode solver, const SolverLimits& limits) {
  ClassFEvidence evidence = class_f_membership(g, mode, limits);
  if (mode == ClassFMode::sufficient && !evidence.established() && g.order() <= limits.enumeration_max_vertices)
    evidence = class_f_membership(g, ClassFMode::exhaustive, limits);
  return decide_evc_equals_mvc(g, evidence, solver, limits);
}

int evc_min_k_all_vertices(const Graph& g, const ClassFEvidence& evidence, SolverMode mode,
                           const SolverLimits& limits) {
  require_connected(g, "evc_min_k_all_vertices");
  if (!evidence.established())
    throw EvidenceError("evc_min_k_all_vertices needs evidence that every minimum cover is connected");
  if (evidence.kind != EvidenceKind::assumed && !is_biconnected(g))
    throw EvidenceError("class-F evidence covers every minimum cover only for biconnected graphs");
  int mvc = mvc_size(g, mode, limits);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!has_min_cover_containing(g, VertexSet{v}, mvc, mode, limits)) return mvc + 1;
  return mvc;
}

std::vector<CoverResult> np_certificate(const Graph& g, int k, const ClassFEvidence& evidence, SolverMode mode,
                                        const SolverLimits& limits) {
  int least = evc_min_k_all_vertices(g, evidence, mode, limits);
  if (k < least || k > g.order())
    throw PreconditionError("no certificate for k = " + std::to_string(k) + " (need " + std::to_string(least) +
                            " <= k <= n)");
  std::vector<CoverResult> certificate;
  for (Vertex v = 0; v < g.order(); ++v) {
    CoverResult c = mvc_forced(g, VertexSet{v}, mode, limits);
    for (Vertex w = 0; w < g.order() && c.size < k; ++w) {
      if (!c.cover.contains(w)) {
        c.cover.insert(w);
        ++c.size;
      }
    }
    certificate.push_back(std::move(c));
  }
  return certificate;
}

bool verify_certificate(const Graph& g, int k, const std::vector<CoverResult>& certificate) {
  if (certificate.size() != static_cast<std::size_t>(g.order())) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet& cover = certificate[static_cast<std::size_t>(v)].cover;
    if (static_cast<int>(cover.size()) != k || !cover.contains(v) || !is_vertex_cover(g, cover)) return false;
  }
  return true;
}

}  // namespace evc
