#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evc/graph.hpp"
#include "evc/limits.hpp"
#include "evc/vertex_cover.hpp"

namespace evc {

/// Why a graph is believed to be in class F (every minimum cover containing all cut
/// vertices induces a connected subgraph).
enum class EvidenceKind { every_block_locally_connected, chordal, exhaustive, assumed, unknown };

struct ClassFEvidence {
  EvidenceKind kind = EvidenceKind::unknown;
  /// Set when the exhaustive check found a disconnected forced minimum cover.
  bool refuted = false;

  bool established() const { return kind != EvidenceKind::unknown; }
};

enum class ClassFMode { sufficient, exhaustive, assume };

enum class Verdict { evc_equals_mvc, evc_equals_mvc_plus_1, evc_exceeds_mvc, undetermined };

struct NecessaryCondition {
  bool holds = true;
  std::optional<Vertex> failing_vertex;
};

struct CharReport {
  int mvc = 0;
  VertexSet cut_vertices;
  bool necessary_condition = false;
  std::optional<Vertex> failing_vertex;
  EvidenceKind class_f_evidence = EvidenceKind::unknown;
  Verdict verdict = Verdict::undetermined;
  /// Exact value when the verdict pins it down.
  std::optional<int> evc;
  bool biconnected = false;
};

std::string to_string(EvidenceKind kind);
std::string to_string(Verdict verdict);

/// For every non-cut vertex v, some minimum cover contains the cut vertices and v.
/// Graphs with n >= 3 and a leaf fail immediately (the least-id leaf is reported).
NecessaryCondition necessary_condition(const Graph& g, SolverMode mode = SolverMode::exact,
                                       const SolverLimits& limits = {});

ClassFEvidence class_f_membership(const Graph& g, ClassFMode mode, const SolverLimits& limits = {});

/// Characterization verdict under the given class-F evidence. With unknown evidence
/// the verdict is undetermined (the remaining fields are still filled in).
CharReport decide_evc_equals_mvc(const Graph& g, const ClassFEvidence& evidence,
                                 SolverMode mode = SolverMode::exact, const SolverLimits& limits = {});

/// decide_evc_equals_mvc with evidence gathered in `mode`. In sufficient mode an
/// unknown result falls back to the exhaustive check when n is within the
/// enumeration limit.
CharReport characterize(const Graph& g, ClassFMode mode, SolverMode solver = SolverMode::exact,
                        const SolverLimits& limits = {});

/// min{k : every vertex lies in some cover of size k}. Needs evidence that every
/// minimum cover is connected: established evidence on a biconnected graph, or an
/// assumption. Throws EvidenceError otherwise.
int evc_min_k_all_vertices(const Graph& g, const ClassFEvidence& evidence, SolverMode mode = SolverMode::exact,
                           const SolverLimits& limits = {});

/// One size-k cover per vertex v (in id order), each containing v.
std::vector<CoverResult> np_certificate(const Graph& g, int k, const ClassFEvidence& evidence,
                                        SolverMode mode = SolverMode::exact, const SolverLimits& limits = {});

/// Polynomial check of a certificate produced by np_certificate.
bool verify_certificate(const Graph& g, int k, const std::vector<CoverResult>& certificate);

}  // namespace evc
