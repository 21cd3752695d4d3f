#pragma once

#include <optional>
#include <string>

#include "nsplit/maxcut.hpp"
#include "nsplit/multigraph.hpp"
#include "nsplit/rational.hpp"

namespace nsplit {

/// The interval-pair reduction stops before touching graphs this small; the
/// exact backend decides them directly.
inline constexpr int kReductionStopSize = 8;

enum class FiredCheck {
  kIntervalCount,
  kMultiplicity,
  kMaxCutThreshold,
  kTriviallySmall,
};

std::string to_string(FiredCheck check);

struct SeparabilityVerdict {
  bool decision = false;
  FiredCheck fired_check = FiredCheck::kMaxCutThreshold;
  int ell = 0;
  int n_prime = 0;                      // vertices after reduction
  int interval_count = 0;               // degree-<=2 vertices after reduction
  long long multi_edge_multiplicity = 0;  // sum of multiplicities over multi-edges
  long long threshold = 0;              // bound handed to the deciding check
  int pairs_removed = 0;
  std::optional<Rational> omega_final;  // bound of the blown-up simple graph
  std::optional<Rational> gap_k;        // threshold - omega_final
};

struct ReductionResult {
  Multigraph graph;
  int pairs_removed = 0;
  bool stop_rule_fired = false;  // a pair was still present at the stop size
};

/// One reduction step: removes the first adjacent pair of degree-<=2
/// vertices (lexicographic scan), reconnecting their outside neighbors with
/// one edge when both exist. A would-be self-loop is dropped, as are any
/// pre-existing self-loops. Returns nothing when no pair exists.
std::optional<Multigraph> reduce_interval_pair_step(const Multigraph& g);

/// Applies the step until no pair remains or the graph has at most
/// `stop_at` vertices while a pair is still present. Each performed step
/// lowers the exact max cut by exactly 2.
ReductionResult reduce_interval_pairs(const Multigraph& g, int stop_at = kReductionStopSize);

struct BlowUpResult {
  Multigraph graph;                 // simple
  long long total_multiplicity = 0;  // M: sum over edges with multiplicity >= 2
};

/// Replaces every multiplicity-m edge (m >= 2) by m disjoint three-edge
/// paths through fresh vertices. Raises the exact max cut by exactly 2M.
/// Requires a loop-free graph.
BlowUpResult blow_up_multiedges(const Multigraph& g);

/// Decides whether the max cut of a semi-Eulerian multigraph is at most
/// n - 1 + ell: reduce interval pairs, decide tiny residues exactly, apply
/// the interval-count and multi-edge-multiplicity rejection checks, then
/// blow up multi-edges and hand the simple graph to the exact backend.
SeparabilityVerdict decide_separability(const Multigraph& g, int ell,
                                        int vertex_limit = kDefaultMaxCutVertexLimit);

}  // namespace nsplit
