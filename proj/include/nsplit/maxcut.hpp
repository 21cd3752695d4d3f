#pragma once

#include "nsplit/multigraph.hpp"

namespace nsplit {

/// Exact search is exponential in the vertex count; calls above the limit
/// are rejected. The CLI reads NSPLIT_MAXCUT_LIMIT to override.
inline constexpr int kDefaultMaxCutVertexLimit = 28;

struct MaxCutResult {
  long long size = 0;
  Cut witness;
};

/// Exact maximum cut by branch and bound: the first vertex's side is fixed
/// (complementation symmetry), assignment proceeds in descending-degree
/// order, and a branch is pruned when its crossing multiplicity plus the
/// total multiplicity of not-yet-settled edges cannot beat the incumbent.
MaxCutResult max_cut_exact(const Multigraph& g, int vertex_limit = kDefaultMaxCutVertexLimit);

/// True iff the maximum cut is at most `threshold`; stops at the first
/// partial assignment already exceeding it.
bool decide_max_cut_at_most(const Multigraph& g, long long threshold,
                            int vertex_limit = kDefaultMaxCutVertexLimit);

}  // namespace nsplit
