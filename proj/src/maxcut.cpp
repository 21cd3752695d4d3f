#include "nsplit/maxcut.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "nsplit/errors.hpp"

namespace nsplit {

namespace {

struct Flat {
  int n = 0;
  std::vector<std::string> ids;                             // position -> vertex id
  std::vector<std::vector<std::pair<int, long long>>> adj;  // loops dropped
  std::vector<long long> rem;  // rem[k]: multiplicity not fully placed before depth k
};

Flat flatten(const Multigraph& g) {
  Flat f;
  f.ids = g.vertices();
  std::sort(f.ids.begin(), f.ids.end(), [&](const std::string& a, const std::string& b) {
    long long da = g.degree(a) - 2 * g.multiplicity(a, a);
    long long db = g.degree(b) - 2 * g.multiplicity(b, b);
    if (da != db) return da > db;
    return a < b;
  });
  f.n = static_cast<int>(f.ids.size());
  std::map<std::string, int> pos;
  for (int i = 0; i < f.n; ++i) pos[f.ids[i]] = i;

  f.adj.resize(f.n);
  std::vector<long long> settled_at(f.n, 0);
  for (const auto& [e, m] : g.edges()) {
    int u = pos[e.first], v = pos[e.second];
    f.adj[u].emplace_back(v, m);
    f.adj[v].emplace_back(u, m);
    settled_at[std::max(u, v)] += m;
  }
  f.rem.assign(f.n + 1, 0);
  for (int k = f.n - 1; k >= 0; --k) f.rem[k] = f.rem[k + 1] + settled_at[k];
  return f;
}

struct Search {
  explicit Search(const Flat& flat)
      : f(flat), side(flat.n, -1), unassigned_nbrs(flat.n, 0) {
    for (int v = 0; v < f.n; ++v) unassigned_nbrs[v] = static_cast<int>(f.adj[v].size());
  }

  const Flat& f;
  std::vector<signed char> side;
  std::vector<int> unassigned_nbrs;
  long long best = 0;
  std::vector<signed char> best_side;

  long long gain(int k, int s) const {
    long long c = 0;
    for (const auto& [j, w] : f.adj[k]) {
      if (side[j] >= 0 && side[j] != s) c += w;
    }
    return c;
  }

  void assign(int k, int s) {
    side[k] = static_cast<signed char>(s);
    for (const auto& [j, w] : f.adj[k]) --unassigned_nbrs[j];
  }
  void undo(int k) {
    side[k] = -1;
    for (const auto& [j, w] : f.adj[k]) ++unassigned_nbrs[j];
  }

  /// Incumbent from one greedy pass: each vertex takes the side crossing
  /// more of its already-placed neighbors.
  void seed_greedy() {
    long long crossing = 0;
    for (int k = 0; k < f.n; ++k) {
      long long g0 = gain(k, 0), g1 = gain(k, 1);
      int s = (k > 0 && g1 > g0) ? 1 : 0;
      crossing += (s == 0 ? g0 : g1);
      assign(k, s);
    }
    best = crossing;
    best_side = side;
    for (int k = f.n - 1; k >= 0; --k) undo(k);
  }

  void run_exact(int k, long long crossing) {
    if (k == f.n) {
      if (crossing > best) {
        best = crossing;
        best_side = side;
      }
      return;
    }
    if (crossing + f.rem[k] <= best) return;
    long long g0 = gain(k, 0), g1 = gain(k, 1);
    if (k == 0) {  // complementation symmetry: pin the first vertex
      assign(0, 0);
      run_exact(1, crossing);
      undo(0);
      return;
    }
    if (unassigned_nbrs[k] == 0) {
      // all neighbors placed: the subtree below is identical either way
      int s = g1 > g0 ? 1 : 0;
      assign(k, s);
      run_exact(k + 1, crossing + std::max(g0, g1));
      undo(k);
      return;
    }
    int first = g1 > g0 ? 1 : 0;
    for (int t = 0; t < 2; ++t) {
      int s = (t == 0) ? first : 1 - first;
      assign(k, s);
      run_exact(k + 1, crossing + (s == 0 ? g0 : g1));
      undo(k);
    }
  }

  /// True iff some completion crosses more than `bound`. Partial crossings
  /// only grow, so an early excess already decides.
  bool exceeds(int k, long long crossing, long long bound) {
    if (crossing > bound) return true;
    if (k == f.n) return false;
    if (crossing + f.rem[k] <= bound) return false;
    long long g0 = gain(k, 0), g1 = gain(k, 1);
    if (k == 0) {
      assign(0, 0);
      bool r = exceeds(1, crossing, bound);
      undo(0);
      return r;
    }
    if (unassigned_nbrs[k] == 0) {
      int s = g1 > g0 ? 1 : 0;
      assign(k, s);
      bool r = exceeds(k + 1, crossing + std::max(g0, g1), bound);
      undo(k);
      return r;
    }
    int first = g1 > g0 ? 1 : 0;
    for (int t = 0; t < 2; ++t) {
      int s = (t == 0) ? first : 1 - first;
      assign(k, s);
      bool r = exceeds(k + 1, crossing + (s == 0 ? g0 : g1), bound);
      undo(k);
      if (r) return true;
    }
    return false;
  }
};

void check_limit(const Multigraph& g, int vertex_limit) {
  if (static_cast<int>(g.vertex_count()) > vertex_limit) {
    throw InstanceTooLarge("graph has " + std::to_string(g.vertex_count()) +
                           " vertices; exact max-cut limit is " + std::to_string(vertex_limit));
  }
}

}  // namespace

MaxCutResult max_cut_exact(const Multigraph& g, int vertex_limit) {
  check_limit(g, vertex_limit);
  Flat f = flatten(g);
  Search search(f);
  if (f.n > 0) {
    search.seed_greedy();
    search.run_exact(0, 0);
  }
  MaxCutResult result;
  result.size = search.best;
  for (int v = 0; v < f.n; ++v) {
    if (search.best_side[v] == 1) result.witness.vertices.push_back(f.ids[v]);
  }
  std::sort(result.witness.vertices.begin(), result.witness.vertices.end());
  result.witness.size = result.size;
  return result;
}

bool decide_max_cut_at_most(const Multigraph& g, long long threshold, int vertex_limit) {
  check_limit(g, vertex_limit);
  Flat f = flatten(g);
  Search search(f);
  return !search.exceeds(0, 0, threshold);
}

}  // namespace nsplit
