#pragma once

// Test-only ground truth and instance builders. The exhaustive max-cut here
// stays independent of the branch-and-bound it checks.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nsplit/generator.hpp"
#include "nsplit/multigraph.hpp"
#include "nsplit/necklace.hpp"

namespace testsupport {

inline long long max_cut_bruteforce(const nsplit::Multigraph& g) {
  auto ids = g.vertices();
  const int n = static_cast<int>(ids.size());
  if (n > 22) throw std::runtime_error("brute-force max cut capped at 22 vertices");
  std::map<std::string, int> pos;
  for (int i = 0; i < n; ++i) pos[ids[i]] = i;
  std::vector<std::pair<std::pair<int, int>, long long>> edges;
  for (const auto& [e, m] : g.edges()) {
    edges.push_back({{pos[e.first], pos[e.second]}, m});
  }
  long long best = 0;
  const std::uint64_t masks = n == 0 ? 1 : (1ULL << (n - 1));  // fix vertex 0 out
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    long long crossing = 0;
    for (const auto& [e, m] : edges) {
      bool a = e.first == 0 ? false : ((mask >> (e.first - 1)) & 1);
      bool b = e.second == 0 ? false : ((mask >> (e.second - 1)) & 1);
      if (a != b) crossing += m;
    }
    best = std::max(best, crossing);
  }
  return best;
}

inline nsplit::Multigraph multigraph_from_walk(const std::vector<std::string>& walk) {
  nsplit::Multigraph g;
  for (const std::string& v : walk) g.add_vertex(v);
  for (std::size_t i = 1; i < walk.size(); ++i) g.add_edge(walk[i - 1], walk[i]);
  return g;
}

/// Random walk over up to `symbols` letters (consecutive entries distinct);
/// its adjacency multigraph is connected and semi-Eulerian by construction.
inline nsplit::Multigraph random_walk_multigraph(int symbols, int length, std::uint64_t seed) {
  nsplit::SplitMix64 rng(seed);
  std::vector<std::string> walk;
  int current = static_cast<int>(rng.below(symbols));
  walk.push_back(std::string(1, static_cast<char>('a' + current)));
  for (int i = 1; i < length; ++i) {
    int next = static_cast<int>(rng.below(symbols - 1));
    if (next >= current) ++next;
    current = next;
    walk.push_back(std::string(1, static_cast<char>('a' + current)));
  }
  return multigraph_from_walk(walk);
}

/// Random connected loop-free multigraph: a random spanning tree, extra
/// random edges, then a few edges promoted to multiplicities up to max_mult.
inline nsplit::Multigraph random_connected_multigraph(int n, int extra_edges, int promotions,
                                                      int max_mult, std::uint64_t seed) {
  nsplit::SplitMix64 rng(seed);
  nsplit::Multigraph g;
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) {
    std::string id = "v" + std::string(i < 10 ? "0" : "") + std::to_string(i);
    ids.push_back(id);
    g.add_vertex(id);
  }
  for (int i = 1; i < n; ++i) {
    g.add_edge(ids[i], ids[rng.below(i)]);
  }
  for (int e = 0; e < extra_edges && n >= 2; ++e) {
    int u = static_cast<int>(rng.below(n));
    int v = static_cast<int>(rng.below(n - 1));
    if (v >= u) ++v;
    g.add_edge(ids[u], ids[v]);
  }
  for (int p = 0; p < promotions && !g.edges().empty(); ++p) {
    auto it = g.edges().begin();
    std::advance(it, rng.below(g.edges().size()));
    long long extra = 1 + static_cast<long long>(rng.below(max_mult - 1));
    extra = std::min<long long>(extra, max_mult - it->second);
    if (extra > 0) g.add_edge(it->first.first, it->first.second, extra);
  }
  return g;
}

/// n interval colors side by side, pts points each: "aaa bbb ccc ...".
inline nsplit::Necklace interval_chain(int n, int pts) {
  nsplit::Necklace::ColorMap colors;
  int width = 1;
  for (int t = n - 1; t >= 10; t /= 10) ++width;
  long long coord = 1;
  for (int c = 0; c < n; ++c) {
    std::string digits = std::to_string(c);
    std::string token = "t" + std::string(width - digits.size(), '0') + digits;
    for (int k = 0; k < pts; ++k) colors[token].push_back(nsplit::Rational(coord++));
  }
  return nsplit::Necklace::from_colors(std::move(colors));
}

}  // namespace testsupport
