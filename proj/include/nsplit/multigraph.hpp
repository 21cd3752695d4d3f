#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nsplit/necklace.hpp"
#include "nsplit/rational.hpp"

namespace nsplit {

/// Undirected multigraph over string vertex ids.
///
/// Parallel edges are stored as multiplicities, self-loops separately.
/// Self-loops count once toward edge_count, twice toward degree, and never
/// contribute to any cut.
class Multigraph {
 public:
  using EdgeMap = std::map<std::pair<std::string, std::string>, long long>;

  void add_vertex(const std::string& id);
  /// Adds multiplicity to the edge {u, v}; u == v adds self-loops.
  /// Endpoints must already exist.
  void add_edge(const std::string& u, const std::string& v, long long multiplicity = 1);

  bool has_vertex(const std::string& id) const { return vertices_.count(id) > 0; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::vector<std::string> vertices() const;  // lexicographic
  /// Non-loop edges keyed by (smaller id, larger id).
  const EdgeMap& edges() const { return edges_; }
  const std::map<std::string, long long>& loops() const { return loops_; }

  long long edge_count() const;
  long long multiplicity(const std::string& u, const std::string& v) const;
  long long degree(const std::string& id) const;
  std::vector<std::pair<std::string, long long>> neighbors(const std::string& id) const;

  bool operator==(const Multigraph& other) const = default;

 private:
  std::set<std::string> vertices_;
  EdgeMap edges_;
  std::map<std::string, long long> loops_;
};

/// A vertex subset together with its evaluated crossing multiplicity.
struct Cut {
  std::vector<std::string> vertices;  // sorted
  long long size = 0;
};

/// Vertices are the colors; multiplicity of {a, b} counts adjacent a/b runs
/// in the color string. Linear in the number of points.
Multigraph build_walk_graph(const Necklace& nk);

bool is_connected(const Multigraph& g);

/// Connected with at most two odd-degree vertices.
bool check_semi_eulerian(const Multigraph& g);

/// Crossing multiplicity of the cut given by `subset`. Unknown vertices are
/// rejected; self-loops contribute nothing.
long long cut_size(const Multigraph& g, const std::vector<std::string>& subset);

/// m/2 + (n-1)/4, the guaranteed max-cut lower bound for connected
/// multigraphs. Requires a connected, nonempty graph.
Rational edwards_erdos_bound(const Multigraph& g);

/// DOT text, one edge line per unit of multiplicity, vertices and edges in
/// lexicographic order; byte-stable for a given graph.
std::string to_dot(const Multigraph& g);

}  // namespace nsplit
