#include "nsplit/multigraph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "nsplit/errors.hpp"

namespace nsplit {

void Multigraph::add_vertex(const std::string& id) { vertices_.insert(id); }

void Multigraph::add_edge(const std::string& u, const std::string& v, long long multiplicity) {
  if (multiplicity <= 0) throw MalformedInput("edge multiplicity must be positive");
  if (!has_vertex(u) || !has_vertex(v))
    throw MalformedInput("edge endpoint is not a vertex: {" + u + ", " + v + "}");
  if (u == v) {
    loops_[u] += multiplicity;
    return;
  }
  auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  edges_[key] += multiplicity;
}

std::vector<std::string> Multigraph::vertices() const {
  return {vertices_.begin(), vertices_.end()};
}

long long Multigraph::edge_count() const {
  long long total = 0;
  for (const auto& [e, m] : edges_) total += m;
  for (const auto& [v, m] : loops_) total += m;
  return total;
}

long long Multigraph::multiplicity(const std::string& u, const std::string& v) const {
  if (u == v) {
    auto it = loops_.find(u);
    return it == loops_.end() ? 0 : it->second;
  }
  auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  auto it = edges_.find(key);
  return it == edges_.end() ? 0 : it->second;
}

long long Multigraph::degree(const std::string& id) const {
  long long d = 0;
  for (const auto& [e, m] : edges_) {
    if (e.first == id || e.second == id) d += m;
  }
  auto it = loops_.find(id);
  if (it != loops_.end()) d += 2 * it->second;
  return d;
}

std::vector<std::pair<std::string, long long>> Multigraph::neighbors(const std::string& id) const {
  std::vector<std::pair<std::string, long long>> out;
  for (const auto& [e, m] : edges_) {
    if (e.first == id) out.emplace_back(e.second, m);
    else if (e.second == id) out.emplace_back(e.first, m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Multigraph build_walk_graph(const Necklace& nk) {
  Multigraph g;
  for (const auto& [token, points] : nk.colors()) g.add_vertex(token);
  const auto& runs = nk.color_string();
  for (std::size_t i = 1; i < runs.size(); ++i) g.add_edge(runs[i - 1], runs[i]);
  return g;
}

bool is_connected(const Multigraph& g) {
  auto ids = g.vertices();
  if (ids.size() <= 1) return true;
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& [e, m] : g.edges()) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::set<std::string> seen{ids.front()};
  std::queue<std::string> frontier;
  frontier.push(ids.front());
  while (!frontier.empty()) {
    std::string v = frontier.front();
    frontier.pop();
    for (const std::string& w : adj[v]) {
      if (seen.insert(w).second) frontier.push(w);
    }
  }
  return seen.size() == ids.size();
}

bool check_semi_eulerian(const Multigraph& g) {
  if (!is_connected(g)) return false;
  int odd = 0;
  for (const std::string& v : g.vertices()) {
    if (g.degree(v) % 2 != 0) ++odd;
  }
  return odd <= 2;
}

long long cut_size(const Multigraph& g, const std::vector<std::string>& subset) {
  std::set<std::string> in;
  for (const std::string& v : subset) {
    if (!g.has_vertex(v)) throw MalformedInput("cut contains unknown vertex '" + v + "'");
    in.insert(v);
  }
  long long total = 0;
  for (const auto& [e, m] : g.edges()) {
    if (in.count(e.first) != in.count(e.second)) total += m;
  }
  return total;
}

Rational edwards_erdos_bound(const Multigraph& g) {
  if (g.vertex_count() == 0) throw DomainViolation("bound needs a nonempty graph");
  if (!is_connected(g)) throw DomainViolation("bound applies to connected graphs only");
  long long n = static_cast<long long>(g.vertex_count());
  return Rational(g.edge_count(), 2) + Rational(n - 1, 4);
}

std::string to_dot(const Multigraph& g) {
  std::ostringstream os;
  os << "graph {\n";
  for (const std::string& v : g.vertices()) os << "  \"" << v << "\";\n";
  for (const auto& [v, m] : g.loops()) {
    for (long long i = 0; i < m; ++i) os << "  \"" << v << "\" -- \"" << v << "\";\n";
  }
  for (const auto& [e, m] : g.edges()) {
    for (long long i = 0; i < m; ++i)
      os << "  \"" << e.first << "\" -- \"" << e.second << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace nsplit
