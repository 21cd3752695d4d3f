#include "nsplit/generator.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "nsplit/errors.hpp"

namespace nsplit {

namespace {

std::string color_token(int index, int total) {
  if (total <= 26) return std::string(1, static_cast<char>('a' + index));
  int width = 1;
  for (int t = total - 1; t >= 10; t /= 10) ++width;
  std::string digits = std::to_string(index);
  return "c" + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

Necklace random_necklace(int colors, int max_points, std::uint64_t seed) {
  if (colors < 1) throw MalformedInput("need at least one color");
  if (max_points < 1 || max_points % 2 == 0)
    throw MalformedInput("max_points must be odd and at least 1");

  SplitMix64 rng(seed);
  std::vector<int> sizes(colors);
  std::vector<int> slots;
  for (int c = 0; c < colors; ++c) {
    sizes[c] = 1 + 2 * static_cast<int>(rng.below((max_points + 1) / 2));
    for (int k = 0; k < sizes[c]; ++k) slots.push_back(c);
  }
  for (std::size_t i = slots.size() - 1; i > 0; --i) {
    std::size_t j = rng.below(i + 1);
    std::swap(slots[i], slots[j]);
  }

  Necklace::ColorMap map;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    map[color_token(slots[i], colors)].push_back(Rational(static_cast<long long>(i + 1)));
  }
  return Necklace::from_colors(std::move(map));
}

Necklace necklace_from_multigraph(const Multigraph& g, std::uint64_t seed) {
  if (g.vertex_count() == 0) throw MalformedInput("graph has no vertices");
  if (!g.loops().empty())
    throw MalformedInput("necklace construction needs a loop-free graph");
  if (!check_semi_eulerian(g))
    throw DomainViolation("necklace construction needs a connected semi-Eulerian graph");

  SplitMix64 rng(seed);
  std::vector<std::string> ids = g.vertices();
  std::map<std::string, int> pos;
  for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = static_cast<int>(i);

  std::vector<std::map<int, long long>> remaining(ids.size());
  std::vector<long long> remaining_degree(ids.size(), 0);
  for (const auto& [e, m] : g.edges()) {
    int u = pos[e.first], v = pos[e.second];
    remaining[u][v] = m;
    remaining[v][u] = m;
    remaining_degree[u] += m;
    remaining_degree[v] += m;
  }

  int start = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (g.degree(ids[i]) % 2 != 0) {
      start = static_cast<int>(i);
      break;  // ids are sorted, so this is the smaller odd vertex
    }
  }

  // Hierholzer with a seeded choice among the remaining neighbors
  std::vector<int> stack{start};
  std::vector<int> walk;
  while (!stack.empty()) {
    int v = stack.back();
    if (remaining_degree[v] == 0) {
      walk.push_back(v);
      stack.pop_back();
      continue;
    }
    std::vector<int> options;
    for (const auto& [u, m] : remaining[v]) {
      if (m > 0) options.push_back(u);
    }
    int u = options[rng.below(options.size())];
    --remaining[v][u];
    --remaining[u][v];
    remaining_degree[v] -= 1;
    remaining_degree[u] -= 1;
    stack.push_back(u);
  }
  std::reverse(walk.begin(), walk.end());

  std::vector<std::pair<Rational, int>> placed;
  std::vector<long long> visits(ids.size(), 0);
  std::vector<long long> first_visit(ids.size(), -1);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    placed.emplace_back(Rational(static_cast<long long>(i + 1)), walk[i]);
    if (visits[walk[i]]++ == 0) first_visit[walk[i]] = static_cast<long long>(i + 1);
  }
  // even-count colors get one extra point right after their first
  // occurrence; the new run compresses away, so adjacencies are unchanged
  for (std::size_t c = 0; c < ids.size(); ++c) {
    if (visits[c] % 2 == 0) {
      placed.emplace_back(Rational(2 * first_visit[c] + 1, 2), static_cast<int>(c));
    }
  }
  std::sort(placed.begin(), placed.end());

  Necklace::ColorMap map;
  for (std::size_t i = 0; i < placed.size(); ++i) {
    map[ids[placed[i].second]].push_back(Rational(static_cast<long long>(i + 1)));
  }
  return Necklace::from_colors(std::move(map));
}

std::optional<Necklace> random_separable_necklace(int colors, int ell, std::uint64_t seed,
                                                  int budget, int max_points) {
  if (ell < 0) throw MalformedInput("separability gap ell must be non-negative");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < budget; ++attempt) {
    Necklace candidate = random_necklace(colors, max_points, rng.next());
    if (sep_by_definition(candidate) <= colors - 1 + ell) return candidate;
  }
  return std::nullopt;
}

}  // namespace nsplit
