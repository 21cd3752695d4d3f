#include "nsplit/oracle.hpp"

#include <algorithm>

#include "nsplit/errors.hpp"

namespace nsplit {

namespace {

// Independent balance check over a raw cut tuple: walk the point sequence
// once, flipping the label at each cut, and net out plus/minus per color.
bool tuple_balances(const std::vector<std::pair<Rational, int>>& sequence,
                    const std::vector<Rational>& cuts, std::vector<long long>& net) {
  std::fill(net.begin(), net.end(), 0);
  std::size_t placed = 0;
  for (const auto& [coordinate, color] : sequence) {
    while (placed < cuts.size() && cuts[placed] < coordinate) ++placed;
    if (placed < cuts.size() && cuts[placed] == coordinate) continue;
    net[color] += (placed % 2 == 0) ? 1 : -1;
  }
  for (long long d : net) {
    if (d != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Splitting> enumerate_solutions(const Necklace& nk, long long tuple_limit) {
  std::vector<std::string> tokens;
  std::vector<const std::vector<Rational>*> points;
  for (const auto& [token, coords] : nk.colors()) {
    tokens.push_back(token);
    points.push_back(&coords);
  }
  const std::size_t n = tokens.size();

  long long tuples = 1;
  for (const auto* coords : points) {
    tuples *= static_cast<long long>(coords->size());
    if (tuples > tuple_limit) {
      throw InstanceTooLarge("enumeration would visit more than " +
                             std::to_string(tuple_limit) + " tuples");
    }
  }

  std::vector<std::pair<Rational, int>> sequence;
  sequence.reserve(nk.total_points());
  for (const NecklacePoint& pt : nk.sequence()) {
    int color = static_cast<int>(
        std::lower_bound(tokens.begin(), tokens.end(), pt.color) - tokens.begin());
    sequence.emplace_back(pt.coordinate, color);
  }

  std::vector<Splitting> solutions;
  std::vector<std::size_t> choice(n, 0);
  std::vector<Rational> cuts(n);
  std::vector<long long> net(n);
  for (long long t = 0; t < tuples; ++t) {
    for (std::size_t c = 0; c < n; ++c) cuts[c] = (*points[c])[choice[c]];
    std::sort(cuts.begin(), cuts.end());
    if (tuple_balances(sequence, cuts, net)) {
      std::vector<SplitPoint> splits;
      splits.reserve(n);
      for (std::size_t c = 0; c < n; ++c) splits.push_back({tokens[c], (*points[c])[choice[c]]});
      std::sort(splits.begin(), splits.end(), [](const SplitPoint& a, const SplitPoint& b) {
        return a.coordinate < b.coordinate;
      });
      solutions.push_back(Splitting{std::move(splits)});
    }
    for (std::size_t digit = n; digit-- > 0;) {
      if (++choice[digit] < points[digit]->size()) break;
      choice[digit] = 0;
    }
  }
  return solutions;
}

long long count_solutions(const Necklace& nk, long long tuple_limit) {
  return static_cast<long long>(enumerate_solutions(nk, tuple_limit).size());
}

}  // namespace nsplit
