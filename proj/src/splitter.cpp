#include "nsplit/splitter.hpp"

#include <algorithm>
#include <cassert>

#include "nsplit/errors.hpp"

namespace nsplit {

namespace {

Rational median_of(const std::vector<Rational>& points) {
  return points[(points.size() - 1) / 2];
}

Splitting sorted_splitting(std::vector<SplitPoint> splits) {
  std::sort(splits.begin(), splits.end(), [](const SplitPoint& a, const SplitPoint& b) {
    return a.coordinate < b.coordinate;
  });
  return Splitting{std::move(splits)};
}

Necklace without_colors(const Necklace& nk, const std::string& c1, const std::string& c2) {
  Necklace::ColorMap colors = nk.colors();
  colors.erase(c1);
  colors.erase(c2);
  return Necklace::from_colors(std::move(colors));
}

std::variant<Splitting, NotSeparableCertificate> solve_rec(const Necklace& nk, int ell,
                                                           std::vector<LiftNote>& notes,
                                                           int depth, int& max_depth) {
  max_depth = std::max(max_depth, depth);
  const int n = static_cast<int>(nk.color_count());
  if (n < 6 * ell + 2) {
    auto direct = base_case_solve(nk);
    if (!direct) throw InternalInconsistency("direct solver found no splitting");
    return *direct;
  }

  IntervalQueries queries = interval_queries(nk);
  if (queries.neighboring_pair) {
    const auto& [c1, c2] = *queries.neighboring_pair;
    auto sub = solve_rec(without_colors(nk, c1, c2), ell, notes, depth + 1, max_depth);
    if (std::holds_alternative<NotSeparableCertificate>(sub)) return sub;
    return lift_interval_pair(nk, std::get<Splitting>(sub), c1, c2);
  }
  if (queries.two_component_color) {
    TwoComponentReduction reduction = reduce_two_component(nk, *queries.two_component_color);
    auto sub = solve_rec(reduction.reduced, ell, notes, depth + 1, max_depth);
    if (std::holds_alternative<NotSeparableCertificate>(sub)) return sub;
    LiftNote note;
    Splitting lifted = lift_two_component(nk, reduction, std::get<Splitting>(sub), &note);
    notes.push_back(note);
    return lifted;
  }
  return NotSeparableCertificate{"reduction-stuck", nk, n, ell};
}

}  // namespace

BalanceReport verify_splitting(const Necklace& nk, const Splitting& s) {
  if (s.splits.size() != nk.color_count())
    throw MalformedInput("splitting needs exactly one split point per color");
  std::map<std::string, Rational> seen;
  for (const SplitPoint& sp : s.splits) {
    if (!nk.has_color(sp.color))
      throw MalformedInput("split point for unknown color '" + sp.color + "'");
    if (!seen.emplace(sp.color, sp.coordinate).second)
      throw MalformedInput("two split points for color '" + sp.color + "'");
    const auto& points = nk.colors().at(sp.color);
    if (!std::binary_search(points.begin(), points.end(), sp.coordinate)) {
      throw MalformedInput("split coordinate " + sp.coordinate.to_string() +
                           " is not a point of color '" + sp.color + "'");
    }
  }

  std::vector<Rational> cuts;
  cuts.reserve(s.splits.size());
  for (const auto& [color, coordinate] : seen) cuts.push_back(coordinate);
  std::sort(cuts.begin(), cuts.end());

  BalanceReport report;
  for (const auto& [token, points] : nk.colors()) report.colors[token] = {};
  std::size_t placed = 0;  // cuts with coordinate < current point
  for (const NecklacePoint& pt : nk.sequence()) {
    while (placed < cuts.size() && cuts[placed] < pt.coordinate) ++placed;
    if (placed < cuts.size() && cuts[placed] == pt.coordinate) continue;  // the cut itself
    if (placed % 2 == 0) ++report.colors[pt.color].plus;
    else ++report.colors[pt.color].minus;
  }
  report.valid = true;
  for (const auto& [token, balance] : report.colors) {
    if (balance.plus != balance.minus) report.valid = false;
  }
  return report;
}

std::optional<Splitting> base_case_solve(const Necklace& nk) {
  if (nk.color_count() == 0) return Splitting{};

  std::vector<std::string> tokens;
  for (const auto& [token, points] : nk.colors()) tokens.push_back(token);
  const std::size_t n = tokens.size();
  const auto& all_components = nk.components();

  std::vector<std::size_t> choice(n, 0);  // component index per color, odometer
  while (true) {
    // chosen components, by their position along the line
    std::vector<std::size_t> chosen(n);
    for (std::size_t c = 0; c < n; ++c) chosen[c] = nk.components_of(tokens[c])[choice[c]];
    std::vector<std::size_t> order(chosen);
    std::sort(order.begin(), order.end());
    std::vector<std::size_t> rank(n);  // chosen components entirely before this color's
    for (std::size_t c = 0; c < n; ++c) {
      rank[c] = std::lower_bound(order.begin(), order.end(), chosen[c]) - order.begin();
    }

    // labels of points outside the chosen components are forced by how many
    // chosen components lie entirely to their left
    std::vector<long long> plus_outside(n, 0), minus_outside(n, 0);
    std::size_t before = 0;
    bool feasible = true;
    for (const NecklacePoint& pt : nk.sequence()) {
      while (before < order.size() &&
             all_components[order[before]].points.back() < pt.coordinate) {
        ++before;
      }
      std::size_t c = std::lower_bound(tokens.begin(), tokens.end(), pt.color) - tokens.begin();
      const Component& own = all_components[chosen[c]];
      if (own.points.front() <= pt.coordinate && pt.coordinate <= own.points.back()) continue;
      if (before % 2 == 0) ++plus_outside[c];
      else ++minus_outside[c];
    }

    std::vector<SplitPoint> splits;
    splits.reserve(n);
    for (std::size_t c = 0; c < n && feasible; ++c) {
      const Component& own = all_components[chosen[c]];
      const long long k = static_cast<long long>(own.points.size());
      const long long a = plus_outside[c], b = minus_outside[c];
      // points below the split take the parity label of the components
      // before; balancing forces the split position
      long long doubled = (rank[c] % 2 == 0) ? (b - a + k - 1) : (a - b + k - 1);
      if (doubled < 0 || doubled % 2 != 0 || doubled / 2 >= k) {
        feasible = false;
        break;
      }
      splits.push_back({tokens[c], own.points[static_cast<std::size_t>(doubled / 2)]});
    }
    if (feasible) {
      Splitting candidate = sorted_splitting(std::move(splits));
      if (verify_splitting(nk, candidate).valid) return candidate;
    }

    // next guess
    std::size_t digit = n;
    while (digit > 0) {
      --digit;
      if (++choice[digit] < nk.components_of(tokens[digit]).size()) break;
      choice[digit] = 0;
      if (digit == 0) return std::nullopt;
    }
  }
}

Splitting lift_interval_pair(const Necklace& original, const Splitting& reduced_solution,
                             const std::string& first_color, const std::string& second_color) {
  std::vector<SplitPoint> splits = reduced_solution.splits;
  splits.push_back({first_color, median_of(original.colors().at(first_color))});
  splits.push_back({second_color, median_of(original.colors().at(second_color))});
  Splitting lifted = sorted_splitting(std::move(splits));
  if (!verify_splitting(original, lifted).valid)
    throw InternalInconsistency("interval-pair lift produced an unbalanced splitting");
  return lifted;
}

TwoComponentReduction reduce_two_component(const Necklace& nk, const std::string& color) {
  const auto& comp_indices = nk.components_of(color);
  if (comp_indices.size() != 2)
    throw DomainViolation("color '" + color + "' does not have exactly two components");
  const Component& left = nk.components()[comp_indices[0]];
  const Component& right = nk.components()[comp_indices[1]];
  // odd total forces distinct component sizes
  if (left.points.size() == right.points.size())
    throw InternalInconsistency("two components of equal size in an odd color");
  const Component& larger = left.points.size() > right.points.size() ? left : right;
  const std::size_t smaller_size = std::min(left.points.size(), right.points.size());

  TwoComponentReduction reduction;
  reduction.color = color;
  reduction.shift = static_cast<long long>((smaller_size + 1) / 2);
  reduction.gap_low = left.points.back();
  reduction.gap_high = right.points.front();
  reduction.kept_points = larger.points;
  if (reduction.kept_points.size() % 2 == 0) {
    std::size_t mid = reduction.kept_points.size() / 2;
    Rational pad = Rational::midpoint(reduction.kept_points[mid - 1], reduction.kept_points[mid]);
    reduction.pad = pad;
    reduction.kept_points.insert(reduction.kept_points.begin() + mid, pad);
  }

  Necklace::ColorMap colors = nk.colors();
  colors[color] = reduction.kept_points;
  reduction.reduced = Necklace::from_colors(std::move(colors));
  return reduction;
}

Splitting lift_two_component(const Necklace& original, const TwoComponentReduction& reduction,
                             const Splitting& reduced_solution, LiftNote* note) {
  const std::vector<Rational>& kept = reduction.kept_points;
  std::vector<SplitPoint> others;
  std::optional<Rational> own_split;
  int parity = 0;
  for (const SplitPoint& sp : reduced_solution.splits) {
    if (sp.color == reduction.color) {
      own_split = sp.coordinate;
      continue;
    }
    others.push_back(sp);
    if (reduction.gap_low < sp.coordinate && sp.coordinate < reduction.gap_high) parity ^= 1;
  }
  if (!own_split)
    throw MalformedInput("reduced solution has no split for color '" + reduction.color + "'");
  auto it = std::lower_bound(kept.begin(), kept.end(), *own_split);
  if (it == kept.end() || *it != *own_split)
    throw MalformedInput("reduced split does not lie in the kept component");
  const long long position = it - kept.begin();

  long long pad_position = -1;
  if (reduction.pad) {
    pad_position = std::lower_bound(kept.begin(), kept.end(), *reduction.pad) - kept.begin();
  }

  const long long candidates[2] = {position - reduction.shift, position + reduction.shift};
  for (int side = 0; side < 2; ++side) {
    long long target = candidates[side];
    if (target < 0 || target >= static_cast<long long>(kept.size())) continue;
    if (target == pad_position) continue;
    std::vector<SplitPoint> splits = others;
    splits.push_back({reduction.color, kept[static_cast<std::size_t>(target)]});
    Splitting lifted = sorted_splitting(std::move(splits));
    if (verify_splitting(original, lifted).valid) {
      if (note) *note = {reduction.color, parity, side == 0};
      return lifted;
    }
  }
  throw InternalInconsistency("neither shifted split position balances color '" +
                              reduction.color + "'");
}

SolveResult solve(const Necklace& nk, int ell) {
  if (ell < 1) throw MalformedInput("the separability gap ell must be at least 1");
  SolveResult result;
  int max_depth = 0;
  result.outcome = solve_rec(nk, ell, result.two_component_lifts, 1, max_depth);
  result.recursion_depth = max_depth;
  if (result.has_splitting() && !verify_splitting(nk, result.splitting()).valid)
    throw InternalInconsistency("solver returned an unbalanced splitting");
  return result;
}

}  // namespace nsplit
