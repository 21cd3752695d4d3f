#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nsplit/necklace.hpp"
#include "nsplit/rational.hpp"

namespace nsplit {

struct SplitPoint {
  std::string color;
  Rational coordinate;
  bool operator==(const SplitPoint&) const = default;
};

/// One split point per color, ascending coordinates. The n+1 open intervals
/// between the splits are labelled alternately, leftmost positive.
struct Splitting {
  std::vector<SplitPoint> splits;
  bool operator==(const Splitting&) const = default;
};

struct ColorBalance {
  long long plus = 0;
  long long minus = 0;
  bool operator==(const ColorBalance&) const = default;
};

struct BalanceReport {
  std::map<std::string, ColorBalance> colors;
  bool valid = false;
};

/// Returned when the reduction scheme gets stuck: the residual necklace is
/// large (n >= 6*ell + 2) yet has no neighboring interval pair and no
/// two-component color, which certifies the input was not
/// (n - 1 + ell)-separable.
struct NotSeparableCertificate {
  std::string reason;
  Necklace residual;
  int colors_remaining = 0;
  int ell = 0;
};

/// Record of one two-component lift: the parity of split points that landed
/// between the color's two components, and which shift direction verified.
struct LiftNote {
  std::string color;
  int parity_between = 0;
  bool shifted_left = false;
};

struct SolveResult {
  std::variant<Splitting, NotSeparableCertificate> outcome;
  std::vector<LiftNote> two_component_lifts;
  int recursion_depth = 0;

  bool has_splitting() const { return std::holds_alternative<Splitting>(outcome); }
  const Splitting& splitting() const { return std::get<Splitting>(outcome); }
  const NotSeparableCertificate& certificate() const {
    return std::get<NotSeparableCertificate>(outcome);
  }
};

/// Labels the open intervals induced by `s` and counts each color's points
/// per label. Valid iff every color is split evenly. Split points must be
/// points of their own color, one per color.
BalanceReport verify_splitting(const Necklace& nk, const Splitting& s);

/// Direct solver: guesses one component per color; the component order
/// forces the labels of all points outside the chosen components, which
/// pins a unique candidate split inside each chosen component (or is
/// infeasible). Returns the first verified guess in deterministic order, or
/// nothing if no guess verifies (impossible on valid necklaces).
std::optional<Splitting> base_case_solve(const Necklace& nk);

/// Extends a solution of `original` minus two neighboring interval colors
/// by their medians. The lifted splitting is verified against `original`.
Splitting lift_interval_pair(const Necklace& original, const Splitting& reduced_solution,
                             const std::string& first_color, const std::string& second_color);

struct TwoComponentReduction {
  Necklace reduced;
  std::string color;
  std::vector<Rational> kept_points;  // the kept component, pad included
  std::optional<Rational> pad;        // midpoint inserted when the kept component was even
  long long shift = 0;                // ceil(min(|c1|, |c2|) / 2)
  Rational gap_low;                   // open gap between the two components
  Rational gap_high;
};

/// Drops the smaller of the color's two components and, if the kept one has
/// even size, inserts a pad point between its two central points so the
/// recursion sees odd cardinalities again.
TwoComponentReduction reduce_two_component(const Necklace& nk, const std::string& color);

/// Moves the reduced solution's split for the reduced color by `shift`
/// positions within the kept component, trying both directions and keeping
/// whichever verifies on the original necklace. Candidates landing on the
/// pad point or out of range are discarded.
Splitting lift_two_component(const Necklace& original, const TwoComponentReduction& reduction,
                             const Splitting& reduced_solution, LiftNote* note = nullptr);

/// Recursive solver. `ell` >= 1 is the caller's promise that the necklace
/// is (n - 1 + ell)-separable; the promise is not checked, but any returned
/// splitting is verified. With the promise false the solver either still
/// finds a correct splitting or returns a NotSeparableCertificate.
SolveResult solve(const Necklace& nk, int ell);

}  // namespace nsplit
