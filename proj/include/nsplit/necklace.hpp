#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsplit/rational.hpp"

namespace nsplit {

/// Color-subset enumeration in sep_by_definition is exponential; instances
/// above this many colors are rejected.
inline constexpr int kDefaultSepColorLimit = 16;

struct NecklacePoint {
  Rational coordinate;
  std::string color;
};

/// Maximal run of one color in the left-to-right point order.
struct Component {
  std::string color;
  int occurrence = 0;  // 0-based among this color's components
  std::vector<Rational> points;
};

struct IntervalQueries {
  std::map<std::string, bool> is_interval;
  /// First pair of adjacent interval colors in the run string, if any.
  std::optional<std::pair<std::string, std::string>> neighboring_pair;
  /// First color (in id order) with exactly two components; only reported
  /// when no neighboring interval pair exists.
  std::optional<std::string> two_component_color;
};

/// An ordered family of pairwise-disjoint point sets ("colors") on the line.
///
/// Immutable after construction; every color is nonempty with an odd number
/// of points and all coordinates are pairwise distinct. Derived views (the
/// merged point sequence, the run-compressed color string, components) are
/// built once up front.
class Necklace {
 public:
  using ColorMap = std::map<std::string, std::vector<Rational>>;

  Necklace() = default;  // empty necklace, zero colors

  /// Validates and builds. Throws MalformedInput on empty colors, even
  /// cardinalities, duplicate coordinates, or bad tokens.
  static Necklace from_colors(ColorMap colors);

  const ColorMap& colors() const { return colors_; }
  std::size_t color_count() const { return colors_.size(); }
  std::size_t total_points() const { return sequence_.size(); }
  bool has_color(const std::string& id) const { return colors_.count(id) > 0; }

  /// All points in increasing coordinate order.
  const std::vector<NecklacePoint>& sequence() const { return sequence_; }
  /// Run-compressed color sequence ("color string").
  const std::vector<std::string>& color_string() const { return color_string_; }
  /// Components in sequence order.
  const std::vector<Component>& components() const { return components_; }
  /// Indices into components() belonging to one color, left to right.
  const std::vector<std::size_t>& components_of(const std::string& color) const;
  std::size_t component_count(const std::string& color) const {
    return components_of(color).size();
  }

  bool operator==(const Necklace& other) const { return colors_ == other.colors_; }
  bool operator!=(const Necklace& other) const { return !(*this == other); }

 private:
  void build_derived();

  ColorMap colors_;
  std::vector<NecklacePoint> sequence_;
  std::vector<std::string> color_string_;
  std::vector<Component> components_;
  std::map<std::string, std::vector<std::size_t>> components_by_color_;
};

/// Parses either an instance document ({"colors": {...}}) or the compact
/// form, one lowercase letter per point with coordinate = character index.
Necklace parse_necklace(const std::string& text);

/// Canonical instance document; inverse of parse_necklace.
std::string serialize_necklace(const Necklace& nk);

IntervalQueries interval_queries(const Necklace& nk);

/// Separability straight from the definition: max over all color subsets A
/// of (#maximal A/complement blocks in the color string - 1). Exponential in
/// the color count.
int sep_by_definition(const Necklace& nk, int color_limit = kDefaultSepColorLimit);

/// Same enumeration, also reporting the first subset attaining the maximum.
std::pair<int, std::vector<std::string>> sep_with_witness(
    const Necklace& nk, int color_limit = kDefaultSepColorLimit);

}  // namespace nsplit
