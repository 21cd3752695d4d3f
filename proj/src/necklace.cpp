#include "nsplit/necklace.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "nsplit/errors.hpp"
#include "nsplit/json_io.hpp"

namespace nsplit {

namespace {

bool valid_token(const std::string& token) {
  if (token.empty()) return false;
  for (unsigned char c : token) {
    if (c <= ' ' || c > '~') return false;  // printable ASCII, no whitespace
  }
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  auto parse_ll = [](const std::string& part) {
    if (part.empty()) throw MalformedInput("empty number in rational '" + part + "'");
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw MalformedInput("cannot parse number '" + part + "'");
    }
    if (used != part.size()) throw MalformedInput("trailing characters in number '" + part + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_ll(text));
  return Rational(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
}

Necklace Necklace::from_colors(ColorMap colors) {
  Necklace nk;
  for (auto& [token, points] : colors) {
    if (!valid_token(token))
      throw MalformedInput("invalid color token '" + token + "'");
    if (points.empty()) throw MalformedInput("color '" + token + "' is empty");
    std::sort(points.begin(), points.end());
    if (points.size() % 2 == 0) {
      throw MalformedInput("color '" + token + "' must have an odd number of points (has " +
                           std::to_string(points.size()) + ")");
    }
  }
  nk.colors_ = std::move(colors);
  nk.build_derived();
  return nk;
}

void Necklace::build_derived() {
  sequence_.clear();
  for (const auto& [token, points] : colors_) {
    for (const Rational& p : points) sequence_.push_back({p, token});
  }
  std::sort(sequence_.begin(), sequence_.end(),
            [](const NecklacePoint& a, const NecklacePoint& b) { return a.coordinate < b.coordinate; });
  for (std::size_t i = 1; i < sequence_.size(); ++i) {
    if (sequence_[i - 1].coordinate == sequence_[i].coordinate) {
      throw MalformedInput("duplicate coordinate " + sequence_[i].coordinate.to_string() +
                           " (colors must be disjoint)");
    }
  }

  color_string_.clear();
  components_.clear();
  components_by_color_.clear();
  for (const NecklacePoint& pt : sequence_) {
    if (components_.empty() || components_.back().color != pt.color) {
      Component comp;
      comp.color = pt.color;
      comp.occurrence = static_cast<int>(components_by_color_[pt.color].size());
      components_by_color_[pt.color].push_back(components_.size());
      components_.push_back(std::move(comp));
      color_string_.push_back(pt.color);
    }
    components_.back().points.push_back(pt.coordinate);
  }
}

const std::vector<std::size_t>& Necklace::components_of(const std::string& color) const {
  auto it = components_by_color_.find(color);
  if (it == components_by_color_.end())
    throw MalformedInput("unknown color '" + color + "'");
  return it->second;
}

Necklace parse_necklace(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t\r\n");
  std::size_t end = text.find_last_not_of(" \t\r\n");
  if (begin == std::string::npos) throw MalformedInput("empty instance");
  std::string body = text.substr(begin, end - begin + 1);

  if (body.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw MalformedInput(std::string("invalid instance document: ") + e.what());
    }
    return necklace_from_json(doc);
  }

  // compact form: character i is one point at coordinate i
  Necklace::ColorMap colors;
  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c < 'a' || c > 'z')
      throw MalformedInput("compact instances use lowercase letters only");
    colors[std::string(1, c)].push_back(Rational(static_cast<long long>(i)));
  }
  return Necklace::from_colors(std::move(colors));
}

std::string serialize_necklace(const Necklace& nk) {
  return necklace_to_json(nk).dump(2);
}

IntervalQueries interval_queries(const Necklace& nk) {
  IntervalQueries q;
  for (const auto& [token, points] : nk.colors()) {
    q.is_interval[token] = nk.component_count(token) == 1;
  }
  const auto& runs = nk.color_string();
  for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
    if (q.is_interval.at(runs[i]) && q.is_interval.at(runs[i + 1])) {
      q.neighboring_pair = {runs[i], runs[i + 1]};
      break;
    }
  }
  if (!q.neighboring_pair) {
    for (const auto& [token, points] : nk.colors()) {
      if (nk.component_count(token) == 2) {
        q.two_component_color = token;
        break;
      }
    }
  }
  return q;
}

std::pair<int, std::vector<std::string>> sep_with_witness(const Necklace& nk, int color_limit) {
  const int n = static_cast<int>(nk.color_count());
  if (n > color_limit) {
    throw InstanceTooLarge("separability by definition enumerates 2^" + std::to_string(n) +
                           " subsets; limit is " + std::to_string(color_limit) + " colors");
  }
  std::vector<std::string> tokens;
  tokens.reserve(n);
  for (const auto& [token, points] : nk.colors()) tokens.push_back(token);

  // color string as indices into tokens
  std::vector<int> runs;
  runs.reserve(nk.color_string().size());
  for (const std::string& c : nk.color_string()) {
    runs.push_back(static_cast<int>(
        std::lower_bound(tokens.begin(), tokens.end(), c) - tokens.begin()));
  }

  int best = 0;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    int boundaries = 0;
    for (std::size_t i = 1; i < runs.size(); ++i) {
      bool a = (mask >> runs[i - 1]) & 1;
      bool b = (mask >> runs[i]) & 1;
      if (a != b) ++boundaries;
    }
    if (boundaries > best) {
      best = boundaries;
      best_mask = mask;
    }
  }
  std::vector<std::string> witness;
  for (int i = 0; i < n; ++i) {
    if ((best_mask >> i) & 1) witness.push_back(tokens[i]);
  }
  return {best, witness};
}

int sep_by_definition(const Necklace& nk, int color_limit) {
  return sep_with_witness(nk, color_limit).first;
}

}  // namespace nsplit
