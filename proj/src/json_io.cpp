#include "nsplit/json_io.hpp"

#include "nsplit/errors.hpp"

namespace nsplit {

using nlohmann::json;

json rational_to_json(const Rational& r) {
  if (r.is_integer()) return json(r.num());
  return json(r.to_string());
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw MalformedInput("coordinates must be integers or \"p/q\" strings");
}

json necklace_to_json(const Necklace& nk) {
  json colors = json::object();
  for (const auto& [token, points] : nk.colors()) {
    json list = json::array();
    for (const Rational& p : points) list.push_back(rational_to_json(p));
    colors[token] = list;
  }
  return json{{"colors", colors}};
}

Necklace necklace_from_json(const json& j) {
  if (!j.is_object() || !j.contains("colors") || !j["colors"].is_object())
    throw MalformedInput("instance document needs a top-level \"colors\" object");
  Necklace::ColorMap colors;
  for (const auto& [token, list] : j["colors"].items()) {
    if (!list.is_array())
      throw MalformedInput("color '" + token + "' must map to a coordinate list");
    std::vector<Rational> points;
    points.reserve(list.size());
    for (const json& coord : list) points.push_back(rational_from_json(coord));
    colors.emplace(token, std::move(points));
  }
  return Necklace::from_colors(std::move(colors));
}

json splitting_to_json(const Splitting& s) {
  json splits = json::array();
  for (const SplitPoint& sp : s.splits) {
    splits.push_back(json{{"color", sp.color}, {"coordinate", rational_to_json(sp.coordinate)}});
  }
  return json{{"splits", splits}};
}

Splitting splitting_from_json(const json& j) {
  const json* doc = &j;
  if (j.is_object() && j.contains("splitting")) doc = &j["splitting"];
  if (!doc->is_object() || !doc->contains("splits") || !(*doc)["splits"].is_array())
    throw MalformedInput("splitting document needs a \"splits\" array");
  Splitting s;
  for (const json& item : (*doc)["splits"]) {
    if (!item.is_object() || !item.contains("color") || !item.contains("coordinate"))
      throw MalformedInput("each split needs \"color\" and \"coordinate\"");
    s.splits.push_back({item["color"].get<std::string>(),
                        rational_from_json(item["coordinate"])});
  }
  return s;
}

json balance_report_to_json(const BalanceReport& report) {
  json colors = json::object();
  for (const auto& [token, balance] : report.colors) {
    colors[token] = json{{"plus", balance.plus}, {"minus", balance.minus}};
  }
  return json{{"valid", report.valid}, {"colors", colors}};
}

json verdict_to_json(const SeparabilityVerdict& verdict) {
  json j{
      {"decision", verdict.decision},
      {"fired_check", to_string(verdict.fired_check)},
      {"ell", verdict.ell},
      {"n_prime", verdict.n_prime},
      {"interval_count", verdict.interval_count},
      {"multi_edge_multiplicity", verdict.multi_edge_multiplicity},
      {"threshold", verdict.threshold},
      {"pairs_removed", verdict.pairs_removed},
      {"backend", "exact-branch-and-bound"},
  };
  j["omega_final"] =
      verdict.omega_final ? rational_to_json(*verdict.omega_final) : json(nullptr);
  j["gap_k"] = verdict.gap_k ? rational_to_json(*verdict.gap_k) : json(nullptr);
  return j;
}

json certificate_to_json(const NotSeparableCertificate& certificate) {
  return json{{"certificate",
               json{{"reason", certificate.reason},
                    {"colors_remaining", certificate.colors_remaining},
                    {"ell", certificate.ell},
                    {"residual", necklace_to_json(certificate.residual)}}}};
}

json multigraph_to_json(const Multigraph& g) {
  json vertices = json::array();
  for (const std::string& v : g.vertices()) vertices.push_back(v);
  json edges = json::array();
  for (const auto& [e, m] : g.edges()) {
    edges.push_back(json{{"u", e.first}, {"v", e.second}, {"multiplicity", m}});
  }
  json loops = json::array();
  for (const auto& [v, m] : g.loops()) {
    loops.push_back(json{{"vertex", v}, {"count", m}});
  }
  bool connected = is_connected(g);
  json j{
      {"vertices", vertices},
      {"edges", edges},
      {"loops", loops},
      {"edge_count", g.edge_count()},
      {"connected", connected},
      {"semi_eulerian", check_semi_eulerian(g)},
  };
  j["edwards_erdos_bound"] = (connected && g.vertex_count() > 0)
                                 ? rational_to_json(edwards_erdos_bound(g))
                                 : json(nullptr);
  return j;
}

}  // namespace nsplit
