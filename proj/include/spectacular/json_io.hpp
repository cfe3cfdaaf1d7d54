#pragma once

#include <json.hpp>
#include <limits>
#include <string>

#include "spectacular/builder.hpp"
#include "spectacular/dehn.hpp"
#include "spectacular/homology.hpp"
#include "spectacular/presentation.hpp"
#include "spectacular/verify.hpp"

namespace spectacular {

using nlohmann::json;

// ---- complexes (schema v1: vertices, edges, polygons) ----

inline json to_json(const TwoComplex& c) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < c.graph().vertex_count(); ++v) j["vertices"].push_back(v);
  j["edges"] = json::array();
  for (auto [u, v] : c.graph().edges()) j["edges"].push_back({u, v});
  j["polygons"] = json::array();
  for (const Polygon& p : c.polygons()) j["polygons"].push_back(p.vertices());
  return j;
}

inline TwoComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") || !j.contains("polygons"))
    throw std::invalid_argument("complex JSON needs vertices, edges and polygons");
  std::vector<int> vertices = j.at("vertices").get<std::vector<int>>();
  int n = static_cast<int>(vertices.size());
  for (int i = 0; i < n; ++i)
    if (vertices[i] != i) throw std::invalid_argument("vertices must be 0..n-1");
  std::vector<std::pair<int, int>> edges;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::vector<Polygon> polys;
  for (const json& p : j.at("polygons")) polys.push_back(Polygon(p.get<std::vector<int>>()));
  return TwoComplex(SimpleGraph(n, std::move(edges)), std::move(polys));
}

// ---- homology ----

inline json to_json(const HomologyReport& r) {
  auto torsion = [](const std::vector<Int>& t) {
    json arr = json::array();
    for (const Int& d : t) {
      if (d > std::numeric_limits<long long>::max())
        arr.push_back(d.str());  // desk-scale inputs never get here
      else
        arr.push_back(static_cast<long long>(d));
    }
    return arr;
  };
  return json{{"betti", {r.b0, r.b1, r.b2}},
              {"torsion", {torsion(r.torsion_h0), torsion(r.torsion_h1), torsion(r.torsion_h2)}},
              {"acyclic", r.acyclic()}};
}

// ---- condition reports ----

inline json to_json(const ConditionReport& r) {
  json checks = json::array();
  for (const ConditionCheck& c : r.checks)
    checks.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  json j{{"spectacular", r.spectacular}, {"conditions", checks}, {"homology", to_json(r.homology)}};
  j["girth"] = r.girth ? json(*r.girth) : json(nullptr);
  j["branch_separation"] = r.branch_separation ? json(*r.branch_separation) : json(nullptr);
  return j;
}

// ---- labelled graphs and presentations ----

inline json to_json(const LabeledGraph& lg) {
  const LabelSet& ls = lg.labels();
  json labels = json::array();
  for (int l = 0; l < ls.size(); ++l)
    labels.push_back({{"name", ls.name(l)}, {"inverse", ls.name(ls.tau(l))}});
  json edges = json::array();
  for (int i = 0; i < lg.graph().edge_count(); ++i) {
    auto [u, v] = lg.graph().edges()[i];
    edges.push_back({{"from", u}, {"to", v}, {"label", ls.name(lg.forward_label(i))}});
  }
  return json{{"vertex_count", lg.graph().vertex_count()}, {"labels", labels}, {"edges", edges}};
}

inline std::shared_ptr<const LabelSet> label_set_from_json(const json& labels) {
  std::vector<std::string> names;
  for (const json& l : labels) names.push_back(l.at("name").get<std::string>());
  std::vector<int> tau(names.size());
  for (size_t i = 0; i < names.size(); ++i) {
    std::string inv = labels[i].at("inverse").get<std::string>();
    auto it = std::find(names.begin(), names.end(), inv);
    if (it == names.end()) throw std::invalid_argument("inverse label missing: " + inv);
    tau[i] = static_cast<int>(it - names.begin());
  }
  return std::make_shared<LabelSet>(std::move(names), std::move(tau));
}

inline LabeledGraph labeled_graph_from_json(const json& j,
                                            std::shared_ptr<const LabelSet> labels = nullptr) {
  if (!labels) labels = label_set_from_json(j.at("labels"));
  int n = j.at("vertex_count").get<int>();
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<std::pair<int, int>, int>> directed;
  for (const json& e : j.at("edges")) {
    int u = e.at("from").get<int>(), v = e.at("to").get<int>();
    std::optional<int> l = labels->find(e.at("label").get<std::string>());
    if (!l) throw std::invalid_argument("edge label not in label set");
    edges.emplace_back(u, v);
    directed.push_back({{u, v}, *l});
  }
  SimpleGraph g(n, std::move(edges));
  std::vector<int> forward(g.edge_count());
  for (const auto& [dir, l] : directed) {
    auto [u, v] = dir;
    forward[g.edge_index(u, v)] = u < v ? l : labels->tau(l);
  }
  return LabeledGraph(std::move(g), std::move(labels), std::move(forward));
}

inline json to_json(const GraphicalPresentation& p) {
  const LabelSet& ls = p.labels();
  json labels = json::array();
  for (int l = 0; l < ls.size(); ++l)
    labels.push_back({{"name", ls.name(l)}, {"inverse", ls.name(ls.tau(l))}});
  json relators = json::array();
  for (const Relator& r : p.relators()) {
    json rj = to_json(r.graph);
    rj.erase("labels");  // shared alphabet lives at the top level
    relators.push_back(
        {{"kind",
          r.provenance.kind == RelatorProvenance::Kind::polygon_boundary ? "polygon" : "skeleton"},
         {"degree", r.provenance.degree},
         {"polygon", r.provenance.polygon},
         {"girth", r.girth},
         {"graph", rj}});
  }
  json j{{"labels", labels}, {"relators", relators}, {"perimeters", p.perimeters()}};
  j["base_girth"] = p.base_girth() ? json(*p.base_girth()) : json(nullptr);
  switch (p.c16_status()) {
    case GraphicalPresentation::C16::unchecked: j["c16_status"] = "unchecked"; break;
    case GraphicalPresentation::C16::verified: j["c16_status"] = "verified"; break;
    case GraphicalPresentation::C16::certified: j["c16_status"] = "certified"; break;
  }
  return j;
}

inline GraphicalPresentation presentation_from_json(const json& j) {
  std::shared_ptr<const LabelSet> labels = label_set_from_json(j.at("labels"));
  std::vector<Relator> relators;
  for (const json& rj : j.at("relators")) {
    Relator r{labeled_graph_from_json(rj.at("graph"), labels),
              {rj.at("kind").get<std::string>() == "polygon"
                   ? RelatorProvenance::Kind::polygon_boundary
                   : RelatorProvenance::Kind::one_skeleton,
               rj.at("degree").get<int>(), rj.at("polygon").get<int>()},
              rj.at("girth").get<int>()};
    relators.push_back(std::move(r));
  }
  std::optional<int> base_girth;
  if (j.contains("base_girth") && !j.at("base_girth").is_null())
    base_girth = j.at("base_girth").get<int>();
  std::vector<int> perims = j.value("perimeters", std::vector<int>{});
  GraphicalPresentation p(std::move(labels), std::move(relators), base_girth, std::move(perims));
  std::string status = j.value("c16_status", "unchecked");
  if (status == "verified") p.set_c16_status(GraphicalPresentation::C16::verified);
  if (status == "certified") p.set_c16_status(GraphicalPresentation::C16::certified);
  return p;
}

// ---- word problem reports ----

inline json to_json(const LabelSet& ls, const ReductionTrace& t) {
  json steps = json::array();
  for (const ReductionStep& s : t.steps)
    steps.push_back({{"relator", s.relator},
                     {"position", s.position},
                     {"match_length", s.match_length},
                     {"start_vertex", s.start_vertex},
                     {"end_vertex", s.end_vertex},
                     {"replacement", format_word(ls, s.replacement)}});
  return json{{"initial", format_word(ls, t.initial)},
              {"steps", steps},
              {"final", format_word(ls, t.final_word)}};
}

inline json to_json(const C16Report& r) {
  auto pair_json = [](const PiecePair& p) {
    json j{{"relators", {p.i, p.j}}, {"min_girth", p.min_girth}, {"ok", p.ok}};
    j["piece"] = p.piece ? json(*p.piece) : json(nullptr);  // null: unbounded
    return j;
  };
  json violations = json::array();
  for (const PiecePair& v : r.violations) violations.push_back(pair_json(v));
  return json{{"pass", r.pass},
              {"pairs_checked", r.pairs_checked},
              {"worst", pair_json(r.worst)},
              {"violations", violations}};
}

inline json to_json(const C16Certificate& c) {
  return json{{"valid", c.valid},
              {"girth", c.girth},
              {"cross_degree_ok", c.cross_degree_ok},
              {"self_ok", c.self_ok},
              {"polygon_pairs_ok", c.polygon_pairs_ok},
              {"detail", c.detail}};
}

}  // namespace spectacular
