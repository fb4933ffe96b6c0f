#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "treesg/gorenstein.hpp"
#include "treesg/piping.hpp"
#include "treesg/polytope.hpp"
#include "treesg/tree.hpp"
#include "treesg/weighting.hpp"

namespace treesg {

using json = nlohmann::json;

namespace detail {

// Values past 2^53 go out as decimal strings so double-based JSON consumers
// stay exact; both forms are accepted on input.
constexpr long long kJsonExactBound = 1LL << 53;

inline json json_int(long long v) {
  if (v > kJsonExactBound || v < -kJsonExactBound) return std::to_string(v);
  return v;
}

inline long long parse_json_int(const json& j, const std::string& what) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(s, &pos);
      if (pos == s.size()) return v;
    } catch (...) {
    }
  }
  throw std::invalid_argument(what + " must be an integer");
}

}  // namespace detail

// Tree JSON: {"n": 6, "diagonals": [[1,3],[1,4],[1,5]]}

inline json tree_to_json(const Tree& tree) {
  json d = json::array();
  for (const auto& [a, b] : tree.diagonals()) d.push_back({a, b});
  return json{{"n", tree.leaves()}, {"diagonals", d}};
}

inline Tree tree_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("tree JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("tree JSON missing integer field \"n\"");
  if (!j.contains("diagonals") || !j["diagonals"].is_array())
    throw std::invalid_argument("tree JSON missing array field \"diagonals\"");
  std::vector<Diagonal> diags;
  for (const auto& e : j["diagonals"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument(
          "tree JSON field \"diagonals\" must hold pairs of vertex labels");
    diags.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Tree(j["n"].get<int>(), std::move(diags));
}

// Weighting JSON: {"leaf": {"1": w1, ...}, "internal": {"1-3": w, ...}}

inline json weighting_to_json(const Tree& tree, const Weighting& w) {
  detail::check_same_tree(tree, w, "weighting_to_json");
  json leaf = json::object();
  for (int i = 0; i < tree.leaves(); ++i)
    leaf[std::to_string(tree.leaf_label(i))] = detail::json_int(w.values[i]);
  json internal = json::object();
  for (int d = 0; d < tree.internal_edge_count(); ++d) {
    const auto& [a, b] = tree.diagonals()[d];
    internal[std::to_string(a) + "-" + std::to_string(b)] =
        detail::json_int(w.values[tree.internal_edge(d)]);
  }
  return json{{"leaf", leaf}, {"internal", internal}};
}

inline Weighting weighting_from_json(const Tree& tree, const json& j) {
  if (!j.is_object())
    throw std::invalid_argument("weighting JSON must be an object");
  if (!j.contains("leaf") || !j["leaf"].is_object())
    throw std::invalid_argument("weighting JSON missing object field \"leaf\"");
  if (!j.contains("internal") || !j["internal"].is_object())
    throw std::invalid_argument("weighting JSON missing object field \"internal\"");
  Weighting w = constant_weighting(tree, 0);
  for (int i = 0; i < tree.leaves(); ++i) {
    const std::string key = std::to_string(tree.leaf_label(i));
    if (!j["leaf"].contains(key))
      throw std::invalid_argument("weighting JSON missing leaf \"" + key + "\"");
    w.values[i] = detail::parse_json_int(j["leaf"][key], "leaf \"" + key + "\"");
  }
  for (int d = 0; d < tree.internal_edge_count(); ++d) {
    const auto& [a, b] = tree.diagonals()[d];
    const std::string key = std::to_string(a) + "-" + std::to_string(b);
    if (!j["internal"].contains(key))
      throw std::invalid_argument("weighting JSON missing internal edge \"" + key + "\"");
    w.values[tree.internal_edge(d)] =
        detail::parse_json_int(j["internal"][key], "internal edge \"" + key + "\"");
  }
  return w;
}

// PipingGraph JSON: {"n": 6, "chords": [{"ends": [1,4], "mult": 2}, ...]}

inline json piping_to_json(const PipingGraph& g) {
  json chords = json::array();
  for (const auto& [pr, m] : g.chords)
    chords.push_back({{"ends", {pr.first, pr.second}}, {"mult", detail::json_int(m)}});
  return json{{"n", g.n_leaves}, {"chords", chords}};
}

inline PipingGraph piping_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("piping JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("piping JSON missing integer field \"n\"");
  if (!j.contains("chords") || !j["chords"].is_array())
    throw std::invalid_argument("piping JSON missing array field \"chords\"");
  PipingGraph g;
  g.n_leaves = j["n"].get<int>();
  for (const auto& c : j["chords"]) {
    if (!c.is_object() || !c.contains("ends") || !c["ends"].is_array() ||
        c["ends"].size() != 2 || !c.contains("mult"))
      throw std::invalid_argument(
          "piping JSON chords need \"ends\" pairs and a \"mult\"");
    g.add_chord(c["ends"][0].get<int>(), c["ends"][1].get<int>(),
                detail::parse_json_int(c["mult"], "chord \"mult\""));
  }
  return g;
}

inline json verdict_to_json(const Tree& tree, const GorensteinVerdict& v) {
  json j;
  j["is_gorenstein"] = v.is_gorenstein;
  j["method"] = v.from_oracle ? "oracle" : "classifier";
  if (v.from_oracle) j["depth"] = v.oracle_depth;
  if (v.generator_degree) j["a"] = *v.generator_degree;
  if (const auto ai = v.a_invariant()) j["a_invariant"] = *ai;
  if (v.generator) j["generator"] = weighting_to_json(tree, *v.generator);
  if (v.failure) {
    j["failure"] = failure_name(*v.failure);
    if (*v.failure == FailureKind::chord_deficit)
      j["deficit"] = {{"i", v.deficit_i}, {"j", v.deficit_j}, {"n_ij", v.deficit_value}};
    if (v.witness) j["witness"] = weighting_to_json(tree, *v.witness);
  }
  return j;
}

}  // namespace treesg
