#pragma once

// JSON datum documents, crystal graph export (DOT, JSON, TSV) and import, and
// global basis tables.  Output is deterministic: keys are written in a fixed
// order and nodes in id order.

#include "crystal.hpp"
#include "global.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace vtc {

using Json = nlohmann::ordered_json;

namespace detail {

inline long json_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ValidationError({where + ": expected an integer"});
  return j.get<long>();
}

inline std::vector<std::vector<long>> json_int_matrix(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError({where + ": expected an array of rows"});
  std::vector<std::vector<long>> out;
  for (size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array()) throw ValidationError({where + ": row " + std::to_string(r + 1) + " is not an array"});
    auto& row = out.emplace_back();
    for (size_t c = 0; c < j[r].size(); ++c)
      row.push_back(json_int(j[r][c], where + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]"));
  }
  return out;
}

}  // namespace detail

/// { "Lambda": [[...]], "labels": [...], optional "pairings": {"denominator", "left", "right"} }
/// where left[k][i] = D <i, Lambda_k> and right[k][i] = D <Lambda_k, i>.
/// Pairings are needed for singular Cartan matrices; otherwise they must agree
/// with the computed ones.
inline CartanDatum datum_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError({"datum: expected a JSON object"});
  if (!j.contains("Lambda")) throw ValidationError({"datum: missing \"Lambda\""});
  for (const auto& [k, _] : j.items())
    if (k != "Lambda" && k != "labels" && k != "pairings") throw ValidationError({"datum: unknown key \"" + k + "\""});
  std::vector<std::vector<int>> L;
  for (const auto& row : detail::json_int_matrix(j["Lambda"], "Lambda")) {
    auto& r = L.emplace_back();
    for (long x : row) r.push_back(static_cast<int>(x));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw ValidationError({"labels: expected an array of strings"});
    for (const auto& x : j["labels"]) {
      if (!x.is_string()) throw ValidationError({"labels: expected an array of strings"});
      labels.push_back(x.get<std::string>());
    }
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError({"labels: must be distinct"});
  }
  if (!j.contains("pairings")) return CartanDatum(L, labels);

  const Json& p = j["pairings"];
  if (!p.is_object() || !p.contains("denominator") || !p.contains("left") || !p.contains("right"))
    throw ValidationError({"pairings: expected {\"denominator\", \"left\", \"right\"}"});
  PairingOverride o;
  o.denominator = static_cast<int>(detail::json_int(p["denominator"], "pairings.denominator"));
  o.left = detail::json_int_matrix(p["left"], "pairings.left");
  o.right = detail::json_int_matrix(p["right"], "pairings.right");
  CartanDatum given(L, labels, o);
  try {
    CartanDatum computed(L, labels);
    if (!(computed == given)) throw ValidationError({"pairings: disagree with the values computed from Lambda"});
    return computed;
  } catch (const ValidationError& e) {
    if (std::string(e.what()).find("singular") == std::string::npos) throw;
  }
  return given;
}

inline CartanDatum load_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError({"cannot open datum file " + path});
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError({path + ": " + e.what()});
  }
  return datum_from_json(j);
}

inline Json datum_to_json(const CartanDatum& d) {
  Json j;
  j["Lambda"] = d.lambda();
  j["labels"] = d.labels();
  if (d.fundamental_in_roots().empty()) {
    Json p;
    p["denominator"] = d.D();
    Json l = Json::array(), r = Json::array();
    for (int k = 0; k < d.rank(); ++k) {
      Json lk = Json::array(), rk = Json::array();
      for (int i = 0; i < d.rank(); ++i) {
        lk.push_back(d.left_pairing(k, i));
        rk.push_back(d.right_pairing(k, i));
      }
      l.push_back(lk);
      r.push_back(rk);
    }
    p["left"] = l;
    p["right"] = r;
    j["pairings"] = p;
  }
  return j;
}

/// Parses "2" or "1,0" into dominant coordinates.
inline std::vector<int> parse_weight(const std::string& s, int rank) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      const int x = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(x);
    } catch (const std::exception&) {
      throw ValidationError({"weight \"" + s + "\": expected comma-separated integers"});
    }
  }
  if (static_cast<int>(out.size()) != rank)
    throw ValidationError({"weight \"" + s + "\": expected " + std::to_string(rank) + " coordinates"});
  for (int x : out)
    if (x < 0) throw ValidationError({"weight \"" + s + "\": must be dominant"});
  return out;
}

// ---- crystal graphs

inline Json graph_to_json(const CartanDatum& d, const CrystalGraph& g) {
  const auto& lab = d.labels();
  Json j;
  j["datum"] = datum_to_json(d);
  if (g.binf) j["highest_weight"] = "binf";
  else j["highest_weight"] = g.highest;
  Json nodes = Json::array(), edges = Json::array();
  for (size_t b = 0; b < g.size(); ++b) {
    Json n;
    n["id"] = b;
    n["weight"] = node_weight(d, g, b);
    Json w = Json::array();
    for (int i : g.gen_word[b]) w.push_back(lab[i]);
    n["gen_word"] = w;
    nodes.push_back(n);
  }
  for (size_t b = 0; b < g.size(); ++b)
    for (int i = 0; i < g.rank; ++i)
      if (g.f_edge[b][i] >= 0) edges.push_back(Json{{"from", b}, {"to", g.f_edge[b][i]}, {"color", lab[i]}});
  j["nodes"] = nodes;
  j["edges"] = edges;
  Json eps = Json::object(), phi = Json::object();
  for (int i = 0; i < g.rank; ++i) {
    Json e = Json::array(), p = Json::array();
    for (size_t b = 0; b < g.size(); ++b) {
      e.push_back(g.eps[b][i]);
      p.push_back(g.phi[b][i]);
    }
    eps[lab[i]] = e;
    phi[lab[i]] = p;
  }
  j["eps"] = eps;
  j["phi"] = phi;
  return j;
}

inline std::string export_json(const CartanDatum& d, const CrystalGraph& g) { return graph_to_json(d, g).dump(2) + "\n"; }

/// Inverse of graph_to_json.  Grades are recovered from generation words.
inline std::pair<CartanDatum, CrystalGraph> graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("datum") || !j.contains("nodes") || !j.contains("edges"))
    throw ValidationError({"graph: expected datum, nodes and edges"});
  CartanDatum d = datum_from_json(j["datum"]);
  const int r = d.rank();
  std::map<std::string, int> color;
  for (int i = 0; i < r; ++i) color[d.labels()[i]] = i;
  auto col = [&](const Json& c) {
    if (!c.is_string() || !color.count(c.get<std::string>())) throw ValidationError({"graph: unknown color"});
    return color.at(c.get<std::string>());
  };
  CrystalGraph g;
  g.rank = r;
  const Json& hw = j.at("highest_weight");
  if (hw.is_string()) {
    if (hw.get<std::string>() != "binf") throw ValidationError({"graph: highest_weight must be a weight or \"binf\""});
    g.binf = true;
  } else {
    for (const auto& x : hw) g.highest.push_back(static_cast<int>(detail::json_int(x, "highest_weight")));
  }
  const size_t N = j["nodes"].size();
  for (size_t b = 0; b < N; ++b) {
    const Json& n = j["nodes"][b];
    if (detail::json_int(n.at("id"), "node id") != static_cast<long>(b))
      throw ValidationError({"graph: node ids must be 0..n-1 in order"});
    Content c(r, 0);
    auto& w = g.gen_word.emplace_back();
    for (const auto& x : n.at("gen_word")) {
      w.push_back(col(x));
      ++c[w.back()];
    }
    int h = 0;
    for (int x : c) h += x;
    g.depth = std::max(g.depth, h);
    g.grade.push_back(c);
    if (node_weight(d, g, b) != n.at("weight").get<std::vector<long>>())
      throw ValidationError({"graph: weight of node " + std::to_string(b) + " does not match its word"});
  }
  g.f_edge.assign(N, std::vector<long>(r, -1));
  g.e_edge = g.f_edge;
  for (const auto& e : j["edges"]) {
    const long a = detail::json_int(e.at("from"), "edge"), b = detail::json_int(e.at("to"), "edge");
    if (a < 0 || b < 0 || a >= static_cast<long>(N) || b >= static_cast<long>(N))
      throw ValidationError({"graph: edge endpoint out of range"});
    const int i = col(e.at("color"));
    g.f_edge[a][i] = b;
    g.e_edge[b][i] = a;
  }
  g.eps.assign(N, std::vector<int>(r, 0));
  g.phi = g.eps;
  for (int i = 0; i < r; ++i) {
    const auto& lab = d.labels()[i];
    const auto e = j.at("eps").at(lab).get<std::vector<int>>(), p = j.at("phi").at(lab).get<std::vector<int>>();
    if (e.size() != N || p.size() != N) throw ValidationError({"graph: eps/phi tables have the wrong length"});
    for (size_t b = 0; b < N; ++b) {
      g.eps[b][i] = e[b];
      g.phi[b][i] = p[b];
    }
  }
  return {std::move(d), std::move(g)};
}

inline std::pair<CartanDatum, CrystalGraph> import_json(const std::string& text) {
  try {
    return graph_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    throw ValidationError({std::string("graph: ") + e.what()});
  }
}

inline std::string export_dot(const CartanDatum& d, const CrystalGraph& g) {
  const auto& lab = d.labels();
  std::ostringstream o;
  o << "digraph crystal {\n";
  for (size_t b = 0; b < g.size(); ++b) {
    std::string w;
    for (long x : node_weight(d, g, b)) w += (w.empty() ? "" : ",") + std::to_string(x);
    o << "  " << b << " [label=\"" << b << "\\n(" << w << ")\"];\n";
  }
  for (size_t b = 0; b < g.size(); ++b)
    for (int i = 0; i < g.rank; ++i)
      if (g.f_edge[b][i] >= 0) o << "  " << b << " -> " << g.f_edge[b][i] << " [label=\"" << lab[i] << "\"];\n";
  o << "}\n";
  return o.str();
}

inline std::string export_tsv(const CartanDatum& d, const CrystalGraph& g) {
  const auto& lab = d.labels();
  auto list = [](const auto& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  };
  std::ostringstream o;
  o << "id\tweight\tgen_word\teps\tphi\n";
  for (size_t b = 0; b < g.size(); ++b) {
    std::string w;
    for (int i : g.gen_word[b]) w += (w.empty() ? "" : " ") + lab[i];
    o << b << '\t' << list(node_weight(d, g, b)) << '\t' << w << '\t' << list(g.eps[b]) << '\t' << list(g.phi[b])
      << '\n';
  }
  return o.str();
}

// ---- global bases

/// {"grade", "basis": [{"node", "monomial_expansion", "coeffs"}]}, nonzero terms only.
inline Json global_to_json(const CartanDatum& d, const GlobalGrade& g) {
  Json j;
  j["grade"] = g.grade;
  Json basis = Json::array();
  for (const auto& e : g.basis) {
    Json m = Json::array(), c = Json::array();
    for (size_t k = 0; k < g.slice.size(); ++k) {
      if (e.expansion[k].is_zero()) continue;
      m.push_back(format_monomial(g.slice[k], d.labels()));
      c.push_back(to_string(e.expansion[k], d.D()));
    }
    basis.push_back(Json{{"node", e.node}, {"monomial_expansion", m}, {"coeffs", c}});
  }
  j["basis"] = basis;
  return j;
}

/// "m1 + (c) * m2" with unit coefficients suppressed.
inline std::string format_expansion(const CartanDatum& d, const GlobalGrade& g, const GlobalElement& e) {
  std::string s;
  for (size_t k = 0; k < g.slice.size(); ++k) {
    const Scalar& c = e.expansion[k];
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (!(c == Scalar(1))) s += "(" + to_string(c, d.D()) + ") * ";
    s += format_monomial(g.slice[k], d.labels());
  }
  return s.empty() ? "0" : s;
}

}  // namespace vtc
