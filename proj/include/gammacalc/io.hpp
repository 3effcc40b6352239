#pragma once

// JSON reading and writing: polynomials as decimal-string arrays, complexes,
// posets, and the builder expressions that describe complexes by operations.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gammacalc/complex.hpp"
#include "gammacalc/constructions.hpp"
#include "gammacalc/posets.hpp"

namespace gammacalc {

using Json = nlohmann::ordered_json;

inline Json poly_to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

inline Json ints_to_json(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

inline BigInt big_from_json(const Json& j) {
  try {
    if (j.is_string()) return BigInt(j.get<std::string>());
    if (j.is_number_integer()) return BigInt(j.get<long long>());
  } catch (const std::exception&) {
  }
  throw InputError("expected an integer or a decimal string, got " + j.dump());
}

inline IntPolynomial poly_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("polynomial must be a non-empty array of coefficients");
  std::vector<BigInt> c;
  for (const auto& e : j) c.push_back(big_from_json(e));
  return IntPolynomial(std::move(c));
}

inline Json complex_to_json(const SimplicialComplex& x) {
  Json facets = Json::array();
  for (const auto& f : x.facets()) facets.push_back(x.labels_of(f));
  Json out;
  out["vertices"] = x.labels();
  out["facets"] = std::move(facets);
  return out;
}

inline std::string label_from_json(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError("vertex label must be a string or integer, got " + j.dump());
}

inline SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
    throw InputError("complex JSON needs \"vertices\" and \"facets\"");
  if (!j["vertices"].is_array() || !j["facets"].is_array()) throw InputError("\"vertices\" and \"facets\" must be arrays");
  std::vector<std::string> labels;
  for (const auto& v : j["vertices"]) labels.push_back(label_from_json(v));
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : j["facets"]) {
    if (!f.is_array()) throw InputError("each facet must be an array of labels");
    std::vector<std::string> face;
    for (const auto& v : f) face.push_back(label_from_json(v));
    facets.push_back(std::move(face));
  }
  return SimplicialComplex::from_facets(std::move(labels), facets);
}

inline Json poset_to_json(const GradedPoset& p) {
  Json covers = Json::array();
  for (const auto& [a, b] : p.covers()) covers.push_back({p.labels()[a], p.labels()[b]});
  Json out;
  out["elements"] = p.labels();
  out["covers"] = std::move(covers);
  return out;
}

inline GradedPoset poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    throw InputError("poset JSON needs \"elements\" and \"covers\"");
  std::vector<std::string> labels;
  for (const auto& e : j["elements"]) labels.push_back(label_from_json(e));
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2) throw InputError("each cover must be a pair [lower, upper]");
    covers.emplace_back(label_from_json(c[0]), label_from_json(c[1]));
  }
  return GradedPoset(std::move(labels), covers);
}

namespace detail {

inline long long int_field(const Json& j, const char* key, long long lo, long long hi) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw InputError(std::string("\"") + j.value("op", "?") + "\" needs integer field \"" + key + "\"");
  const long long v = j[key].get<long long>();
  if (v < lo || v > hi)
    throw InputError(std::string("\"") + key + "\" = " + std::to_string(v) + " out of range [" + std::to_string(lo) +
                     ", " + std::to_string(hi) + "]");
  return v;
}

inline const Json& sub_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("\"") + j.value("op", "?") + "\" needs field \"" + key + "\"");
  return j[key];
}

}  // namespace detail

/// Evaluates a builder expression such as
/// {"op":"join","args":[{"op":"polygon","m":5},{"op":"cross","n":2}]}.
/// An object with "vertices" and "facets" is taken as a literal complex.
inline SimplicialComplex build_complex(const Json& j) {
  if (!j.is_object()) throw InputError("builder expression must be a JSON object");
  if (!j.contains("op")) {
    if (j.contains("vertices")) return complex_from_json(j);
    throw InputError("builder expression needs an \"op\" field");
  }
  if (!j["op"].is_string()) throw InputError("\"op\" must be a string");
  const std::string op = j["op"].get<std::string>();

  if (op == "polygon") return polygon(static_cast<int>(detail::int_field(j, "m", 3, kMaxVertices)));
  if (op == "cross") return cross_polytope(static_cast<int>(detail::int_field(j, "n", 0, 20)));
  if (op == "simplex") return simplex(static_cast<int>(detail::int_field(j, "n", 0, kMaxVertices - 1)));
  if (op == "simplex_boundary")
    return simplex_boundary(static_cast<int>(detail::int_field(j, "n", 0, kMaxVertices - 1)));
  if (op == "complex") return complex_from_json(j);
  if (op == "join") {
    const auto& args = detail::sub_field(j, "args");
    if (!args.is_array() || args.empty()) throw InputError("\"join\" needs a non-empty \"args\" array");
    SimplicialComplex out = build_complex(args[0]);
    for (std::size_t i = 1; i < args.size(); ++i) out = join(out, build_complex(args[i]));
    return out;
  }
  if (op == "suspension") return suspension(build_complex(detail::sub_field(j, "of")));
  if (op == "barycentric") return barycentric(build_complex(detail::sub_field(j, "of")));
  if (op == "paper") return paper_counterexample(static_cast<std::size_t>(detail::int_field(j, "m", 0, 64)));
  if (op == "sub") {
    SimplicialComplex x = build_complex(detail::sub_field(j, "of"));
    const auto& edge = detail::sub_field(j, "edge");
    if (!edge.is_array() || edge.size() != 2) throw InputError("\"edge\" must be a pair of vertex labels");
    const auto times = j.contains("times") ? detail::int_field(j, "times", 0, 200) : 1;
    const auto s_label = label_from_json(edge[0]);
    const auto t_label = label_from_json(edge[1]);
    auto s = x.find_vertex(s_label), t = x.find_vertex(t_label);
    if (!s || !t) throw InputError("\"sub\": edge {" + s_label + "," + t_label + "} refers to an unknown vertex");
    std::size_t tv = *t;
    for (long long i = 0; i < times; ++i) {
      x = edge_subdivision(x, *s, tv, fresh_label(x));
      tv = x.num_vertices() - 1;
    }
    return x;
  }
  if (op == "clique") {
    const auto& g = detail::sub_field(j, "graph");
    if (!g.is_object() || !g.contains("vertices")) throw InputError("\"clique\" graph needs \"vertices\"");
    std::vector<std::string> labels;
    for (const auto& v : g["vertices"]) labels.push_back(label_from_json(v));
    if (labels.size() > kMaxVertices) throw SizeLimitError("graph has more than 256 vertices");
    Graph graph(labels);
    if (g.contains("edges")) {
      for (const auto& e : g["edges"]) {
        if (!e.is_array() || e.size() != 2) throw InputError("graph edges must be pairs of labels");
        graph.add_edge(label_from_json(e[0]), label_from_json(e[1]));
      }
    }
    return clique_complex(graph);
  }
  throw InputError("unknown builder op \"" + op + "\"");
}

}  // namespace gammacalc
