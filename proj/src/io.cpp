#include "starramsey/io.hpp"

#include <fstream>
#include <limits>
#include <set>

#include "starramsey/error.hpp"

namespace starramsey {
namespace {

[[noreturn]] void invalid(const std::string& detail) {
  throw Error(ErrorCode::InvalidInput, detail);
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) invalid(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::int64_t as_int(const Json& value, const char* what) {
  if (!value.is_number_integer()) invalid(std::string(what) + " must be an integer");
  return value.get<std::int64_t>();
}

int as_small_int(const Json& value, const char* what) {
  auto v = as_int(value, what);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    invalid(std::string(what) + " out of range");
  }
  return static_cast<int>(v);
}

Json colors_json(ColorSet set) { return Json(colors_of(set)); }

}  // namespace

Json to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(value));
  }
  return Json(value.str());
}

Json to_json(const EllProfile& profile) {
  Json doc;
  doc["ell"] = profile.ell;
  doc["a"] = profile.a;
  doc["k"] = profile.k;
  return doc;
}

Json to_json(const RamseyAnswer& answer) {
  Json doc;
  doc["r"] = to_json(answer.r);
  doc["rstar"] = nullptr;
  doc["branch"] = answer.branch;
  doc["ell"] = answer.ell ? Json(answer.ell->ell) : Json(nullptr);
  doc["a"] = answer.ell ? Json(answer.ell->a) : Json(nullptr);
  doc["k"] = answer.ell ? Json(answer.ell->k) : Json(nullptr);
  return doc;
}

Json to_json(const StarCriticalAnswer& answer) {
  Json doc;
  doc["r"] = to_json(answer.r);
  doc["rstar"] = to_json(answer.rstar);
  doc["branch"] = answer.branch;
  doc["ell"] = nullptr;
  doc["a"] = nullptr;
  doc["k"] = nullptr;
  return doc;
}

Json to_json(const ColoredGraph& g) {
  Json doc;
  doc["n"] = g.n();
  doc["t"] = g.t();
  doc["center"] = g.center() ? Json(*g.center()) : Json(nullptr);
  Json missing = Json::array();
  for (const auto& e : g.missing()) missing.push_back({e.u, e.v});
  doc["missing"] = std::move(missing);
  Json edges = Json::array();
  for (const auto& [e, c] : g.edges()) edges.push_back({e.u, e.v, c});
  doc["edges"] = std::move(edges);
  return doc;
}

Json to_json(const StarWitness& witness) {
  Json doc;
  doc["center"] = witness.center;
  doc["colors"] = colors_json(witness.colors);
  doc["leaves"] = witness.leaves;
  return doc;
}

Json to_json(const OracleResult& result) {
  Json doc;
  doc["value"] = result.value ? Json(*result.value) : Json("budget_exhausted");
  doc["nodes_explored"] = result.nodes_explored;
  doc["witness_coloring"] =
      result.witness_coloring ? to_json(*result.witness_coloring) : Json(nullptr);
  return doc;
}

Json to_json(const StarFamily& family) {
  Json doc;
  doc["t"] = family.t();
  doc["s"] = family.s();
  Json m = Json::array();
  for (std::size_t r = 0; r < family.size(); ++r) {
    Json entry;
    entry["colors"] = colors_json(family.subset_at(r));
    entry["value"] = family.value_at(r);
    m.push_back(std::move(entry));
  }
  doc["m"] = std::move(m);
  return doc;
}

StarFamily star_family_from_json(const Json& doc) {
  const int t = as_small_int(field(doc, "t"), "t");
  const int s = as_small_int(field(doc, "s"), "s");
  if (t < 2 || t > kMaxColors || s < 1 || s >= t) invalid("need 1 <= s < t <= 62");
  const Json& m = field(doc, "m");
  if (!m.is_array()) invalid("\"m\" must be an array");
  std::vector<std::pair<ColorSet, std::int64_t>> entries;
  for (const auto& entry : m) {
    const Json& colors = field(entry, "colors");
    if (!colors.is_array()) invalid("\"colors\" must be an array");
    std::vector<int> list;
    for (const auto& c : colors) {
      int color = as_small_int(c, "color");
      if (color < 1 || color > t) invalid("color " + std::to_string(color) + " outside [1, t]");
      if (!list.empty() && color <= list.back()) invalid("colors must be strictly increasing");
      list.push_back(color);
    }
    if (static_cast<int>(list.size()) != s) invalid("each color set must have exactly s colors");
    entries.emplace_back(make_color_set(list), as_int(field(entry, "value"), "value"));
  }
  return StarFamily::from_entries(t, s, entries);
}

ColoredGraph colored_graph_from_json(const Json& doc) {
  const int n = as_small_int(field(doc, "n"), "n");
  const int t = as_small_int(field(doc, "t"), "t");
  if (n < 0 || n > 1 << 14) invalid("n out of range");
  if (t < 1 || t > kMaxColors) invalid("t out of range");
  ColoredGraph g(n, t);

  const Json& center = field(doc, "center");
  if (!center.is_null()) {
    int c = as_small_int(center, "center");
    if (c < 0 || c >= n) invalid("center out of range");
    g.set_center(c);
  }

  std::set<std::pair<int, int>> seen;
  auto read_pair = [&](const Json& item, std::size_t arity) {
    if (!item.is_array() || item.size() != arity) invalid("malformed pair entry");
    int u = as_small_int(item[0], "vertex");
    int v = as_small_int(item[1], "vertex");
    if (u == v) invalid("self loop at " + std::to_string(u));
    if (u < 0 || v >= n || u > v) invalid("pair must satisfy 0 <= u < v < n");
    if (!seen.emplace(u, v).second) {
      invalid("duplicate pair {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    return std::pair{u, v};
  };

  const Json& missing = field(doc, "missing");
  const Json& edges = field(doc, "edges");
  if (!missing.is_array() || !edges.is_array()) invalid("\"missing\" and \"edges\" must be arrays");
  for (const auto& item : missing) {
    auto [u, v] = read_pair(item, 2);
    if (!g.center() || (u != *g.center() && v != *g.center())) {
      invalid("missing pair {" + std::to_string(u) + "," + std::to_string(v) +
              "} is not incident to the center");
    }
  }
  for (const auto& item : edges) {
    auto [u, v] = read_pair(item, 3);
    int c = as_small_int(item[2], "color");
    if (c < 1 || c > t) invalid("color " + std::to_string(c) + " outside [1, t]");
    g.set_color(u, v, c);
  }
  if (seen.size() != static_cast<std::size_t>(n) * (n - 1) / 2) {
    invalid("every vertex pair must appear in \"edges\" or \"missing\"");
  }
  return g;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    invalid("malformed JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) invalid("cannot write " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace starramsey
