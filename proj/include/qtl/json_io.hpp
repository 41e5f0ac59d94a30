#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings for every value type and the block report.
 *
 * Polynomials are [[exponent, coefficient], ...] in increasing exponent order;
 * coefficients outside the int64 range are written as decimal strings.
 * Component, root and row indices are 1-based.
 */

#include <json.hpp>

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "decomposition.hpp"
#include "geometry.hpp"
#include "laurent.hpp"
#include "paths.hpp"
#include "soergel.hpp"
#include "tableaux.hpp"

namespace qtl {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return static_cast<long long>(c);
  return c.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long long>());
}

inline Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [k, c] : p.terms()) out.push_back(Json::array({k, to_json(c)}));
  return out;
}

inline LaurentPoly poly_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& term : j) p.add_term(term.at(0).get<Exponent>(), integer_from_json(term.at(1)));
  return p;
}

inline Json to_json(const Point& p) { return p.coords; }

inline Point point_from_json(const Json& j) { return Point(j.get<std::vector<int>>()); }

inline Json to_json(const Hyperplane& h) { return Json{{"i", h.i + 1}, {"j", h.j + 1}, {"m", h.m}}; }

inline Hyperplane hyperplane_from_json(const Json& j) {
  return {j.at("i").get<int>() - 1, j.at("j").get<int>() - 1, j.at("m").get<long long>()};
}

inline Json to_json(const Geometry& g, const AlcoveKey& a) {
  Json out = Json::array();
  for (std::size_t r = 0; r < g.roots().size(); ++r)
    out.push_back(Json::array({g.roots()[r].i + 1, g.roots()[r].j + 1, a.floors[r]}));
  return out;
}

/// Floors are read back; the group element is recovered through the geometry.
inline AlcoveKey alcove_from_json(const Geometry& g, const Json& j) {
  AlcoveKey a;
  for (const Root& r : g.roots()) {
    bool found = false;
    for (const auto& entry : j) {
      if (entry.at(0).get<int>() == r.i + 1 && entry.at(1).get<int>() == r.j + 1) {
        a.floors.push_back(entry.at(2).get<int>());
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("alcove JSON is missing root " + std::to_string(r.i + 1) + "," +
                                            std::to_string(r.j + 1));
  }
  return g.minimal_gallery(a).target();
}

inline Json to_json(const Params& p) {
  return Json{{"l", p.l()}, {"e", p.e()}, {"kappa", p.kappa()}, {"rho", p.rho()}, {"theta", p.theta()}, {"g", p.g()}};
}

inline Params params_from_json(const Json& j) {
  return Params::make(j.at("l").get<int>(), j.at("e").get<int>(), j.at("kappa").get<std::vector<int>>());
}

inline Json to_json(const Geometry& g, const PathWord& w) {
  const DegreeTrace t = degree_trace(g, w);
  return Json{{"steps", w.letters()}, {"degrees", t.steps}, {"degree", t.total}};
}

inline PathWord path_from_json(const Json& j) { return PathWord::from_letters(j.at("steps").get<std::vector<int>>()); }

inline Json to_json(const Tableau& t) {
  Json nodes = Json::array();
  for (std::size_t m = 0; m < t.columns.size(); ++m)
    for (std::size_t r = 0; r < t.columns[m].size(); ++r)
      nodes.push_back(Json{{"node", Json::array({static_cast<int>(r) + 1, static_cast<int>(m) + 1})},
                           {"value", t.columns[m][r]}});
  return nodes;
}

inline Tableau tableau_from_json(const Json& j, const Point& shape, const Point& weight) {
  Tableau t{shape, weight, std::vector<std::vector<int>>(static_cast<std::size_t>(shape.size()))};
  for (const auto& node : j) {
    const int r = node.at("node").at(0).get<int>();
    const int m = node.at("node").at(1).get<int>() - 1;
    auto& col = t.columns.at(static_cast<std::size_t>(m));
    if (static_cast<int>(col.size()) != r - 1) throw std::invalid_argument("tableau JSON nodes out of order");
    col.push_back(node.at("value").get<int>());
  }
  return t;
}

inline Json to_json(const Geometry& g, const AlcoveFunction& f) {
  Json out = Json::array();
  for (const auto& [a, p] : f.ordered(g)) out.push_back(Json{{"alcove", to_json(g, a)}, {"polynomial", to_json(p)}});
  return out;
}

/// Serializable form of a decomposition run over one block.
struct BlockReport {
  Params params;
  int n = 0;
  std::vector<Point> members;
  std::vector<bool> regular;
  std::vector<std::vector<int>> residues;  ///< residue multiset per member
  /// rows indexed by lambda, columns by mu, both in member order
  std::optional<std::vector<std::vector<LaurentPoly>>> matrix;
  std::optional<std::vector<std::vector<LaurentPoly>>> characters;
  std::optional<std::vector<std::vector<LaurentPoly>>> standard_dims;
  std::string cross_check = "skipped";
};

inline BlockReport make_report(const Block& block, const DecompositionMatrix* dm, std::string cross_check) {
  BlockReport r{block.params, block.n, block.members, block.regular, {}, {}, {}, {}, std::move(cross_check)};
  for (const Point& p : block.members) r.residues.push_back(residue_multiset(block.params, p));
  if (!dm) return r;
  const auto grid = [&](const std::map<PointPair, LaurentPoly>& m) {
    std::vector<std::vector<LaurentPoly>> rows;
    for (const Point& lambda : block.members) {
      std::vector<LaurentPoly> row;
      for (const Point& mu : block.members) {
        auto it = m.find({lambda, mu});
        row.push_back(it == m.end() ? LaurentPoly() : it->second);
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };
  r.standard_dims = grid(dm->standard_dims);
  if (block.is_regular()) {
    r.matrix = grid(dm->entries);
    r.characters = grid(dm->characters);
  }
  return r;
}

inline Json to_json(const BlockReport& r) {
  const auto grid = [](const std::optional<std::vector<std::vector<LaurentPoly>>>& g) -> Json {
    if (!g) return nullptr;
    Json rows = Json::array();
    for (const auto& row : *g) {
      Json jr = Json::array();
      for (const auto& p : row) jr.push_back(to_json(p));
      rows.push_back(std::move(jr));
    }
    return rows;
  };
  Json members = Json::array();
  for (const auto& p : r.members) members.push_back(to_json(p));
  Json out;
  out["params"] = to_json(r.params);
  out["n"] = r.n;
  out["members"] = std::move(members);
  out["regular"] = r.regular;
  out["residues"] = r.residues;
  out["matrix"] = grid(r.matrix);
  out["characters"] = grid(r.characters);
  out["standard_dims"] = grid(r.standard_dims);
  out["cross_check"] = r.cross_check;
  return out;
}

inline BlockReport block_report_from_json(const Json& j) {
  const auto grid = [](const Json& g) -> std::optional<std::vector<std::vector<LaurentPoly>>> {
    if (g.is_null()) return std::nullopt;
    std::vector<std::vector<LaurentPoly>> rows;
    for (const auto& row : g) {
      std::vector<LaurentPoly> r;
      for (const auto& p : row) r.push_back(poly_from_json(p));
      rows.push_back(std::move(r));
    }
    return rows;
  };
  BlockReport r{params_from_json(j.at("params")), j.at("n").get<int>(), {}, j.at("regular").get<std::vector<bool>>(),
                j.at("residues").get<std::vector<std::vector<int>>>(), grid(j.at("matrix")),
                grid(j.at("characters")), grid(j.at("standard_dims")), j.at("cross_check").get<std::string>()};
  for (const auto& p : j.at("members")) r.members.push_back(point_from_json(p));
  return r;
}

}  // namespace qtl
