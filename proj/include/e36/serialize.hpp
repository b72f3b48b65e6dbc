#pragma once

// JSON views of engine results. Field order is fixed (ordered_json) and every
// numeric payload is exact: rationals always print as "num/den", integers as
// JSON numbers, so identical inputs give byte-identical documents.

#include <string>
#include <vector>

#include <json.hpp>

#include "induced.hpp"
#include "lemmas.hpp"
#include "parse.hpp"
#include "search.hpp"

namespace e36 {

using json = nlohmann::ordered_json;

inline json weight_json(const Weight& w) {
  return json::array({w.a, w.b, w.r, rat_str(w.y)});
}

inline json pbw_json(const PBW& m, int f, const Rational& c) {
  json t;
  t["alpha"] = json::array({m.al[0], m.al[1], m.al[2]});
  json dm = json::array(), dp = json::array();
  for (int i = 0; i < 3; ++i) {
    if (m.dm & (1 << i)) dm.push_back(i + 1);
    if (m.dp & (1 << i)) dp.push_back(i + 1);
  }
  t["dminus"] = dm;
  t["dplus"] = dp;
  t["fIndex"] = f;
  t["coeff"] = rat_str(c);
  return t;
}

inline json terms_json(const Induced<Rational>& v) {
  json arr = json::array();
  for (auto& [key, c] : v.t) arr.push_back(pbw_json(key.first, key.second, c));
  return arr;
}

inline json singular_json(const SearchResult& r) {
  json out;
  out["F"] = {{"p", r.p}, {"q", r.q}, {"r", r.r}, {"y", rat_str(r.y)}};
  out["maxDepth"] = r.maxDepth;
  json found = json::array();
  for (auto& sv : r.found) {
    json e;
    e["depth"] = sv.depth;
    e["weight"] = weight_json(sv.weight);
    e["terms"] = terms_json(sv.vec);
    found.push_back(std::move(e));
  }
  out["found"] = std::move(found);
  return out;
}

inline json generic_json(const GenericVector& g) {
  json e;
  e["depth"] = g.depth;
  e["weight"] = json::array({g.a, g.b, g.r, "y"});
  json terms = json::array();
  for (auto& [key, yp] : g.terms) {
    json t;
    t["alpha"] = json::array({key.first.al[0], key.first.al[1], key.first.al[2]});
    json dm = json::array(), dp = json::array();
    for (int i = 0; i < 3; ++i) {
      if (key.first.dm & (1 << i)) dm.push_back(i + 1);
      if (key.first.dp & (1 << i)) dp.push_back(i + 1);
    }
    t["dminus"] = dm;
    t["dplus"] = dp;
    t["fIndex"] = key.second;
    t["coeff"] = yp.to_string();
    terms.push_back(std::move(t));
  }
  e["terms"] = std::move(terms);
  return e;
}

inline json condition_json(const YCondition& c) {
  json e;
  e["poly-in-y"] = c.poly.to_string();
  json roots = json::array();
  for (auto& [y0, vecs] : c.roots) roots.push_back(rat_str(y0));
  e["rational-roots"] = std::move(roots);
  e["roots-complete"] = c.roots_complete;
  json vecs = json::array();
  for (auto& [y0, found] : c.roots) {
    json r;
    r["y"] = rat_str(y0);
    json fl = json::array();
    for (auto& sv : found) {
      json v;
      v["depth"] = sv.depth;
      v["weight"] = weight_json(sv.weight);
      v["terms"] = terms_json(sv.vec);
      fl.push_back(std::move(v));
    }
    r["found"] = std::move(fl);
    vecs.push_back(std::move(r));
  }
  e["at-roots"] = std::move(vecs);
  if (!c.generic.empty()) {
    json gen = json::array();
    for (auto& g : c.generic) gen.push_back(generic_json(g));
    e["generic"] = std::move(gen);
  }
  return e;
}

inline json parametric_json(const ParametricResult& r) {
  json out;
  out["F"] = {{"p", r.p}, {"q", r.q}, {"r", r.r}, {"y", "parametric"}};
  out["maxDepth"] = r.maxDepth;
  json conds = json::array();
  for (auto& c : r.conditions) conds.push_back(condition_json(c));
  out["conditions"] = std::move(conds);
  return out;
}

inline json scan_json(const std::vector<ScanRow>& rows) {
  json out = json::array();
  for (auto& row : rows) {
    json e;
    e["p"] = row.p;
    e["q"] = row.q;
    e["r"] = row.r;
    json conds = json::array();
    for (auto& c : row.result.conditions) conds.push_back(condition_json(c));
    e["conditions"] = std::move(conds);
    out.push_back(std::move(e));
  }
  return out;
}

inline json report_json(const LemmaReport& rep) {
  json out;
  out["lemma-id"] = rep.id;
  json params = json::object();
  for (auto& [k, v] : rep.parameters) params[k] = v;
  out["parameters"] = std::move(params);
  out["status"] = rep.status;
  json details = json::array();
  for (auto& d : rep.details) {
    json e;
    e["claim"] = d.claim;
    e["computed"] = d.computed;
    e["expected"] = d.expected;
    e["match"] = d.match;
    if (d.known_deviation) e["known-deviation"] = true;
    details.push_back(std::move(e));
  }
  out["details"] = std::move(details);
  return out;
}

inline json lambda_lines_json(const std::vector<LambdaLine>& lines) {
  json out = json::array();
  for (auto& l : lines) {
    json e;
    e["family-tag"] = l.tag;
    e["degree"] = l.degree;
    e["weight"] = json::array({l.a, l.b});
    e["matched"] = l.matched;
    e["terms"] = terms_json(l.vec);
    out.push_back(std::move(e));
  }
  return out;
}

inline json relations_json(const std::vector<RelationCheck>& checks) {
  json out = json::array();
  for (auto& rc : checks) {
    json e;
    e["claim"] = rc.claim;
    e["computed"] = rc.computed;
    e["expected"] = rc.expected;
    e["ok"] = rc.ok;
    if (rc.deviation) {
      e["deviation"] = true;
      e["corrected"] = rc.corrected;
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline std::string dump_json(const json& j, bool pretty) {
  return pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

}  // namespace e36
