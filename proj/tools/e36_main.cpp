// Command-line front end. Every subcommand prints one JSON document on
// standard output (or a short human rendering with --pretty) and exits 0 on
// success, 1 when a verification fails, 2 on usage, syntax, or domain errors.

#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "e36/serialize.hpp"

namespace {

using namespace e36;

int run_bracket(const std::string& lhs, const std::string& rhs, bool pretty) {
  SuperElement a = eval_algebra(lhs);
  SuperElement b = eval_algebra(rhs);
  SuperElement c = super_bracket(a, b);
  if (pretty) {
    std::cout << "[" << to_string(a) << ", " << to_string(b) << "] = " << to_string(c) << "\n";
  } else {
    json out;
    out["lhs"] = to_string(a);
    out["rhs"] = to_string(b);
    out["bracket"] = to_string(c);
    std::cout << dump_json(out, false);
  }
  return 0;
}

int run_grade(const std::string& which, const std::string& expr, bool pretty) {
  SuperElement a = eval_algebra(expr);
  int deg = graded_degree(a, which == "secondary");
  if (pretty) {
    std::cout << which << " degree of " << to_string(a) << " = " << deg << "\n";
  } else {
    json out;
    out["which"] = which;
    out["expr"] = to_string(a);
    out["degree"] = deg;
    std::cout << dump_json(out, false);
  }
  return 0;
}

int run_weight(const std::string& expr, bool pretty) {
  SuperElement a = eval_algebra(expr);
  Weight w = g0_weight(a);
  if (pretty) {
    std::cout << "weight of " << to_string(a) << " = " << w.to_string() << "\n";
  } else {
    json out;
    out["expr"] = to_string(a);
    out["weight"] = weight_json(w);
    std::cout << dump_json(out, false);
  }
  return 0;
}

int run_relations(bool pretty) {
  auto checks = relation_suite();
  bool bad = false;
  for (auto& rc : checks)
    if (!rc.ok && !rc.deviation) bad = true;
  if (pretty) {
    for (auto& rc : checks) {
      std::string tag = rc.ok ? "ok" : rc.deviation ? "deviation" : "FAIL";
      std::cout << rc.claim << ": " << rc.computed << " [" << tag << "]";
      if (!rc.ok) std::cout << " expected " << rc.expected;
      if (rc.deviation && !rc.corrected.empty()) std::cout << " corrected " << rc.corrected;
      std::cout << "\n";
    }
  } else {
    std::cout << dump_json(relations_json(checks), false);
  }
  return bad ? 1 : 0;
}

int run_hwv(int p, int q, const std::string& sign, bool pretty) {
  auto lines = enumerate_hwv_lambda(p, q, sign.at(0));
  bool bad = false;
  for (auto& l : lines)
    if (l.tag.empty() || !l.matched) bad = true;
  if (pretty) {
    for (auto& l : lines)
      std::cout << l.tag << " degree " << l.degree << " weight (" << l.a << "," << l.b << ") "
                << (l.matched ? "matched" : "UNMATCHED") << ": " << to_string(l.vec) << "\n";
  } else {
    std::cout << dump_json(lambda_lines_json(lines), false);
  }
  return bad ? 1 : 0;
}

int run_singular(int p, int q, int r, const std::string& y, int maxDepth, bool parametric,
                 bool pretty) {
  if (parametric) {
    ParametricResult res = parametric_y_search(p, q, r, maxDepth);
    if (pretty) {
      std::cout << "fiber (" << p << "," << q << ";" << r << "; y parametric), depth "
                << maxDepth << "\n";
      for (auto& c : res.conditions) {
        std::cout << "condition " << c.poly.to_string() << ", rational roots:";
        for (auto& [y0, vecs] : c.roots) std::cout << " " << rat_pretty(y0);
        if (!c.roots_complete) std::cout << " (root list may be incomplete)";
        std::cout << "\n";
        for (auto& [y0, vecs] : c.roots)
          for (auto& sv : vecs)
            std::cout << "  y = " << rat_pretty(y0) << " depth " << sv.depth << " weight "
                      << sv.weight.to_string() << ": " << to_string(sv.vec) << "\n";
        for (auto& g : c.generic)
          std::cout << "  every y: depth " << g.depth << " weight (" << g.a << "," << g.b << ";"
                    << g.r << ";y)\n";
      }
      if (res.conditions.empty()) std::cout << "no degeneracy conditions up to this depth\n";
    } else {
      std::cout << dump_json(parametric_json(res), false);
    }
    return 0;
  }
  SearchResult res = singular_search(build_irrep(p, q, r, parse_rational(y)), maxDepth);
  if (pretty) {
    std::cout << "fiber (" << p << "," << q << ";" << r << ";" << rat_pretty(res.y)
              << "), depth " << maxDepth << "\n";
    for (auto& sv : res.found)
      std::cout << "depth " << sv.depth << " weight " << sv.weight.to_string() << ": "
                << to_string(sv.vec) << "\n";
    if (res.found.empty()) std::cout << "no vectors up to this depth\n";
  } else {
    std::cout << dump_json(singular_json(res), false);
  }
  return 0;
}

int run_scan(int pmax, int qmax, const std::vector<int>& rlist, int maxDepth, int pmin, int qmin,
             bool pretty) {
  auto rows = theorem41_scan(pmax, qmax, rlist, maxDepth, pmin, qmin);
  bool bad = false;
  for (auto& row : rows)
    if (row.p >= 1 && row.q >= 1 && !row.result.conditions.empty()) bad = true;
  if (pretty) {
    for (auto& row : rows) {
      std::cout << "(" << row.p << "," << row.q << ";" << row.r << "): ";
      if (row.result.conditions.empty()) {
        std::cout << "empty\n";
        continue;
      }
      bool first = true;
      for (auto& c : row.result.conditions) {
        if (!first) std::cout << "; ";
        first = false;
        std::cout << c.poly.to_string();
      }
      std::cout << "\n";
    }
  } else {
    std::cout << dump_json(scan_json(rows), false);
  }
  return bad ? 1 : 0;
}

int run_verify(const std::string& id, const std::vector<std::string>& params, bool pretty) {
  std::map<std::string, long long> pm;
  for (auto& kv : params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw error("bad --param, expected k=v: " + kv);
    pm[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
  }
  LemmaReport rep = verify_lemma(id, pm);
  if (pretty) {
    std::cout << rep.id << ": " << rep.status << "\n";
    for (auto& d : rep.details) {
      std::string tag = d.match ? "ok" : d.known_deviation ? "deviation" : "FAIL";
      std::cout << "  " << d.claim << ": " << d.computed << " [" << tag << "]";
      if (!d.match) std::cout << " expected " << d.expected;
      std::cout << "\n";
    }
  } else {
    std::cout << dump_json(report_json(rep), false);
  }
  return rep.status == "fail" ? 1 : 0;
}

int run_parse(const std::string& expr, const std::string& context, bool pretty) {
  ExpressionAST ast = parse_expression(expr);
  std::string kind, value;
  if (context == "model") {
    ModelElement m = eval_model(ast);
    kind = "model-element";
    value = m.to_string();
  } else {
    SuperElement a = eval_algebra(ast);
    kind = "algebra-element";
    value = to_string(a);
  }
  if (pretty) {
    std::cout << kind << ": " << value << "\n";
  } else {
    json out;
    out["input"] = expr;
    out["ast"] = ast_to_string(ast);
    out["kind"] = kind;
    out["value"] = value;
    std::cout << dump_json(out, false);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic engine for a rank-three superconformal algebra"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output instead of JSON");

  std::string br_lhs, br_rhs;
  auto* br = app.add_subcommand("bracket", "super-bracket of two algebra expressions");
  br->add_option("lhs", br_lhs)->required();
  br->add_option("rhs", br_rhs)->required();

  std::string gr_which = "consistent", gr_expr;
  auto* gr = app.add_subcommand("grade", "graded degree of an algebra expression");
  gr->add_option("--which", gr_which)->check(CLI::IsMember({"consistent", "secondary"}));
  gr->add_option("expr", gr_expr)->required();

  std::string wt_expr;
  auto* wt = app.add_subcommand("weight", "Cartan weight of an algebra expression");
  wt->add_option("expr", wt_expr)->required();

  auto* rel = app.add_subcommand("relations", "replay the generator relation suite");

  int hw_p = 0, hw_q = 0;
  std::string hw_sign = "+";
  auto* hw = app.add_subcommand("hwv", "highest lines in an exterior block");
  hw->add_option("--p", hw_p)->required();
  hw->add_option("--q", hw_q)->required();
  hw->add_option("--sign", hw_sign)->check(CLI::IsMember({"+", "-"}));

  int sg_p = 0, sg_q = 0, sg_r = 0, sg_depth = 1;
  std::string sg_y = "0/1";
  bool sg_parametric = false;
  auto* sg = app.add_subcommand("singular", "search for degenerate vectors over one fiber");
  sg->add_option("--p", sg_p)->required();
  sg->add_option("--q", sg_q)->required();
  sg->add_option("--r", sg_r)->required();
  sg->add_option("--y", sg_y);
  sg->add_option("--max-depth", sg_depth)->required();
  sg->add_flag("--parametric-y", sg_parametric);

  int sc_pmax = 1, sc_qmax = 1, sc_depth = 1, sc_pmin = 1, sc_qmin = 1;
  std::vector<int> sc_r;
  auto* sc = app.add_subcommand("scan", "parametric degeneracy scan over a weight box");
  sc->add_option("--pmax", sc_pmax)->required();
  sc->add_option("--qmax", sc_qmax)->required();
  sc->add_option("--r", sc_r)->required()->delimiter(',');
  sc->add_option("--max-depth", sc_depth)->required();
  sc->add_option("--pmin", sc_pmin);
  sc->add_option("--qmin", sc_qmin);

  std::string vf_id;
  std::vector<std::string> vf_params;
  auto* vf = app.add_subcommand("verify", "replay a named statement check");
  vf->add_option("lemma-id", vf_id)->required();
  vf->add_option("--param", vf_params, "k=v parameter override");

  std::string ps_expr, ps_context = "algebra";
  auto* ps = app.add_subcommand("parse", "parse and validate one expression");
  ps->add_option("expr", ps_expr)->required();
  ps->add_option("--context", ps_context)->check(CLI::IsMember({"algebra", "model"}));

  // let --pretty be given after the subcommand as well
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (br->parsed()) return run_bracket(br_lhs, br_rhs, pretty);
    if (gr->parsed()) return run_grade(gr_which, gr_expr, pretty);
    if (wt->parsed()) return run_weight(wt_expr, pretty);
    if (rel->parsed()) return run_relations(pretty);
    if (hw->parsed()) return run_hwv(hw_p, hw_q, hw_sign, pretty);
    if (sg->parsed())
      return run_singular(sg_p, sg_q, sg_r, sg_y, sg_depth, sg_parametric, pretty);
    if (sc->parsed())
      return run_scan(sc_pmax, sc_qmax, sc_r, sc_depth, sc_pmin, sc_qmin, pretty);
    if (vf->parsed()) return run_verify(vf_id, vf_params, pretty);
    if (ps->parsed()) return run_parse(ps_expr, ps_context, pretty);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
