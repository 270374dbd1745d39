// Command-line front end: compute | verify | enumerate | formula | bounds |
// bad-k | table | lll | export-cnf | reproduce. JSON or CSV on stdout;
// nonzero exit only for operational errors.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rado/closed_forms.hpp"
#include "rado/errors.hpp"
#include "rado/family.hpp"
#include "rado/lll.hpp"
#include "rado/param_analysis.hpp"
#include "rado/reproduce.hpp"
#include "rado/search.hpp"

using nlohmann::json;
using namespace rado;

namespace {

int exit_code(errc code) {
  switch (code) {
    case errc::parse_error: return 2;
    case errc::enumeration_limit_exceeded: return 3;
    case errc::overflow: return 4;
    case errc::budget_exceeded: return 6;
    default: return 5;
  }
}

ColorSystem system_from(const std::vector<std::string>& eq_texts, int colors) {
  if (eq_texts.empty()) fail(errc::invalid_argument, "need at least one --eq");
  ColorSystem sys;
  for (const auto& t : eq_texts) sys.eqs.push_back(parse_equation(t));
  if (sys.eqs.size() == 1 && colors > 1)
    sys = ColorSystem::uniform(sys.eqs.front(), colors);
  return sys;
}

json formula_json(const FormulaValue& f) {
  json j;
  switch (f.status) {
    case FormulaStatus::kValue: j["status"] = "value"; j["value"] = f.value; break;
    case FormulaStatus::kInfinite: j["status"] = "infinite"; break;
    case FormulaStatus::kNotCovered: j["status"] = "not_covered"; break;
  }
  j["source"] = f.source;
  json hyps = json::array();
  for (const auto& h : f.hypotheses) hyps.push_back({{"condition", h.condition}, {"holds", h.holds}});
  j["hypotheses"] = hyps;
  if (f.discrepancy)
    j["discrepancy"] = {{"formula", f.discrepancy->formula_value}, {"table", f.discrepancy->table_value}};
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_argument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string default_cache() {
  const char* env = std::getenv("RADO_CACHE");
  return env ? env : "";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Rado number computation and verification"};
  app.require_subcommand(1);

  std::vector<std::string> eq_texts;
  int colors = 2;
  Int max_n = 0, arg_n = 0;
  int threads = 0;
  double budget_s = 0;
  std::string cache_path = default_cache();
  std::string cert_path, family_text, coloring_text, output_path, scope_name_arg, input_path;
  bool fix_first = false;
  std::uint64_t enum_limit = std::uint64_t{1} << 24;

  auto* compute = app.add_subcommand("compute", "Rado number with certificate");
  compute->add_option("--eq", eq_texts, "equation text, once per color")->required();
  compute->add_option("--colors", colors, "color count when one --eq is given");
  compute->add_option("--max-n", max_n, "search cutoff")->required();
  compute->add_option("--threads", threads, "worker count (0 = all)");
  compute->add_option("--budget-s", budget_s, "wall-clock budget in seconds");
  compute->add_option("--cache", cache_path, "result cache path (env RADO_CACHE)");

  auto* verify = app.add_subcommand("verify", "check a coloring certificate");
  verify->add_option("--eq", eq_texts, "equation text, once per color")->required();
  verify->add_option("--colors", colors, "color count when one --eq is given");
  verify->add_option("--cert", cert_path, "certificate file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "all valid colorings of [1,n]");
  enumerate->add_option("--eq", eq_texts)->required();
  enumerate->add_option("--colors", colors);
  enumerate->add_option("--n", arg_n)->required();
  enumerate->add_flag("--fix-first", fix_first, "fix color of 1 to color 0");
  enumerate->add_option("--limit", enum_limit, "enumeration guard on r^n");

  auto* formula = app.add_subcommand("formula", "closed-form evaluators");
  bool f_four = false, f_unit = false, f_exact = false, f_five = false;
  Int f_k = 0, f_j = 0, f_m = 0, f_n = 0, f_l = 0, f_param = 0;
  std::string pair_kind;
  formula->add_flag("--four-var", f_four, "x+y+kz=4w");
  formula->add_flag("--five-var", f_five, "x+y+z+kv=(k+j)w");
  formula->add_flag("--unit-sum", f_unit, "x1+...+x_{n-1}=l*xn");
  formula->add_flag("--exact", f_exact, "exact cases of the weighted sum");
  formula->add_option("--pair", pair_kind, "pair system: linear-multiple | shift");
  formula->add_option("--param", f_param, "pair system parameter");
  formula->add_option("--k", f_k);
  formula->add_option("--j", f_j);
  formula->add_option("--m", f_m);
  formula->add_option("--n", f_n);
  formula->add_option("--l", f_l);

  auto* bounds = app.add_subcommand("bounds", "bounds for the weighted sum equation");
  Int b_m = 0, b_k = 0, b_l = 0;
  bounds->add_option("--m", b_m)->required();
  bounds->add_option("--k", b_k)->required();
  bounds->add_option("--l", b_l)->required();

  auto* badk = app.add_subcommand("bad-k", "parameter values where a coloring fails");
  badk->add_option("--family", family_text)->required();
  badk->add_option("--coloring", coloring_text)->required();

  auto* table = app.add_subcommand("table", "cofinitely-valid colorings with bad sets (CSV)");
  table->add_option("--family", family_text)->required();
  table->add_option("--n", arg_n)->required();

  auto* lll = app.add_subcommand("lll", "local-lemma checks");
  auto* lll_check = lll->add_subcommand("check", "condition check (JSON event system)");
  lll_check->add_option("--input", input_path, "JSON file; stdin when omitted");
  auto* lll_bound = lll->add_subcommand("bound", "lower-bound expression");
  double l_mr = 0, l_c2 = 0;
  Int l_r = 2;
  std::optional<double> l_c1, l_c3, l_m1;
  lll_bound->add_option("--mr", l_mr)->required();
  lll_bound->add_option("--r", l_r)->required();
  lll_bound->add_option("--c2", l_c2)->required();
  lll_bound->add_option("--c1", [&l_c1](auto& vals) { l_c1 = std::stod(vals[0]); return true; }, "");
  lll_bound->add_option("--c3", [&l_c3](auto& vals) { l_c3 = std::stod(vals[0]); return true; }, "");
  lll_bound->add_option("--m1", [&l_m1](auto& vals) { l_m1 = std::stod(vals[0]); return true; }, "");

  auto* cnf = app.add_subcommand("export-cnf", "DIMACS encoding of valid 2-colorings");
  cnf->add_option("--eq", eq_texts)->required();
  cnf->add_option("--colors", colors);
  cnf->add_option("--n", arg_n)->required();
  cnf->add_option("--output", output_path, "file (stdout when omitted)");

  auto* repro = app.add_subcommand("reproduce", "formula-vs-search report for a scope (CSV)");
  repro->add_option("--scope", scope_name_arg,
                    "table2 | thm-four-var | five-var | two-system | saracino-spots | appendix2-tables")
      ->required();
  repro->add_option("--budget-s", budget_s, "per-instance budget (default 60)");
  repro->add_option("--cache", cache_path, "result cache path (env RADO_CACHE)");
  repro->add_option("--threads", threads);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) {
      ColorSystem sys = system_from(eq_texts, colors);
      ResultCache cache = cache_path.empty() ? ResultCache() : ResultCache(cache_path);
      json out;
      out["system"] = sys.text();
      out["n_max"] = max_n;
      double seconds = 0;
      RadoResult res;
      if (auto rec = cache.lookup(sys, max_n)) {
        res = ResultCache::to_result(*rec, sys.r());
        seconds = rec->wall_s;
        out["cached"] = true;
      } else {
        SearchOptions opts;
        opts.threads = threads;
        if (budget_s > 0) opts.budget = std::chrono::milliseconds(static_cast<long long>(budget_s * 1000));
        auto start = std::chrono::steady_clock::now();
        res = rado_number(sys, max_n, opts);
        seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        cache.append(ResultCache::make_record(sys, max_n, res, seconds));
      }
      if (res.found) {
        out["status"] = "found";
        out["rado"] = res.value;
      } else {
        out["status"] = "unresolved";
        out["searched_up_to"] = res.value;
      }
      out["certificate"] = res.certificate.str();
      out["certificate_run_length"] = res.certificate.run_length();
      out["seconds"] = seconds;
      std::cout << out.dump() << '\n';
    } else if (*verify) {
      ColorSystem sys = system_from(eq_texts, colors);
      Coloring cert = parse_certificate(read_file(cert_path));
      json out;
      out["system"] = sys.text();
      out["n"] = cert.n();
      out["valid"] = verify_certificate(sys, cert);
      std::cout << out.dump() << '\n';
    } else if (*enumerate) {
      ColorSystem sys = system_from(eq_texts, colors);
      auto all = enumerate_valid_colorings(sys, arg_n, fix_first, enum_limit);
      json out;
      out["system"] = sys.text();
      out["n"] = arg_n;
      json list = json::array();
      for (const auto& c : all) list.push_back(c.str());
      out["valid_colorings"] = list;
      out["count"] = all.size();
      std::cout << out.dump() << '\n';
    } else if (*formula) {
      FormulaValue f;
      if (f_four) f = four_var_value(f_k);
      else if (f_five) f = five_var_value(f_j, f_k);
      else if (f_unit) f = unit_sum_value(f_n, f_l);
      else if (f_exact) f = weighted_sum_exact(f_m, f_k, f_l);
      else if (!pair_kind.empty())
        f = pair_system_value(pair_kind == "shift" ? PairKind::kShift : PairKind::kLinearMultiple,
                              f_param);
      else fail(errc::invalid_argument, "pick one of --four-var --five-var --unit-sum --exact --pair");
      std::cout << formula_json(f).dump() << '\n';
    } else if (*bounds) {
      BoundsReport rep = weighted_sum_bounds(b_m, b_k, b_l);
      json out;
      if (rep.lower) out["lower"] = {{"value", rep.lower->value}, {"source", rep.lower->source}};
      if (rep.upper) out["upper"] = {{"value", rep.upper->value}, {"source", rep.upper->source}};
      else out["upper"] = "unknown";
      out["exact"] = rep.exact;
      out["in_hypotheses"] = rep.in_hypotheses;
      json hyps = json::array();
      for (const auto& h : rep.hypotheses) hyps.push_back({{"condition", h.condition}, {"holds", h.holds}});
      out["hypotheses"] = hyps;
      std::cout << out.dump() << '\n';
    } else if (*badk) {
      EquationFamily fam = parse_family(family_text);
      BadKSet bad = bad_parameter_set(fam, Coloring::parse(coloring_text));
      json out;
      out["family"] = fam.text();
      out["coloring"] = coloring_text;
      out["always_bad"] = bad.always_bad;
      out["validity"] = bad.validity;
      out["finite_bad"] = bad.finite_bad;
      std::cout << out.dump() << '\n';
    } else if (*table) {
      EquationFamily fam = parse_family(family_text);
      auto entries = colorings_valid_cofinitely(fam, arg_n);
      std::cout << "coloring,bad_k\n";
      for (const auto& [coloring, bad] : entries) {
        std::string set;
        for (size_t i = 0; i < bad.finite_bad.size(); ++i)
          set += (i ? ";" : "") + std::to_string(bad.finite_bad[i]);
        std::cout << coloring.str() << ',' << set << '\n';
      }
    } else if (*lll) {
      if (*lll_check) {
        json in;
        if (input_path.empty()) std::cin >> in;
        else in = json::parse(read_file(input_path));
        EventSystem sys;
        sys.probabilities = in.at("probabilities").get<std::vector<double>>();
        sys.weights = in.at("weights").get<std::vector<double>>();
        for (const auto& e : in.value("edges", json::array()))
          sys.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        auto res = check_lll_condition(sys);
        json out;
        out["holds"] = res.holds;
        out["margins"] = res.margins;
        std::cout << out.dump() << '\n';
      } else if (*lll_bound) {
        auto res = lll_lower_bound(l_mr, l_r, l_c2, l_c1, l_c3, l_m1);
        json out;
        out["value"] = res.value;
        json hyps = json::array();
        for (const auto& h : res.hypotheses) hyps.push_back({{"condition", h.condition}, {"holds", h.holds}});
        out["hypotheses"] = hyps;
        std::cout << out.dump() << '\n';
      } else {
        fail(errc::invalid_argument, "lll needs a subcommand: check | bound");
      }
    } else if (*cnf) {
      ColorSystem sys = system_from(eq_texts, colors);
      std::string text = export_cnf(sys, arg_n);
      if (output_path.empty()) std::cout << text;
      else std::ofstream(output_path) << text;
    } else if (*repro) {
      ReproduceOptions opts;
      if (budget_s > 0) opts.budget_s = budget_s;
      opts.cache_path = cache_path;
      opts.threads = threads;
      auto rows = reproduce(parse_scope(scope_name_arg), opts);
      std::cout << reproduce_csv(rows);
    }
  } catch (const error& e) {
    std::cerr << json{{"error", e.what()}}.dump() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << '\n';
    return 5;
  }
  return 0;
}
