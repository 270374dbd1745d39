#include "rado/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "rado/closed_forms.hpp"
#include "rado/errors.hpp"
#include "rado/family.hpp"
#include "rado/param_analysis.hpp"

namespace rado {

Scope parse_scope(const std::string& name) {
  if (name == "table2") return Scope::kTable2;
  if (name == "thm-four-var") return Scope::kThmFourVar;
  if (name == "five-var") return Scope::kFiveVar;
  if (name == "two-system") return Scope::kTwoSystem;
  if (name == "saracino-spots") return Scope::kSaracinoSpots;
  if (name == "appendix2-tables") return Scope::kAppendix2Tables;
  fail(errc::invalid_argument, "unknown scope '" + name + "'");
}

std::string scope_name(Scope scope) {
  switch (scope) {
    case Scope::kTable2: return "table2";
    case Scope::kThmFourVar: return "thm-four-var";
    case Scope::kFiveVar: return "five-var";
    case Scope::kTwoSystem: return "two-system";
    case Scope::kSaracinoSpots: return "saracino-spots";
    case Scope::kAppendix2Tables: return "appendix2-tables";
  }
  fail(errc::invalid_argument, "bad scope");
}

namespace {

struct Runner {
  ResultCache cache;
  ReproduceOptions opts;

  struct Timed {
    RadoResult result;
    double seconds = 0;
    bool timed_out = false;
  };

  Timed run(const ColorSystem& sys, Int n_max) {
    Timed out;
    if (auto rec = cache.lookup(sys, n_max)) {
      out.result = ResultCache::to_result(*rec, sys.r());
      out.seconds = rec->wall_s;
      return out;
    }
    SearchOptions sopts;
    sopts.threads = opts.threads;
    sopts.budget = std::chrono::milliseconds(static_cast<long long>(opts.budget_s * 1000));
    auto start = std::chrono::steady_clock::now();
    try {
      out.result = rado_number(sys, n_max, sopts);
    } catch (const error& e) {
      if (e.code() != errc::budget_exceeded) throw;
      out.timed_out = true;
      out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return out;
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    cache.append(ResultCache::make_record(sys, n_max, out.result, out.seconds));
    return out;
  }
};

std::string result_str(const RadoResult& r) {
  return r.found ? std::to_string(r.value) : ">" + std::to_string(r.value);
}

ReproduceRow value_vs_search(Runner& run, const std::string& instance, const std::string& source,
                             const FormulaValue& formula, const ColorSystem& sys, Int n_max) {
  ReproduceRow row;
  row.instance = instance;
  row.source = source;
  auto timed = run.run(sys, n_max);
  row.seconds = timed.seconds;
  if (formula.discrepancy) {
    row.formula = "table:" + std::to_string(formula.discrepancy->table_value) +
                  ",formula:" + std::to_string(formula.discrepancy->formula_value);
    row.search = timed.timed_out ? "timeout" : result_str(timed.result);
    row.status = timed.timed_out ? "timeout" : "discrepancy";
    return row;
  }
  row.formula = std::to_string(formula.value);
  if (timed.timed_out) {
    row.search = "timeout";
    row.status = "timeout";
  } else {
    row.search = result_str(timed.result);
    row.status = (timed.result.found && timed.result.value == formula.value) ? "pass" : "fail";
  }
  return row;
}

void run_table2(Runner& run, std::vector<ReproduceRow>& rows) {
  for (Int k = 6; k <= 31; ++k) {
    if (k == 16) continue;
    FormulaValue f = four_var_value(k);
    Int target = f.discrepancy ? std::max(f.value, f.discrepancy->formula_value) : f.value;
    rows.push_back(value_vs_search(run, "x+y+" + std::to_string(k) + "z=4w", f.source, f,
                                   ColorSystem::uniform(make_weighted_sum(4, k, 4)), target + 8));
  }
}

void run_thm_four_var(Runner& run, std::vector<ReproduceRow>& rows) {
  for (Int k = 32; k <= 60; ++k) {
    FormulaValue f = four_var_value(k);
    rows.push_back(value_vs_search(run, "x+y+" + std::to_string(k) + "z=4w", f.source, f,
                                   ColorSystem::uniform(make_weighted_sum(4, k, 4)), f.value + 8));
  }
}

void run_five_var(Runner& run, std::vector<ReproduceRow>& rows) {
  auto grid = [&](Int j, Int k_max) {
    for (Int k = 1; k <= k_max; ++k) {
      FormulaValue f = five_var_value(j, k);
      rows.push_back(value_vs_search(
          run, "x+y+z+" + std::to_string(k) + "v=(" + std::to_string(k + j) + ")w", f.source, f,
          ColorSystem::uniform(make_weighted_sum(5, k, k + j)), 12));
    }
  };
  grid(1, 25);
  grid(2, 20);
  grid(3, 20);
  grid(4, 20);
  grid(5, 35);
}

void run_two_system(Runner& run, std::vector<ReproduceRow>& rows) {
  for (Int k = 3; k <= 12; ++k) {
    FormulaValue f = pair_system_value(PairKind::kLinearMultiple, k);
    rows.push_back(value_vs_search(run, "{x+y=z, " + std::to_string(k) + "x=y}", f.source, f,
                                   pair_sum_vs_multiple(k), f.value + 2));
  }
  for (Int a = 2; a <= 20; a += 2) {
    FormulaValue f = pair_system_value(PairKind::kShift, a);
    rows.push_back(value_vs_search(run, "{x+y=z, x+" + std::to_string(a) + "=y}", f.source, f,
                                   pair_sum_vs_shift(a), f.value + 2));
  }
  for (Int a : {3, 5, 7}) {
    ReproduceRow row;
    row.instance = "{x+y=z, x+" + std::to_string(a) + "=y}";
    row.source = pair_system_value(PairKind::kShift, a).source;
    row.formula = "infinite";
    ColorSystem sys = pair_sum_vs_shift(a);
    bool periodic = verify_periodic_certificate(sys, parity_pattern());
    auto timed = run.run(sys, 1000);
    row.seconds = timed.seconds;
    if (timed.timed_out) {
      row.search = "timeout";
      row.status = "timeout";
    } else {
      row.search = result_str(timed.result) + (periodic ? ",periodic:valid" : ",periodic:invalid");
      row.status = (periodic && !timed.result.found) ? "pass" : "fail";
    }
    rows.push_back(row);
  }
}

void run_saracino_spots(Runner& run, std::vector<ReproduceRow>& rows) {
  std::vector<std::pair<Int, Int>> spots; // (n, ell)
  spots.emplace_back(3, 3);
  spots.emplace_back(3, 4);
  for (Int ell = 3; ell <= 8; ++ell) spots.emplace_back(ell + 1, ell);
  for (Int ell = 2; ell <= 10; ++ell)
    for (Int n = 2; n <= 12; ++n)
      if (std::find(spots.begin(), spots.end(), std::make_pair(n, ell)) == spots.end())
        spots.emplace_back(n, ell);
  for (auto [n, ell] : spots) {
    FormulaValue f = unit_sum_value(n, ell);
    if (!f.covered() || f.value > 40) continue;
    rows.push_back(value_vs_search(
        run, "x1+..+x" + std::to_string(n - 1) + "=" + std::to_string(ell) + "x" + std::to_string(n),
        f.source, f, ColorSystem::uniform(make_unit_sum(static_cast<int>(n), ell)),
        std::max<Int>(f.value + 3, 4)));
  }
}

std::string coloring_list(const std::vector<std::pair<Coloring, BadKSet>>& entries) {
  std::string out;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) out += "|";
    out += entries[i].first.str();
  }
  return out;
}

std::string set_str(const std::vector<Int>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

void run_appendix2(Runner&, std::vector<ReproduceRow>& rows) {
  const std::vector<std::pair<Int, std::vector<std::string>>> table4 = {
      {3, {"rbb", "rrb"}},
      {4, {"rbbr", "rbbb", "rrbb"}},
      {5, {"rbbbr", "rrbbb", "rbbrr", "rbbrb", "rbbbb"}},
      {6, {"rrbbbb", "rbbbrr", "rbbbbr"}},
      {7, {"rrbbbbr", "rbbbbrr", "rrbbbbb"}},
      {8, {"rrbbbbbb", "rrbbbbrr", "rrbbbbrb", "rrbbbbbr"}},
      {9, {"rrbbbbbbr", "rrbbbbbrr"}},
      {10, {"rrbbbbbbrr"}},
  };
  EquationFamily j1 = five_var_family(1);
  for (const auto& [n, expect] : table4) {
    auto got = colorings_valid_cofinitely(j1, n);
    std::vector<std::string> names;
    for (const auto& e : got) names.push_back(e.first.str());
    std::vector<std::string> want = expect;
    std::sort(names.begin(), names.end());
    std::sort(want.begin(), want.end());
    ReproduceRow row;
    row.instance = "j=1 valid colorings of [1," + std::to_string(n) + "]";
    row.source = "five-var j=1 coloring table, n=" + std::to_string(n);
    std::string w;
    for (size_t i = 0; i < want.size(); ++i) w += (i ? "|" : "") + want[i];
    row.formula = w;
    row.search = coloring_list(got);
    row.status = names == want ? "pass" : "fail";
    rows.push_back(row);
  }
  for (const auto& [name, expect] : std::vector<std::pair<std::string, std::vector<Int>>>{
           {"rbb", {3, 4, 5, 6}}, {"rrb", {1, 2, 3, 4}}}) {
    BadKSet bad = bad_parameter_set(j1, Coloring::parse(name));
    ReproduceRow row;
    row.instance = "j=1 bad k of " + name;
    row.source = "five-var j=1 intersection analysis, n=3";
    row.formula = set_str(expect);
    row.search = bad.always_bad ? "always" : set_str(bad.finite_bad);
    row.status = (!bad.always_bad && bad.finite_bad == expect) ? "pass" : "fail";
    rows.push_back(row);
  }
  const std::vector<std::pair<Int, std::vector<std::string>>> table3 = {
      {3, {"rbb"}}, {5, {"rbbrr"}}, {6, {"rbbrrr"}}, {8, {"rbbrrrbb"}}};
  EquationFamily j5 = five_var_family(5);
  for (const auto& [n, expect] : table3) {
    auto got = colorings_valid_cofinitely(j5, n);
    std::vector<std::string> names;
    for (const auto& e : got) names.push_back(e.first.str());
    ReproduceRow row;
    row.instance = "j=5 valid colorings of [1," + std::to_string(n) + "]";
    row.source = "five-var j=5 coloring table, n=" + std::to_string(n);
    std::string w;
    for (size_t i = 0; i < expect.size(); ++i) w += (i ? "|" : "") + expect[i];
    row.formula = w;
    row.search = coloring_list(got);
    row.status = names == expect ? "pass" : "fail";
    rows.push_back(row);
  }
  // The j=5 table text mentions n=9 but lists no row; record what exists.
  {
    auto got = colorings_valid_cofinitely(j5, 9);
    ReproduceRow row;
    row.instance = "j=5 valid colorings of [1,9]";
    row.source = "five-var j=5 coloring table, missing n=9 row";
    row.formula = "(no row listed)";
    row.search = got.empty() ? "(none)" : coloring_list(got);
    row.status = "info";
    rows.push_back(row);
  }
}

} // namespace

std::vector<ReproduceRow> reproduce(Scope scope, const ReproduceOptions& opts) {
  Runner run{opts.cache_path.empty() ? ResultCache() : ResultCache(opts.cache_path), opts};
  std::vector<ReproduceRow> rows;
  switch (scope) {
    case Scope::kTable2: run_table2(run, rows); break;
    case Scope::kThmFourVar: run_thm_four_var(run, rows); break;
    case Scope::kFiveVar: run_five_var(run, rows); break;
    case Scope::kTwoSystem: run_two_system(run, rows); break;
    case Scope::kSaracinoSpots: run_saracino_spots(run, rows); break;
    case Scope::kAppendix2Tables: run_appendix2(run, rows); break;
  }
  return rows;
}

std::string reproduce_csv(const std::vector<ReproduceRow>& rows) {
  std::ostringstream out;
  auto field = [](const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    return quoted;
  };
  out << "instance,source,formula,search,status,seconds\n";
  char buf[32];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
    out << field(r.instance) << ',' << field(r.source) << ',' << field(r.formula) << ','
        << field(r.search) << ',' << r.status << ',' << buf << '\n';
  }
  return out.str();
}

} // namespace rado
