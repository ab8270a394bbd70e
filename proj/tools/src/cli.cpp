#include "twl/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twl/budget.hpp"
#include "twl/characters.hpp"
#include "twl/cyclic_code.hpp"
#include "twl/errors.hpp"
#include "twl/finite_field.hpp"
#include "twl/singer.hpp"
#include "twl/stickelberger.hpp"
#include "twl/verify.hpp"

namespace twl::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string config_path;
  std::string output_path;
  std::string format;
  unsigned threads = 1;
  u64 budget = 0;

  unsigned p = 0, m0 = 1, k = 0;

  i64 a1 = 0, a2 = 0;
  bool expect_conforming = false;

  unsigned q_min = 3, q_max = 0, k_min = 2, k_max = 0;
  u64 r_max = 8192;
  bool lemmas = false;
  bool dichotomy = false;
  u64 n = 0, dim_cap = 6;

  std::string table;
  std::optional<i64> a;
};

Budget make_budget(const RunConfig& cfg) {
  Budget b = Budget::from_env();
  if (cfg.budget != 0) b.max_ops = cfg.budget;
  return b;
}

std::string pick_format(const RunConfig& cfg, const std::string& fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

void add_tower_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-p,--p", cfg.p, "Characteristic");
  sub->add_option("-m,--m0", cfg.m0, "Degree of F_q over F_p");
  sub->add_option("-k,--k", cfg.k, "Degree of F_r over F_q");
}

// Checked after the config file is merged, so either source may supply them.
void require_present(CLI::App* sub, const std::vector<std::string>& names) {
  for (const auto& name : names)
    if (sub->get_option(name)->count() == 0) throw UsageError(sub->get_name() + " needs " + name);
}

std::string poly_string(std::span<const unsigned> coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const unsigned c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || i == 0) out += std::to_string(c);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string fixed(double x, int digits = 9) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  std::string s = os.str();
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string weights_inline(const WeightDistribution& wd) {
  std::string out;
  for (const auto& [w, c] : wd.counts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(w) + ":" + std::to_string(c);
  }
  return out;
}

void write_key_values(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& rows,
                      const std::string& format) {
  if (format == "csv") {
    os << "key,value\n";
    for (const auto& [k, v] : rows) os << k << ',' << v << '\n';
    return;
  }
  for (const auto& [k, v] : rows) os << std::left << std::setw(22) << k << v << '\n';
}

// ---- field-info

int cmd_field_info(const RunConfig& cfg, std::ostream& os) {
  const FieldTower t = FieldTower::build(cfg.p, cfg.m0, cfg.k);
  const std::string format = pick_format(cfg, "table");
  if (format == "json") {
    nlohmann::json j = t.descriptor();
    j["gamma_order"] = t.order();
    os << j.dump() << '\n';
    return kOk;
  }
  write_key_values(os,
                   {{"p", std::to_string(t.p())},
                    {"m0", std::to_string(t.m0())},
                    {"k", std::to_string(t.k())},
                    {"q", std::to_string(t.q())},
                    {"r", std::to_string(t.r())},
                    {"delta", std::to_string(t.delta())},
                    {"primitive_polynomial", poly_string(t.primitive_poly())},
                    {"gamma_order", std::to_string(t.order())}},
                   format);
  return kOk;
}

// ---- code

int cmd_code(const RunConfig& cfg, std::ostream& os) {
  const FieldTower t = FieldTower::build(cfg.p, cfg.m0, cfg.k);
  const Budget budget = make_budget(cfg);
  TheoremReport rep = check_main(t, cfg.a1, cfg.a2);

  std::optional<TwoZeroCode> code;
  try {
    code.emplace(TwoZeroCode::canonical(t, cfg.a1, cfg.a2));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidArgument) throw;
  }
  if (code) {
    rep.weights = weight_distribution(*code, budget, Enumeration::Orbits);
    rep.projective = is_projective(*code).projective;
  }

  nlohmann::json suff = nlohmann::json::array();
  const u64 g = gcd3(rep.a1, rep.a2, t.q() - 1);
  for (u64 ell : divisors(g)) {
    try {
      const TheoremReport v = check_vega(t, cfg.a1, cfg.a2, ell, budget);
      suff.push_back({{"ell", ell}, {"n", v.n}, {"verdict", v.verdict}});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PreconditionViolated) throw;
      suff.push_back({{"ell", ell}, {"verdict", "not-applicable"}, {"reason", e.what()}});
    }
  }

  const std::string format = pick_format(cfg, "table");
  if (format == "json") {
    nlohmann::json j = rep.to_json();
    j["sufficiency"] = suff;
    os << j.dump() << '\n';
  } else if (format == "csv") {
    if (rep.weights) os << rep.weights->to_csv();
  } else {
    std::vector<std::pair<std::string, std::string>> rows = {
        {"tower", "p=" + std::to_string(t.p()) + " m0=" + std::to_string(t.m0()) + " k=" + std::to_string(t.k()) +
                      " (q=" + std::to_string(t.q()) + ", r=" + std::to_string(t.r()) + ")"},
        {"a1", std::to_string(rep.a1)},
        {"a2", std::to_string(rep.a2)},
        {"n", std::to_string(rep.n)},
        {"verdict", rep.verdict}};
    for (const auto& [key, c] : rep.conditions)
      rows.emplace_back("condition " + key, c.holds ? "holds" : "fails " + c.witness.dump());
    rows.emplace_back("dimension", code ? std::to_string(code->dimension()) : "-");
    rows.emplace_back("weights", rep.weights ? weights_inline(*rep.weights) : "-");
    rows.emplace_back("two_weight", rep.weights ? (rep.weights->is_two_weight() ? "yes" : "no") : "-");
    rows.emplace_back("projective", rep.projective ? (*rep.projective ? "yes" : "no") : "-");
    for (const auto& s : suff)
      rows.emplace_back("sufficiency ell=" + std::to_string(s["ell"].get<u64>()), s["verdict"].get<std::string>());
    write_key_values(os, rows, "table");
  }
  return cfg.expect_conforming && !rep.conforming() ? kPropertyFailure : kOk;
}

// ---- search

std::vector<std::pair<unsigned, unsigned>> prime_power_range(unsigned lo, unsigned hi) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned q = lo; q <= hi; ++q) {
    for (unsigned p = 2; p <= q; ++p) {
      if (q % p != 0) continue;
      unsigned m0 = 0;
      unsigned rest = q;
      while (rest % p == 0) {
        rest /= p;
        ++m0;
      }
      if (rest == 1) out.emplace_back(p, m0);
      break;
    }
  }
  return out;
}

int cmd_dichotomy(const RunConfig& cfg, std::ostream& os) {
  if (cfg.p == 0 || cfg.k == 0 || cfg.n == 0) throw UsageError("--dichotomy needs -p, -k and -n");
  const FieldTower t = FieldTower::build(cfg.p, cfg.m0, cfg.k);
  const DichotomyReport rep = wolfmann_dichotomy(t, cfg.n, cfg.dim_cap, make_budget(cfg));
  const std::string format = pick_format(cfg, "table");
  if (format == "json") {
    os << rep.to_json().dump() << '\n';
  } else {
    os << "n=" << rep.n << " q=" << t.q() << " dim_cap=" << rep.dim_cap << " codes=" << rep.codes_examined
       << " two_weight_projective=" << rep.two_weight_projective.size() << " violations=" << rep.violations()
       << '\n';
    for (const auto& f : rep.two_weight_projective) {
      os << "  cosets {";
      for (std::size_t i = 0; i < f.coset_reps.size(); ++i) os << (i ? "," : "") << f.coset_reps[i];
      os << "} dim=" << f.weights.dim << " weights " << weights_inline(f.weights) << "  " << f.classification
         << '\n';
    }
  }
  return rep.violations() == 0 ? kOk : kPropertyFailure;
}

int cmd_search(const RunConfig& cfg, std::ostream& os) {
  if (cfg.dichotomy) return cmd_dichotomy(cfg, os);
  if (cfg.q_max == 0 || cfg.k_max == 0) throw UsageError("search needs --q-max and --k-max");
  if (cfg.q_min < 2 || cfg.q_min > cfg.q_max) throw UsageError("malformed q range");
  if (cfg.k_min < 2 || cfg.k_min > cfg.k_max) throw UsageError("malformed k range");

  SearchOptions opts;
  opts.threads = cfg.threads;
  opts.budget = make_budget(cfg);
  opts.with_lemmas = cfg.lemmas;

  const std::string format = pick_format(cfg, "table");
  bool ok = true;
  u64 towers = 0, pairs = 0, in_a = 0, in_b = 0;
  if (format == "table")
    os << std::left << std::setw(5) << "q" << std::setw(4) << "k" << std::setw(9) << "r" << std::setw(8) << "pairs"
       << std::setw(7) << "|A|" << std::setw(7) << "|B|" << std::setw(6) << "A=B" << "lemmas\n";
  for (const auto& [p, m0] : prime_power_range(cfg.q_min, cfg.q_max)) {
    for (unsigned k = cfg.k_min; k <= cfg.k_max; ++k) {
      if (ipow(ipow(p, m0), k) > cfg.r_max) break;
      const FieldTower t = FieldTower::build(p, m0, k);
      const SearchResult res = search_second_type(t, opts);
      const bool eq = res.characterization_holds();
      const bool lem = res.lemmas_hold();
      ok = ok && eq && lem;
      ++towers;
      pairs += res.records.size();
      in_a += res.set_a.size();
      in_b += res.set_b.size();
      if (format == "json") {
        os << res.json_lines();
      } else {
        os << std::left << std::setw(5) << t.q() << std::setw(4) << k << std::setw(9) << t.r() << std::setw(8)
           << res.records.size() << std::setw(7) << res.set_a.size() << std::setw(7) << res.set_b.size()
           << std::setw(6) << (eq ? "yes" : "NO") << (cfg.lemmas ? (lem ? "ok" : "FAIL") : "-") << '\n';
      }
    }
  }
  if (format == "table")
    os << "towers=" << towers << " pairs=" << pairs << " A=" << in_a << " B=" << in_b
       << (ok ? " characterization holds" : " characterization FAILS") << '\n';
  return ok ? kOk : kPropertyFailure;
}

// ---- tables

int table_gauss(const RunConfig& cfg, std::ostream& os) {
  const FieldTower t = FieldTower::build(cfg.p, cfg.m0, cfg.k);
  make_budget(cfg).require(t.order() * t.order(), "Gauss sum table");
  const GaussSumTable g(t);
  const std::string format = pick_format(cfg, "csv");
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (u64 i = 0; i < g.order(); ++i) {
      const Complex z = g(static_cast<i64>(i));
      rows.push_back({{"index", i}, {"re", fixed(z.real())}, {"im", fixed(z.imag())}, {"modulus", fixed(std::abs(z))}});
    }
    os << rows.dump() << '\n';
    return kOk;
  }
  const char sep = format == "csv" ? ',' : ' ';
  os << "index" << sep << "re" << sep << "im" << sep << "modulus\n";
  for (u64 i = 0; i < g.order(); ++i) {
    const Complex z = g(static_cast<i64>(i));
    os << i << sep << fixed(z.real()) << sep << fixed(z.imag()) << sep << fixed(std::abs(z)) << '\n';
  }
  return kOk;
}

int table_singer(const RunConfig& cfg, std::ostream& os) {
  const FieldTower t = FieldTower::build(cfg.p, cfg.m0, cfg.k);
  const SingerSet d = singer_set(t);
  make_budget(cfg).require(d.delta * d.delta * d.elements.size(), "multiplier search");
  const std::vector<u64> mult = multipliers(t, cfg.threads);
  const std::string format = pick_format(cfg, "json");
  nlohmann::json j = {{"delta", d.delta},
                      {"D", d.elements},
                      {"multipliers", mult},
                      {"powers_of_p", powers_of_p(t, d.delta)},
                      {"dd_identity", verify_dd_identity(t)}};
  if (format == "json") {
    os << j.dump() << '\n';
    return kOk;
  }
  auto join = [](const std::vector<u64>& xs) {
    std::string s;
    for (u64 x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
  };
  write_key_values(os,
                   {{"delta", std::to_string(d.delta)},
                    {"D", join(d.elements)},
                    {"multipliers", join(mult)},
                    {"powers_of_p", join(powers_of_p(t, d.delta))},
                    {"dd_identity", verify_dd_identity(t) ? "true" : "false"}},
                   format);
  return kOk;
}

int table_digits(const RunConfig& cfg, std::ostream& os) {
  if (!cfg.a) throw UsageError("tables digits needs --a");
  const FieldTower t = FieldTower::build(cfg.p, cfg.m0, cfg.k);
  const DigitExpansion e = expand_digits(t, *cfg.a);
  const std::string format = pick_format(cfg, "csv");
  if (format == "json") {
    os << nlohmann::json{{"a", e.a}, {"L", e.L}, {"digits", e.digits}, {"digit_sum", e.digit_sum}}.dump() << '\n';
    return kOk;
  }
  std::string digits;
  for (unsigned d : e.digits) digits += (digits.empty() ? "" : " ") + std::to_string(d);
  const char sep = format == "csv" ? ',' : '\t';
  os << "a" << sep << "L" << sep << "digits" << sep << "digit_sum\n";
  os << e.a << sep << e.L << sep << digits << sep << e.digit_sum << '\n';
  return kOk;
}

int cmd_tables(const RunConfig& cfg, std::ostream& os) {
  if (cfg.table == "gauss") return table_gauss(cfg, os);
  if (cfg.table == "singer") return table_singer(cfg, os);
  return table_digits(cfg, os);
}

// ---- config

std::string scalar_string(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  throw UsageError("config values must be scalars");
}

CLI::Option* find_option(CLI::App* app, const std::string& key) {
  for (const std::string& name : {"--" + key, "-" + key, key})
    if (auto* opt = app->get_option_no_throw(name)) return opt;
  return nullptr;
}

void apply_config(CLI::App& app, CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("config must be a JSON object");

  auto fill = [&](const std::string& key, const nlohmann::json& value) {
    CLI::Option* opt = find_option(sub, key);
    if (opt == nullptr) opt = find_option(&app, key);
    if (opt == nullptr || key == "config") throw UsageError("unknown config key " + key);
    if (opt->count() > 0) return;
    opt->add_result(scalar_string(value));
    opt->run_callback();
  };
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      if (key != sub->get_name()) continue;
      for (const auto& [k2, v2] : value.items()) fill(k2, v2);
    } else {
      fill(key, value);
    }
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  if (!f.flush()) throw IoError("write to " + path + " failed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Two-weight projective cyclic codes: construction, verification and search", "twl"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", cfg.config_path, "JSON file with option values; flags win");
  app.add_option("-o,--output", cfg.output_path, "Write the report to this file");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "Compute cap in field operations (overrides TWL_BUDGET)")
      ->check(CLI::PositiveNumber);

  auto* field_info = app.add_subcommand("field-info", "Describe the tower F_p < F_q < F_r");
  add_tower_options(field_info, cfg);

  auto* code = app.add_subcommand("code", "Check one pair (a1, a2)");
  add_tower_options(code, cfg);
  code->add_option("--a1", cfg.a1, "First exponent");
  code->add_option("--a2", cfg.a2, "Second exponent");
  code->add_flag("--expect-conforming", cfg.expect_conforming, "Exit 1 unless conditions (1)-(5) hold");

  auto* search = app.add_subcommand("search", "Sweep towers and compare the two characterizations");
  search->add_option("--q-min", cfg.q_min, "Smallest q");
  search->add_option("--q-max", cfg.q_max, "Largest q");
  search->add_option("--k-min", cfg.k_min, "Smallest k");
  search->add_option("--k-max", cfg.k_max, "Largest k");
  search->add_option("--r-max", cfg.r_max, "Skip towers with r above this")->check(CLI::PositiveNumber);
  search->add_flag("--lemmas", cfg.lemmas, "Also run the intermediate identity checks");
  search->add_flag("--dichotomy", cfg.dichotomy, "Classify all cyclic codes of length n instead");
  add_tower_options(search, cfg);
  search->add_option("-n,--n", cfg.n, "Code length for --dichotomy");
  search->add_option("--dim-cap", cfg.dim_cap, "Largest dimension for --dichotomy")->check(CLI::PositiveNumber);

  auto* tables = app.add_subcommand("tables", "Gauss sums, Singer sets or digit expansions");
  tables->add_option("kind", cfg.table, "gauss | singer | digits")
      ->check(CLI::IsMember({"gauss", "singer", "digits"}));
  add_tower_options(tables, cfg);
  tables->add_option("--a", cfg.a, "Exponent for the digits table");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code_ = app.exit(e, out, err);
    return code_ == 0 ? kOk : kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  std::ostringstream report;
  try {
    if (!cfg.config_path.empty()) apply_config(app, sub, cfg.config_path);
    if (sub != search) require_present(sub, {"-p", "-k"});
    if (sub == code) require_present(sub, {"--a1", "--a2"});
    if (sub == tables) require_present(sub, {"kind"});
    int rc = kOk;
    if (sub == field_info) rc = cmd_field_info(cfg, report);
    if (sub == code) rc = cmd_code(cfg, report);
    if (sub == search) rc = cmd_search(cfg, report);
    if (sub == tables) rc = cmd_tables(cfg, report);
    emit(report.str(), cfg.output_path, out);
    return rc;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.kind() == ErrorKind::BudgetExceeded ? kBudget : kUsage;
  }
}

}  // namespace twl::cli
