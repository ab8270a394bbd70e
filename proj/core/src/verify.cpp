#include "twl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "twl/errors.hpp"
#include "twl/parallel.hpp"
#include "twl/singer.hpp"
#include "twl/stickelberger.hpp"

namespace twl {

namespace {

nlohmann::json tower_key(const FieldTower& t) { return {{"p", t.p()}, {"m0", t.m0()}, {"k", t.k()}}; }

std::string verdict_from(const std::map<std::string, ConditionCheck>& conditions,
                         const std::vector<std::string>& keys) {
  std::string failed;
  for (const auto& key : keys) {
    if (conditions.at(key).holds) continue;
    if (!failed.empty()) failed += ',';
    failed += key;
  }
  return failed.empty() ? "conforming" : "nonconforming(" + failed + ")";
}

// Smallest j in [0, k) with a1 = a2 q^j mod r - 1.
std::optional<u64> same_coset_exponent(const FieldTower& t, u64 a1, u64 a2) {
  const u64 N = t.order();
  u64 x = a2 % N;
  for (unsigned j = 0; j < t.k(); ++j) {
    if (x == a1 % N) return j;
    x = x * t.q() % N;
  }
  return std::nullopt;
}

nlohmann::json opt_json(const std::optional<u64>& x) { return x ? nlohmann::json(*x) : nlohmann::json(nullptr); }

}  // namespace

nlohmann::json TheoremReport::to_json() const {
  nlohmann::json conds = nlohmann::json::object();
  for (const auto& [key, c] : conditions) conds[key] = {{"holds", c.holds}, {"witness", c.witness}};
  nlohmann::json j = {{"theorem", theorem}, {"tower", tower},   {"a1", a1},
                      {"a2", a2},           {"n", n},           {"ell", opt_json(ell)},
                      {"params", params.to_json()}, {"conditions", conds}, {"q_gt_2", q_gt_2},
                      {"verdict", verdict}};
  j["weights"] = weights ? weights->to_json() : nlohmann::json(nullptr);
  j["projective"] = projective ? nlohmann::json(*projective) : nlohmann::json(nullptr);
  return j;
}

TheoremReport check_main(const FieldTower& tower, i64 a1, i64 a2) {
  const u64 N = tower.order();
  const u64 delta = tower.delta();
  TheoremReport rep;
  rep.theorem = "main";
  rep.tower = tower_key(tower);
  rep.a1 = mod(a1, N);
  rep.a2 = mod(a2, N);
  rep.q_gt_2 = tower.q() > 2;
  const u64 g = gcd3(rep.a1, rep.a2, tower.q() - 1);
  rep.n = N / g;
  rep.params = derive_parameters(tower, a1, a2, rep.n);
  rep.ell = rep.params.ell;

  const auto same = same_coset_exponent(tower, rep.a1, rep.a2);
  rep.conditions["1"] = {!same.has_value(), same ? nlohmann::json{{"j", *same}} : nlohmann::json(nullptr)};

  const u64 g1 = std::gcd(rep.a1, delta), g2 = std::gcd(rep.a2, delta);
  rep.conditions["2"] = {g1 == 1 && g2 == 1, {{"gcd_a1_delta", g1}, {"gcd_a2_delta", g2}}};

  const u64 v = rep.params.v;
  rep.conditions["3"] = {g == v && N % rep.n == 0 && N / rep.n == g,
                         {{"g", g}, {"v", v}, {"r_minus_1_over_n", N / rep.n}}};

  ConditionCheck c4{false, nullptr};
  if (rep.params.w) {
    const PowerCongruence pc = verify_main_lemma5(tower, v, *rep.params.w);
    c4.holds = pc.holds;
    c4.witness = {{"w", *rep.params.w}, {"j", pc.j ? nlohmann::json(*pc.j) : nlohmann::json(nullptr)}};
  }
  rep.conditions["4"] = c4;

  const u64 d1 = cyclotomic_coset(static_cast<i64>(rep.a1), tower.q(), N).size();
  const u64 d2 = cyclotomic_coset(static_cast<i64>(rep.a2), tower.q(), N).size();
  rep.conditions["5"] = {d1 == d2, {{"deg_h_a1", d1}, {"deg_h_a2", d2}}};

  rep.verdict = verdict_from(rep.conditions, {"1", "2", "3", "4", "5"});
  return rep;
}

TheoremReport check_vega(const FieldTower& tower, i64 a1, i64 a2, u64 ell, const Budget& budget) {
  const u64 N = tower.order();
  const u64 delta = tower.delta();
  const u64 qm1 = tower.q() - 1;
  const u64 r1 = mod(a1, N), r2 = mod(a2, N);
  if (std::gcd(r2, delta) != 1) throw Error(ErrorKind::PreconditionViolated, "a2 is not a unit modulo delta");
  if (same_coset_exponent(tower, r1, r2))
    throw Error(ErrorKind::PreconditionViolated, "a1 = a2 q^i for some i");
  const u64 g = gcd3(r1, r2, qm1);
  if (ell == 0 || g % ell != 0) throw Error(ErrorKind::PreconditionViolated, "ell must divide gcd(a1, a2, q-1)");

  const u64 lambda = qm1 * ell / g;
  const u64 n = lambda * delta;
  const u64 mu = qm1 / lambda;

  TheoremReport rep;
  rep.theorem = "sufficiency";
  rep.tower = tower_key(tower);
  rep.a1 = r1;
  rep.a2 = r2;
  rep.n = n;
  rep.ell = ell;
  rep.q_gt_2 = tower.q() > 2;
  rep.params = derive_parameters(tower, a1, a2, n);
  const u64 v = rep.params.v;
  const u64 w = *rep.params.w;

  rep.conditions["hyp1"] = {tower.p() == 2 && tower.k() == 2 && v == 1 && std::gcd(r1, delta) == 1, nullptr};
  const PowerCongruence pc = verify_main_lemma5(tower, v, w);
  rep.conditions["hyp2"] = {pc.holds, {{"w", w}, {"j", pc.j ? nlohmann::json(*pc.j) : nlohmann::json(nullptr)}}};

  // a) two different one-weight codes of length n and dimension k.
  bool a_ok = true;
  nlohmann::json a_wit = nlohmann::json::array();
  for (u64 a : {r1, r2}) {
    const u64 deg = cyclotomic_coset(static_cast<i64>(a), tower.q(), N).size();
    const u64 ord = N / std::gcd(a, N);
    const WeightDistribution wd = irreducible_code_weights(tower, static_cast<i64>(a), budget);
    const bool ok = deg == tower.k() && n % ord == 0 && wd.is_one_weight();
    a_ok = a_ok && ok;
    a_wit.push_back({{"a", a}, {"degree", deg}, {"nonzero_weights", wd.nonzero_weights()}});
  }
  rep.conditions["a"] = {a_ok, a_wit};

  // b) mu | v and lambda > v / mu.
  const bool mu_divides = v % mu == 0;
  rep.conditions["b"] = {mu_divides && lambda > v / mu, {{"lambda", lambda}, {"mu", mu}, {"v", v}}};

  // c) [n, 2k] with nonzero weights lambda q^(k-1) and (lambda - v/mu) q^(k-1).
  const TwoZeroCode code(tower, a1, a2, n);
  const WeightDistribution wd = weight_distribution(code, budget, Enumeration::Orbits);
  const u64 qk1 = ipow(tower.q(), tower.k() - 1);
  std::vector<u64> expected;
  if (mu_divides && lambda > v / mu) expected = {(lambda - v / mu) * qk1, lambda * qk1};
  rep.conditions["c"] = {wd.dim == 2 * tower.k() && wd.nonzero_weights() == expected && !expected.empty(),
                         {{"dim", wd.dim}, {"expected", expected}, {"observed", wd.nonzero_weights()}}};

  // d) projective iff v = mu.
  const ProjectivityResult pr = is_projective(code);
  rep.conditions["d"] = {pr.projective == (v == mu), {{"projective", pr.projective}, {"v_equals_mu", v == mu}}};
  rep.weights = wd;
  rep.projective = pr.projective;

  if (!rep.conditions["hyp1"].holds && !rep.conditions["hyp2"].holds)
    rep.verdict = "hypotheses-not-met";
  else
    rep.verdict = verdict_from(rep.conditions, {"a", "b", "c", "d"});
  return rep;
}

nlohmann::json LemmaChecks::to_json() const {
  return {{"b_sum_two_valued", b_sum_two_valued}, {"b_sum_divisible", b_sum_divisible},
          {"b_sum_values", b_sum_values},         {"ratio_unimodular", ratio_unimodular},
          {"multiplier", multiplier},             {"digit_relation", digit_relation},
          {"power_congruence", power_congruence},                    {"crt_consistent", crt_consistent}};
}

LemmaChecks check_lemmas(const TwoZeroCode& code, const GaussSumTable& gauss, double tolerance) {
  const FieldTower& t = code.tower();
  const DerivedParameters& d = code.params();
  if (!d.w) throw Error(ErrorKind::NonconformingSpec, "w undefined");
  const u64 v = d.v, w = *d.w;
  const i64 vd = static_cast<i64>(v * d.delta);
  const i64 r = static_cast<i64>(t.r());
  LemmaChecks out;

  std::set<i64> values;
  for (Element x = 1; x < t.r(); ++x) values.insert(vd * pds_value(code, x, 1) - 1);
  out.b_sum_values.assign(values.begin(), values.end());
  out.b_sum_two_valued =
      std::all_of(values.begin(), values.end(), [&](i64 b) { return b == -r || b == (vd - 1) * r; });
  out.b_sum_divisible = std::all_of(values.begin(), values.end(), [&](i64 b) { return b % r == 0; });

  out.ratio_unimodular = true;
  for (i64 s = 1; s < vd; ++s) {
    const double ratio_dev = std::abs(std::abs(gauss_product_ratio(t, gauss, v, w, s)) - 1.0);
    const double prod_dev = std::abs(std::abs(gauss_product(t, gauss, v, w, s)) - static_cast<double>(r)) / r;
    out.max_ratio_deviation = std::max({out.max_ratio_deviation, ratio_dev, prod_dev});
    if (ratio_dev > tolerance || prod_dev > tolerance) out.ratio_unimodular = false;
  }

  if (t.k() >= 2 && std::gcd(w % d.delta, d.delta) == 1)
    out.multiplier = lemma4_F_object(t, static_cast<i64>(w % d.delta)).translate.has_value();

  out.digit_relation = verify_digit_relation(t, v, w).holds;
  const PowerCongruence pc = verify_main_lemma5(t, v, w);
  out.power_congruence = pc.holds;
  out.crt_consistent = pc.crt_consistent;
  return out;
}

nlohmann::json PairRecord::to_json() const {
  nlohmann::json j = report.to_json();
  j["two_weight"] = two_weight;
  j["in_a"] = in_a;
  j["in_b"] = in_b;
  j["lemmas"] = lemmas ? lemmas->to_json() : nlohmann::json(nullptr);
  return j;
}

bool SearchResult::lemmas_hold() const {
  return std::all_of(records.begin(), records.end(),
                     [](const PairRecord& rec) { return !rec.lemmas || rec.lemmas->all(); });
}

std::string SearchResult::json_lines() const {
  std::ostringstream os;
  for (const auto& rec : records) os << rec.to_json().dump() << '\n';
  return os.str();
}

SearchResult search_second_type(const FieldTower& tower, const SearchOptions& options) {
  const u64 N = tower.order();
  std::vector<u64> reps;
  for (const auto& coset : cyclotomic_cosets(tower.q(), N))
    if (coset.size() == tower.k()) reps.push_back(coset.front());

  std::vector<std::pair<u64, u64>> pairs;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) pairs.emplace_back(reps[i], reps[j]);

  std::optional<GaussSumTable> gauss;
  if (options.with_lemmas) gauss.emplace(tower);

  SearchResult result;
  result.tower = tower_key(tower);
  result.records.resize(pairs.size());
  parallel_for(pairs.size(), options.threads, [&](std::size_t idx) {
    const auto [a1, a2] = pairs[idx];
    PairRecord rec;
    rec.report = check_main(tower, static_cast<i64>(a1), static_cast<i64>(a2));
    const TwoZeroCode code = TwoZeroCode::canonical(tower, static_cast<i64>(a1), static_cast<i64>(a2));
    const ProjectivityResult pr = is_projective(code);
    rec.report.projective = pr.projective;
    rec.report.weights = weight_distribution(code, options.budget, Enumeration::Orbits);
    rec.two_weight = rec.report.weights->is_two_weight();
    rec.in_a = rec.two_weight && pr.projective;
    rec.in_b = rec.report.conforming();
    if (gauss && rec.in_b) rec.lemmas = check_lemmas(code, *gauss);
    result.records[idx] = std::move(rec);
  });

  for (const auto& rec : result.records) {
    if (rec.in_a) result.set_a.emplace_back(rec.report.a1, rec.report.a2);
    if (rec.in_b) result.set_b.emplace_back(rec.report.a1, rec.report.a2);
  }
  return result;
}

nlohmann::json DichotomyFinding::to_json() const {
  return {{"coset_reps", coset_reps}, {"weights", weights.to_json()}, {"classification", classification}};
}

u64 DichotomyReport::violations() const {
  return static_cast<u64>(std::count_if(two_weight_projective.begin(), two_weight_projective.end(),
                                        [](const DichotomyFinding& f) { return f.classification == "violation"; }));
}

nlohmann::json DichotomyReport::to_json() const {
  nlohmann::json found = nlohmann::json::array();
  for (const auto& f : two_weight_projective) found.push_back(f.to_json());
  return {{"n", n}, {"dim_cap", dim_cap}, {"codes_examined", codes_examined},
          {"violations", violations()}, {"two_weight_projective", found}};
}

DichotomyReport wolfmann_dichotomy(const FieldTower& tower, u64 n, u64 dim_cap, const Budget& budget) {
  const u64 N = tower.order();
  if (n == 0 || N % n != 0) throw Error(ErrorKind::InvalidArgument, "n must divide r - 1");
  const auto cosets = cyclotomic_cosets(tower.q(), n);
  if (cosets.size() >= 40) throw Error(ErrorKind::BudgetExceeded, "too many cyclotomic cosets to enumerate subsets");
  const u64 subsets = u64{1} << cosets.size();
  budget.require(subsets, "cyclic code subset enumeration");

  DichotomyReport rep;
  rep.n = n;
  rep.dim_cap = dim_cap;
  const u64 step = N / n;
  for (u64 mask = 1; mask < subsets; ++mask) {
    std::vector<u64> chosen;
    u64 dim = 0;
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      if (!(mask >> i & 1u)) continue;
      chosen.push_back(cosets[i].front());
      dim += cosets[i].size();
    }
    if (dim > dim_cap) continue;
    ++rep.codes_examined;
    const CyclicCode code(tower, n, chosen);
    const WeightDistribution wd = code.weights(budget);
    if (!wd.is_two_weight() || !code.is_projective()) continue;

    DichotomyFinding f{chosen, wd, "violation"};
    if (chosen.size() == 1) {
      f.classification = "irreducible";
    } else if (chosen.size() == 2) {
      const u64 s1 = cyclotomic_coset(static_cast<i64>(chosen[0]), tower.q(), n).size();
      const u64 s2 = cyclotomic_coset(static_cast<i64>(chosen[1]), tower.q(), n).size();
      if (s1 == s2 && s1 == tower.k() && tower.q() > 2) {
        const TheoremReport main = check_main(tower, static_cast<i64>(chosen[0] * step),
                                              static_cast<i64>(chosen[1] * step));
        if (main.conforming() && main.n == n) f.classification = "two-coset";
      }
    }
    rep.two_weight_projective.push_back(std::move(f));
  }
  return rep;
}

}  // namespace twl
