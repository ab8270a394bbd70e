#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "twl/budget.hpp"
#include "twl/characters.hpp"
#include "twl/cyclic_code.hpp"
#include "twl/finite_field.hpp"

namespace twl {

struct ConditionCheck {
  bool holds = false;
  nlohmann::json witness;
};

/// Outcome of evaluating one theorem on one instance. Conditions are keyed
/// "1".."5" for the characterization and "hyp1", "hyp2", "a".."d" for the
/// sufficiency theorem.
struct TheoremReport {
  std::string theorem;
  nlohmann::json tower;
  u64 a1 = 0;
  u64 a2 = 0;
  u64 n = 0;
  std::optional<u64> ell;
  DerivedParameters params;
  std::map<std::string, ConditionCheck> conditions;
  bool q_gt_2 = false;
  std::optional<WeightDistribution> weights;
  std::optional<bool> projective;
  std::string verdict;

  bool conforming() const { return verdict == "conforming"; }
  nlohmann::json to_json() const;
};

/// Conditions (1)-(5) of the characterization at n = (r-1)/gcd(a1, a2, q-1).
TheoremReport check_main(const FieldTower& tower, i64 a1, i64 a2);

/// Hypotheses and assertions a)-d) of the sufficiency theorem for a given ell,
/// every assertion decided by brute force. Throws PreconditionViolated when
/// a2 is not a unit mod delta, a1 and a2 share a coset, or ell does not divide
/// gcd(a1, a2, q-1).
TheoremReport check_vega(const FieldTower& tower, i64 a1, i64 a2, u64 ell, const Budget& budget = {});

/// Exact checks of the intermediate lemmas for a code whose parameters pass
/// check_main.
struct LemmaChecks {
  bool b_sum_two_valued = false;        ///< B_x in {-r, (v delta - 1) r} for all x
  bool b_sum_divisible = false;         ///< r | B_x for all x
  std::vector<i64> b_sum_values;        ///< distinct B_x, sorted
  bool ratio_unimodular = false;        ///< |eta_s| = 1 for all s != 0 mod v delta
  double max_ratio_deviation = 0.0;
  bool multiplier = false;              ///< F = q^(k-2) g for a single g
  bool digit_relation = false;
  bool power_congruence = false;
  bool crt_consistent = false;

  bool all() const {
    return b_sum_two_valued && b_sum_divisible && ratio_unimodular && multiplier && digit_relation && power_congruence &&
           crt_consistent;
  }
  nlohmann::json to_json() const;
};

LemmaChecks check_lemmas(const TwoZeroCode& code, const GaussSumTable& gauss, double tolerance = 1e-6);

struct SearchOptions {
  unsigned threads = 1;
  Budget budget{};
  /// Run check_lemmas on every pair passing check_main.
  bool with_lemmas = false;
};

struct PairRecord {
  TheoremReport report;  ///< check_main plus brute-force weights and projectivity
  bool two_weight = false;
  bool in_a = false;  ///< two-weight and projective
  bool in_b = false;  ///< passes conditions (1)-(5)
  std::optional<LemmaChecks> lemmas;

  nlohmann::json to_json() const;
};

struct SearchResult {
  nlohmann::json tower;
  std::vector<PairRecord> records;  ///< ordered by (a1, a2)
  std::vector<std::pair<u64, u64>> set_a;
  std::vector<std::pair<u64, u64>> set_b;

  bool characterization_holds() const { return set_a == set_b; }
  bool lemmas_hold() const;
  /// One JSON object per line, in canonical order.
  std::string json_lines() const;
};

/// Every unordered pair of distinct q-cyclotomic cosets of size k mod r - 1,
/// keyed by minimal representatives a1 < a2.
SearchResult search_second_type(const FieldTower& tower, const SearchOptions& options = {});

struct DichotomyFinding {
  std::vector<u64> coset_reps;  ///< minimal representatives mod n
  WeightDistribution weights;
  std::string classification;  ///< "irreducible", "two-coset", or "violation"
  nlohmann::json to_json() const;
};

struct DichotomyReport {
  u64 n = 0;
  u64 dim_cap = 0;
  u64 codes_examined = 0;
  std::vector<DichotomyFinding> two_weight_projective;

  u64 violations() const;
  nlohmann::json to_json() const;
};

/// Enumerates every cyclic code of length n with dimension <= dim_cap through
/// its generator matrix and classifies the two-weight projective ones.
DichotomyReport wolfmann_dichotomy(const FieldTower& tower, u64 n, u64 dim_cap, const Budget& budget = {});

}  // namespace twl
