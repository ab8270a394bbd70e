#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twl/budget.hpp"
#include "twl/finite_field.hpp"

namespace twl {

/// Exact weight -> number-of-codewords map.
struct WeightDistribution {
  u64 n = 0;
  u64 dim = 0;
  std::map<u64, u64> counts;

  u64 total() const;
  std::vector<u64> nonzero_weights() const;
  bool is_one_weight() const { return nonzero_weights().size() == 1; }
  bool is_two_weight() const { return nonzero_weights().size() == 2; }

  nlohmann::json to_json() const;
  /// One "weight,count" row per weight, with a header line.
  std::string to_csv() const;

  bool operator==(const WeightDistribution&) const = default;
};

/// Quantities attached to (a1, a2, n). Entries that are undefined for the
/// given input (non-integral ratios, a2 not a unit mod delta) are empty.
struct DerivedParameters {
  u64 delta = 0;
  u64 v = 0;  ///< gcd(a1 - a2, q - 1)
  u64 g = 0;  ///< gcd(a1, a2, q - 1)
  std::optional<u64> ell;     ///< n g / (r - 1)
  std::optional<u64> lambda;  ///< n / delta
  std::optional<u64> mu;      ///< (q - 1) / lambda
  std::optional<u64> a2_inv;  ///< inverse of a2 in Z_delta
  std::optional<u64> w;       ///< 1 + a2_inv (a1 - a2), reduced mod v delta

  nlohmann::json to_json() const;
};

DerivedParameters derive_parameters(const FieldTower& tower, i64 a1, i64 a2, u64 n);

/// The cyclic code of length n with check polynomial h_{a1} h_{a2}, in trace
/// form c_{a,b} = (Tr(a beta^(i a1) + b beta^(i a2)))_i with beta = gamma^-1.
/// Holds a reference to the tower, which must outlive it.
class TwoZeroCode {
 public:
  /// Throws InvalidArgument unless n | r - 1, gamma^(a_i n) = 1 and a1, a2
  /// lie in distinct q-cyclotomic cosets mod r - 1.
  TwoZeroCode(const FieldTower& tower, i64 a1, i64 a2, u64 n);

  /// Length (r - 1) / gcd(a1, a2, q - 1), the only length at which such a code
  /// can be projective.
  static TwoZeroCode canonical(const FieldTower& tower, i64 a1, i64 a2);

  const FieldTower& tower() const noexcept { return *tower_; }
  u64 a1() const noexcept { return a1_; }
  u64 a2() const noexcept { return a2_; }
  u64 n() const noexcept { return n_; }
  /// Sum of the two coset sizes.
  u64 dimension() const noexcept { return dim_; }
  const DerivedParameters& params() const noexcept { return params_; }

 private:
  const FieldTower* tower_;
  u64 a1_, a2_, n_, dim_;
  DerivedParameters params_;
};

enum class Enumeration {
  /// Every message is encoded and weighed.
  Exhaustive,
  /// Messages are grouped into orbits of the cyclic-shift and F_q*-scaling
  /// actions; one representative per orbit is weighed.
  Orbits,
};

std::vector<Element> codeword(const TwoZeroCode& code, Element a, Element b);
u64 codeword_weight(const TwoZeroCode& code, Element a, Element b);

WeightDistribution weight_distribution(const TwoZeroCode& code, const Budget& budget = {},
                                       Enumeration how = Enumeration::Exhaustive);

struct ProjectivityWitness {
  u64 i = 0;
  u64 j = 0;
  Element y = 0;  ///< column i = y * column j, y in F_q*
};

struct ProjectivityResult {
  bool projective = true;
  std::optional<ProjectivityWitness> witness;
};

/// Columns (beta^(i a1), beta^(i a2)) must be pairwise non-proportional over F_q*.
ProjectivityResult is_projective(const TwoZeroCode& code);

/// gcd(a, delta) = 1.
bool is_one_weight_check_poly(const FieldTower& tower, i64 a);

/// Weights of the irreducible cyclic code with check polynomial h_a and length
/// ord(gamma^a), computed from its trace form.
WeightDistribution irreducible_code_weights(const FieldTower& tower, i64 a, const Budget& budget = {},
                                            Enumeration how = Enumeration::Orbits);

/// A cyclic code of length n | r - 1 given by the q-cyclotomic cosets mod n of
/// the exponents b whose zeta^b (zeta = gamma^((r-1)/n)) are roots of the check
/// polynomial. Built from its generator polynomial, independently of the
/// trace form.
class CyclicCode {
 public:
  CyclicCode(const FieldTower& tower, u64 n, const std::vector<u64>& coset_reps);

  u64 n() const noexcept { return n_; }
  u64 dimension() const noexcept { return dim_; }
  /// Union of the chosen cosets, sorted.
  const std::vector<u64>& check_exponents() const noexcept { return check_exponents_; }
  /// Generator polynomial (x^n - 1) / h(x), coefficients in F_q, lowest degree first.
  const std::vector<Element>& generator() const noexcept { return generator_; }

  /// Enumerates the row span of the generator matrix.
  WeightDistribution weights(const Budget& budget = {}) const;
  bool is_projective() const;

 private:
  std::vector<std::vector<Element>> generator_matrix() const;

  const FieldTower* tower_;
  u64 n_, dim_;
  std::vector<u64> check_exponents_;
  std::vector<Element> generator_;
};

WeightDistribution general_cyclic_code_weights(const FieldTower& tower, u64 n,
                                               const std::vector<u64>& coset_reps,
                                               const Budget& budget = {});

}  // namespace twl
