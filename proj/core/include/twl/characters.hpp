#pragma once

#include <complex>
#include <vector>

#include "twl/cyclic_code.hpp"
#include "twl/finite_field.hpp"

namespace twl {

using Complex = std::complex<double>;

/// xi_N^j evaluated from the exact angle 2 pi (j mod N) / N.
class RootsOfUnity {
 public:
  explicit RootsOfUnity(u64 order);

  u64 order() const noexcept { return table_.size(); }
  Complex operator()(i64 j) const noexcept { return table_[mod(j, table_.size())]; }

 private:
  std::vector<Complex> table_;
};

/// psi(Tr(x)) = xi_p^(Tr_{F_r/F_p}(x)).
Complex canonical_additive_character(const FieldTower& tower, Element x);

/// G(phi^i) = sum over x in F_r* of psi(Tr(x)) phi^i(x), phi(gamma) = xi_{r-1}.
Complex gauss_sum(const FieldTower& tower, i64 i);

/// All Gauss sums G(phi^i), i in Z_{r-1}, by direct summation.
class GaussSumTable {
 public:
  explicit GaussSumTable(const FieldTower& tower);

  u64 order() const noexcept { return values_.size(); }
  Complex operator()(i64 i) const noexcept { return values_[mod(i, values_.size())]; }

 private:
  std::vector<Complex> values_;
};

/// Checks psi(Tr(x)) = (1/(r-1)) sum_chi G(chi) chi^-1(x) at every x in F_r*.
bool verify_gauss_inversion(const FieldTower& tower, double tolerance = 1e-6);

/// psi_a (x) psi_b (R) = n(q-1) - q wt(c_{a,b}), computed exactly from the weight.
i64 pds_value(const TwoZeroCode& code, Element a, Element b);

/// B_x = v delta psi_x (x) psi_1 (R) - 1 for x in F_r*. Throws
/// NonconformingSpec unless the value lies in {-r, (v delta - 1) r}.
i64 b_sum(const TwoZeroCode& code, Element x);

/// B_x from its defining Gauss-sum expansion
/// sum_{t=1}^{v delta - 1} G(phi^{(q-1)t/v}) G(phi^{-(q-1)wt/v}) phi^{-(q-1)t/v}(x).
Complex b_sum_complex(const FieldTower& tower, const GaussSumTable& gauss, u64 v, u64 w, Element x);

/// G(phi^{(q-1)s/v}) G(phi^{-(q-1)ws/v}).
Complex gauss_product(const FieldTower& tower, const GaussSumTable& gauss, u64 v, u64 w, i64 s);

/// eta_s = G(phi^{(q-1)ws/v}) / G(phi^{(q-1)s/v}); throws PrincipalCharacter when
/// s = 0 mod v delta.
Complex gauss_product_ratio(const FieldTower& tower, const GaussSumTable& gauss, u64 v, u64 w, i64 s);

}  // namespace twl
