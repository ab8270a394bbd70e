#pragma once

#include <optional>
#include <vector>

#include "twl/characters.hpp"
#include "twl/finite_field.hpp"

namespace twl {

/// Element of Z[G] for G = F_r* / F_q* = Z_delta; coefficient i belongs to the
/// coset gamma^i F_q*.
class GroupRingElement {
 public:
  explicit GroupRingElement(u64 order) : coeffs_(order, 0) {}
  explicit GroupRingElement(std::vector<i64> coeffs) : coeffs_(std::move(coeffs)) {}

  static GroupRingElement identity(u64 order);
  static GroupRingElement whole_group(u64 order);
  static GroupRingElement from_set(u64 order, const std::vector<u64>& indices);

  u64 order() const noexcept { return coeffs_.size(); }
  i64 operator[](u64 i) const { return coeffs_[i]; }
  i64& operator[](u64 i) { return coeffs_[i]; }
  const std::vector<i64>& coeffs() const noexcept { return coeffs_; }

  /// A^(m) = sum a_g g^m.
  GroupRingElement dilate(i64 m) const;
  /// A * g for the group element g = index.
  GroupRingElement translate(i64 g) const;
  i64 coefficient_sum() const;

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  GroupRingElement& operator*=(i64 s);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(GroupRingElement a, i64 s) { return a *= s; }
  /// Exact cyclic convolution.
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  bool operator==(const GroupRingElement&) const = default;

 private:
  std::vector<i64> coeffs_;
};

struct SingerSet {
  u64 delta = 0;
  std::vector<u64> elements;  ///< sorted indices in Z_delta

  GroupRingElement as_element() const { return GroupRingElement::from_set(delta, elements); }
};

/// Image of {x : Tr(x) = 1} in F_r*/F_q*, i.e. {i mod delta : Tr(gamma^i) != 0}.
SingerSet singer_set(const FieldTower& tower);

/// D D^(-1) = q^(k-2) + q^(k-2) (q-1) G, exactly.
bool verify_dd_identity(const FieldTower& tower);

/// chi_j(A) = sum_i a_i xi_delta^(i j).
Complex character_value(const GroupRingElement& a, i64 j);

/// {t in Z_delta* : D^(t) = D g for some g}, by trying every shift.
std::vector<u64> multipliers(const FieldTower& tower, unsigned threads = 1);

/// {p^j mod delta : 0 <= j < m}, sorted and deduplicated.
std::vector<u64> powers_of_p(const FieldTower& tower, u64 modulus);

struct FObject {
  GroupRingElement F;
  /// Set when F = q^(k-2) g for a single group element g.
  std::optional<u64> translate;
};

/// F = D^(w) D^(-1) - q^(k-2) (q-1) G. Throws NotCoprime unless gcd(w, delta) = 1.
FObject lemma4_F_object(const FieldTower& tower, i64 w);

}  // namespace twl
