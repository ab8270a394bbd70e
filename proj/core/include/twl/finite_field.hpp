#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "twl/arith.hpp"

namespace twl {

/// Element of F_r encoded as the integer sum c_i p^i of its coefficient
/// vector over F_p in the polynomial basis 1, x, ..., x^(m-1). The prime
/// subfield is therefore {0, ..., p-1}.
using Element = std::uint32_t;

struct TowerLimits {
  u64 max_order = u64{1} << 20;
};

/// The tower F_p < F_q < F_r with q = p^m0 and r = q^k, built on full
/// log/antilog tables. Immutable once constructed.
class FieldTower {
 public:
  static FieldTower build(unsigned p, unsigned m0, unsigned k, TowerLimits limits = {});

  unsigned p() const noexcept { return p_; }
  unsigned m0() const noexcept { return m0_; }
  unsigned k() const noexcept { return k_; }
  unsigned m() const noexcept { return m0_ * k_; }
  u64 q() const noexcept { return q_; }
  u64 r() const noexcept { return r_; }
  /// Order of the multiplicative group, r - 1.
  u64 order() const noexcept { return r_ - 1; }
  /// (r - 1) / (q - 1).
  u64 delta() const noexcept { return delta_; }

  /// Monic primitive polynomial defining F_r over F_p, lowest degree first.
  std::span<const unsigned> primitive_poly() const noexcept { return prim_poly_; }

  Element gamma() const noexcept { return antilog_[1 % order()]; }
  Element gamma_pow(i64 e) const noexcept { return antilog_[mod(e, order())]; }
  /// Discrete log base gamma; x must be nonzero.
  u64 log(Element x) const noexcept { return log_[x]; }

  Element add(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  Element mul(Element a, Element b) const noexcept;
  Element inv(Element a) const noexcept;
  Element pow(Element a, i64 e) const noexcept;

  /// Tr_{F_r/F_q}(x); the result lies in F_q.
  Element trace(Element x) const noexcept { return trace_[x]; }
  /// Tr_{F_r/F_q}(gamma^e), the hot path of every codeword computation.
  Element trace_of_power(i64 e) const noexcept { return trace_log_[mod(e, order())]; }
  /// Tr(gamma^e) and -Tr(gamma^e) for e in [0, r - 1).
  std::span<const Element> trace_log_table() const noexcept { return trace_log_; }
  std::span<const Element> neg_trace_log_table() const noexcept { return neg_trace_log_; }
  /// Tr_{F_q/F_p}(y) for y in F_q, returned as an integer in [0, p).
  unsigned absolute_trace(Element y) const noexcept;
  /// Tr_{F_r/F_p}(x) = Tr_{F_q/F_p}(Tr_{F_r/F_q}(x)), tabulated.
  unsigned absolute_trace_full(Element x) const noexcept { return abs_trace_[x]; }

  bool in_subfield(Element x) const noexcept { return x == 0 || log_[x] % delta_ == 0; }
  /// F_q is indexed 0 -> 0 and gamma^(delta*j) -> 1 + j.
  Element subfield_element(unsigned index) const noexcept;
  unsigned subfield_index(Element y) const noexcept;

  nlohmann::json descriptor() const;

 private:
  FieldTower() = default;

  unsigned p_ = 0, m0_ = 0, k_ = 0;
  u64 q_ = 0, r_ = 0, delta_ = 0;
  std::vector<unsigned> prim_poly_;
  std::vector<Element> antilog_;
  std::vector<u64> log_;
  std::vector<Element> trace_;
  std::vector<Element> trace_log_;
  std::vector<Element> neg_trace_log_;
  std::vector<unsigned> abs_trace_;
};

/// Sorted orbit {a * base^j mod modulus}; the front is the canonical representative.
std::vector<u64> cyclotomic_coset(i64 a, u64 base, u64 modulus);

/// All cyclotomic cosets of Z_modulus under multiplication by base, ordered by
/// their minimal element.
std::vector<std::vector<u64>> cyclotomic_cosets(u64 base, u64 modulus);

/// Polynomial with coefficients in F_q (stored as elements of F_r), lowest
/// degree first.
struct SubfieldPolynomial {
  std::vector<Element> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  Element evaluate(const FieldTower& tower, Element x) const noexcept;
};

/// Minimal polynomial of gamma^a over F_q.
SubfieldPolynomial minimal_polynomial(const FieldTower& tower, i64 a);

}  // namespace twl
