#pragma once

#include <optional>
#include <vector>

#include "twl/cyclic_code.hpp"
#include "twl/finite_field.hpp"

namespace twl {

/// Least positive residue L(a) of a modulo r - 1 with its base-p digits.
struct DigitExpansion {
  i64 a = 0;
  u64 L = 0;
  std::vector<unsigned> digits;  ///< a_0 .. a_{m-1}
  unsigned digit_sum = 0;
};

/// Throws DivisibleByRMinusOne when (r - 1) | a.
DigitExpansion expand_digits(const FieldTower& tower, i64 a);

/// s(a).
unsigned digit_sum(const FieldTower& tower, i64 a);

/// Base-p^d blocks of value, lowest first; `count` blocks are produced.
std::vector<u64> digit_blocks(u64 value, unsigned p, unsigned d, unsigned count);

/// s over all of Z_{r-1} (entry 0 unused), for the scans below.
class DigitSumTable {
 public:
  explicit DigitSumTable(const FieldTower& tower);
  unsigned operator()(i64 a) const noexcept { return sums_[mod(a, sums_.size())]; }

 private:
  std::vector<unsigned> sums_;
};

struct DigitRelationResult {
  bool holds = true;
  std::optional<u64> failing_t;
};

/// s((q-1)/v * w t) = s((q-1)/v * t) for every t in [1, v delta).
DigitRelationResult verify_digit_relation(const FieldTower& tower, u64 v, u64 w);
DigitRelationResult verify_digit_relation(const FieldTower& tower, const DerivedParameters& params);

/// Every x in Z_{v delta}* for which the relation holds with w replaced by x.
std::vector<u64> digit_relation_group(const FieldTower& tower, u64 v);

struct W0Construction {
  unsigned d = 0;  ///< gcd(j, m0)
  u64 u0 = 0;
  u64 v0 = 0;      ///< u0 j + v0 m0 = d (mod m), both positive
  u64 w0 = 0;      ///< w^u0 q^v0 mod v delta
};

/// Throws NotPowerCongruent unless w = p^j (mod delta).
W0Construction derive_w0(const FieldTower& tower, u64 v, u64 w, unsigned j);

struct PowerCongruence {
  bool holds = false;
  std::optional<unsigned> j;     ///< smallest j in [0, m) with w = p^j (mod v delta)
  std::optional<unsigned> j_mod_delta;  ///< smallest j with w = p^j (mod delta)
  bool crt_consistent = false;   ///< CRT route (w = 1 mod v, p^j = 1 mod v) agrees with the direct scan
};

/// w = p^j (mod v delta) for some j, scanned over 0 <= j < m; p^m = 1 mod v delta
/// so the scan is complete.
PowerCongruence verify_main_lemma5(const FieldTower& tower, u64 v, u64 w);

/// True iff all base-p^d blocks of (q-1)/v are equal.
bool blocks_equal(const FieldTower& tower, u64 v, unsigned d);

}  // namespace twl
