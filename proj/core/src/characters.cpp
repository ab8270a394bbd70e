#include "twl/characters.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "twl/errors.hpp"

namespace twl {

RootsOfUnity::RootsOfUnity(u64 order) : table_(order) {
  for (u64 j = 0; j < order; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(order);
    table_[j] = {std::cos(angle), std::sin(angle)};
  }
}

Complex canonical_additive_character(const FieldTower& tower, Element x) {
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(tower.absolute_trace_full(x)) / static_cast<double>(tower.p());
  return {std::cos(angle), std::sin(angle)};
}

Complex gauss_sum(const FieldTower& tower, i64 i) {
  const u64 N = tower.order();
  const RootsOfUnity xi_p(tower.p());
  const RootsOfUnity xi_n(N);
  const u64 ir = mod(i, N);
  Complex acc{0.0, 0.0};
  for (u64 e = 0; e < N; ++e) {
    const Element x = tower.gamma_pow(static_cast<i64>(e));
    acc += xi_p(tower.absolute_trace_full(x)) * xi_n(static_cast<i64>((ir * e) % N));
  }
  return acc;
}

GaussSumTable::GaussSumTable(const FieldTower& tower) : values_(tower.order()) {
  const u64 N = tower.order();
  const RootsOfUnity xi_p(tower.p());
  const RootsOfUnity xi_n(N);
  std::vector<Complex> additive(N);
  for (u64 e = 0; e < N; ++e) additive[e] = xi_p(tower.absolute_trace_full(tower.gamma_pow(static_cast<i64>(e))));
  for (u64 i = 0; i < N; ++i) {
    Complex acc{0.0, 0.0};
    u64 idx = 0;
    for (u64 e = 0; e < N; ++e) {
      acc += additive[e] * xi_n(static_cast<i64>(idx));
      idx += i;
      if (idx >= N) idx -= N;
    }
    values_[i] = acc;
  }
}

bool verify_gauss_inversion(const FieldTower& tower, double tolerance) {
  const u64 N = tower.order();
  const GaussSumTable gauss(tower);
  const RootsOfUnity xi_n(N);
  for (u64 e = 0; e < N; ++e) {
    const Element x = tower.gamma_pow(static_cast<i64>(e));
    Complex acc{0.0, 0.0};
    for (u64 i = 0; i < N; ++i) acc += gauss(static_cast<i64>(i)) * xi_n(-static_cast<i64>((i * e) % N));
    acc /= static_cast<double>(N);
    if (std::abs(acc - canonical_additive_character(tower, x)) > tolerance) return false;
  }
  return true;
}

i64 pds_value(const TwoZeroCode& code, Element a, Element b) {
  if (a == 0 && b == 0) throw Error(ErrorKind::ZeroPair, "(a, b) = (0, 0)");
  const i64 n = static_cast<i64>(code.n());
  const i64 q = static_cast<i64>(code.tower().q());
  return n * (q - 1) - q * static_cast<i64>(codeword_weight(code, a, b));
}

i64 b_sum(const TwoZeroCode& code, Element x) {
  if (x == 0) throw Error(ErrorKind::InvalidArgument, "B_x needs x != 0");
  const DerivedParameters& d = code.params();
  const i64 vd = static_cast<i64>(d.v * d.delta);
  const i64 r = static_cast<i64>(code.tower().r());
  const i64 value = vd * pds_value(code, x, 1) - 1;
  if (value != -r && value != (vd - 1) * r)
    throw Error(ErrorKind::NonconformingSpec,
                "B_x = " + std::to_string(value) + " is outside {-r, (v delta - 1) r}");
  return value;
}

namespace {

u64 character_exponent(const FieldTower& tower, u64 v, i64 t) {
  // (q-1)/v * t, reduced mod r - 1.
  return mod(static_cast<i64>((tower.q() - 1) / v) * t, tower.order());
}

}  // namespace

Complex b_sum_complex(const FieldTower& tower, const GaussSumTable& gauss, u64 v, u64 w, Element x) {
  const u64 N = tower.order();
  const RootsOfUnity xi_n(N);
  const u64 lx = tower.log(x);
  const i64 vd = static_cast<i64>(v * tower.delta());
  Complex acc{0.0, 0.0};
  for (i64 t = 1; t < vd; ++t) {
    const u64 e = character_exponent(tower, v, t);
    const u64 ew = character_exponent(tower, v, static_cast<i64>(w) * t);
    acc += gauss(static_cast<i64>(e)) * gauss(-static_cast<i64>(ew)) * xi_n(-static_cast<i64>((e * lx) % N));
  }
  return acc;
}

Complex gauss_product(const FieldTower& tower, const GaussSumTable& gauss, u64 v, u64 w, i64 s) {
  const u64 e = character_exponent(tower, v, s);
  const u64 ew = character_exponent(tower, v, static_cast<i64>(w) * s);
  return gauss(static_cast<i64>(e)) * gauss(-static_cast<i64>(ew));
}

Complex gauss_product_ratio(const FieldTower& tower, const GaussSumTable& gauss, u64 v, u64 w, i64 s) {
  if (mod(s, v * tower.delta()) == 0) throw Error(ErrorKind::PrincipalCharacter, "s = 0 mod v delta");
  const u64 e = character_exponent(tower, v, s);
  const u64 ew = character_exponent(tower, v, static_cast<i64>(w) * s);
  return gauss(static_cast<i64>(ew)) / gauss(static_cast<i64>(e));
}

}  // namespace twl
