#include "twl/stickelberger.hpp"

#include <algorithm>
#include <string>

#include "twl/errors.hpp"

namespace twl {

DigitExpansion expand_digits(const FieldTower& tower, i64 a) {
  const u64 N = tower.order();
  const u64 res = mod(a, N);
  if (res == 0) throw Error(ErrorKind::DivisibleByRMinusOne, std::to_string(a) + " is divisible by r - 1");
  DigitExpansion e{a, res, {}, 0};
  u64 rest = res;
  for (unsigned i = 0; i < tower.m(); ++i) {
    const auto digit = static_cast<unsigned>(rest % tower.p());
    e.digits.push_back(digit);
    e.digit_sum += digit;
    rest /= tower.p();
  }
  return e;
}

unsigned digit_sum(const FieldTower& tower, i64 a) { return expand_digits(tower, a).digit_sum; }

std::vector<u64> digit_blocks(u64 value, unsigned p, unsigned d, unsigned count) {
  const u64 base = ipow(p, d);
  std::vector<u64> out;
  for (unsigned i = 0; i < count; ++i) {
    out.push_back(value % base);
    value /= base;
  }
  return out;
}

DigitSumTable::DigitSumTable(const FieldTower& tower) : sums_(tower.order(), 0) {
  const unsigned p = tower.p();
  for (u64 a = 1; a < sums_.size(); ++a) sums_[a] = sums_[a / p] + static_cast<unsigned>(a % p);
}

DigitRelationResult verify_digit_relation(const FieldTower& tower, u64 v, u64 w) {
  const DigitSumTable s(tower);
  const u64 vd = v * tower.delta();
  const i64 unit = static_cast<i64>((tower.q() - 1) / v);
  for (u64 t = 1; t < vd; ++t) {
    const i64 base = unit * static_cast<i64>(t);
    const i64 image = unit * static_cast<i64>((w % vd) * t % vd);
    if (s(base) != s(image) || mod(image, tower.order()) == 0) return {false, t};
  }
  return {};
}

DigitRelationResult verify_digit_relation(const FieldTower& tower, const DerivedParameters& params) {
  if (!params.w) throw Error(ErrorKind::InvalidArgument, "w is undefined (a2 not a unit mod delta)");
  return verify_digit_relation(tower, params.v, *params.w);
}

std::vector<u64> digit_relation_group(const FieldTower& tower, u64 v) {
  const DigitSumTable s(tower);
  const u64 vd = v * tower.delta();
  const i64 unit = static_cast<i64>((tower.q() - 1) / v);
  std::vector<u64> out;
  for (u64 x = 1; x < vd; ++x) {
    if (std::gcd(x, vd) != 1) continue;
    bool ok = true;
    for (u64 t = 1; t < vd && ok; ++t)
      ok = s(unit * static_cast<i64>(t)) == s(unit * static_cast<i64>(x * t % vd));
    if (ok) out.push_back(x);
  }
  return out;
}

W0Construction derive_w0(const FieldTower& tower, u64 v, u64 w, unsigned j) {
  const u64 delta = tower.delta();
  if (pow_mod(tower.p(), j, delta) != w % delta)
    throw Error(ErrorKind::NotPowerCongruent,
                "w = " + std::to_string(w) + " is not p^" + std::to_string(j) + " mod delta");
  const unsigned m = tower.m(), m0 = tower.m0();
  const ExtGcd e = ext_gcd(static_cast<i64>(j), static_cast<i64>(m0));
  W0Construction out;
  out.d = static_cast<unsigned>(e.g);
  out.u0 = mod(e.x, m);
  out.v0 = mod(e.y, m);
  if (out.u0 == 0) out.u0 = m;
  if (out.v0 == 0) out.v0 = m;
  const u64 vd = v * delta;
  out.w0 = pow_mod(w, out.u0, vd) * pow_mod(tower.q(), out.v0, vd) % vd;
  return out;
}

PowerCongruence verify_main_lemma5(const FieldTower& tower, u64 v, u64 w) {
  const u64 delta = tower.delta();
  const u64 vd = v * delta;
  PowerCongruence out;
  bool crt_route = false;
  const bool crt_applicable = std::gcd(v, delta) == 1 && w % v == 1 % v;
  for (unsigned j = 0; j < tower.m(); ++j) {
    if (!out.j && pow_mod(tower.p(), j, vd) == w % vd) out.j = j;
    if (pow_mod(tower.p(), j, delta) == w % delta) {
      if (!out.j_mod_delta) out.j_mod_delta = j;
      if (crt_applicable && pow_mod(tower.p(), j, v) == 1 % v) crt_route = true;
    }
  }
  out.holds = out.j.has_value();
  out.crt_consistent = out.holds == crt_route;
  return out;
}

bool blocks_equal(const FieldTower& tower, u64 v, unsigned d) {
  if (d == 0 || tower.m0() % d != 0) throw Error(ErrorKind::InvalidArgument, "d must divide m0");
  if ((tower.q() - 1) % v != 0) throw Error(ErrorKind::InvalidArgument, "v must divide q - 1");
  const auto blocks = digit_blocks((tower.q() - 1) / v, tower.p(), d, tower.m0() / d);
  return std::all_of(blocks.begin(), blocks.end(), [&](u64 b) { return b == blocks.front(); });
}

}  // namespace twl
