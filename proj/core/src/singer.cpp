#include "twl/singer.hpp"

#include <algorithm>
#include <numbers>

#include "twl/errors.hpp"
#include "twl/parallel.hpp"

namespace twl {

GroupRingElement GroupRingElement::identity(u64 order) {
  GroupRingElement e(order);
  e[0] = 1;
  return e;
}

GroupRingElement GroupRingElement::whole_group(u64 order) {
  return GroupRingElement(std::vector<i64>(order, 1));
}

GroupRingElement GroupRingElement::from_set(u64 order, const std::vector<u64>& indices) {
  GroupRingElement e(order);
  for (u64 i : indices) e[i % order] += 1;
  return e;
}

GroupRingElement GroupRingElement::dilate(i64 m) const {
  GroupRingElement out(order());
  for (u64 i = 0; i < order(); ++i) out[mod(static_cast<i64>(i) * m, order())] += coeffs_[i];
  return out;
}

GroupRingElement GroupRingElement::translate(i64 g) const {
  GroupRingElement out(order());
  for (u64 i = 0; i < order(); ++i) out[mod(static_cast<i64>(i) + g, order())] = coeffs_[i];
  return out;
}

i64 GroupRingElement::coefficient_sum() const {
  i64 s = 0;
  for (i64 c : coeffs_) s += c;
  return s;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (u64 i = 0; i < order(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (u64 i = 0; i < order(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(i64 s) {
  for (i64& c : coeffs_) c *= s;
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  const u64 n = a.order();
  GroupRingElement out(n);
  for (u64 i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (u64 j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const u64 s = i + j < n ? i + j : i + j - n;
      out[s] += a[i] * b[j];
    }
  }
  return out;
}

namespace {

void require_k2(const FieldTower& tower) {
  if (tower.k() < 2) throw Error(ErrorKind::DegenerateTower, "Singer difference set needs k >= 2");
}

}  // namespace

SingerSet singer_set(const FieldTower& tower) {
  require_k2(tower);
  SingerSet d{tower.delta(), {}};
  for (u64 i = 0; i < tower.delta(); ++i)
    if (tower.trace_of_power(static_cast<i64>(i)) != 0) d.elements.push_back(i);
  return d;
}

bool verify_dd_identity(const FieldTower& tower) {
  const SingerSet d = singer_set(tower);
  const GroupRingElement D = d.as_element();
  const i64 qk2 = static_cast<i64>(ipow(tower.q(), tower.k() - 2));
  const GroupRingElement expected =
      GroupRingElement::identity(d.delta) * qk2 +
      GroupRingElement::whole_group(d.delta) * (qk2 * static_cast<i64>(tower.q() - 1));
  return D * D.dilate(-1) == expected;
}

Complex character_value(const GroupRingElement& a, i64 j) {
  const RootsOfUnity xi(a.order());
  Complex acc{0.0, 0.0};
  const u64 jr = mod(j, a.order());
  for (u64 i = 0; i < a.order(); ++i)
    if (a[i] != 0) acc += static_cast<double>(a[i]) * xi(static_cast<i64>((i * jr) % a.order()));
  return acc;
}

std::vector<u64> multipliers(const FieldTower& tower, unsigned threads) {
  const SingerSet d = singer_set(tower);
  const u64 delta = d.delta;
  std::vector<unsigned char> hit(delta, 0);
  parallel_for(delta, threads, [&](std::size_t t) {
    if (std::gcd(static_cast<u64>(t), delta) != 1) return;
    std::vector<bool> dilated(delta, false);
    for (u64 x : d.elements) dilated[(x * t) % delta] = true;
    for (u64 g = 0; g < delta; ++g) {
      bool match = true;
      for (u64 x : d.elements) {
        const u64 y = x + g < delta ? x + g : x + g - delta;
        if (!dilated[y]) {
          match = false;
          break;
        }
      }
      if (match) {
        hit[t] = 1;
        return;
      }
    }
  });
  std::vector<u64> out;
  for (u64 t = 0; t < delta; ++t)
    if (hit[t]) out.push_back(t);
  return out;
}

std::vector<u64> powers_of_p(const FieldTower& tower, u64 modulus) {
  std::vector<u64> out;
  for (unsigned j = 0; j < tower.m(); ++j) out.push_back(pow_mod(tower.p(), j, modulus));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FObject lemma4_F_object(const FieldTower& tower, i64 w) {
  const SingerSet d = singer_set(tower);
  if (std::gcd(mod(w, d.delta), d.delta) != 1)
    throw Error(ErrorKind::NotCoprime, "w must be a unit modulo delta");
  const GroupRingElement D = d.as_element();
  const i64 qk2 = static_cast<i64>(ipow(tower.q(), tower.k() - 2));
  GroupRingElement F = D.dilate(w) * D.dilate(-1) -
                       GroupRingElement::whole_group(d.delta) * (qk2 * static_cast<i64>(tower.q() - 1));
  FObject out{F, std::nullopt};
  std::optional<u64> support;
  bool single = true;
  for (u64 i = 0; i < d.delta && single; ++i) {
    if (F[i] == 0) continue;
    if (support || F[i] != qk2) single = false;
    support = i;
  }
  if (single && support) out.translate = support;
  return out;
}

}  // namespace twl
