#include "twl/finite_field.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "twl/errors.hpp"

namespace twl {

namespace {

constexpr u64 kNoLog = std::numeric_limits<u64>::max();

Element encode(const std::vector<unsigned>& digits, unsigned p) {
  Element e = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) e = e * p + *it;
  return e;
}

// Walks the powers of x modulo the monic polynomial x^m + sum c_i x^i and
// records them. Succeeds iff x has multiplicative order exactly p^m - 1, which
// for c_0 != 0 is equivalent to the polynomial being primitive.
bool fill_if_primitive(const std::vector<unsigned>& c, unsigned p, u64 order,
                       std::vector<Element>& antilog) {
  const std::size_t m = c.size();
  std::vector<unsigned> s(m, 0);
  s[0] = 1;
  for (u64 i = 0; i < order; ++i) {
    const Element e = encode(s, p);
    if (i > 0 && e == 1) return false;
    antilog[i] = e;
    const unsigned top = s[m - 1];
    for (std::size_t j = m - 1; j >= 1; --j) s[j] = (s[j - 1] + p - (top * c[j]) % p) % p;
    s[0] = (p - (top * c[0]) % p) % p;
  }
  return encode(s, p) == 1;
}

}  // namespace

FieldTower FieldTower::build(unsigned p, unsigned m0, unsigned k, TowerLimits limits) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m0 == 0 || k == 0) throw Error(ErrorKind::InvalidArgument, "extension degrees must be positive");

  const unsigned m = m0 * k;
  u64 r = 1;
  for (unsigned i = 0; i < m; ++i) {
    r *= p;
    if (r > limits.max_order)
      throw Error(ErrorKind::TowerTooLarge,
                  "p^(m0*k) exceeds the table cap " + std::to_string(limits.max_order));
  }

  FieldTower t;
  t.p_ = p;
  t.m0_ = m0;
  t.k_ = k;
  t.q_ = ipow(p, m0);
  t.r_ = r;
  t.delta_ = (r - 1) / (t.q_ - 1);
  const u64 order = r - 1;
  t.antilog_.assign(order, 0);

  // Candidates in lexicographic order of (c_0, ..., c_{m-1}), c_0 most significant.
  std::vector<unsigned> c(m, 0);
  bool found = false;
  for (u64 idx = 0; idx < r && !found; ++idx) {
    u64 rest = idx;
    for (unsigned i = m; i-- > 0;) {
      c[i] = static_cast<unsigned>(rest % p);
      rest /= p;
    }
    if (c[0] == 0) continue;
    found = fill_if_primitive(c, p, order, t.antilog_);
  }
  if (!found) throw Error(ErrorKind::InvalidArgument, "no primitive polynomial found");
  t.prim_poly_ = c;
  t.prim_poly_.push_back(1);

  t.log_.assign(r, kNoLog);
  for (u64 i = 0; i < order; ++i) t.log_[t.antilog_[i]] = i;

  t.trace_log_.assign(order, 0);
  std::vector<u64> frob(k);
  for (unsigned i = 0; i < k; ++i) frob[i] = pow_mod(t.q_, i, order);
  for (u64 e = 0; e < order; ++e) {
    Element acc = 0;
    for (unsigned i = 0; i < k; ++i) acc = t.add(acc, t.antilog_[(e * frob[i]) % order]);
    t.trace_log_[e] = acc;
  }
  t.neg_trace_log_.resize(order);
  for (u64 e = 0; e < order; ++e) t.neg_trace_log_[e] = t.neg(t.trace_log_[e]);
  t.trace_.assign(r, 0);
  for (Element x = 1; x < r; ++x) t.trace_[x] = t.trace_log_[t.log_[x]];

  t.abs_trace_.assign(r, 0);
  for (Element x = 1; x < r; ++x)
    t.abs_trace_[x] = t.absolute_trace(t.trace_[x]);
  return t;
}

Element FieldTower::add(Element a, Element b) const noexcept {
  if (p_ == 2) return a ^ b;
  Element out = 0, scale = 1;
  while (a != 0 || b != 0) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Element FieldTower::neg(Element a) const noexcept {
  if (p_ == 2) return a;
  Element out = 0, scale = 1;
  while (a != 0) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Element FieldTower::mul(Element a, Element b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return antilog_[(log_[a] + log_[b]) % order()];
}

Element FieldTower::inv(Element a) const noexcept {
  return antilog_[(order() - log_[a]) % order()];
}

Element FieldTower::pow(Element a, i64 e) const noexcept {
  if (a == 0) return e == 0 ? 1 : 0;
  const u64 n = order();
  const u64 le = log_[a] % n;
  const u64 ee = mod(e, n);
  return antilog_[static_cast<u64>((static_cast<unsigned __int128>(le) * ee) % n)];
}

unsigned FieldTower::absolute_trace(Element y) const noexcept {
  Element acc = 0;
  Element term = y;
  for (unsigned i = 0; i < m0_; ++i) {
    acc = add(acc, term);
    term = pow(term, p_);
  }
  return acc;
}

Element FieldTower::subfield_element(unsigned index) const noexcept {
  if (index == 0) return 0;
  return antilog_[(delta_ * (index - 1)) % order()];
}

unsigned FieldTower::subfield_index(Element y) const noexcept {
  if (y == 0) return 0;
  return static_cast<unsigned>(1 + log_[y] / delta_);
}

nlohmann::json FieldTower::descriptor() const {
  return {{"p", p_},         {"m0", m0_},     {"k", k_},
          {"q", q_},         {"r", r_},       {"delta", delta_},
          {"primitive_poly", prim_poly_}};
}

std::vector<u64> cyclotomic_coset(i64 a, u64 base, u64 modulus) {
  if (modulus == 0) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  if (std::gcd(base % modulus, modulus) != 1 && modulus != 1)
    throw Error(ErrorKind::BaseNotCoprime,
                "base " + std::to_string(base) + " not coprime to " + std::to_string(modulus));
  const u64 start = mod(a, modulus);
  std::vector<u64> out{start};
  for (u64 x = start * (base % modulus) % modulus; x != start; x = x * (base % modulus) % modulus)
    out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<u64>> cyclotomic_cosets(u64 base, u64 modulus) {
  std::vector<std::vector<u64>> out;
  std::vector<bool> seen(modulus, false);
  for (u64 x = 0; x < modulus; ++x) {
    if (seen[x]) continue;
    auto coset = cyclotomic_coset(static_cast<i64>(x), base, modulus);
    for (u64 y : coset) seen[y] = true;
    out.push_back(std::move(coset));
  }
  return out;
}

Element SubfieldPolynomial::evaluate(const FieldTower& tower, Element x) const noexcept {
  Element acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = tower.add(tower.mul(acc, x), *it);
  return acc;
}

SubfieldPolynomial minimal_polynomial(const FieldTower& tower, i64 a) {
  SubfieldPolynomial poly{{1}};
  for (u64 e : cyclotomic_coset(a, tower.q(), tower.order())) {
    const Element root = tower.gamma_pow(static_cast<i64>(e));
    std::vector<Element> next(poly.coeffs.size() + 1, 0);
    for (std::size_t i = 0; i < poly.coeffs.size(); ++i) {
      next[i + 1] = tower.add(next[i + 1], poly.coeffs[i]);
      next[i] = tower.sub(next[i], tower.mul(root, poly.coeffs[i]));
    }
    poly.coeffs = std::move(next);
  }
  return poly;
}

}  // namespace twl
