#include "twl/cyclic_code.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "twl/errors.hpp"

namespace twl {

// ---------------------------------------------------------------------------
// WeightDistribution

u64 WeightDistribution::total() const {
  u64 t = 0;
  for (const auto& [w, c] : counts) t += c;
  return t;
}

std::vector<u64> WeightDistribution::nonzero_weights() const {
  std::vector<u64> out;
  for (const auto& [w, c] : counts)
    if (w != 0 && c != 0) out.push_back(w);
  return out;
}

nlohmann::json WeightDistribution::to_json() const {
  nlohmann::json weights = nlohmann::json::object();
  for (const auto& [w, c] : counts) weights[std::to_string(w)] = c;
  return {{"n", n}, {"dim", dim}, {"weights", weights}};
}

std::string WeightDistribution::to_csv() const {
  std::ostringstream os;
  os << "weight,count\n";
  for (const auto& [w, c] : counts) os << w << ',' << c << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Parameters

nlohmann::json DerivedParameters::to_json() const {
  auto opt = [](const std::optional<u64>& x) { return x ? nlohmann::json(*x) : nlohmann::json(nullptr); };
  return {{"delta", delta}, {"v", v},           {"g", g},           {"ell", opt(ell)},
          {"lambda", opt(lambda)}, {"mu", opt(mu)}, {"a2_inv", opt(a2_inv)}, {"w", opt(w)}};
}

DerivedParameters derive_parameters(const FieldTower& tower, i64 a1, i64 a2, u64 n) {
  const u64 N = tower.order();
  const u64 qm1 = tower.q() - 1;
  DerivedParameters d;
  d.delta = tower.delta();
  const i64 r1 = static_cast<i64>(mod(a1, N));
  const i64 r2 = static_cast<i64>(mod(a2, N));
  d.v = gcd_mod(r1 - r2, qm1);
  d.g = gcd3(static_cast<u64>(r1), static_cast<u64>(r2), qm1);
  if ((n * d.g) % N == 0) d.ell = n * d.g / N;
  if (n % d.delta == 0) {
    d.lambda = n / d.delta;
    if (*d.lambda != 0 && qm1 % *d.lambda == 0) d.mu = qm1 / *d.lambda;
  }
  d.a2_inv = inverse_mod(r2, d.delta);
  if (d.a2_inv) {
    const u64 vd = d.v * d.delta;
    d.w = mod(1 + static_cast<i64>(*d.a2_inv) * (r1 - r2), vd);
  }
  return d;
}

// ---------------------------------------------------------------------------
// TwoZeroCode

TwoZeroCode::TwoZeroCode(const FieldTower& tower, i64 a1, i64 a2, u64 n)
    : tower_(&tower), a1_(mod(a1, tower.order())), a2_(mod(a2, tower.order())), n_(n) {
  const u64 N = tower.order();
  if (n == 0 || N % n != 0)
    throw Error(ErrorKind::InvalidArgument, "length " + std::to_string(n) + " does not divide r - 1");
  if ((a1_ * n) % N != 0 || (a2_ * n) % N != 0)
    throw Error(ErrorKind::InvalidArgument, "h_a1 h_a2 does not divide x^n - 1");
  const auto c1 = cyclotomic_coset(static_cast<i64>(a1_), tower.q(), N);
  const auto c2 = cyclotomic_coset(static_cast<i64>(a2_), tower.q(), N);
  if (c1.front() == c2.front())
    throw Error(ErrorKind::InvalidArgument, "a1 and a2 lie in the same cyclotomic coset");
  dim_ = c1.size() + c2.size();
  params_ = derive_parameters(tower, a1, a2, n);
}

TwoZeroCode TwoZeroCode::canonical(const FieldTower& tower, i64 a1, i64 a2) {
  const u64 g = gcd3(mod(a1, tower.order()), mod(a2, tower.order()), tower.q() - 1);
  return TwoZeroCode(tower, a1, a2, tower.order() / g);
}

namespace {

constexpr u64 kZero = ~u64{0};

// Weighs c_{a,b} from the discrete logs of a and b (kZero for a zero
// coefficient). Entry i is nonzero iff Tr(a beta^(i a1)) != -Tr(b beta^(i a2)).
class WeightKernel {
 public:
  explicit WeightKernel(const TwoZeroCode& code)
      : tr_(code.tower().trace_log_table().data()),
        neg_tr_(code.tower().neg_trace_log_table().data()),
        N_(code.tower().order()),
        a1_(code.a1()),
        a2_(code.a2()),
        n_(code.n()) {}

  u64 operator()(u64 alpha, u64 beta) const {
    u64 w = 0;
    if (alpha == kZero && beta == kZero) return 0;
    if (beta == kZero) return single(alpha, a1_);
    if (alpha == kZero) return single(beta, a2_);
    for (u64 i = 0, e1 = alpha, e2 = beta; i < n_; ++i, e1 = step(e1, a1_), e2 = step(e2, a2_))
      w += tr_[e1] != neg_tr_[e2];
    return w;
  }

 private:
  u64 single(u64 e, u64 a) const {
    u64 w = 0;
    for (u64 i = 0; i < n_; ++i, e = step(e, a)) w += tr_[e] != 0;
    return w;
  }
  u64 step(u64 e, u64 a) const { return e >= a ? e - a : e + N_ - a; }

  const Element* tr_;
  const Element* neg_tr_;
  u64 N_, a1_, a2_, n_;
};

u64 log_or_zero(const FieldTower& t, Element x) { return x == 0 ? kZero : t.log(x); }

// Generator of {y : (0, y) in <(a1, a2), (delta, delta)>} inside Z_N, as a
// gcd with N (so the subgroup is <result>).
u64 second_coordinate_kernel(u64 N, u64 delta, u64 qm1, u64 a1, u64 a2) {
  const u64 d = std::gcd(a1, N);
  const u64 Nd = N / d;
  u64 kappa = (Nd * a2) % N;
  const auto inv = inverse_mod(static_cast<i64>(a1 / d), Nd);
  for (u64 t = 0; t < qm1; ++t) {
    const u64 target = mod(-static_cast<i64>(t * delta), N);
    if (target % d != 0) continue;
    const u64 s = static_cast<u64>((static_cast<unsigned __int128>(target / d) * *inv) % Nd);
    kappa = std::gcd(kappa, (s * a2 + t * delta) % N);
  }
  return std::gcd(kappa, N);
}

WeightDistribution finish(std::map<u64, u64> raw, u64 n, u64 dim, u64 multiplicity) {
  WeightDistribution wd{n, dim, {}};
  for (const auto& [w, c] : raw) {
    if (c % multiplicity != 0) throw Error(ErrorKind::InvalidArgument, "inconsistent encoding multiplicity");
    wd.counts[w] = c / multiplicity;
  }
  return wd;
}

}  // namespace

std::vector<Element> codeword(const TwoZeroCode& code, Element a, Element b) {
  const FieldTower& t = code.tower();
  const Element beta = t.inv(t.gamma());
  std::vector<Element> out(code.n());
  for (u64 i = 0; i < code.n(); ++i) {
    const Element x = t.mul(a, t.pow(beta, static_cast<i64>(i * code.a1())));
    const Element y = t.mul(b, t.pow(beta, static_cast<i64>(i * code.a2())));
    out[i] = t.trace(t.add(x, y));
  }
  return out;
}

u64 codeword_weight(const TwoZeroCode& code, Element a, Element b) {
  return WeightKernel(code)(log_or_zero(code.tower(), a), log_or_zero(code.tower(), b));
}

WeightDistribution weight_distribution(const TwoZeroCode& code, const Budget& budget, Enumeration how) {
  const FieldTower& t = code.tower();
  const u64 N = t.order(), n = code.n(), delta = t.delta();
  const u64 multiplicity = ipow(t.q(), static_cast<unsigned>(2 * t.k() - code.dimension()));
  const WeightKernel weigh(code);
  std::map<u64, u64> raw;

  if (how == Enumeration::Exhaustive) {
    budget.require(t.r() * t.r() * n, "exhaustive weight distribution");
    for (Element a = 0; a < t.r(); ++a)
      for (Element b = 0; b < t.r(); ++b) ++raw[weigh(log_or_zero(t, a), log_or_zero(t, b))];
    return finish(std::move(raw), n, code.dimension(), multiplicity);
  }

  // Translations by (a1, a2) (cyclic shift) and (delta, delta) (F_q* scaling)
  // act freely on pairs of logs and preserve weight.
  const u64 ga = std::gcd(code.a1(), delta);
  const u64 gb = std::gcd(code.a2(), delta);
  const u64 gk = second_coordinate_kernel(N, delta, t.q() - 1, code.a1(), code.a2());
  budget.require((ga * gk + ga + gb) * n + (t.q() - 1), "orbit weight distribution");

  raw[0] += 1;
  for (u64 beta = 0; beta < gb; ++beta) raw[weigh(kZero, beta)] += N / gb;
  for (u64 alpha = 0; alpha < ga; ++alpha) raw[weigh(alpha, kZero)] += N / ga;
  const u64 orbit = (N / ga) * (N / gk);
  for (u64 alpha = 0; alpha < ga; ++alpha)
    for (u64 beta = 0; beta < gk; ++beta) raw[weigh(alpha, beta)] += orbit;
  return finish(std::move(raw), n, code.dimension(), multiplicity);
}

ProjectivityResult is_projective(const TwoZeroCode& code) {
  const FieldTower& t = code.tower();
  const u64 N = t.order(), delta = t.delta();
  // Each column is scaled so that its first log lies in [0, delta).
  std::unordered_map<u64, u64> seen;
  seen.reserve(code.n() * 2);
  for (u64 i = 0; i < code.n(); ++i) {
    const u64 e1 = mod(-static_cast<i64>(i * code.a1()), N);
    const u64 e2 = mod(-static_cast<i64>(i * code.a2()), N);
    const u64 shift = e1 / delta;
    const u64 c1 = e1 - shift * delta;
    const u64 c2 = mod(static_cast<i64>(e2) - static_cast<i64>(shift * delta), N);
    const auto [it, fresh] = seen.emplace(c1 * N + c2, i);
    if (!fresh) {
      const u64 j = it->second;
      const u64 ej = mod(-static_cast<i64>(j * code.a1()), N);
      // column j = y * column i with j < i; report with the earlier index first.
      const Element y = t.gamma_pow(static_cast<i64>(ej) - static_cast<i64>(e1));
      return {false, ProjectivityWitness{j, i, y}};
    }
  }
  return {};
}

bool is_one_weight_check_poly(const FieldTower& tower, i64 a) {
  return std::gcd(mod(a, tower.order()), tower.delta()) == 1;
}

WeightDistribution irreducible_code_weights(const FieldTower& tower, i64 a, const Budget& budget,
                                            Enumeration how) {
  const u64 N = tower.order();
  const u64 ar = mod(a, N);
  const u64 n = N / std::gcd(ar, N);
  const u64 dim = cyclotomic_coset(static_cast<i64>(ar), tower.q(), N).size();
  const u64 multiplicity = ipow(tower.q(), static_cast<unsigned>(tower.k() - dim));
  auto weigh = [&](u64 alpha) {
    u64 w = 0;
    for (u64 i = 0; i < n; ++i)
      w += tower.trace_of_power(static_cast<i64>(alpha) - static_cast<i64>((i * ar) % N)) != 0;
    return w;
  };
  std::map<u64, u64> raw;
  raw[0] += 1;
  if (how == Enumeration::Exhaustive) {
    budget.require(tower.r() * n, "irreducible code weights");
    for (u64 alpha = 0; alpha < N; ++alpha) ++raw[weigh(alpha)];
  } else {
    const u64 ga = std::gcd(ar, tower.delta());
    budget.require(ga * n, "irreducible code weights");
    for (u64 alpha = 0; alpha < ga; ++alpha) raw[weigh(alpha)] += N / ga;
  }
  return finish(std::move(raw), n, dim, multiplicity);
}

// ---------------------------------------------------------------------------
// CyclicCode

CyclicCode::CyclicCode(const FieldTower& tower, u64 n, const std::vector<u64>& coset_reps)
    : tower_(&tower), n_(n) {
  const u64 N = tower.order();
  if (n == 0 || N % n != 0)
    throw Error(ErrorKind::InvalidArgument, "length " + std::to_string(n) + " does not divide r - 1");
  std::vector<bool> in_check(n, false);
  for (u64 b : coset_reps)
    for (u64 e : cyclotomic_coset(static_cast<i64>(b), tower.q(), n)) in_check[e] = true;
  for (u64 e = 0; e < n; ++e)
    if (in_check[e]) check_exponents_.push_back(e);
  dim_ = check_exponents_.size();

  const u64 step = N / n;
  std::vector<Element> g{1};
  for (u64 e = 0; e < n; ++e) {
    if (in_check[e]) continue;
    const Element root = tower.gamma_pow(static_cast<i64>(e * step));
    std::vector<Element> next(g.size() + 1, 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      next[i + 1] = tower.add(next[i + 1], g[i]);
      next[i] = tower.sub(next[i], tower.mul(root, g[i]));
    }
    g = std::move(next);
  }
  for (Element c : g)
    if (!tower.in_subfield(c)) throw Error(ErrorKind::InvalidArgument, "generator not defined over F_q");
  generator_ = std::move(g);
}

std::vector<std::vector<Element>> CyclicCode::generator_matrix() const {
  std::vector<std::vector<Element>> rows(dim_, std::vector<Element>(n_, 0));
  for (u64 i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < generator_.size(); ++j) rows[i][i + j] = generator_[j];
  return rows;
}

WeightDistribution CyclicCode::weights(const Budget& budget) const {
  const FieldTower& t = *tower_;
  const u64 q = t.q();
  u64 words = 1;
  for (u64 i = 0; i < dim_; ++i) {
    words *= q;
    budget.require(words * n_, "generator-matrix enumeration");
  }
  const auto rows = generator_matrix();
  std::vector<Element> scalars(q);
  for (unsigned s = 0; s < q; ++s) scalars[s] = t.subfield_element(s);

  WeightDistribution wd{n_, dim_, {}};
  std::vector<std::vector<Element>> partial(dim_ + 1, std::vector<Element>(n_, 0));
  std::function<void(u64)> descend = [&](u64 level) {
    if (level == dim_) {
      u64 w = 0;
      for (Element c : partial[level]) w += c != 0;
      ++wd.counts[w];
      return;
    }
    for (Element y : scalars) {
      for (u64 j = 0; j < n_; ++j) partial[level + 1][j] = t.add(partial[level][j], t.mul(y, rows[level][j]));
      descend(level + 1);
    }
  };
  descend(0);
  return wd;
}

bool CyclicCode::is_projective() const {
  const FieldTower& t = *tower_;
  const auto rows = generator_matrix();
  std::vector<std::vector<Element>> columns;
  columns.reserve(n_);
  for (u64 j = 0; j < n_; ++j) {
    std::vector<Element> col(dim_);
    Element lead = 0;
    for (u64 i = 0; i < dim_; ++i) {
      col[i] = rows[i][j];
      if (lead == 0) lead = col[i];
    }
    if (lead == 0) return false;
    const Element scale = t.inv(lead);
    for (Element& c : col) c = t.mul(c, scale);
    columns.push_back(std::move(col));
  }
  std::sort(columns.begin(), columns.end());
  return std::adjacent_find(columns.begin(), columns.end()) == columns.end();
}

WeightDistribution general_cyclic_code_weights(const FieldTower& tower, u64 n,
                                               const std::vector<u64>& coset_reps, const Budget& budget) {
  return CyclicCode(tower, n, coset_reps).weights(budget);
}

}  // namespace twl
