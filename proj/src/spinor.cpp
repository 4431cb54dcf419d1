#include "hsc/spinor.hpp"

#include <mutex>
#include <numeric>

#include "hsc/errors.hpp"

namespace hsc {

unsigned total(const MultiIndex& m) { return std::accumulate(m.begin(), m.end(), 0u); }

Integer SliceIndex::dimension() const {
  const long nn = static_cast<long>(n);
  return binomial(a + nn - 1, nn - 1) * binomial(b + nn - 1, nn - 1) * binomial(r + nn - 1, nn - 1);
}

BasisState state(MultiIndex alpha, MultiIndex beta, MultiIndex kappa) {
  if (alpha.size() != beta.size() || alpha.size() != kappa.size())
    throw DimensionMismatch("basis state multi-indices have different lengths");
  return {std::move(alpha), std::move(beta), std::move(kappa)};
}

SpinorPolynomial::SpinorPolynomial(std::size_t n, const BasisState& s, const GaussianRational& c) : n_(n) {
  if (s.n() != n) throw DimensionMismatch("basis state does not match n");
  add_term(s, c);
}

GaussianRational SpinorPolynomial::coefficient(const BasisState& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void SpinorPolynomial::add_term(const BasisState& s, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SpinorPolynomial SpinorPolynomial::operator-() const {
  SpinorPolynomial out(*this);
  for (auto& [s, c] : out.terms_) c = -c;
  return out;
}

namespace {

void require_same_n(std::size_t a, std::size_t b) {
  if (a != b)
    throw DimensionMismatch("dimension mismatch: n = " + std::to_string(a) + " vs n = " + std::to_string(b));
}

}  // namespace

SpinorPolynomial& SpinorPolynomial::operator+=(const SpinorPolynomial& o) {
  require_same_n(n_, o.n_);
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

SpinorPolynomial& SpinorPolynomial::operator-=(const SpinorPolynomial& o) {
  require_same_n(n_, o.n_);
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

SpinorPolynomial& SpinorPolynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

// --- operator action ----------------------------------------------------------

namespace {

using HermiteVector = std::map<unsigned, Rational>;

// dq h_k = k h_{k-1} - h_{k+1}/2
HermiteVector apply_dq(const HermiteVector& v) {
  HermiteVector out;
  for (const auto& [k, c] : v) {
    if (k > 0) out[k - 1] += c * Rational(static_cast<long>(k));
    out[k + 1] -= c * Rational(1, 2);
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

// q h_k = h_{k+1}/2 + k h_{k-1}
HermiteVector apply_q(const HermiteVector& v) {
  HermiteVector out;
  for (const auto& [k, c] : v) {
    if (k > 0) out[k - 1] += c * Rational(static_cast<long>(k));
    out[k + 1] += c * Rational(1, 2);
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

// q^mult dq^deriv h_k, memoised.
const std::vector<std::pair<unsigned, Rational>>& spinor_action(unsigned mult, unsigned deriv, unsigned k) {
  static std::mutex mutex;
  static std::map<std::tuple<unsigned, unsigned, unsigned>, std::vector<std::pair<unsigned, Rational>>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(mult, deriv, k);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  HermiteVector v{{k, Rational(1)}};
  for (unsigned i = 0; i < deriv; ++i) v = apply_dq(v);
  for (unsigned i = 0; i < mult; ++i) v = apply_q(v);
  return cache.emplace(key, std::vector<std::pair<unsigned, Rational>>(v.begin(), v.end())).first->second;
}

void expand_spinor(const WeylMonomial& m, std::size_t j, BasisState& acc, const GaussianRational& coeff,
                   SpinorPolynomial& out) {
  if (j == m.n()) {
    out.add_term(acc, coeff);
    return;
  }
  const unsigned k = acc.kappa[j];
  for (const auto& [kk, c] : spinor_action(m.exp(Gen::Q, j), m.exp(Gen::Dq, j), k)) {
    acc.kappa[j] = kk;
    expand_spinor(m, j + 1, acc, coeff * GaussianRational(c), out);
  }
  acc.kappa[j] = k;
}

// Falling factorial e (e-1) ... (e-d+1).
Integer falling(unsigned e, unsigned d) {
  Integer out = 1;
  for (unsigned i = 0; i < d; ++i) out *= e - i;
  return out;
}

void apply_monomial(const WeylMonomial& m, const GaussianRational& c, const BasisState& s, SpinorPolynomial& out) {
  const std::size_t n = s.n();
  BasisState acc = s;
  Integer weight = 1;
  for (std::size_t j = 0; j < n; ++j) {
    const unsigned dz = m.exp(Gen::Dz, j);
    const unsigned dzb = m.exp(Gen::Dzb, j);
    if (acc.alpha[j] < dz || acc.beta[j] < dzb) return;
    weight *= falling(acc.alpha[j], dz) * falling(acc.beta[j], dzb);
    acc.alpha[j] = acc.alpha[j] - dz + m.exp(Gen::Z, j);
    acc.beta[j] = acc.beta[j] - dzb + m.exp(Gen::Zb, j);
  }
  expand_spinor(m, 0, acc, c * GaussianRational(Rational(weight)), out);
}

}  // namespace

SpinorPolynomial apply(const WeylOperator& op, const BasisState& s) {
  require_same_n(op.n(), s.n());
  SpinorPolynomial out(op.n());
  for (const auto& [m, c] : op.terms()) apply_monomial(m, c, s, out);
  return out;
}

SpinorPolynomial apply(const WeylOperator& op, const SpinorPolynomial& u) {
  require_same_n(op.n(), u.n());
  SpinorPolynomial out(op.n());
  for (const auto& [s, cu] : u.terms())
    for (const auto& [m, c] : op.terms()) apply_monomial(m, c * cu, s, out);
  return out;
}

// --- slices, grading, pairing -----------------------------------------------------

namespace {

// All multi-indices of length n summing to total, in lexicographic order.
std::vector<MultiIndex> compositions(std::size_t n, unsigned sum) {
  std::vector<MultiIndex> out;
  MultiIndex cur(n, 0);
  auto rec = [&](auto&& self, std::size_t j, unsigned left) -> void {
    if (j + 1 == n) {
      cur[j] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      cur[j] = v;
      self(self, j + 1, left - v);
    }
  };
  if (n == 0) return out;
  rec(rec, 0, sum);
  return out;
}

}  // namespace

std::vector<BasisState> slice_basis(const SliceIndex& s) {
  if (s.n == 0) throw DimensionMismatch("slice requires n >= 1");
  const auto as = compositions(s.n, s.a);
  const auto bs = compositions(s.n, s.b);
  const auto ks = compositions(s.n, s.r);
  std::vector<BasisState> out;
  out.reserve(as.size() * bs.size() * ks.size());
  for (const auto& al : as)
    for (const auto& be : bs)
      for (const auto& ka : ks) out.push_back({al, be, ka});
  return out;
}

std::set<Grade> grade(const SpinorPolynomial& u) {
  std::set<Grade> out;
  for (const auto& [s, c] : u.terms()) out.insert({s.a(), s.b(), s.r()});
  return out;
}

SpinorPolynomial conjugate_elem(const SpinorPolynomial& u) {
  SpinorPolynomial out(u.n());
  for (const auto& [s, c] : u.terms()) out.add_term({s.beta, s.alpha, s.kappa}, c.conj());
  return out;
}

GaussianRational fischer_weight(const BasisState& s) {
  Integer w = 1;
  for (std::size_t j = 0; j < s.n(); ++j) {
    w *= factorial(s.alpha[j]) * factorial(s.beta[j]) * factorial(s.kappa[j]);
    w <<= s.alpha[j] + s.beta[j] + s.kappa[j];
  }
  const long phase = (static_cast<long>(s.a()) - static_cast<long>(s.b())) % 4;
  const Rational mag(w);
  switch ((phase + 4) % 4) {
    case 0: return {mag, Rational(0)};
    case 1: return {Rational(0), mag};
    case 2: return {-mag, Rational(0)};
    default: return {Rational(0), -mag};
  }
}

GaussianRational fischer_pair(const SpinorPolynomial& u, const SpinorPolynomial& v) {
  require_same_n(u.n(), v.n());
  GaussianRational out;
  const auto& small = u.terms().size() <= v.terms().size() ? u.terms() : v.terms();
  for (const auto& [s, c] : small) {
    const auto cu = u.coefficient(s);
    const auto cv = v.coefficient(s);
    if (cu.is_zero() || cv.is_zero()) continue;
    out += cu.conj() * cv * fischer_weight(s);
  }
  return out;
}

}  // namespace hsc
