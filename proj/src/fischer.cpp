#include "hsc/fischer.hpp"

#include <algorithm>

#include "hsc/catalog.hpp"
#include "hsc/errors.hpp"

namespace hsc {

bool Weight::dominant() const {
  return std::is_sorted(entries.begin(), entries.end(), [](const Rational& x, const Rational& y) { return x > y; });
}

std::string Weight::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    out += entries[i].str();
  }
  return out + ")";
}

// --- dimension formulas -----------------------------------------------------------

namespace {

Integer as_integer(const Rational& x, const char* what) {
  if (!x.is_integer()) throw InvariantViolation(std::string(what) + " evaluated to a non-integer " + x.str());
  return x.numerator();
}

void require_n_at_least_3(std::size_t n, const char* what) {
  if (n < 3) throw PreconditionViolation(std::string(what) + " requires n >= 3, got n = " + std::to_string(n));
}

void require_b_le_r(unsigned b, unsigned r, const char* what) {
  if (b > r)
    throw PreconditionViolation(std::string(what) + " requires b <= r, got b = " + std::to_string(b) +
                                ", r = " + std::to_string(r));
}

}  // namespace

Integer dim_spinor(std::size_t n, unsigned r) {
  if (n == 0) throw PreconditionViolation("dim_spinor requires n >= 1");
  return binomial(static_cast<long>(n) + r - 1, r);
}

Integer dim_harmonics(std::size_t n, unsigned a, unsigned b) {
  if (n <= 1) throw PreconditionViolation("dim_harmonics requires n >= 2, got n = " + std::to_string(n));
  const long nn = static_cast<long>(n);
  const Rational v = Rational(nn + a + b - 1, nn - 1) * Rational(binomial(a + nn - 2, nn - 2)) *
                     Rational(binomial(b + nn - 2, nn - 2));
  return as_integer(v, "dim_harmonics");
}

Integer dim_monogenics(std::size_t n, unsigned a, unsigned b, unsigned r) {
  require_n_at_least_3(n, "dim_monogenics");
  require_b_le_r(b, r, "dim_monogenics");
  const long nn = static_cast<long>(n);
  // Gamma(m) = (m-1)!
  const Integer num = factorial(a + nn - 3) * factorial(b + nn - 3) * factorial(r + nn - 2) *
                      Integer((a + b + nn - 2) * (a + r + nn - 1) * (static_cast<long>(r) - b + 1));
  const Integer den = factorial(a) * factorial(b) * factorial(r + 1) * factorial(nn - 1) * factorial(nn - 2) *
                      factorial(nn - 3);
  return as_integer(Rational(num, den), "dim_monogenics");
}

// --- kernels -------------------------------------------------------------------

VectorBasis harmonic_slice_basis(const SliceIndex& s) {
  const auto states = slice_basis(s);
  const auto m = matrix_of(catalog(OperatorTag::Delta, s.n), states);
  return {states, nullspace(m.matrix), s};
}

VectorBasis monogenic_basis(const SliceIndex& s) {
  const std::vector<WeylOperator> ops{catalog(OperatorTag::Ds, s.n), catalog(OperatorTag::Dt, s.n)};
  VectorBasis out = stack_and_intersect(ops, slice_basis(s));
  out.slice = s;
  const WeylOperator delta = catalog(OperatorTag::Delta, s.n);
  for (std::size_t i = 0; i < out.dim(); ++i)
    if (!apply(delta, out.element(i)).is_zero())
      throw InvariantViolation("monogenic kernel vector is not harmonic");
  return out;
}

// --- highest weight vectors ------------------------------------------------------

Weight highest_weight(std::size_t n, unsigned a, unsigned b, unsigned r) {
  require_n_at_least_3(n, "highest_weight");
  Weight w;
  w.entries.assign(n, Rational(-1, 2));
  w.entries[0] = Rational(2 * static_cast<long>(a) - 1, 2);
  w.entries[n - 2] = Rational(-2 * static_cast<long>(b) - 1, 2);
  w.entries[n - 1] = Rational(-2 * static_cast<long>(r) - 1, 2);
  return w;
}

SpinorPolynomial hwv(std::size_t n, unsigned a, unsigned b, unsigned r) {
  require_n_at_least_3(n, "hwv");
  require_b_le_r(b, r, "hwv");
  MultiIndex zero(n, 0);
  MultiIndex kappa(n, 0);
  kappa[n - 1] = r - b;
  SpinorPolynomial w(n, state(zero, zero, kappa));

  auto gen = [n](Gen g, std::size_t j) { return WeylOperator::generator(n, g, j); };
  auto raise = [&](std::size_t j) { return gen(Gen::Q, j) - gen(Gen::Dq, j); };
  const WeylOperator step = gen(Gen::Zb, n - 2) * raise(n - 1) - gen(Gen::Zb, n - 1) * raise(n - 2);
  for (unsigned i = 0; i < b; ++i) w = apply(step, w);
  return apply(power(gen(Gen::Z, 0), a), w);
}

HwvReport verify_hwv(std::size_t n, unsigned a, unsigned b, unsigned r) {
  const SpinorPolynomial w = hwv(n, a, b, r);
  HwvReport rep;
  rep.n = n;
  rep.a = a;
  rep.b = b;
  rep.r = r;
  rep.dz_ok = apply(catalog(OperatorTag::Dz, n), w).is_zero();
  rep.dz_dagger_ok = apply(catalog(OperatorTag::DzDag, n), w).is_zero();
  rep.roots_ok = true;
  for (unsigned j = 1; j <= n; ++j)
    for (unsigned k = j + 1; k <= n; ++k)
      if (!apply(catalog(OperatorTag::PosRoot, j, k, n), w).is_zero()) {
        rep.roots_ok = false;
        rep.failing_roots.emplace_back(j, k);
      }
  rep.expected = highest_weight(n, a, b, r);
  rep.cartan_ok = !w.is_zero();
  const auto& [s0, c0] = *w.terms().begin();
  for (unsigned j = 1; j <= n; ++j) {
    const SpinorPolynomial hw = apply(catalog(OperatorTag::CartanH, j, j, n), w);
    const GaussianRational lambda = hw.coefficient(s0) / c0;
    std::optional<Rational> ev;
    if (lambda.is_real() && hw == lambda * w) ev = lambda.re();
    rep.cartan_ok = rep.cartan_ok && ev && *ev == rep.expected.entries[j - 1];
    rep.eigenvalues.push_back(ev);
  }
  return rep;
}

SpinorPolynomial holomorphic_solution(std::size_t n, const MultiIndex& alpha) {
  if (alpha.size() != n) throw DimensionMismatch("multi-index length differs from n");
  const MultiIndex zero(n, 0);
  return SpinorPolynomial(n, state(alpha, zero, zero));
}

// --- embeddings -------------------------------------------------------------------

namespace {

void require_harmonic(const SpinorPolynomial& u) {
  if (!apply(catalog(OperatorTag::Delta, u.n()), u).is_zero())
    throw PreconditionViolation("input is not harmonic (Delta u != 0)");
}

}  // namespace

SpinorPolynomial embed_xhat(const SpinorPolynomial& u) {
  require_harmonic(u);
  return apply(catalog(OperatorTag::XhatZ, u.n()), u);
}

SpinorPolynomial embed_xhat_dagger(const SpinorPolynomial& u) {
  require_harmonic(u);
  return apply(catalog(OperatorTag::XhatZDag, u.n()), u);
}

Embedding embed_I(unsigned k, unsigned l, const VectorBasis& basis) {
  if (!basis.slice) throw PreconditionViolation("embed_I needs a basis tied to a slice");
  const SliceIndex& src = *basis.slice;
  if (src.r + l < k) throw PreconditionViolation("embedding would lower the spinor grade below zero");
  const SliceIndex target{src.n, src.a + l, src.b + k, src.r + l - k};
  const WeylOperator xhat = catalog(OperatorTag::XhatZ, src.n);
  const WeylOperator xhat_dag = catalog(OperatorTag::XhatZDag, src.n);
  const WeylOperator delta = catalog(OperatorTag::Delta, src.n);

  Embedding out;
  out.image.states = slice_basis(target);
  out.image.slice = target;
  for (std::size_t v = 0; v < basis.dim(); ++v) {
    SpinorPolynomial u = basis.element(v);
    if (!apply(delta, u).is_zero()) throw PreconditionViolation("embed_I input vector is not harmonic");
    for (unsigned i = 0; i < l; ++i) u = apply(xhat_dag, u);
    for (unsigned i = 0; i < k; ++i) u = apply(xhat, u);
    out.image.vectors.push_back(coordinates(u, out.image.states));
  }
  out.independent = rank(out.image.vectors) == out.image.vectors.size();
  return out;
}

// --- decomposition ----------------------------------------------------------------

std::vector<SummandDescriptor> predicted_summands(std::size_t n, unsigned a, unsigned b, unsigned r) {
  require_n_at_least_3(n, "predicted_summands");
  std::vector<SummandDescriptor> out;
  for (unsigned j = 0; j <= a; ++j)
    for (unsigned i = 0; i <= b && i + j <= r; ++i) {
      SummandDescriptor d;
      d.i = i;
      d.j = j;
      d.source = {static_cast<unsigned>(n), a - j, i, b + r - i - j};
      d.k = b - i;
      d.l = j;
      d.weight = highest_weight(n, d.source.a, d.source.b, d.source.r);
      d.predicted_dim = dim_monogenics(n, d.source.a, d.source.b, d.source.r);
      out.push_back(std::move(d));
    }
  return out;
}

DecompositionReport decompose(const SliceIndex& s) {
  require_n_at_least_3(s.n, "decompose");
  DecompositionReport rep;
  rep.slice = s;
  rep.harmonic_dim = harmonic_slice_basis(s).dim();

  const auto target_states = slice_basis(s);
  const VectorBasis monogenics = monogenic_basis(s);
  const auto mono_elems = monogenics.elements();
  const WeylOperator delta = catalog(OperatorTag::Delta, s.n);

  rep.dims_ok = rep.harmonic_ok = rep.orthogonality_ok = true;
  std::vector<Vector> all;
  for (auto& d : predicted_summands(s.n, s.a, s.b, s.r)) {
    SummandResult res;
    const VectorBasis src = monogenic_basis(d.source);
    res.computed_dim = src.dim();
    Embedding e = embed_I(d.k, d.l, src);
    res.independent = e.independent;
    const auto images = e.image.elements();
    res.harmonic = std::all_of(images.begin(), images.end(), [&](const auto& u) { return apply(delta, u).is_zero(); });
    if (d.k != 0 || d.l != 0) res.orthogonal = gram(images, mono_elems).is_zero();
    rep.dims_ok = rep.dims_ok && Integer(static_cast<unsigned long>(res.computed_dim)) == d.predicted_dim;
    rep.harmonic_ok = rep.harmonic_ok && res.harmonic;
    rep.orthogonality_ok = rep.orthogonality_ok && res.orthogonal;
    all.insert(all.end(), e.image.vectors.begin(), e.image.vectors.end());
    res.embedded = std::move(e.image);
    res.descriptor = std::move(d);
    rep.summands.push_back(std::move(res));
  }
  rep.total_embedded = all.size();
  rep.completeness_rank = rank(all);
  rep.count_ok = rep.total_embedded == rep.harmonic_dim;
  rep.full_rank = rep.completeness_rank == rep.total_embedded;
  return rep;
}

SumIdentityReport sum_dims_identity_check(std::size_t n, unsigned a, unsigned b, unsigned r) {
  require_n_at_least_3(n, "sum_dims_identity_check");
  require_b_le_r(b, r, "sum_dims_identity_check");
  SumIdentityReport rep;
  rep.lhs = 0;
  for (const auto& d : predicted_summands(n, a, b, r)) rep.lhs += d.predicted_dim;
  rep.rhs = dim_harmonics(n, a, b) * dim_spinor(n, r);

  const long nn = static_cast<long>(n);
  auto closed_form = [&](long factor) {
    return Rational(binomial(r + nn - 1, nn - 1)) * Rational(factor) *
           Rational(factorial(a + nn - 2) * factorial(b + nn - 2),
                    factorial(nn - 1) * factorial(nn - 2) * factorial(a) * factorial(b));
  };
  const Rational corrected = closed_form(a + b + nn - 1);
  rep.rhs_alt = closed_form(a + 2 * nn - 1);
  rep.holds = rep.lhs == rep.rhs && corrected == Rational(rep.rhs);
  rep.alt_consistent = rep.rhs_alt == Rational(rep.lhs);
  return rep;
}

}  // namespace hsc
