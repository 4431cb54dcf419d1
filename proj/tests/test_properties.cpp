// Randomised property checks with fixed seeds.

#include <doctest.h>

#include <random>

#include "hsc/catalog.hpp"
#include "hsc/fischer.hpp"
#include "hsc/linalg.hpp"
#include "hsc/spinor.hpp"

using namespace hsc;

namespace {

GR random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

WeylOperator random_operator(std::size_t n, std::mt19937& rng, int terms = 3) {
  WeylOperator out(n);
  for (int t = 0; t < terms; ++t) {
    WeylMonomial m(n);
    for (int k = 0; k < 3; ++k) m.exp(static_cast<Gen>(rng() % 6), rng() % n) += 1;
    out.add_term(m, random_scalar(rng));
  }
  return out;
}

SpinorPolynomial random_element(const SliceIndex& s, std::mt19937& rng) {
  const auto states = slice_basis(s);
  SpinorPolynomial u(s.n);
  for (const auto& st : states)
    if (rng() % 2) u.add_term(st, random_scalar(rng));
  if (u.is_zero()) u.add_term(states.front(), 1);
  return u;
}

SliceIndex random_slice(std::size_t n, std::mt19937& rng, unsigned max = 2) {
  return {static_cast<unsigned>(n), static_cast<unsigned>(rng() % (max + 1)), static_cast<unsigned>(rng() % (max + 1)),
          static_cast<unsigned>(rng() % (max + 1))};
}

const std::vector<OperatorTag> kNamed{OperatorTag::Ds, OperatorTag::Dt,  OperatorTag::Xs,    OperatorTag::Xt,
                                      OperatorTag::O,  OperatorTag::Dz,  OperatorTag::DzDag, OperatorTag::Xz,
                                      OperatorTag::XzDag, OperatorTag::Delta, OperatorTag::Rsq};

}  // namespace

TEST_CASE("Gaussian rational field laws") {
  std::mt19937 rng(1);
  for (int t = 0; t < 200; ++t) {
    const GR x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(conjugate(x * y) == conjugate(x) * conjugate(y));
    CHECK(conjugate(conjugate(x)) == x);
    if (!x.is_zero()) CHECK(x * invert(x) == GR(1));
    CHECK(GR::parse(x.str()) == x);
  }
}

TEST_CASE("composition is associative and the bracket satisfies Jacobi") {
  std::mt19937 rng(2);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 2;
    const auto a = random_operator(n, rng), b = random_operator(n, rng), c = random_operator(n, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    const WeylOperator jac =
        commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
    CHECK(jac.is_zero());
    CHECK(parse_operator(to_string(a), n) == a);
  }
}

TEST_CASE("the action is a representation") {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const auto a = random_operator(n, rng, 2), b = random_operator(n, rng, 2);
    const SliceIndex s = random_slice(n, rng);
    const auto u = random_element(s, rng), v = random_element(s, rng);
    const GR c = random_scalar(rng);
    CHECK(apply(a, u + v) == apply(a, u) + apply(a, v));
    CHECK(apply(a, c * u) == c * apply(a, u));
    CHECK(apply(a * b, u) == apply(a, apply(b, u)));
    CHECK(apply(a + b, u) == apply(a, u) + apply(b, u));
  }
}

TEST_CASE("matrix_of respects composition") {
  std::mt19937 rng(4);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const auto a = catalog(kNamed[rng() % kNamed.size()], n);
    const auto b = catalog(kNamed[rng() % kNamed.size()], n);
    const auto dom = slice_basis(random_slice(n, rng));
    const OperatorMatrix mb = matrix_of(b, dom);
    const OperatorMatrix ma = matrix_of(a, mb.codomain);
    const OperatorMatrix mab = matrix_of(a * b, dom);
    // align both products on the codomain of ma
    const ExactMatrix prod = ma.matrix * mb.matrix;
    for (std::size_t j = 0; j < dom.size(); ++j) {
      SpinorPolynomial lhs(n), rhs(n);
      for (std::size_t i = 0; i < mab.codomain.size(); ++i) lhs.add_term(mab.codomain[i], mab.matrix.at(i, j));
      for (std::size_t i = 0; i < ma.codomain.size(); ++i) rhs.add_term(ma.codomain[i], prod.at(i, j));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("rank plus nullity equals column count") {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (rng() % 3 == 0) m.set(i, j, random_scalar(rng));
    // force some dependent rows
    if (rows > 2)
      for (std::size_t j = 0; j < cols; ++j) m.set(rows - 1, j, m.at(0, j) + GR(2) * m.at(1, j));
    const auto ns = nullspace(m);
    CHECK(rank(m) + ns.size() == cols);
    for (const auto& v : ns) {
      const Vector mv = m * v;
      for (const auto& x : mv) CHECK(x.is_zero());
    }
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto dom = slice_basis({static_cast<unsigned>(n), 1, 1, 1});
    const auto m = matrix_of(catalog(OperatorTag::Ds, n), dom).matrix;
    CHECK(rank(m) + nullspace(m).size() == dom.size());
  }
}

TEST_CASE("grading shifts and Euler eigenvalues") {
  std::mt19937 rng(6);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng() % 3;
    SliceIndex s = random_slice(n, rng);
    s.a += 1;
    s.b += 1;
    s.r += 1;
    const auto u = random_element(s, rng);
    auto only = [](const SpinorPolynomial& v, Grade g) {
      const auto gr = grade(v);
      return gr.empty() || gr == std::set<Grade>{g};
    };
    CHECK(only(apply(catalog(OperatorTag::Dz, n), u), {s.a - 1, s.b, s.r - 1}));
    CHECK(only(apply(catalog(OperatorTag::DzDag, n), u), {s.a, s.b - 1, s.r + 1}));
    CHECK(only(apply(catalog(OperatorTag::Xz, n), u), {s.a, s.b + 1, s.r - 1}));
    CHECK(only(apply(catalog(OperatorTag::XzDag, n), u), {s.a + 1, s.b, s.r + 1}));
    CHECK(apply(catalog(OperatorTag::Euler, n), u) == GR(static_cast<long>(s.a + s.b)) * u);
  }
}

TEST_CASE("Fischer pairing is Hermitian up to the slice phase and nondegenerate") {
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const SliceIndex s = random_slice(n, rng);
    const auto u = random_element(s, rng), v = random_element(s, rng);
    const GR sign = (s.a + s.b) % 2 == 0 ? GR(1) : GR(-1);
    CHECK(fischer_pair(u, v) == sign * conjugate(fischer_pair(v, u)));
    const auto states = slice_basis(s);
    std::vector<SpinorPolynomial> basis;
    for (const auto& st : states) basis.emplace_back(n, st);
    const ExactMatrix g = gram(basis, basis);
    CHECK(g.is_diagonal());
    CHECK(g.entries().size() == states.size());
  }
}

TEST_CASE("Fischer duals are adjoint with constant -1") {
  std::mt19937 rng(8);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const SliceIndex s = random_slice(n, rng);
    // v in s, u spread over the slices D_s v can reach
    const auto v = random_element(s, rng);
    SpinorPolynomial u(n);
    if (s.a > 0 && s.r > 0) u += random_element({s.n, s.a - 1, s.b, s.r - 1}, rng);
    if (s.b > 0) u += random_element({s.n, s.a, s.b - 1, s.r + 1}, rng);
    if (u.is_zero()) continue;
    const std::vector<std::pair<OperatorTag, OperatorTag>> pairs{{OperatorTag::Ds, OperatorTag::Xs},
                                                                 {OperatorTag::Dt, OperatorTag::Xt}};
    for (const auto& [d, x] : pairs) {
      const GR lhs = fischer_pair(u, apply(catalog(d, n), v));
      const GR rhs = fischer_pair(apply(catalog(x, n), u), v);
      CHECK(lhs == -rhs);
    }
  }
}

TEST_CASE("projected duals commute with u(n) and with each other on harmonics") {
  std::mt19937 rng(9);
  const std::size_t n = 3;
  const auto xh = catalog(OperatorTag::XhatZ, n), xhd = catalog(OperatorTag::XhatZDag, n);
  const auto gens = un_realisation(n);
  const auto delta = catalog(OperatorTag::Delta, n);
  for (int t = 0; t < 6; ++t) {
    const SliceIndex s{3, static_cast<unsigned>(rng() % 2), static_cast<unsigned>(rng() % 2),
                       static_cast<unsigned>(1 + rng() % 2)};
    const VectorBasis h = harmonic_slice_basis(s);
    SpinorPolynomial u(n);
    for (std::size_t i = 0; i < h.dim(); ++i) u += random_scalar(rng) * h.element(i);
    if (u.is_zero()) continue;
    CHECK(apply(delta, apply(xh, u)).is_zero());
    CHECK(apply(delta, apply(xhd, u)).is_zero());
    CHECK(apply(xh, apply(xhd, u)) == apply(xhd, apply(xh, u)));
    for (const auto& g : gens) {
      CHECK(apply(xh, apply(g.op, u)) == apply(g.op, apply(xh, u)));
      CHECK(apply(xhd, apply(g.op, u)) == apply(g.op, apply(xhd, u)));
    }
  }
}
