#include <doctest.h>

#include "hsc/catalog.hpp"
#include "hsc/errors.hpp"
#include "hsc/spinor.hpp"

using namespace hsc;

TEST_CASE("operator action") {
  const SpinorPolynomial h2(1, state({0}, {0}, {2}));
  SpinorPolynomial expect(1, state({0}, {0}, {3}), Rational(1, 2));
  expect.add_term(state({0}, {0}, {1}), 2);
  CHECK(apply(WeylOperator::generator(1, Gen::Q, 0), h2) == expect);

  CHECK(apply(catalog(OperatorTag::Dz, 3), state({1, 0, 0}, {0, 0, 0}, {0, 0, 1})).is_zero());
  // R raises, L lowers
  const auto L = WeylOperator::generator(2, Gen::Q, 1) + WeylOperator::generator(2, Gen::Dq, 1);
  const auto R = WeylOperator::generator(2, Gen::Q, 1) - WeylOperator::generator(2, Gen::Dq, 1);
  CHECK(apply(R, state({0, 0}, {0, 0}, {1, 3})) == SpinorPolynomial(2, state({0, 0}, {0, 0}, {1, 4})));
  CHECK(apply(L, state({0, 0}, {0, 0}, {1, 3})) == SpinorPolynomial(2, state({0, 0}, {0, 0}, {1, 2}), 6));
  CHECK_THROWS_AS(apply(catalog(OperatorTag::Ds, 2), state({0}, {0}, {0})), DimensionMismatch);
}

TEST_CASE("z-derivatives use falling factorials") {
  const auto dz = WeylOperator::generator(1, Gen::Dz, 0);
  CHECK(apply(dz * dz, state({3}, {1}, {0})) == SpinorPolynomial(1, state({1}, {1}, {0}), 6));
  CHECK(apply(dz, state({0}, {2}, {0})).is_zero());
}

TEST_CASE("slice bases") {
  CHECK(slice_basis({1, 0, 0, 2}).size() == 1);
  CHECK(slice_basis({3, 1, 0, 1}).size() == 9);
  CHECK(slice_basis({3, 0, 0, 3}).size() == 10);
  CHECK(SliceIndex{3, 1, 2, 3}.dimension() == 180);
  const auto b = slice_basis({2, 1, 1, 1});
  CHECK(std::is_sorted(b.begin(), b.end()));
  for (const auto& s : b) {
    CHECK(s.a() == 1);
    CHECK(s.b() == 1);
    CHECK(s.r() == 1);
  }
}

TEST_CASE("grading") {
  CHECK(grade(SpinorPolynomial(1, state({1}, {0}, {0}))) == std::set<Grade>{{1, 0, 0}});
  SpinorPolynomial u(1, state({1}, {0}, {1}));
  u.add_term(state({0}, {1}, {0}), 1);
  CHECK(grade(u) == std::set<Grade>{{1, 0, 1}, {0, 1, 0}});
  CHECK(grade(SpinorPolynomial(1)).empty());
}

TEST_CASE("conjugation as a function") {
  CHECK(conjugate_elem(SpinorPolynomial(1, state({1}, {0}, {0}), GR::i())) ==
        SpinorPolynomial(1, state({0}, {1}, {0}), -GR::i()));
  CHECK(conjugate_elem(SpinorPolynomial(2, state({1, 0}, {0, 1}, {1, 0}))) ==
        SpinorPolynomial(2, state({0, 1}, {1, 0}, {1, 0})));
  const SpinorPolynomial fixed(2, state({1, 1}, {1, 1}, {0, 2}), 5);
  CHECK(conjugate_elem(fixed) == fixed);
}

TEST_CASE("Fischer pairing values") {
  const SpinorPolynomial z1(3, state({1, 0, 0}, {0, 0, 0}, {0, 0, 0}));
  const SpinorPolynomial z2(3, state({0, 1, 0}, {0, 0, 0}, {0, 0, 0}));
  CHECK(fischer_pair(z1, z1) == GR(Rational(0), Rational(2)));
  CHECK(fischer_pair(z1, z2) == GR());
  CHECK(fischer_pair(SpinorPolynomial(1, state({0}, {0}, {1})), SpinorPolynomial(1, state({0}, {0}, {1}))) == GR(2));
  // conjugate-linear on the left
  CHECK(fischer_pair(GR::i() * z1, z1) == -GR::i() * fischer_pair(z1, z1));
  CHECK(fischer_pair(z1, GR::i() * z1) == GR::i() * fischer_pair(z1, z1));
}
