#pragma once

// P(R^{2n}, C) (x) S^inf realised as finite sums of basis states
//   z^alpha zb^beta (x) h_kappa,   h_kappa(q) = prod_j H_{kappa_j}(q_j) e^{-|q|^2/2},
// with H_k the physicists' Hermite polynomials.

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "hsc/exact.hpp"
#include "hsc/weyl.hpp"

namespace hsc {

using MultiIndex = std::vector<unsigned>;

unsigned total(const MultiIndex& m);

struct BasisState {
  MultiIndex alpha;  // exponents of z
  MultiIndex beta;   // exponents of zb
  MultiIndex kappa;  // Hermite degrees

  std::size_t n() const { return alpha.size(); }
  unsigned a() const { return total(alpha); }
  unsigned b() const { return total(beta); }
  unsigned r() const { return total(kappa); }

  friend bool operator==(const BasisState&, const BasisState&) = default;
  friend auto operator<=>(const BasisState&, const BasisState&) = default;
};

struct SliceIndex {
  unsigned n = 1;
  unsigned a = 0;
  unsigned b = 0;
  unsigned r = 0;

  // C(a+n-1, n-1) C(b+n-1, n-1) C(r+n-1, n-1)
  Integer dimension() const;
  friend bool operator==(const SliceIndex&, const SliceIndex&) = default;
};

struct Grade {
  unsigned a = 0;
  unsigned b = 0;
  unsigned r = 0;
  friend auto operator<=>(const Grade&, const Grade&) = default;
};

class SpinorPolynomial {
 public:
  using TermMap = std::map<BasisState, GaussianRational>;

  SpinorPolynomial() = default;
  explicit SpinorPolynomial(std::size_t n) : n_(n) {}
  SpinorPolynomial(std::size_t n, const BasisState& s, const GaussianRational& c = 1);

  std::size_t n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coefficient(const BasisState& s) const;

  void add_term(const BasisState& s, const GaussianRational& c);

  SpinorPolynomial operator-() const;
  SpinorPolynomial& operator+=(const SpinorPolynomial& o);
  SpinorPolynomial& operator-=(const SpinorPolynomial& o);
  SpinorPolynomial& operator*=(const GaussianRational& c);

  friend SpinorPolynomial operator+(SpinorPolynomial a, const SpinorPolynomial& b) { return a += b; }
  friend SpinorPolynomial operator-(SpinorPolynomial a, const SpinorPolynomial& b) { return a -= b; }
  friend SpinorPolynomial operator*(const GaussianRational& c, SpinorPolynomial a) { return a *= c; }

  friend bool operator==(const SpinorPolynomial&, const SpinorPolynomial&) = default;

 private:
  std::size_t n_ = 0;
  TermMap terms_;
};

// Convenience constructor for z^alpha zb^beta (x) h_kappa.
BasisState state(MultiIndex alpha, MultiIndex beta, MultiIndex kappa);

SpinorPolynomial apply(const WeylOperator& op, const SpinorPolynomial& u);
SpinorPolynomial apply(const WeylOperator& op, const BasisState& s);

// All states with |alpha| = a, |beta| = b, |kappa| = r in lexicographic order.
std::vector<BasisState> slice_basis(const SliceIndex& s);

std::set<Grade> grade(const SpinorPolynomial& u);

// Complex conjugate as a function: coefficients conjugated, alpha and beta
// swapped, kappa unchanged.
SpinorPolynomial conjugate_elem(const SpinorPolynomial& u);

// Fischer pairing, conjugate-linear in the left argument. Diagonal on basis
// states with weight 2^{|a|+|b|} i^{|a|-|b|} a! b! prod_j 2^{k_j} k_j!
// (the global sqrt(pi)^n of the Hermite integral is dropped).
GaussianRational fischer_weight(const BasisState& s);
GaussianRational fischer_pair(const SpinorPolynomial& u, const SpinorPolynomial& v);

}  // namespace hsc
