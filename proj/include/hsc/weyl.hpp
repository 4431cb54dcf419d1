#pragma once

// Normal-ordered operator algebra on the 6n generators
//   z_j, zb_j, q_j  (multiplication)   and   dz_j, dzb_j, dq_j  (derivatives).
// Every operator is stored as a finite sum of monomials with all
// multiplication generators to the left of all derivative generators.

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hsc/exact.hpp"

namespace hsc {

enum class Gen : unsigned char { Z = 0, Zb = 1, Q = 2, Dz = 3, Dzb = 4, Dq = 5 };

// Exponent layout: [z(n), zb(n), q(n), dz(n), dzb(n), dq(n)], so the default
// lexicographic order is the order on (zExp, zbExp, qExp, dzExp, dzbExp, dqExp).
class WeylMonomial {
 public:
  WeylMonomial() = default;
  explicit WeylMonomial(std::size_t n) : n_(n), exps_(6 * n, 0) {}

  std::size_t n() const { return n_; }
  unsigned exp(Gen g, std::size_t j) const { return exps_[block(g) + j]; }
  unsigned& exp(Gen g, std::size_t j) { return exps_[block(g) + j]; }
  std::span<const unsigned> exps() const { return exps_; }

  bool is_constant() const;
  unsigned degree() const;

  friend bool operator==(const WeylMonomial&, const WeylMonomial&) = default;
  friend auto operator<=>(const WeylMonomial& a, const WeylMonomial& b) { return a.exps_ <=> b.exps_; }

 private:
  std::size_t block(Gen g) const { return static_cast<std::size_t>(g) * n_; }
  std::size_t n_ = 0;
  std::vector<unsigned> exps_;
};

class WeylOperator {
 public:
  using TermMap = std::map<WeylMonomial, GaussianRational>;

  WeylOperator() = default;
  explicit WeylOperator(std::size_t n) : n_(n) {}

  static WeylOperator zero(std::size_t n) { return WeylOperator(n); }
  static WeylOperator constant(std::size_t n, const GaussianRational& c);
  static WeylOperator identity(std::size_t n) { return constant(n, 1); }
  // Single generator; j is zero-based.
  static WeylOperator generator(std::size_t n, Gen g, std::size_t j);

  std::size_t n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Adds c * m, dropping the entry if it cancels.
  void add_term(const WeylMonomial& m, const GaussianRational& c);

  WeylOperator operator-() const;
  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  WeylOperator& operator*=(const GaussianRational& c);

  friend bool operator==(const WeylOperator&, const WeylOperator&) = default;

 private:
  std::size_t n_ = 0;
  TermMap terms_;
};

WeylOperator compose(const WeylOperator& a, const WeylOperator& b);
WeylOperator commutator(const WeylOperator& a, const WeylOperator& b);
WeylOperator linear_combine(std::span<const GaussianRational> coeffs, std::span<const WeylOperator> ops);

// A^k, with A^0 the identity.
WeylOperator power(const WeylOperator& a, unsigned k);

inline WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
inline WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
inline WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) { return compose(a, b); }
inline WeylOperator operator*(const GaussianRational& c, WeylOperator a) { return a *= c; }
inline WeylOperator operator*(WeylOperator a, const GaussianRational& c) { return a *= c; }
// A + c means A + c * identity.
WeylOperator operator+(WeylOperator a, const GaussianRational& c);

// Text form, e.g. "(-1)·q1·dz1 + (-1)·dq1·dz1". Terms appear in descending
// monomial order; factors within a term as z, zb, q, dq, dz, dzb.
std::string to_string(const WeylOperator& op);
WeylOperator parse_operator(std::string_view text, std::size_t n);

}  // namespace hsc
