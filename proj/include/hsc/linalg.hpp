#pragma once

// Exact sparse linear algebra over Q(i).

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hsc/exact.hpp"
#include "hsc/spinor.hpp"
#include "hsc/weyl.hpp"

namespace hsc {

using Vector = std::vector<GaussianRational>;

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::map<std::pair<std::size_t, std::size_t>, GaussianRational>& entries() const { return entries_; }

  GaussianRational at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const GaussianRational& v);
  void add(std::size_t i, std::size_t j, const GaussianRational& v);

  bool is_zero() const { return entries_.empty(); }
  bool is_diagonal() const;

  Vector operator*(const Vector& v) const;
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  void check(std::size_t i, std::size_t j) const;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, GaussianRational> entries_;
};

// Coefficient vectors over an ordered list of basis states.
struct VectorBasis {
  std::vector<BasisState> states;
  std::vector<Vector> vectors;
  std::optional<SliceIndex> slice;

  std::size_t dim() const { return vectors.size(); }
  std::size_t n() const;
  SpinorPolynomial element(std::size_t i) const;
  std::vector<SpinorPolynomial> elements() const;
};

// Coordinates of u over `states`; throws PreconditionViolation when u has
// support outside them.
Vector coordinates(const SpinorPolynomial& u, const std::vector<BasisState>& states);
SpinorPolynomial from_coordinates(std::size_t n, const Vector& v, const std::vector<BasisState>& states);

struct OperatorMatrix {
  ExactMatrix matrix;
  std::vector<BasisState> codomain;
};

OperatorMatrix matrix_of(const WeylOperator& op, const std::vector<BasisState>& domain);

// Reduced row echelon form and rank.
struct Echelon {
  // rows of the RREF; row i has its leading 1 in column pivots[i]
  std::vector<std::vector<std::pair<std::size_t, GaussianRational>>> rows;
  std::vector<std::size_t> pivots;
};
Echelon rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);
// Rank of a family of coordinate vectors (all of the same length).
std::size_t rank(const std::vector<Vector>& vectors);

// Reduced-echelon basis of {v : M v = 0}. The result is verified against M.
std::vector<Vector> nullspace(const ExactMatrix& m);

// Some solution of M c = b, if one exists.
std::optional<Vector> solve(const ExactMatrix& m, const Vector& b);

// Simultaneous kernel of several operators on span(domain).
VectorBasis stack_and_intersect(const std::vector<WeylOperator>& ops, const std::vector<BasisState>& domain);

// G[i][j] = <U_i, V_j> under the Fischer pairing.
ExactMatrix gram(const VectorBasis& u, const VectorBasis& v);
ExactMatrix gram(const std::vector<SpinorPolynomial>& u, const std::vector<SpinorPolynomial>& v);

}  // namespace hsc
