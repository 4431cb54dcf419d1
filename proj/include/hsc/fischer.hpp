#pragma once

// Symplectic Hermitian Fischer decomposition of S^inf_(r)-valued harmonics
// into h-monogenic pieces, on graded slices P_{a,b} (x) S^inf_(r).

#include <optional>
#include <string>
#include <vector>

#include "hsc/exact.hpp"
#include "hsc/linalg.hpp"
#include "hsc/spinor.hpp"

namespace hsc {

struct Weight {
  std::vector<Rational> entries;

  bool dominant() const;  // non-increasing
  std::string str() const;  // "(1/2, -1/2, -3/2)"
  friend bool operator==(const Weight&, const Weight&) = default;
};

Integer dim_spinor(std::size_t n, unsigned r);
Integer dim_harmonics(std::size_t n, unsigned a, unsigned b);
Integer dim_monogenics(std::size_t n, unsigned a, unsigned b, unsigned r);

// ker(Delta) on the slice.
VectorBasis harmonic_slice_basis(const SliceIndex& s);
// ker(Ds) ∩ ker(Dt) on the slice. Every vector is checked against Delta.
VectorBasis monogenic_basis(const SliceIndex& s);

// (a-1/2, -1/2, ..., -1/2, -b-1/2, -r-1/2)
Weight highest_weight(std::size_t n, unsigned a, unsigned b, unsigned r);

// z_1^a (zb_{n-1} R_n - zb_n R_{n-1})^b h_{(0,...,0,r-b)}
SpinorPolynomial hwv(std::size_t n, unsigned a, unsigned b, unsigned r);

struct HwvReport {
  std::size_t n = 0;
  unsigned a = 0, b = 0, r = 0;
  bool dz_ok = false;
  bool dz_dagger_ok = false;
  bool roots_ok = false;
  std::vector<std::pair<unsigned, unsigned>> failing_roots;  // one-based
  Weight expected;
  // eigenvalue of H_j, or nullopt when w is not an eigenvector
  std::vector<std::optional<Rational>> eigenvalues;
  bool cartan_ok = false;

  bool pass() const { return dz_ok && dz_dagger_ok && roots_ok && cartan_ok; }
};

HwvReport verify_hwv(std::size_t n, unsigned a, unsigned b, unsigned r);

SpinorPolynomial holomorphic_solution(std::size_t n, const MultiIndex& alpha);

// Rescaled duals; throw PreconditionViolation unless Delta u = 0.
SpinorPolynomial embed_xhat(const SpinorPolynomial& u);
SpinorPolynomial embed_xhat_dagger(const SpinorPolynomial& u);

struct Embedding {
  VectorBasis image;  // coordinates over slice_basis of the target slice
  bool independent = false;
};

// I_{k,l} = Xhat^k (Xhat^dag)^l on every vector of `basis`, sending slice
// (a,b,r) to (a+l, b+k, r-k+l). `basis.slice` must be set.
Embedding embed_I(unsigned k, unsigned l, const VectorBasis& basis);

struct SummandDescriptor {
  unsigned i = 0;
  unsigned j = 0;
  SliceIndex source;  // (a-j, i, b+r-i-j)
  unsigned k = 0;     // b-i
  unsigned l = 0;     // j
  Weight weight;
  Integer predicted_dim;
};

// Ordered by j, then i.
std::vector<SummandDescriptor> predicted_summands(std::size_t n, unsigned a, unsigned b, unsigned r);

struct SummandResult {
  SummandDescriptor descriptor;
  std::size_t computed_dim = 0;
  bool independent = false;
  bool harmonic = false;
  bool orthogonal = true;  // vacuous for (k,l) = (0,0)
  VectorBasis embedded;
};

struct DecompositionReport {
  SliceIndex slice;
  std::size_t harmonic_dim = 0;
  std::vector<SummandResult> summands;
  std::size_t total_embedded = 0;
  std::size_t completeness_rank = 0;

  bool dims_ok = false;          // every computed source dim equals its prediction
  bool count_ok = false;         // total embedded count equals harmonic_dim
  bool full_rank = false;        // concatenated family is independent
  bool orthogonality_ok = false;
  bool harmonic_ok = false;      // every image lies in ker(Delta)

  bool complete() const {
    return completeness_rank == harmonic_dim && total_embedded == harmonic_dim;
  }
  bool all_pass() const {
    return dims_ok && count_ok && full_rank && orthogonality_ok && harmonic_ok && complete();
  }
};

DecompositionReport decompose(const SliceIndex& s);

struct SumIdentityReport {
  Integer lhs;                // sum of predicted source dims
  Integer rhs;                // dim_harmonics * dim_spinor
  Rational rhs_alt;           // same closed form with (a+2n-1) in place of (a+b+n-1)
  bool holds = false;         // lhs == rhs, and rhs agrees with its closed form
  bool alt_consistent = false;
};

SumIdentityReport sum_dims_identity_check(std::size_t n, unsigned a, unsigned b, unsigned r);

}  // namespace hsc
