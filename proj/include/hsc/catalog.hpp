#pragma once

// Named operators of Hermitian symplectic Clifford analysis on R^{2n}.
//
// Real-coordinate definitions are translated into the internal complex
// coordinates with
//   x_j = (z_j + zb_j)/2,  y_j = (z_j - zb_j)/(2i),
//   dx_j = dz_j + dzb_j,   dy_j = i (dz_j - dzb_j).
// Indices in OperatorName are one-based.

#include <optional>
#include <string>
#include <vector>

#include "hsc/weyl.hpp"

namespace hsc {

enum class OperatorTag {
  Ds,        // symplectic Dirac operator
  Dt,        // twisted symplectic Dirac operator
  Xs,        // dual of Ds
  Xt,        // dual of Dt
  O,         // closing operator of the su(1,2) algebra
  Delta,     // Laplacian on R^{2n}
  Rsq,       // |z|^2
  Euler,     // sum x dx + y dy
  Dz,        // symplectic Dolbeault operators and their duals
  DzDag,
  Xz,
  XzDag,
  XhatZ,     // harmonic-preserving projections of Xz, XzDag
  XhatZDag,
  SpX,       // first sp(2n) realisation, (j,k) in [1,n]^2
  SpY,       // j <= k
  SpZ,       // j <= k
  SpXt,      // second sp(2n) realisation
  SpYt,
  SpZt,
  UnA,       // u(n) realisation, j < k
  UnB,       // (j,j)
  UnC,       // j < k
  CartanH,   // H_j = i B_jj, given as (j,j)
  PosRoot,   // C_jk + i A_jk, j < k
  Su12H1,    // su(1,2) basis images
  Su12H2,
  Su12X1,
  Su12X2,
  Su12X3,
  Su12Y1,
  Su12Y2,
  Su12Y3,
};

struct OperatorName {
  OperatorTag tag;
  std::optional<std::pair<unsigned, unsigned>> indices;

  std::string str() const;
  friend bool operator==(const OperatorName&, const OperatorName&) = default;
};

// Throws IndexOutOfRange when indices are missing, unexpected or outside the
// family's range.
WeylOperator catalog(const OperatorName& name, std::size_t n);
WeylOperator catalog(OperatorTag tag, std::size_t n);
WeylOperator catalog(OperatorTag tag, unsigned j, unsigned k, std::size_t n);

struct NamedOperator {
  OperatorName name;
  WeylOperator op;
};

std::vector<NamedOperator> sp_first_realisation(std::size_t n);
std::vector<NamedOperator> sp_second_realisation(std::size_t n);
// Ordered as A_jk (j<k), B_jj, C_jk (j<k).
std::vector<NamedOperator> un_realisation(std::size_t n);
// H1, H2, X1, X2, X3, Y1, Y2, Y3
std::vector<NamedOperator> su12_images(std::size_t n);

}  // namespace hsc
