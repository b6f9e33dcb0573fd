#pragma once

#include "parabose/linalg.hpp"

// Deformed ladder operators A = f_N(n) a, A† = a† f_N(n) realizing the
// even-order para-Bose algebra of order p = 2(N+1):
//   [A, A†] = 1 + (2N+1) Π,   {A, A†} = 2n + 2(N+1),   [n, A†] = A†.

namespace parabose {

// f_N(k) = sqrt[(2k + (2N+3) + (2N+1)(-1)^k) / (2(k+1))] * (-1)^{k+N}.
// The radicand is always nonnegative; the result is real.
double deformation_f(int N, int k);

// Recover N from an even order p = 2(N+1); odd or nonpositive p is rejected
// (this construction never yields ordinary bosons, which have p = 1).
int order_from_p(int p);

struct LadderOps {
  Mat A, Adag, n, parity;
};

// Matrix ladder operators on the truncated number basis.  Adag is the exact
// conjugate transpose of A.
LadderOps ladder_ops(int N, Index dim);

struct AlgebraReport {
  int N = 0;
  int p = 0;
  Index dim = 0;
  double commutator_residual = 0;         // [A,A†] - 1 - (2N+1)Π
  double anticommutator_residual = 0;     // {A,A†} - 2n - 2(N+1)
  double number_commutator_residual = 0;  // [n,A†] - A†
  int boundary_rows_excluded = 0;
};

// Max-abs residuals of the three defining relations, restricted to the
// interior rows/columns (index < dim-2).  The truncated A† maps the top
// level out of the space; that boundary residue is excluded and the
// exclusion count reported, never hidden.
AlgebraReport verify_algebra(int N, Index dim);

}  // namespace parabose
