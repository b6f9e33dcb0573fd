#include "parabose/algebra.hpp"

#include <cmath>
#include <stdexcept>

#include "parabose/hilbert.hpp"

namespace parabose {

double deformation_f(int N, int k) {
  if (N < 0 || k < 0) throw std::invalid_argument("deformation_f: negative argument");
  double radicand =
      (2.0 * k + (2.0 * N + 3.0) + (2.0 * N + 1.0) * parity_sign(k)) /
      (2.0 * (k + 1.0));
  return std::sqrt(radicand) * parity_sign(k + N);
}

int order_from_p(int p) {
  if (p < 2 || p % 2 != 0)
    throw std::invalid_argument(
        "order_from_p: only even orders p = 2(N+1) arise here; p=" +
        std::to_string(p) + " rejected");
  return p / 2 - 1;
}

LadderOps ladder_ops(int N, Index dim) {
  if (dim < 2) throw std::invalid_argument("ladder_ops: dim must be >= 2");
  LadderOps ops;
  ops.A = Mat::Zero(dim, dim);
  for (Index k = 0; k + 1 < dim; ++k)
    ops.A(k, k + 1) = std::sqrt(double(k + 1)) * deformation_f(N, int(k));
  ops.Adag = ops.A.adjoint();
  ops.n = number_op(dim);
  ops.parity = parity_op(dim);
  return ops;
}

AlgebraReport verify_algebra(int N, Index dim) {
  if (dim < 4) throw std::invalid_argument("verify_algebra: dim must be >= 4");
  const LadderOps ops = ladder_ops(N, dim);
  const Mat id = Mat::Identity(dim, dim);

  Mat r1 = commutator(ops.A, ops.Adag) - id - (2.0 * N + 1.0) * ops.parity;
  Mat r2 = anticommutator(ops.A, ops.Adag) - 2.0 * ops.n - 2.0 * (N + 1.0) * id;
  Mat r3 = commutator(ops.n, ops.Adag) - ops.Adag;

  const Index m = dim - 2;  // interior block
  AlgebraReport rep;
  rep.N = N;
  rep.p = 2 * (N + 1);
  rep.dim = dim;
  rep.commutator_residual = max_abs(r1.topLeftCorner(m, m));
  rep.anticommutator_residual = max_abs(r2.topLeftCorner(m, m));
  rep.number_commutator_residual = max_abs(r3.topLeftCorner(m, m));
  rep.boundary_rows_excluded = 2;
  return rep;
}

}  // namespace parabose
