#pragma once

#include <Eigen/Dense>
#include <complex>

namespace parabose {

using cdouble = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using Index = Eigen::Index;

// Exact (-1)^k for integer k; never touches floating trigonometry.
inline double parity_sign(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

inline double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }
inline Mat anticommutator(const Mat& a, const Mat& b) { return a * b + b * a; }

inline double hermiticity_residual(const Mat& m) {
  return max_abs(m - m.adjoint());
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Unitary e^{i theta H} for Hermitian H, built from the spectral decomposition.
Mat unitary_exp_i(const Mat& hermitian, double theta);

}  // namespace parabose
