#include "parabose/hilbert.hpp"

#include <cmath>
#include <stdexcept>

namespace parabose {

Mat annihilation(Index dim) {
  if (dim < 2) throw std::invalid_argument("annihilation: dim must be >= 2");
  Mat a = Mat::Zero(dim, dim);
  for (Index n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

Mat creation(Index dim) { return annihilation(dim).adjoint(); }

Mat number_op(Index dim) {
  Mat n = Mat::Zero(dim, dim);
  for (Index k = 0; k < dim; ++k) n(k, k) = double(k);
  return n;
}

Mat parity_op(Index dim) {
  Mat p = Mat::Zero(dim, dim);
  for (Index k = 0; k < dim; ++k) p(k, k) = parity_sign(k);
  return p;
}

Mat sigma_z() {
  Mat s(2, 2);
  s << 1, 0, 0, -1;
  return s;
}

Mat sigma_y() {
  Mat s(2, 2);
  s << 0, cdouble(0, -1), cdouble(0, 1), 0;
  return s;
}

Mat sigma_plus() {
  Mat s = Mat::Zero(2, 2);
  s(0, 1) = 1;
  return s;
}

Mat sigma_minus() { return sigma_plus().adjoint(); }

Mat tensor(const std::vector<Mat>& ops) {
  if (ops.empty()) throw std::invalid_argument("tensor: empty operator list");
  Mat out = ops.front();
  for (std::size_t i = 1; i < ops.size(); ++i) out = kron(out, ops[i]);
  return out;
}

Mat embed_mode1(const Mat& op, Index d2) {
  return kron(op, Mat::Identity(2 * d2, 2 * d2));
}

Mat embed_mode2(const Mat& op, Index d1) {
  return kron(Mat::Identity(d1, d1), kron(op, Mat::Identity(2, 2)));
}

Mat embed_qubit(const Mat& op, Index d1, Index d2) {
  return kron(Mat::Identity(d1 * d2, d1 * d2), op);
}

Mat embed_two_mode(const Mat& op) {
  return kron(op, Mat::Identity(2, 2));
}

Vec basis_vector(Index dim, Index k) {
  if (k < 0 || k >= dim) throw std::invalid_argument("basis_vector: index out of range");
  Vec v = Vec::Zero(dim);
  v(k) = 1.0;
  return v;
}

Vec composite_basis(Index n1, Index n2, Index s, Index d1, Index d2) {
  return basis_vector(2 * d1 * d2, composite_index(n1, n2, s, d2));
}

Vec coherent_state(cdouble alpha, Index dim) {
  if (dim < 1) throw std::invalid_argument("coherent_state: dim must be >= 1");
  Vec v = Vec::Zero(dim);
  if (alpha == cdouble(0, 0)) {
    v(0) = 1.0;
    return v;
  }
  // amplitudes alpha^n / sqrt(n!), assembled in log space
  const double la = std::log(std::abs(alpha));
  const double ph = std::arg(alpha);
  for (Index n = 0; n < dim; ++n) {
    double logmag = n * la - 0.5 * std::lgamma(double(n) + 1.0);
    v(n) = std::exp(logmag) * std::polar(1.0, ph * double(n));
  }
  v /= v.norm();  // absorbs e^{-|alpha|^2/2} and the truncation loss
  return v;
}

cdouble expectation(const Mat& op, const Vec& psi) {
  if (op.rows() != psi.size() || op.cols() != psi.size())
    throw std::invalid_argument("expectation: dimension mismatch");
  return psi.dot(op * psi);  // Eigen's dot conjugates the left argument
}

Mat dyad(const Vec& psi) { return psi * psi.adjoint(); }

Mat partial_trace_first_mode(const Mat& rho, Index d1, Index d2, Index dq) {
  const Index d = d1 * d2 * dq;
  if (rho.rows() != d || rho.cols() != d)
    throw std::invalid_argument("partial_trace_first_mode: dimension mismatch");
  Mat out = Mat::Zero(d1, d1);
  for (Index m = 0; m < d1; ++m)
    for (Index n = 0; n < d1; ++n) {
      cdouble acc = 0.0;
      for (Index k2 = 0; k2 < d2; ++k2)
        for (Index q = 0; q < dq; ++q)
          acc += rho((m * d2 + k2) * dq + q, (n * d2 + k2) * dq + q);
      out(m, n) = acc;
    }
  return out;
}

Mat unitary_exp_i(const Mat& hermitian, double theta) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian);
  const RVec& ev = es.eigenvalues();
  Vec phases(ev.size());
  for (Index i = 0; i < ev.size(); ++i)
    phases(i) = std::polar(1.0, theta * ev(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace parabose
