#include "parabose/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace parabose {

namespace {

// Above this size LAPACK's divide-and-conquer driver beats Eigen's
// tridiagonal QL by a wide margin.
constexpr Index kLapackThreshold = 512;

}  // namespace

Propagator make_propagator(const Mat& H) {
  if (H.rows() != H.cols())
    throw std::invalid_argument("make_propagator: matrix not square");
  if (hermiticity_residual(H) > 1e-10)
    throw std::invalid_argument("make_propagator: matrix not Hermitian");

  Propagator prop;
  const Index n = H.rows();
  if (n >= kLapackThreshold) {
    prop.eigenvectors = 0.5 * (H + H.adjoint());
    prop.eigenvalues.resize(n);
    lapack_int info = LAPACKE_zheevd(
        LAPACK_COL_MAJOR, 'V', 'L', lapack_int(n), prop.eigenvectors.data(),
        lapack_int(n), prop.eigenvalues.data());
    if (info != 0)
      throw std::runtime_error("make_propagator: zheevd failed, info=" +
                               std::to_string(info));
  } else {
    Eigen::SelfAdjointEigenSolver<Mat> es(H);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("make_propagator: eigensolver failed");
    prop.eigenvalues = es.eigenvalues();
    prop.eigenvectors = es.eigenvectors();
  }
  return prop;
}

Vec evolve(const Propagator& prop, const Vec& psi0, double t) {
  if (psi0.size() != prop.eigenvectors.rows())
    throw std::invalid_argument("evolve: dimension mismatch");
  Vec c = prop.eigenvectors.adjoint() * psi0;
  for (Index i = 0; i < c.size(); ++i)
    c(i) *= std::polar(1.0, -prop.eigenvalues(i) * t);
  return prop.eigenvectors * c;
}

namespace {

TimeSeries evolve_series_impl(const Propagator& prop, const Vec& psi0,
                              const RVec& times, const NamedOps& observables,
                              bool parallel) {
  const Index n = psi0.size();
  if (n != prop.eigenvectors.rows())
    throw std::invalid_argument("evolve_series: dimension mismatch");
  for (const auto& [name, op] : observables)
    if (op.rows() != n || op.cols() != n)
      throw std::invalid_argument("evolve_series: observable '" + name +
                                  "' dimension mismatch");
  for (Index i = 1; i < times.size(); ++i)
    if (!(times(i) > times(i - 1)))
      throw std::invalid_argument("evolve_series: times not strictly increasing");

  // Expectation of a diagonal observable needs no matrix-vector product.
  std::vector<bool> diagonal(observables.size());
  for (std::size_t o = 0; o < observables.size(); ++o) {
    const Mat& op = observables[o].second;
    diagonal[o] = max_abs(op - Mat(op.diagonal().asDiagonal())) == 0.0;
  }

  TimeSeries ts;
  ts.times = times;
  for (const auto& [name, op] : observables) ts.names.push_back(name);
  ts.columns.resize(times.size(), Index(observables.size()));

  const Vec c0 = prop.eigenvectors.adjoint() * psi0;
  double max_imag = 0;

#pragma omp parallel for schedule(static) reduction(max : max_imag) \
    if (parallel)
  for (Index i = 0; i < times.size(); ++i) {
    Vec c(c0.size());
    for (Index k = 0; k < c0.size(); ++k)
      c(k) = c0(k) * std::polar(1.0, -prop.eigenvalues(k) * times(i));
    Vec psi = prop.eigenvectors * c;
    for (std::size_t o = 0; o < observables.size(); ++o) {
      const Mat& op = observables[o].second;
      cdouble val = diagonal[o]
                        ? cdouble(psi.cwiseAbs2().dot(op.diagonal().real()), 0)
                        : cdouble(psi.dot(op * psi));
      max_imag = std::max(max_imag, std::abs(val.imag()));
      ts.columns(i, Index(o)) = val.real();
    }
  }

  if (max_imag >= 1e-8)
    throw std::runtime_error(
        "evolve_series: observable imaginary part above 1e-8");
  return ts;
}

}  // namespace

TimeSeries evolve_series(const Propagator& prop, const Vec& psi0,
                         const RVec& times, const NamedOps& observables) {
  return evolve_series_impl(prop, psi0, times, observables, true);
}

TimeSeries evolve_series_serial(const Propagator& prop, const Vec& psi0,
                                const RVec& times, const NamedOps& observables) {
  return evolve_series_impl(prop, psi0, times, observables, false);
}

double leakage(const Vec& psi, Index guard) {
  if (guard >= psi.size())
    throw std::invalid_argument("leakage: guard must be < dim");
  double total = 0;
  for (Index k = psi.size() - guard; k < psi.size(); ++k)
    total += std::norm(psi(k));
  return total;
}

double leakage_composite(const Vec& psi, Index d1, Index d2, Index guard) {
  if (psi.size() != 2 * d1 * d2)
    throw std::invalid_argument("leakage_composite: dimension mismatch");
  if (guard >= d1 || guard >= d2)
    throw std::invalid_argument("leakage_composite: guard must be < dims");
  double l1 = 0, l2 = 0;
  for (Index n1 = 0; n1 < d1; ++n1)
    for (Index n2 = 0; n2 < d2; ++n2)
      for (Index s = 0; s < 2; ++s) {
        double pop = std::norm(psi((n1 * d2 + n2) * 2 + s));
        if (n1 >= d1 - guard) l1 += pop;
        if (n2 >= d2 - guard) l2 += pop;
      }
  return std::max(l1, l2);
}

}  // namespace parabose
