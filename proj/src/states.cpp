#include "parabose/states.hpp"

#include <cmath>
#include <stdexcept>

#include "parabose/algebra.hpp"
#include "parabose/partition.hpp"
#include "parabose/specfun.hpp"

namespace parabose {

Vec gp_coherent_numeric(int N, double gt, Index dim) {
  if (gt < 0) throw std::invalid_argument("gp_coherent_numeric: gt must be >= 0");
  const double needed = 4.0 * (2.0 * gt * gt + 1.0);
  if (double(dim) < needed)
    throw std::invalid_argument(
        "gp_coherent_numeric: dim below leakage guard 4(2 gt^2 + 1)");
  LadderOps ops = ladder_ops(N, dim);
  Propagator prop = make_propagator(ops.A + ops.Adag);
  Vec psi = evolve(prop, basis_vector(dim, 0), gt);
  if (leakage(psi, 4) >= 1e-10)
    throw std::runtime_error("gp_coherent_numeric: leakage gate 1e-10 failed");
  return psi;
}

Vec gp_coherent_closed(double gt, int jmax) {
  if (gt < 0) throw std::invalid_argument("gp_coherent_closed: gt must be >= 0");
  if (double(jmax) < 2.0 * gt * gt + 10.0)
    throw std::invalid_argument(
        "gp_coherent_closed: jmax below guard 2 gt^2 + 10");
  const Index dim = 2 * Index(jmax) + 2;
  Vec psi = Vec::Zero(dim);
  if (gt == 0) {
    psi(0) = 1.0;
    return psi;
  }
  const double larg = std::log(std::sqrt(2.0) * gt);
  const double z = -0.5 * gt * gt;
  for (long j = 0; j <= jmax; ++j) {
    double even_mag =
        std::exp(log_factorial(j) - log_factorial(2 * j) + 2.0 * j * larg);
    psi(2 * j) = even_mag * hyp1f1(j + 1.0, j + 0.5, z).value;
    double odd_mag = std::exp(log_factorial(j) + 0.5 * std::log(j + 1.0) -
                              log_factorial(2 * j + 1) + (2.0 * j + 1.0) * larg);
    psi(2 * j + 1) =
        cdouble(0, -1) * odd_mag * hyp1f1(j + 2.0, j + 1.5, z).value;
  }
  return psi;
}

double mean_n_closed(double gt) {
  if (gt < 0 || gt > 10)
    throw std::invalid_argument("mean_n_closed: gt outside [0, 10]");
  // Published prefactor g^2 t^2 / 2 corrected to g^2 t^2; the exact
  // evolution and the perturbative limit 2 g^2 t^2 both demand it.
  return gt * gt * (1.0 + hyp2f2_1132(-2.0 * gt * gt).value);
}

double mean_n_closed_printed(double gt) {
  if (gt < 0 || gt > 10)
    throw std::invalid_argument("mean_n_closed_printed: gt outside [0, 10]");
  return 0.5 * gt * gt * (1.0 + hyp2f2_1132(-2.0 * gt * gt).value);
}

Vec fg_embed_plus0(const Vec& osc, Index d1, Index d2) {
  Vec out = Vec::Zero(2 * d1 * d2);
  const SubspaceLabel plus0{+1, 0};
  for (Index k = 0; k < osc.size(); ++k) {
    if (osc(k) == cdouble(0, 0)) continue;
    auto [m1, m2] = chain_state(plus0, k);
    if (m1 >= d1 || m2 >= d2)
      throw std::invalid_argument("fg_embed_plus0: dims too small for state");
    out(composite_index(m1, m2, 0, d2)) = osc(k);
  }
  return out;
}

Vec lab_entangled_state(double gt, int jmax, Index d1, Index d2) {
  Vec coeffs = gp_coherent_closed(gt, jmax);
  if (jmax + 1 >= d1 || jmax + 1 >= d2)
    throw std::invalid_argument("lab_entangled_state: dims too small for jmax");
  Vec out = Vec::Zero(2 * d1 * d2);
  for (long j = 0; j <= jmax; ++j) {
    out(composite_index(j, j, 1, d2)) = coeffs(2 * j);          // |j,j,g>
    out(composite_index(j + 1, j, 0, d2)) = coeffs(2 * j + 1);  // |j+1,j,e>
  }
  return out;
}

std::pair<double, double> parity_populations(const Vec& psi) {
  double even = 0, odd = 0;
  for (Index k = 0; k < psi.size(); ++k)
    (k % 2 == 0 ? even : odd) += std::norm(psi(k));
  return {even, odd};
}

TimeSeries sigma_z_lab_from_parity(const TimeSeries& series) {
  Index col = -1;
  for (std::size_t i = 0; i < series.names.size(); ++i)
    if (series.names[i] == "parity") col = Index(i);
  if (col < 0)
    throw std::invalid_argument(
        "sigma_z_lab_from_parity: series has no parity column");
  TimeSeries out = series;
  out.names.push_back("sigma_z_lab");
  out.columns.conservativeResize(Eigen::NoChange, out.columns.cols() + 1);
  out.columns.col(out.columns.cols() - 1) = -series.columns.col(col);
  return out;
}

namespace {

// <alpha| amplitudes, exact truncated overlap (no renormalization).
Vec coherent_overlap_bra(cdouble alpha, Index dim) {
  Vec v(dim);
  const double a2 = std::norm(alpha);
  if (alpha == cdouble(0, 0)) {
    v.setZero();
    v(0) = 1.0;
    return v;
  }
  const double la = std::log(std::abs(alpha));
  const double ph = std::arg(alpha);
  for (Index n = 0; n < dim; ++n) {
    double logmag = -0.5 * a2 + n * la - 0.5 * std::lgamma(double(n) + 1.0);
    v(n) = std::exp(logmag) * std::polar(1.0, ph * double(n));
  }
  return v;
}

QGrid husimi_q_impl(const Mat& rho, double range, Index points, bool parallel) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("husimi_q: rho not square");
  if (range <= 0) throw std::invalid_argument("husimi_q: range must be > 0");
  if (points < 3 || points % 2 == 0)
    throw std::invalid_argument("husimi_q: points must be odd and >= 3");
  QGrid grid;
  grid.range = range;
  grid.points = points;
  grid.values.resize(points, points);
  const double step = 2.0 * range / double(points - 1);
  const Index dim = rho.rows();

#pragma omp parallel for schedule(static) if (parallel)
  for (Index i = 0; i < points; ++i) {
    const double im = -range + step * double(i);
    for (Index j = 0; j < points; ++j) {
      const double re = -range + step * double(j);
      Vec bra = coherent_overlap_bra(cdouble(re, im), dim);
      grid.values(i, j) = (bra.dot(rho * bra)).real() / M_PI;
    }
  }
  return grid;
}

}  // namespace

QGrid husimi_q(const Mat& rho, double range, Index points) {
  return husimi_q_impl(rho, range, points, true);
}

QGrid husimi_q_serial(const Mat& rho, double range, Index points) {
  return husimi_q_impl(rho, range, points, false);
}

double q_integral(const QGrid& grid) {
  const double step = 2.0 * grid.range / double(grid.points - 1);
  return grid.values.sum() * step * step;
}

std::pair<double, double> q_covariance_eigs(const QGrid& grid) {
  const double step = 2.0 * grid.range / double(grid.points - 1);
  double total = 0, mx = 0, my = 0;
  for (Index i = 0; i < grid.points; ++i)
    for (Index j = 0; j < grid.points; ++j) {
      const double w = grid.values(i, j);
      const double y = -grid.range + step * double(i);
      const double x = -grid.range + step * double(j);
      total += w;
      mx += w * x;
      my += w * y;
    }
  mx /= total;
  my /= total;
  double cxx = 0, cyy = 0, cxy = 0;
  for (Index i = 0; i < grid.points; ++i)
    for (Index j = 0; j < grid.points; ++j) {
      const double w = grid.values(i, j);
      const double y = -grid.range + step * double(i) - my;
      const double x = -grid.range + step * double(j) - mx;
      cxx += w * x * x;
      cyy += w * y * y;
      cxy += w * x * y;
    }
  cxx /= total;
  cyy /= total;
  cxy /= total;
  const double tr = cxx + cyy;
  const double disc = std::sqrt((cxx - cyy) * (cxx - cyy) + 4.0 * cxy * cxy);
  return {0.5 * (tr + disc), 0.5 * (tr - disc)};
}

}  // namespace parabose
