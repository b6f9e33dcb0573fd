#pragma once

#include "parabose/dynamics.hpp"
#include "parabose/frames.hpp"

// Para-Bose analogs of Gilmore-Perelomov coherent states (numeric and
// closed form), their laboratory-frame entangled expansion, and Husimi Q
// phase-space grids.

namespace parabose {

// Pure-pumping evolution e^{-i g(A†+A) t} of the order-2(N+1) vacuum,
// computed spectrally on the para-Bose number basis.  Requires
// dim >= 4(2 gt^2 + 1) and enforces a 1e-10 leakage gate.
Vec gp_coherent_numeric(int N, double gt, Index dim);

// The N=0 closed-form expansion: amplitudes
//   even k=2j:  (j!/(2j)!) (sqrt2 gt)^{2j} 1F1(j+1, j+1/2; -g^2 t^2 / 2)
//   odd  k=2j+1: -i (j! sqrt(j+1)/(2j+1)!) (sqrt2 gt)^{2j+1}
//                  1F1(j+2, j+3/2; -g^2 t^2 / 2)
// Coefficients assembled in log space.  Matches the numeric evolution
// verbatim; no rescaling is needed.
Vec gp_coherent_closed(double gt, int jmax);

// Closed-form <n> of the N=0 coherent state.  The published prefactor
// g^2 t^2 / 2 disagrees with both the exact evolution and the second-order
// perturbative limit 2 g^2 t^2 by a factor of two; mean_n_closed carries
// the corrected prefactor
//   <n> = g^2 t^2 [ 1 + 2F2(1,1; 3/2, 2; -2 g^2 t^2) ]
// and mean_n_closed_printed keeps the literal form for comparison.
double mean_n_closed(double gt);
double mean_n_closed_printed(double gt);

// Embed an oscillator-frame (+,0)-sector state into the composite space as
// sum_k c_k |chain(k)> (x) |e>  (the Fulton-Gouterman frame state).
Vec fg_embed_plus0(const Vec& osc, Index d1, Index d2);

// The entangled expansion one rotation short of the laboratory frame:
// |+,0;beta>_cc = e^{-i pi/4 sigma2} U_FG† (|+,0;beta> (x) |e>), built from
// the closed-form coefficients: even weight on |j,j,g>, odd on |j+1,j,e>.
Vec lab_entangled_state(double gt, int jmax, Index d1, Index d2);

// Population split of an oscillator state into even / odd number sectors.
std::pair<double, double> parity_populations(const Vec& psi);

// Append a "sigma_z_lab" column equal to the negated "parity" column
// (the population inversion maps onto oscillator parity); a series without
// a parity column is rejected.
TimeSeries sigma_z_lab_from_parity(const TimeSeries& series);

struct QGrid {
  double range = 0;     // Re alpha, Im alpha in [-range, range]
  Index points = 0;     // per axis, odd
  RMat values;          // row i: Im alpha; column j: Re alpha
};

// Q(alpha) = <alpha|rho|alpha> / pi on the square grid.  Grid points are
// independent and evaluated in parallel; husimi_q_serial is the
// bit-identical reference.
QGrid husimi_q(const Mat& rho, double range, Index points);
QGrid husimi_q_serial(const Mat& rho, double range, Index points);

// Cell-area-weighted Riemann sum of the grid.
double q_integral(const QGrid& grid);

// Eigenvalues (max, min) of the 2x2 covariance matrix of the Q
// distribution; their ratio is the quadrature-squeezing signature.
std::pair<double, double> q_covariance_eigs(const QGrid& grid);

}  // namespace parabose
