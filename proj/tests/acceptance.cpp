// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit on any
// failure.  Tolerances are pinned, not derived at runtime.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>

#include "parabose/algebra.hpp"
#include "parabose/dynamics.hpp"
#include "parabose/frames.hpp"
#include "parabose/hilbert.hpp"
#include "parabose/partition.hpp"
#include "parabose/specfun.hpp"
#include "parabose/states.hpp"

using namespace parabose;

namespace {

int failures = 0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s — %s\n", criterion, ok ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// --- 1: algebra suite ------------------------------------------------------

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  double worst = 0, worst_vac = 0;
  for (int N = 0; N <= 4; ++N) {
    AlgebraReport rep = verify_algebra(N, 64);
    worst = std::max({worst, rep.commutator_residual,
                      rep.anticommutator_residual,
                      rep.number_commutator_residual});
    LadderOps ops = ladder_ops(N, 64);
    Vec vac = basis_vector(64, 0);
    worst_vac = std::max(
        worst_vac,
        std::abs((ops.A * (ops.Adag * vac))(0) - 2.0 * (N + 1.0)));
  }
  double dt = elapsed_s(t0);
  report(1, worst < 1e-12 && worst_vac < 1e-12 && dt < 1.0,
         "algebra residuals " + num(worst) + ", vacuum relation " +
             num(worst_vac) + ", " + num(dt) + " s");
}

// --- 2: frame identities ---------------------------------------------------

void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  const ModelParams p{0.35, 1.0, 0.3};
  const Index d = 16;

  double eta_res = interior_max_abs(
      commutator(build_eta(Frame::Lab, d, d), build_H_lab(p, d, d)), d, d, 2);
  eta_res = std::max(eta_res,
                     max_abs(commutator(build_eta(Frame::CC, d, d),
                                        build_H_cc(p, d, d))));
  for (int sign : {+1, -1})
    eta_res = std::max(eta_res, max_abs(commutator(eta_pm(sign, d, d),
                                                   build_H_pm(sign, p, d, d))));

  // FG conjugation of the rotating-frame generator: off-diagonal qubit
  // blocks must vanish (exact, no mode-mixing rotation involved)
  Mat T0 = build_T(p, 0.0, d, d);
  Mat Dy = embed_two_mode(build_rotation_Dy(M_PI / 2, d, d));
  Mat G = build_H_cc(p, d, d) - p.omega0 * build_eta(Frame::CC, d, d);
  Mat M = T0 * Dy.adjoint() * G * Dy * T0.adjoint();
  double fg_off = 0;
  for (Index r = 0; r < 2 * d * d; ++r)
    for (Index c = 0; c < 2 * d * d; ++c)
      if (r % 2 != c % 2) fg_off = std::max(fg_off, std::abs(M(r, c)));

  // T sigma3 T† = -sigma3 P12 at omega0 = 0, inside the D_y-safe interior
  ModelParams p0{0.0, 1.0, 0.3};
  Mat T = build_T(p0, 0.0, d, d);
  Mat diff = T * embed_qubit(sigma_z(), d, d) * T.adjoint() +
             embed_qubit(sigma_z(), d, d) * embed_two_mode(parity12(d, d));
  double sz_res = total_number_max_abs(diff, d, d, d - 5);

  double dt = elapsed_s(t0);
  report(2,
         eta_res < 1e-12 && fg_off < 1e-12 && sz_res < 1e-12 && dt < 10.0,
         "eta commutators " + num(eta_res) + ", FG off-blocks " +
             num(fg_off) + ", sigma3 transport " +
             num(sz_res) + ", " + num(dt) + " s");
}

// --- 3: partition correctness ----------------------------------------------

void criterion3() {
  bool bijective = true;
  for (int sign : {+1, -1}) {
    std::set<std::pair<long, long>> seen;
    for (int j = 0; j <= 6; ++j)
      for (long k = 0; k <= 40; ++k)
        if (!seen.insert(chain_state({sign, j}, k)).second) bijective = false;
  }

  double eta_err = 0;
  for (int N = 0; N <= 3; ++N)
    for (long k = 0; k <= 40; ++k) {
      eta_err = std::max(
          eta_err, std::abs(eta_expectation({+1, 2 * N}, k) + 2.0 * N));
      eta_err = std::max(eta_err, std::abs(eta_expectation({+1, 2 * N + 1}, k) -
                                           2.0 * (N + 1)));
      eta_err = std::max(
          eta_err, std::abs(eta_expectation({-1, 2 * N}, k) - 2.0 * (N + 1)));
      eta_err = std::max(
          eta_err, std::abs(eta_expectation({-1, 2 * N + 1}, k) + 2.0 * N));
    }

  const Index d = 16;
  Mat T = build_T(ModelParams{0.0, 1.0, 0.1}, 0.0, d, d);
  Mat J1 = embed_two_mode(schwinger_j1(d, d));
  double j1_res = 0;
  for (int j = 0; j <= 3; ++j)
    for (long k = 0; k <= 6; ++k) {
      auto [p1, p2] = basis_state({+1, j}, k);
      Vec ve = T.adjoint() * composite_basis(p1, p2, 0, d, d);
      double le = parity_sign(j) / 4.0 * (2.0 * j + 1.0 - parity_sign(k));
      j1_res = std::max(j1_res, (J1 * ve - le * ve).cwiseAbs().maxCoeff());

      auto [m1, m2] = basis_state({-1, j}, k);
      Vec vg = T.adjoint() * composite_basis(m1, m2, 1, d, d);
      double lg = parity_sign(j + 1) / 4.0 *
                  (2.0 * (j + parity_sign(j)) + 1.0 - parity_sign(k));
      j1_res = std::max(j1_res, (J1 * vg - lg * vg).cwiseAbs().maxCoeff());
    }

  report(3, bijective && eta_err < 1e-12 && j1_res < 1e-10,
         std::string("bijective=") + (bijective ? "yes" : "no") +
             ", eta constants " + num(eta_err) +
             ", J1 relations " + num(j1_res));
}

// --- 4: projection equivalence ---------------------------------------------

void criterion4() {
  const Index d = 32;
  double worst0 = 0, worst = 0;
  for (int sign : {+1, -1})
    for (int j = 0; j <= 3; ++j) {
      SubspaceLabel label{sign, j};
      worst0 = std::max(
          worst0, max_abs(project_H(label, ModelParams{0.0, 1.0, 0.3}, 40, d,
                                    d) -
                          driven_oscillator_H(label, ModelParams{0.0, 1.0, 0.3},
                                              40,
                                              DiagonalConvention::Reconciled)));
      worst = std::max(
          worst, max_abs(project_H(label, ModelParams{0.35, 1.0, 0.3}, 40, d,
                                   d) -
                         driven_oscillator_H(label, ModelParams{0.35, 1.0, 0.3},
                                             40,
                                             DiagonalConvention::Reconciled)));
    }
  report(4, worst0 < 1e-12 && worst < 1e-12,
         "omega0=0 residual " + num(worst0) +
             ", omega0=0.35 residual " + num(worst) +
             " (reconciled convention: omega0 sign flipped globally, "
             "sector deformation order = sector index)");
}

// --- 5/6: dynamical frame equivalence and amplitude doubling ----------------

void criterion5_and_6() {
  auto t0 = std::chrono::steady_clock::now();
  const Index d = 32;
  const ModelParams p{0.0, 1.0, 0.1};
  RVec times(1000);
  for (Index i = 0; i < 1000; ++i) times(i) = 100.0 * double(i) / 999.0;

  // lab frame: full composite evolution of |0,0,g>
  Propagator lab = make_propagator(build_H_lab(p, d, d));
  Vec psi0 = composite_basis(0, 0, 1, d, d);
  TimeSeries lab_ts = evolve_series(lab, psi0, times,
                                    {{"sigma_z", embed_qubit(sigma_z(), d, d)}});
  double leak = leakage_composite(evolve(lab, psi0, 100.0), d, d, 2);

  // oscillator frame: p=2 vacuum under w n + g (A + A†)
  LadderOps ops = ladder_ops(0, d);
  Propagator osc =
      make_propagator(p.omega * ops.n + p.g * (ops.A + ops.Adag));
  Vec vac = basis_vector(d, 0);
  TimeSeries osc_ts = evolve_series(
      osc, vac, times, {{"mean_n", ops.n}, {"parity", ops.parity}});
  double leak_osc = leakage(evolve(osc, vac, 100.0), 4);

  double worst = 0;
  for (Index i = 0; i < 1000; ++i)
    worst = std::max(worst,
                     std::abs(lab_ts.columns(i, 0) + osc_ts.columns(i, 1)));
  double dt = elapsed_s(t0);
  report(5,
         worst < 1e-8 && leak < 1e-10 && leak_osc < 1e-10 && dt < 60.0,
         "max |<sigma_z>_Lab + <parity>_Osc| = " + num(worst) +
             ", leakage " + num(std::max(leak, leak_osc)) + ", " +
             num(dt) + " s");

  const double peak = osc_ts.columns.col(0).maxCoeff();
  const double ratio = peak / (4.0 * p.g * p.g / (p.omega * p.omega));
  report(6, ratio > 1.7 && ratio < 2.3,
         "peak <n> = " + num(peak) + ", ratio to boson peak = " +
             num(ratio));
}

// --- 7: pure-pumping closed forms ------------------------------------------

void criterion7() {
  double mean_err = 0;
  for (double gt = 0.1; gt <= 5.0 + 1e-9; gt += 0.1) {
    Index dim = Index(4 * (2 * gt * gt + 1)) + 8;
    Vec psi = gp_coherent_numeric(0, gt, dim);
    double numeric = 0;
    for (Index k = 0; k < dim; ++k) numeric += double(k) * std::norm(psi(k));
    mean_err = std::max(mean_err,
                        std::abs(mean_n_closed(gt) - numeric) / numeric);
  }

  double amp_err = 0;
  for (double gt : {0.5, 1.0, 2.0}) {
    const int jmax = int(2 * gt * gt + 12);
    Vec closed = gp_coherent_closed(gt, jmax);
    Vec numeric =
        gp_coherent_numeric(0, gt, std::max<Index>(64, 2 * jmax + 2));
    amp_err = std::max(
        amp_err, (numeric.head(closed.size()) - closed).cwiseAbs().maxCoeff());
  }

  const double gt = 0.01;
  Vec psi = gp_coherent_numeric(0, gt, 32);
  double numeric = 0;
  for (Index k = 0; k < 32; ++k) numeric += double(k) * std::norm(psi(k));
  double pert_err = std::abs(numeric - 2.0 * gt * gt) / (2.0 * gt * gt);

  report(7, mean_err < 1e-6 && amp_err < 1e-8 && pert_err < 1e-4,
         "<n> closed-form rel err " + num(mean_err) +
             ", amplitude err " + num(amp_err) +
             ", perturbative 2g^2t^2 rel err " + num(pert_err) +
             " (reconciliation: prefactor doubled to g^2 t^2)");
}

// --- 8: special functions --------------------------------------------------

void criterion8() {
  double f11_err = 0;
  for (double z = -30.0; z <= 30.0 + 1e-9; z += 0.5)
    f11_err = std::max(f11_err, std::abs(hyp1f1(1.0, 1.0, z).value -
                                         std::exp(z)) /
                                    std::exp(z));

  // main path against the extended-precision oracle and, independently,
  // against Gauss-Legendre quadrature of the integral representation
  static const double gl_x[4] = {0.1834346424956498, 0.5255324099163290,
                                 0.7966664774136267, 0.9602898564975363};
  static const double gl_w[4] = {0.3626837833783620, 0.3137066458778873,
                                 0.2223810344533745, 0.1012285362903763};
  auto quadrature = [](double z) {
    const int panels = 200;
    const double h = 1.0 / panels;
    double sum = 0;
    for (int i = 0; i < panels; ++i) {
      const double mid = (i + 0.5) * h;
      for (int q = 0; q < 4; ++q)
        for (int pm : {-1, +1}) {
          double u = mid + pm * 0.5 * h * gl_x[q];
          double s = 1.0 - u * u;
          sum += 0.5 * h * gl_w[q] * 2.0 * std::expm1(z * s) / s;
        }
    }
    return sum / (2.0 * z);
  };
  double f22_err = 0;
  for (double z = -50.0; z <= -0.25; z += 0.25) {
    double main = hyp2f2_1132(z).value;
    f22_err = std::max(f22_err,
                       std::abs(main - hyp2f2_1132_extended(z)) / main);
    f22_err = std::max(f22_err, std::abs(main - quadrature(z)) / main);
  }

  report(8, f11_err < 1e-12 && f22_err < 1e-10,
         "1F1(1,1;z)=e^z rel err " + num(f11_err) +
             ", 2F2 vs oracles rel err " + num(f22_err));
}

// --- 9: Husimi -------------------------------------------------------------

void criterion9() {
  // vacuum grid against the analytic Gaussian
  QGrid vacuum = husimi_q(dyad(basis_vector(32, 0)), 4.0, 161);
  const double step = 8.0 / 160.0;
  double vac_err = 0;
  for (Index i = 0; i < 161; ++i)
    for (Index j = 0; j < 161; ++j) {
      double x = -4.0 + step * j, y = -4.0 + step * i;
      vac_err = std::max(vac_err,
                         std::abs(vacuum.values(i, j) -
                                  std::exp(-(x * x + y * y)) / M_PI));
    }
  double vac_int = q_integral(vacuum);

  // reduced first mode of the lab-frame coherent analog at gt = 1
  const Index d = 24;
  Vec osc = gp_coherent_numeric(0, 1.0, d);
  Vec fg = fg_embed_plus0(osc, d, d);
  Mat T = build_T(ModelParams{0.0, 0.0, 1.0}, 0.0, d, d);
  Vec labstate = T.adjoint() * fg;
  Mat rho1 = partial_trace_first_mode(dyad(labstate), d, d, 2);
  QGrid grid = husimi_q(rho1, 4.0, 161);
  double integral = q_integral(grid);
  auto [lmax, lmin] = q_covariance_eigs(grid);
  double ratio = lmax / lmin;

  report(9,
         vac_err < 1e-10 && std::abs(vac_int - 1.0) < 1e-3 &&
             std::abs(integral - 1.0) < 1e-3 && ratio > 1.2,
         "vacuum err " + num(vac_err) + ", integrals " +
             num(vac_int) + " / " + num(integral) +
             ", covariance ratio " + num(ratio));
}

// --- 10: parity balance ----------------------------------------------------

void criterion10() {
  Vec psi = gp_coherent_numeric(0, 4.0, 140);
  auto [even, odd] = parity_populations(psi);
  report(10,
         even > 0.45 && even < 0.55 && odd > 0.45 && odd < 0.55,
         "even " + num(even) + ", odd " + num(odd) +
             " at gt = 4");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5_and_6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all criteria passed\n");
  return failures ? 1 : 0;
}
