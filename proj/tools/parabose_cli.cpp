// Command-line front end: wires the library into reproducible runs and
// figure-data emission.  Exit codes: 0 success, 2 validation error,
// 3 numerical-gate failure.

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "parabose/algebra.hpp"
#include "parabose/dynamics.hpp"
#include "parabose/frames.hpp"
#include "parabose/hilbert.hpp"
#include "parabose/io.hpp"
#include "parabose/partition.hpp"
#include "parabose/specfun.hpp"
#include "parabose/states.hpp"

namespace {

using namespace parabose;

constexpr int kExitValidation = 2;
constexpr int kExitGate = 3;

struct GateFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double x) { return format_double(x); }

RVec linspace(double tmax, long samples) {
  RVec t(samples);
  for (long i = 0; i < samples; ++i)
    t(i) = tmax * double(i) / double(samples - 1);
  return t;
}

Index auto_pump_dim(double gt_max) {
  // validity floor plus headroom so the leakage gate clears comfortably
  Index d = Index(std::ceil(4.0 * (2.0 * gt_max * gt_max + 1.0))) + 16;
  return std::max<Index>(32, d);
}

// ---- algebra --------------------------------------------------------------

int run_algebra(int N, Index dim, const std::string& out) {
  if (dim == 0) dim = 64;
  AlgebraReport rep = verify_algebra(N, dim);

  LadderOps ops = ladder_ops(N, dim);
  Vec vac = basis_vector(dim, 0);
  double vacuum_eig = (ops.A * (ops.Adag * vac))(0).real();

  KeyValues kv{
      {"command", "algebra"},
      {"order_N", std::to_string(rep.N)},
      {"order_p", std::to_string(rep.p)},
      {"dim", std::to_string(rep.dim)},
      {"commutator_residual", fmt(rep.commutator_residual)},
      {"anticommutator_residual", fmt(rep.anticommutator_residual)},
      {"number_commutator_residual", fmt(rep.number_commutator_residual)},
      {"boundary_rows_excluded", std::to_string(rep.boundary_rows_excluded)},
      {"vacuum_AAdag_eigenvalue", fmt(vacuum_eig)},
  };
  write_key_values(out, kv);
  std::cout << "algebra report written to " << out << "\n";

  if (rep.commutator_residual >= 1e-12 || rep.anticommutator_residual >= 1e-12 ||
      rep.number_commutator_residual >= 1e-12 ||
      std::abs(vacuum_eig - 2.0 * (N + 1)) >= 1e-12)
    throw GateFailure("algebra residuals above 1e-12");
  return 0;
}

// ---- project --------------------------------------------------------------

int run_project(const ModelParams& params, int j, Index dim,
                const std::string& out) {
  if (dim == 0) dim = 32;
  // largest kmax whose chain fits inside the guard band
  auto max_k = [&](int sign) {
    SubspaceLabel label{sign, j};
    int k = 0;
    while (true) {
      auto [m1, m2] = chain_state(label, k + 1);
      if (m1 > dim - 3 || m2 > dim - 3) break;
      ++k;
    }
    return k - 1;
  };
  const int kmax = std::min(max_k(+1), max_k(-1));
  if (kmax < 1)
    throw std::invalid_argument("project: dim too small for any projection");

  KeyValues kv{
      {"command", "project"},
      {"sector_j", std::to_string(j)},
      {"kmax", std::to_string(kmax)},
      {"dim", std::to_string(dim)},
      {"omega", fmt(params.omega)},
      {"omega0", fmt(params.omega0)},
      {"g", fmt(params.g)},
      {"diagonal_convention", "reconciled"},
  };

  double worst = 0;
  for (int sign : {+1, -1}) {
    SubspaceLabel label{sign, j};
    Mat direct = project_H(label, params, kmax, dim, dim);
    Mat closed = driven_oscillator_H(label, params, kmax,
                                     DiagonalConvention::Reconciled);
    worst = std::max(worst, max_abs(direct - closed));
    const std::string tag = (sign > 0) ? "plus" : "minus";
    for (int k = 0; k <= kmax; ++k) {
      kv.emplace_back(tag + "_diag_" + std::to_string(k),
                      fmt(direct(k, k).real()));
      if (k < kmax)
        kv.emplace_back(tag + "_off_" + std::to_string(k),
                        fmt(direct(k, k + 1).real()));
    }
  }
  kv.emplace_back("closed_form_residual", fmt(worst));
  write_key_values(out, kv);
  std::cout << "projection written to " << out << " (kmax=" << kmax
            << ", closed-form residual " << fmt(worst) << ")\n";

  if (worst >= 1e-12)
    throw GateFailure("projection vs closed form residual above 1e-12");
  return 0;
}

// ---- evolve ---------------------------------------------------------------

int run_evolve(const ModelParams& params, Index dim, double tmax, long samples,
               const std::string& out) {
  if (dim == 0) dim = 32;
  if (tmax <= 0) tmax = 100.0;
  const Index d = dim;
  Mat H = build_H_lab(params, d, d);
  Propagator prop = make_propagator(H);
  Vec psi0 = composite_basis(0, 0, 1, d, d);  // |0,0,g>

  Mat a1n = embed_two_mode(kron(number_op(d), Mat::Identity(d, d)));
  Mat a2n = embed_two_mode(kron(Mat::Identity(d, d), number_op(d)));
  NamedOps obs{
      {"sigma_z", embed_qubit(sigma_z(), d, d)},
      {"n1", a1n},
      {"n2", a2n},
      {"eta_lab", build_eta(Frame::Lab, d, d)},
  };
  RVec times = linspace(tmax, samples);
  TimeSeries ts = evolve_series(prop, psi0, times, obs);

  double leak = 0;
  for (double t : {0.5 * tmax, tmax})
    leak = std::max(leak, leakage_composite(evolve(prop, psi0, t), d, d, 2));
  double eta_drift =
      (ts.columns.col(3).maxCoeff() - ts.columns.col(3).minCoeff());

  write_time_series_csv(out, ts);
  write_key_values(out + ".meta",
                   {{"command", "evolve"},
                    {"omega", fmt(params.omega)},
                    {"omega0", fmt(params.omega0)},
                    {"g", fmt(params.g)},
                    {"dim", std::to_string(d)},
                    {"tmax", fmt(tmax)},
                    {"samples", std::to_string(samples)},
                    {"leakage", fmt(leak)},
                    {"eta_lab_drift", fmt(eta_drift)}});
  std::cout << "time series written to " << out << " (leakage " << fmt(leak)
            << ")\n";

  if (leak >= 1e-10) throw GateFailure("leakage gate 1e-10 failed");
  if (eta_drift >= 1e-10) throw GateFailure("eta_lab conservation drift");
  return 0;
}

// ---- coherent -------------------------------------------------------------

int run_coherent(int N, double gt, Index dim, const std::string& out) {
  if (dim == 0) dim = auto_pump_dim(gt);
  Vec psi = gp_coherent_numeric(N, gt, dim);
  auto [even, odd] = parity_populations(psi);

  double mean_n = 0;
  for (Index k = 0; k < dim; ++k) mean_n += double(k) * std::norm(psi(k));

  KeyValues kv{
      {"command", "coherent"},
      {"order_N", std::to_string(N)},
      {"gt", fmt(gt)},
      {"dim", std::to_string(dim)},
      {"mean_n", fmt(mean_n)},
      {"even_population", fmt(even)},
      {"odd_population", fmt(odd)},
      {"leakage", fmt(leakage(psi, 4))},
  };

  double closed_gate = 0;
  if (N == 0 && gt <= 10) {
    const int jmax = int(std::ceil(2.0 * gt * gt + 10.0));
    if (2 * jmax + 2 <= dim) {
      Vec closed = gp_coherent_closed(gt, jmax);
      Vec diff = psi.head(closed.size()) - closed;
      closed_gate = diff.cwiseAbs().maxCoeff();
      kv.emplace_back("closed_state_max_diff", fmt(closed_gate));
      kv.emplace_back("mean_n_closed", fmt(mean_n_closed(gt)));
      kv.emplace_back("mean_n_rel_err",
                      fmt(std::abs(mean_n_closed(gt) - mean_n) /
                          std::max(mean_n, 1e-300)));
    }
  }
  for (Index k = 0; k < dim; ++k) {
    kv.emplace_back("amp_" + std::to_string(k) + "_re", fmt(psi(k).real()));
    kv.emplace_back("amp_" + std::to_string(k) + "_im", fmt(psi(k).imag()));
  }
  write_key_values(out, kv);
  std::cout << "coherent-state report written to " << out << "\n";

  if (closed_gate >= 1e-8)
    throw GateFailure("closed-form state mismatch above 1e-8");
  return 0;
}

// ---- husimi / fig2 --------------------------------------------------------

int run_husimi(double gt, double range, Index points, Index dim,
               const std::string& out) {
  if (dim == 0) dim = std::max<Index>(16, auto_pump_dim(gt) / 2 * 2);
  Vec osc = gp_coherent_numeric(0, gt, dim);
  const Index d = dim;  // per-mode levels; chain indices stay below dim/2+1
  Vec fg = fg_embed_plus0(osc, d, d);
  Mat T = build_T(ModelParams{0.0, 0.0, 1.0}, 0.0, d, d);
  Vec lab = T.adjoint() * fg;
  Mat rho1 = partial_trace_first_mode(dyad(lab), d, d, 2);
  QGrid grid = husimi_q(rho1, range, points);

  const double integral = q_integral(grid);
  auto [lmax, lmin] = q_covariance_eigs(grid);

  write_qgrid_csv(out, grid);
  write_key_values(out + ".meta",
                   {{"command", "husimi"},
                    {"gt", fmt(gt)},
                    {"range", fmt(range)},
                    {"points", std::to_string(points)},
                    {"dim", std::to_string(dim)},
                    {"leakage", fmt(leakage(osc, 4))},
                    {"q_integral", fmt(integral)},
                    {"covariance_eig_max", fmt(lmax)},
                    {"covariance_eig_min", fmt(lmin)},
                    {"covariance_eig_ratio", fmt(lmax / lmin)}});
  std::cout << "husimi grid written to " << out << " (integral "
            << fmt(integral) << ", covariance ratio " << fmt(lmax / lmin)
            << ")\n";

  if (std::abs(integral - 1.0) >= 1e-3)
    throw GateFailure("husimi grid integral outside 1 +- 1e-3");
  return 0;
}

// ---- fig1 -----------------------------------------------------------------

int run_fig1(const std::string& panel, double omega, double g, double tmax,
             long samples, Index dim, const std::string& out) {
  const bool pumping = (panel == "c" || panel == "d");
  if (tmax <= 0) tmax = pumping ? 5.0 : 100.0;
  if (dim == 0) dim = pumping ? auto_pump_dim(tmax) : 32;
  if (pumping) omega = 0.0;

  LadderOps ops = ladder_ops(0, dim);
  Mat H = omega * ops.n + g * (ops.A + ops.Adag);
  // panels c,d sample against scaled time gt: evolve with H/g
  if (pumping) H = ops.A + ops.Adag;
  Propagator prop = make_propagator(H);
  Vec vac = basis_vector(dim, 0);

  NamedOps obs{{"mean_n", ops.n}, {"parity", ops.parity}};
  RVec times = linspace(tmax, samples);
  TimeSeries ts = sigma_z_lab_from_parity(
      evolve_series(prop, vac, times, obs));

  const double leak = leakage(evolve(prop, vac, tmax), 4);

  TimeSeries emit;
  emit.times = ts.times;
  const bool number_panel = (panel == "a" || panel == "c");
  const Index src = number_panel ? 0 : 2;  // mean_n or sigma_z_lab
  emit.names.push_back(number_panel ? "mean_n_osc" : "sigma_z_lab");
  emit.columns = ts.columns.col(src);

  KeyValues kv{
      {"command", "fig1"},
      {"panel", panel},
      {"omega", fmt(omega)},
      {"omega0", "0"},
      {"g", fmt(g)},
      {"order_N", "0"},
      {"dim", std::to_string(dim)},
      {"time_axis", pumping ? "gt" : "omega*t"},
      {"tmax", fmt(tmax)},
      {"samples", std::to_string(samples)},
      {"leakage", fmt(leak)},
  };
  if (panel == "a") {
    const double boson_peak = 4.0 * g * g / (omega * omega);
    kv.emplace_back("peak_mean_n", fmt(ts.columns.col(0).maxCoeff()));
    kv.emplace_back("boson_peak", fmt(boson_peak));
    kv.emplace_back("peak_ratio",
                    fmt(ts.columns.col(0).maxCoeff() / boson_peak));
  }
  write_time_series_csv(out, emit);
  write_key_values(out + ".meta", kv);
  std::cout << "fig1 panel " << panel << " written to " << out << "\n";

  if (leak >= 1e-10) throw GateFailure("leakage gate 1e-10 failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"driven even-order para-Bose oscillator toolkit"};
  app.require_subcommand(1);

  double omega = 1.0, omega0 = 0.0, g = 0.1;
  int order_N = 0;
  long dim = 0, samples = 1000, points = 161;
  double tmax = 0.0, gt = 1.0, range = 4.0;
  std::string out, panel;

  auto add_model = [&](CLI::App* cmd) {
    cmd->add_option("--omega", omega, "effective field frequency");
    cmd->add_option("--omega0", omega0, "effective qubit frequency");
    cmd->add_option("--g", g, "effective coupling");
  };

  auto* algebra = app.add_subcommand("algebra", "verify the para-Bose algebra");
  algebra->add_option("--order-N", order_N, "algebra order index N")
      ->check(CLI::NonNegativeNumber);
  algebra->add_option("--dim", dim, "Fock dimension (0 = 64)");
  algebra->add_option("--out", out);

  auto* project = app.add_subcommand(
      "project", "project H_pm onto a sector and compare closed forms");
  add_model(project);
  project->add_option("--order-N", order_N, "sector index j")
      ->check(CLI::NonNegativeNumber);
  project->add_option("--dim", dim, "per-mode Fock dimension (0 = 32)");
  project->add_option("--out", out);

  auto* evolve_cmd = app.add_subcommand(
      "evolve", "laboratory-frame evolution of |0,0,g>");
  add_model(evolve_cmd);
  evolve_cmd->add_option("--dim", dim, "per-mode Fock dimension (0 = 32)");
  evolve_cmd->add_option("--tmax", tmax, "final time (0 = 100)");
  evolve_cmd->add_option("--samples", samples)->check(CLI::Range(2l, 1000000l));
  evolve_cmd->add_option("--out", out);

  auto* coherent = app.add_subcommand(
      "coherent", "para-Bose coherent state from pure pumping");
  coherent->add_option("--order-N", order_N)->check(CLI::NonNegativeNumber);
  coherent->add_option("--gt", gt, "scaled time")->check(CLI::NonNegativeNumber);
  coherent->add_option("--dim", dim, "Fock dimension (0 = auto)");
  coherent->add_option("--out", out);

  auto* husimi = app.add_subcommand(
      "husimi", "Husimi Q of the reduced first mode, laboratory frame");
  husimi->add_option("--gt", gt)->check(CLI::NonNegativeNumber);
  husimi->add_option("--range", range)->check(CLI::PositiveNumber);
  husimi->add_option("--points", points)->check(CLI::Range(3l, 4001l));
  husimi->add_option("--dim", dim, "oscillator Fock dimension (0 = auto)");
  husimi->add_option("--out", out);

  auto* fig1 = app.add_subcommand("fig1", "figure 1 panel data");
  fig1->add_option("--panel", panel)
      ->required()
      ->check(CLI::IsMember({"a", "b", "c", "d"}));
  fig1->add_option("--omega", omega);
  fig1->add_option("--g", g);
  fig1->add_option("--tmax", tmax, "0 = panel default");
  fig1->add_option("--samples", samples)->check(CLI::Range(2l, 1000000l));
  fig1->add_option("--dim", dim, "Fock dimension (0 = auto)");
  fig1->add_option("--out", out);

  auto* fig2 = app.add_subcommand("fig2", "figure 2 Husimi grid");
  fig2->add_option("--gt", gt)->check(CLI::NonNegativeNumber);
  fig2->add_option("--range", range)->check(CLI::PositiveNumber);
  fig2->add_option("--points", points)->check(CLI::Range(3l, 4001l));
  fig2->add_option("--dim", dim, "oscillator Fock dimension (0 = auto)");
  fig2->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    ModelParams params{omega0, omega, g};
    if (out.empty()) {
      if (algebra->parsed()) out = "algebra_report.txt";
      else if (project->parsed()) out = "projection.txt";
      else if (evolve_cmd->parsed()) out = "evolve.csv";
      else if (coherent->parsed()) out = "coherent.txt";
      else if (husimi->parsed()) out = "husimi.csv";
      else if (fig1->parsed()) out = "fig1.csv";
      else out = "fig2.csv";
    }
    if (algebra->parsed()) return run_algebra(order_N, dim, out);
    if (project->parsed()) return run_project(params, order_N, dim, out);
    if (evolve_cmd->parsed())
      return run_evolve(params, dim, tmax, samples, out);
    if (coherent->parsed()) return run_coherent(order_N, gt, dim, out);
    if (husimi->parsed()) return run_husimi(gt, range, points, dim, out);
    if (fig1->parsed())
      return run_fig1(panel, omega, g, tmax, samples, dim, out);
    if (fig2->parsed()) return run_husimi(gt, range, points, dim, out);
  } catch (const GateFailure& e) {
    std::cerr << "numerical gate failure: " << e.what() << "\n";
    return kExitGate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGate;
  }
  return 0;
}
