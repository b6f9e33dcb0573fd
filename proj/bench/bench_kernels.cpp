// Compares the OpenMP kernels against their serial reference
// implementations: wall time plus a bit-identity check.

#include <chrono>
#include <cstdio>
#include <functional>

#include "parabose/algebra.hpp"
#include "parabose/dynamics.hpp"
#include "parabose/hilbert.hpp"
#include "parabose/states.hpp"

using namespace parabose;

namespace {

double time_s(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main() {
  {
    const Index dim = 512;
    LadderOps ops = ladder_ops(0, dim);
    Propagator prop = make_propagator(ops.n + 0.3 * (ops.A + ops.Adag));
    Vec psi0 = basis_vector(dim, 0);
    RVec times(2000);
    for (Index i = 0; i < times.size(); ++i) times(i) = 0.05 * double(i);
    NamedOps obs{{"n", ops.n}, {"parity", ops.parity}};

    TimeSeries par, ser;
    double tp = time_s([&] { par = evolve_series(prop, psi0, times, obs); });
    double ts =
        time_s([&] { ser = evolve_series_serial(prop, psi0, times, obs); });
    double diff = (par.columns - ser.columns).cwiseAbs().maxCoeff();
    std::printf("evolve_series  dim %ld, %ld samples: omp %.3f s, serial %.3f s, "
                "speedup %.2fx, max diff %g (%s)\n",
                long(dim), long(times.size()), tp, ts, ts / tp, diff,
                diff == 0.0 ? "bit-identical" : "MISMATCH");
  }

  {
    Mat rho = dyad(coherent_state(cdouble(0.8, -0.4), 64));
    QGrid par, ser;
    double tp = time_s([&] { par = husimi_q(rho, 4.0, 321); });
    double ts = time_s([&] { ser = husimi_q_serial(rho, 4.0, 321); });
    double diff = (par.values - ser.values).cwiseAbs().maxCoeff();
    std::printf("husimi_q       dim 64, 321x321 grid: omp %.3f s, serial %.3f s, "
                "speedup %.2fx, max diff %g (%s)\n",
                tp, ts, ts / tp, diff,
                diff == 0.0 ? "bit-identical" : "MISMATCH");
  }
  return 0;
}
