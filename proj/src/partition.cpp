#include "parabose/partition.hpp"

#include <cmath>
#include <stdexcept>

#include "parabose/algebra.hpp"

namespace parabose {

long h_index(long k) {
  if (k < 0) throw std::invalid_argument("h_index: negative argument");
  long sign = (k % 2 == 0) ? 1 : -1;
  return (2 * k - 1 + sign) / 4;  // exact: equals k/2
}

namespace {

void check_label(const SubspaceLabel& label) {
  if (label.sign != 1 && label.sign != -1)
    throw std::invalid_argument("SubspaceLabel: sign must be +1 or -1");
  if (label.j < 0)
    throw std::invalid_argument("SubspaceLabel: j must be nonnegative");
}

}  // namespace

std::pair<long, long> basis_state(const SubspaceLabel& label, long k) {
  check_label(label);
  if (k < 0) throw std::invalid_argument("basis_state: negative k");
  const long N = label.family_N();
  const bool even_sector = (label.j % 2 == 0);
  if (label.sign > 0) {
    return even_sector
               ? std::make_pair(h_index(k + 4 * N + 1), h_index(k))
               : std::make_pair(h_index(k), h_index(k + 4 * N + 3));
  }
  return even_sector
             ? std::make_pair(h_index(k), h_index(k + 4 * N + 3))
             : std::make_pair(h_index(k + 4 * N + 1), h_index(k));
}

std::pair<long, long> chain_state(const SubspaceLabel& label, long k) {
  check_label(label);
  auto plus = basis_state({+1, label.j}, k);
  if (label.sign > 0) return plus;
  return {plus.second, plus.first};  // H_- chains are the mode-swapped + chains
}

Mat project_H(const SubspaceLabel& label, const ModelParams& p, int kmax,
              Index d1, Index d2) {
  check_label(label);
  if (kmax < 0) throw std::invalid_argument("project_H: kmax must be >= 0");
  // 2-level guard band against truncation contamination of H itself
  for (long k = 0; k <= kmax + 1; ++k) {
    auto [m1, m2] = chain_state(label, k);
    if (m1 > d1 - 3 || m2 > d2 - 3)
      throw std::invalid_argument(
          "project_H: dims too small for kmax (guard band violated)");
  }
  const Mat H = build_H_pm(label.sign, p, d1, d2);
  Mat M = Mat::Zero(kmax + 1, kmax + 1);
  for (long k = 0; k <= kmax; ++k) {
    auto [m1, m2] = chain_state(label, k);
    const Index col = m1 * d2 + m2;
    for (long kp = std::max(0l, k - 1); kp <= std::min<long>(kmax, k + 1); ++kp) {
      auto [q1, q2] = chain_state(label, kp);
      M(kp, k) = H(q1 * d2 + q2, col);
    }
  }
  return M;
}

Mat driven_oscillator_H(const SubspaceLabel& label, const ModelParams& p,
                        int kmax, DiagonalConvention conv) {
  check_label(label);
  if (kmax < 0)
    throw std::invalid_argument("driven_oscillator_H: kmax must be >= 0");
  const int s = label.sign;
  const int j = label.j;
  Mat M = Mat::Zero(kmax + 1, kmax + 1);
  for (long k = 0; k <= kmax; ++k) {
    double diag;
    if (conv == DiagonalConvention::Reconciled) {
      diag = p.omega * (k + j) -
             s * parity_sign(j) * p.omega0 * (j + (k % 2 == 0 ? 0.0 : 1.0));
    } else {
      const double lambda =
          (s > 0) ? p.omega0 * (j + 0.5) * parity_sign(j)
                  : (p.omega - p.omega0 * (j + 0.5)) * parity_sign(j) - p.omega0;
      diag = p.omega * (k + j) - s * 0.5 * p.omega0 * parity_sign(k + j) + lambda;
    }
    M(k, k) = diag;
    if (k < kmax) {
      double off = s * p.g * std::sqrt(double(k + 1)) * deformation_f(j, int(k));
      M(k, k + 1) = off;
      M(k + 1, k) = off;
    }
  }
  return M;
}

double eta_expectation(const SubspaceLabel& label, long k) {
  auto [m1, m2] = basis_state(label, k);
  // <m1,m2| -2 J3 + (1 - P12)/2 |m1,m2>, exact integers
  return double(m2 - m1 + ((m1 + m2) % 2));
}

}  // namespace parabose
