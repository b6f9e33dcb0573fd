#include "parabose/frames.hpp"

#include <cmath>

namespace parabose {

namespace {

// Qubit-block operator [[A,B],[C,D]] on the composite space (qubit last).
Mat qubit_blocks(const Mat& A, const Mat& B, const Mat& C, const Mat& D) {
  Mat Eee = Mat::Zero(2, 2), Eeg = Mat::Zero(2, 2);
  Mat Ege = Mat::Zero(2, 2), Egg = Mat::Zero(2, 2);
  Eee(0, 0) = 1;
  Eeg(0, 1) = 1;
  Ege(1, 0) = 1;
  Egg(1, 1) = 1;
  return kron(A, Eee) + kron(B, Eeg) + kron(C, Ege) + kron(D, Egg);
}

Mat mode1_op(const Mat& op, Index d2) {
  return kron(op, Mat::Identity(d2, d2));
}

Mat mode2_op(const Mat& op, Index d1) {
  return kron(Mat::Identity(d1, d1), op);
}

}  // namespace

Mat schwinger_j1(Index d1, Index d2) {
  Mat a1 = mode1_op(annihilation(d1), d2);
  Mat a2 = mode2_op(annihilation(d2), d1);
  return 0.5 * (a1.adjoint() * a2 + a1 * a2.adjoint());
}

Mat schwinger_j2(Index d1, Index d2) {
  Mat a1 = mode1_op(annihilation(d1), d2);
  Mat a2 = mode2_op(annihilation(d2), d1);
  return cdouble(0, -0.5) * (a1.adjoint() * a2 - a1 * a2.adjoint());
}

Mat schwinger_j3(Index d1, Index d2) {
  return 0.5 * (mode1_op(number_op(d1), d2) - mode2_op(number_op(d2), d1));
}

Mat parity12(Index d1, Index d2) {
  Mat p = Mat::Zero(d1 * d2, d1 * d2);
  for (Index n1 = 0; n1 < d1; ++n1)
    for (Index n2 = 0; n2 < d2; ++n2)
      p(n1 * d2 + n2, n1 * d2 + n2) = parity_sign(n1 + n2);
  return p;
}

Mat build_H_pm(int sign, const ModelParams& p, Index d1, Index d2) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("build_H_pm: sign must be +1 or -1");
  const Mat P = parity12(d1, d2);
  const Mat id = Mat::Identity(d1 * d2, d1 * d2);
  Mat H = Mat::Zero(d1 * d2, d1 * d2);
  for (int j = 1; j <= 2; ++j) {
    const double sj = parity_sign(j);  // (-1)^j
    Mat aj = (j == 1) ? mode1_op(annihilation(d1), d2)
                      : mode2_op(annihilation(d2), d1);
    H += (p.omega + sj * p.omega0) * (aj.adjoint() * aj);
    Mat bracket = id + double(sign) * sj * P;
    H -= (sj / std::sqrt(2.0)) * p.g *
         (aj * bracket + bracket * aj.adjoint());
  }
  return H;
}

Mat eta_pm(int sign, Index d1, Index d2) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("eta_pm: sign must be +1 or -1");
  const Mat id = Mat::Identity(d1 * d2, d1 * d2);
  return -2.0 * schwinger_j3(d1, d2) +
         0.5 * (id - double(sign) * parity12(d1, d2));
}

Mat build_rotation_Dy(double theta, Index d1, Index d2) {
  return unitary_exp_i(schwinger_j2(d1, d2), theta);
}

Mat build_H_lab(const ModelParams& p, Index d1, Index d2) {
  Mat a1 = mode1_op(annihilation(d1), d2);
  Mat a2 = mode2_op(annihilation(d2), d1);
  Mat coupling = a1.adjoint() + a1 + a2.adjoint() - a2;
  return 0.5 * p.omega0 * embed_qubit(sigma_z(), d1, d2) +
         p.omega * embed_two_mode(a1.adjoint() * a1 + a2.adjoint() * a2) +
         p.g * (kron(coupling, sigma_plus()) +
                kron(coupling.adjoint(), sigma_minus()));
}

Mat build_H_cc(const ModelParams& p, Index d1, Index d2) {
  Mat a1 = mode1_op(annihilation(d1), d2);
  Mat a2 = mode2_op(annihilation(d2), d1);
  return 0.5 * p.omega0 * embed_qubit(sigma_z(), d1, d2) +
         p.omega * embed_two_mode(a1.adjoint() * a1 + a2.adjoint() * a2) +
         std::sqrt(2.0) * p.g *
             (kron(a1.adjoint() - a2, sigma_plus()) +
              kron(a1 - a2.adjoint(), sigma_minus()));
}

Mat build_U_FG(Index d1, Index d2) {
  const Mat id = Mat::Identity(d1 * d2, d1 * d2);
  const Mat P = parity12(d1, d2);
  return (1.0 / std::sqrt(2.0)) * qubit_blocks(id, P, id, -P);
}

Mat build_T(const ModelParams& p, double t, Index d1, Index d2) {
  // e^{i pi/4 sigma2} = [[cos, sin], [-sin, cos]] at pi/4
  const double c = std::cos(M_PI / 4.0), s = std::sin(M_PI / 4.0);
  Mat rq(2, 2);
  rq << c, s, -s, c;

  // e^{i omega0 eta_cc t}: eta_cc is diagonal in the number basis
  const Index d = 2 * d1 * d2;
  Mat phase = Mat::Zero(d, d);
  for (Index n1 = 0; n1 < d1; ++n1)
    for (Index n2 = 0; n2 < d2; ++n2)
      for (Index sq = 0; sq < 2; ++sq) {
        double eta = -double(n1 - n2) + (sq == 0 ? 1.0 : 0.0);
        Index idx = composite_index(n1, n2, sq, d2);
        phase(idx, idx) = std::polar(1.0, p.omega0 * eta * t);
      }

  Mat dy = embed_two_mode(build_rotation_Dy(M_PI / 2.0, d1, d2));
  return build_U_FG(d1, d2) * embed_qubit(rq, d1, d2) * phase * dy;
}

Mat build_eta(Frame frame, Index d1, Index d2) {
  const Index d = 2 * d1 * d2;
  Mat J = (frame == Frame::Lab) ? schwinger_j1(d1, d2) : schwinger_j3(d1, d2);
  return -2.0 * embed_two_mode(J) +
         0.5 * (embed_qubit(sigma_z(), d1, d2) + Mat::Identity(d, d));
}

Mat build_eta_fg(Index d1, Index d2) {
  return qubit_blocks(eta_pm(+1, d1, d2), Mat::Zero(d1 * d2, d1 * d2),
                      Mat::Zero(d1 * d2, d1 * d2), eta_pm(-1, d1, d2));
}

namespace {

template <typename Keep>
double masked_max_abs(const Mat& m, const Keep& keep) {
  double best = 0;
  for (Index r = 0; r < m.rows(); ++r) {
    if (!keep(r)) continue;
    for (Index c = 0; c < m.cols(); ++c) {
      if (!keep(c)) continue;
      best = std::max(best, std::abs(m(r, c)));
    }
  }
  return best;
}

}  // namespace

double interior_max_abs_two_mode(const Mat& m, Index d1, Index d2, Index guard) {
  return masked_max_abs(m, [&](Index idx) {
    Index n1 = idx / d2, n2 = idx % d2;
    return n1 < d1 - guard && n2 < d2 - guard;
  });
}

double interior_max_abs(const Mat& m, Index d1, Index d2, Index guard) {
  return masked_max_abs(m, [&](Index idx) {
    Index n1 = (idx / 2) / d2, n2 = (idx / 2) % d2;
    return n1 < d1 - guard && n2 < d2 - guard;
  });
}

double total_number_max_abs(const Mat& m, Index d1, Index d2, Index max_total) {
  return masked_max_abs(m, [&](Index idx) {
    Index n1 = (idx / 2) / d2, n2 = (idx / 2) % d2;
    return n1 + n2 <= max_total;
  });
}

}  // namespace parabose
