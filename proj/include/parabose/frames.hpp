#pragma once

#include "parabose/hilbert.hpp"

// Hamiltonians and unitaries for the two-mode + qubit system in its three
// frames (laboratory, cross-cavity "cc", Fulton-Gouterman), together with
// the conserved eta operators of each frame.
//
// Conventions fixed here once and used everywhere:
//   * sigma3 = diag(+1,-1) in the (|e>,|g>) order, sigma+ = |e><g|.
//   * H_cc = D_y(pi/2) H_Lab D_y(pi/2)†  (direction fixed empirically
//     against the explicit H_cc matrix).
//   * At omega0 != 0 the Fulton-Gouterman conjugation block-diagonalizes
//     the rotating-frame generator H_cc - omega0 * eta_cc; the blocks equal
//     H_pm with omega0 negated, shifted by -omega0/2.  At omega0 = 0 they
//     are exactly H_pm.

namespace parabose {

struct ModelParams {
  double omega0 = 0.0;  // effective qubit frequency
  double omega = 1.0;   // effective field frequency
  double g = 0.0;       // effective coupling
};

enum class Frame { Lab, CC };

// ---- two-mode operators (dimension d1*d2) ---------------------------------

Mat schwinger_j1(Index d1, Index d2);  // (a1† a2 + a1 a2†)/2
Mat schwinger_j2(Index d1, Index d2);  // -(i/2)(a1† a2 - a1 a2†)
Mat schwinger_j3(Index d1, Index d2);  // (n1 - n2)/2
Mat parity12(Index d1, Index d2);      // (-1)^{n1+n2}

// H_pm = sum_j [w + (-1)^j w0] n_j
//        - ((-1)^j/sqrt2) g { a_j [1 +- (-1)^j P12] + [1 +- (-1)^j P12] a_j† }
Mat build_H_pm(int sign, const ModelParams& p, Index d1, Index d2);

// eta_pm = -2 J3 + (1 -+ P12)/2
Mat eta_pm(int sign, Index d1, Index d2);

// Rotation D_y(theta) = e^{i theta J2} on the two-mode space.
Mat build_rotation_Dy(double theta, Index d1, Index d2);

// ---- composite operators (dimension 2*d1*d2) ------------------------------

Mat build_H_lab(const ModelParams& p, Index d1, Index d2);
Mat build_H_cc(const ModelParams& p, Index d1, Index d2);

// U_FG = (1/sqrt2) [[1, P12], [1, -P12]]  (qubit-block structure).
Mat build_U_FG(Index d1, Index d2);

// T = U_FG e^{i pi/4 sigma2} e^{i omega0 eta_cc t} e^{i pi/2 J2}.
// Time independent when omega0 = 0.
Mat build_T(const ModelParams& p, double t, Index d1, Index d2);

// eta_Lab = -2 J1 + (sigma3+1)/2,  eta_cc = -2 J3 + (sigma3+1)/2.
Mat build_eta(Frame frame, Index d1, Index d2);

// eta_FG = eta_+ |e><e| + eta_- |g><g| on the composite space.
Mat build_eta_fg(Index d1, Index d2);

// ---- truncation-aware residuals -------------------------------------------
//
// Commutators with hopping terms are exactly zero only away from the
// truncation boundary; these helpers take the max-abs over matrix elements
// whose row and column states stay inside the guarded interior.

// Two-mode matrix; keep rows/columns with both mode indices < d - guard.
double interior_max_abs_two_mode(const Mat& m, Index d1, Index d2, Index guard);

// Composite matrix; same per-mode guard, any qubit index.
double interior_max_abs(const Mat& m, Index d1, Index d2, Index guard);

// Composite matrix; keep states with total boson number <= max_total
// (for checks involving the mode-mixing rotation D_y).
double total_number_max_abs(const Mat& m, Index d1, Index d2, Index max_total);

}  // namespace parabose
