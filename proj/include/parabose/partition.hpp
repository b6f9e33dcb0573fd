#pragma once

#include <utility>

#include "parabose/frames.hpp"

// Partition of the two-mode space into para-Bose sectors (sign, j) and the
// projected driven-oscillator Hamiltonians.
//
// Two basis maps are exposed on purpose.  basis_state is the published
// labeling |sign,j;k> -> |m1,m2>; it is what satisfies the J1 eigenvalue
// relations and the eta_+ sector constants.  chain_state is the ladder
// actually left invariant by H_sign: identical to basis_state for sign = +,
// but with the two modes swapped for sign = - (H_- = Swap H_+(-omega0) Swap,
// so its invariant chains are the mode-swapped + chains).  Projections use
// chain_state; the published map is kept for the spectral bookkeeping.

namespace parabose {

// h(k) = (2k - 1 + (-1)^k)/4 = floor(k/2), evaluated in exact integers.
long h_index(long k);

struct SubspaceLabel {
  int sign = +1;  // +1 or -1
  int j = 0;      // sector index in H_sign = ⊕_j H_{sign,j}
  // Family index N of the published 2N / 2N+1 sector split.
  int family_N() const { return j / 2; }
};

// Published two-mode Fock pair (m1, m2) of the k-th sector state.
std::pair<long, long> basis_state(const SubspaceLabel& label, long k);

// H-invariant chain member (see header comment).
std::pair<long, long> chain_state(const SubspaceLabel& label, long k);

// (kmax+1)-square matrix <chain(k')| H_sign |chain(k)>; tridiagonal.
// Requires d1, d2 to fit every chain Fock index up to k = kmax+1 with a
// 2-level guard band, else throws.
Mat project_H(const SubspaceLabel& label, const ModelParams& p, int kmax,
              Index d1, Index d2);

// Closed-form sector Hamiltonian on the para-Bose number basis.
//
// AsPrinted is the literal formula
//   w (n+j) -+ (w0/2)(-1)^{n+j} +- g (A† + A) + lambda_{sign,j}
// with lambda_{+,j} = w0 (j+1/2)(-1)^j and
// lambda_{-,j} = [w - w0 (j+1/2)](-1)^j - w0, ladder deformation f_j.
//
// Reconciled is the convention the direct projection selects: the same
// matrix with the global sign of omega0 flipped, i.e. diagonal
//   w (k+j) - sign * (-1)^j w0 [ j + (1-(-1)^k)/2 ],
// off-diagonal sign * g sqrt(k+1) f_j(k).  The two agree at omega0 = 0.
enum class DiagonalConvention { AsPrinted, Reconciled };

Mat driven_oscillator_H(const SubspaceLabel& label, const ModelParams& p,
                        int kmax,
                        DiagonalConvention conv = DiagonalConvention::Reconciled);

// <basis(k)| eta_+ |basis(k)> in exact integer arithmetic; constant in k
// within a sector: -2N on (+,2N) and (-,2N+1), 2(N+1) on (+,2N+1) and (-,2N).
double eta_expectation(const SubspaceLabel& label, long k);

}  // namespace parabose
