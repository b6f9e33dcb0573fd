#pragma once

#include <vector>

#include "parabose/linalg.hpp"

// Finite-dimensional Hilbert-space primitives for two boson modes and one
// qubit.  Composite ordering is fixed everywhere in this project as
// mode1 (x) mode2 (x) qubit, with composite index
//   (n1 * d2 + n2) * 2 + s,   s = 0 -> |e>,  s = 1 -> |g>.

namespace parabose {

// ---- single-mode boson operators -----------------------------------------

// <m|a|n> = sqrt(n) delta_{m,n-1}; the top Fock level is truncated.
Mat annihilation(Index dim);
Mat creation(Index dim);
Mat number_op(Index dim);
// diag((-1)^k), computed from integer parity.
Mat parity_op(Index dim);

// ---- qubit operators, basis (|e>, |g>) -----------------------------------

Mat sigma_z();  // diag(+1, -1)
Mat sigma_y();
Mat sigma_plus();   // |e><g|
Mat sigma_minus();  // |g><e|

// ---- tensor products and embeddings --------------------------------------

// Kronecker product of the operators in the given order.
Mat tensor(const std::vector<Mat>& ops);

// Embeddings into the full mode1 (x) mode2 (x) qubit space.
Mat embed_mode1(const Mat& op, Index d2);
Mat embed_mode2(const Mat& op, Index d1);
Mat embed_qubit(const Mat& op, Index d1, Index d2);
// Two-mode operator (d1*d2 square) extended by the identity on the qubit.
Mat embed_two_mode(const Mat& op);

inline Index composite_index(Index n1, Index n2, Index s, Index d2) {
  return (n1 * d2 + n2) * 2 + s;
}

// ---- states ---------------------------------------------------------------

Vec basis_vector(Index dim, Index k);
// Composite basis state |n1, n2> (x) |s>.
Vec composite_basis(Index n1, Index n2, Index s, Index d1, Index d2);

// Truncated coherent state, renormalized after truncation.
Vec coherent_state(cdouble alpha, Index dim);

// <psi|op|psi>; throws on dimension mismatch.
cdouble expectation(const Mat& op, const Vec& psi);

// ---- density matrices -----------------------------------------------------

Mat dyad(const Vec& psi);

// Trace out mode2 and the qubit, returning the d1 x d1 reduced state.
Mat partial_trace_first_mode(const Mat& rho, Index d1, Index d2, Index dq);

}  // namespace parabose
