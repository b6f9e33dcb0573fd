#pragma once

#include <string>
#include <utility>
#include <vector>

#include "parabose/linalg.hpp"

// Exact spectral time evolution: diagonalize once, then evaluate
// psi(t) = V e^{-i L t} V† psi(0) at arbitrary t with no stepping error.

namespace parabose {

struct Propagator {
  RVec eigenvalues;
  Mat eigenvectors;
};

// Rejects non-Hermitian input (residual above 1e-10).  Large matrices are
// diagonalized through LAPACK's divide-and-conquer driver.
Propagator make_propagator(const Mat& H);

Vec evolve(const Propagator& prop, const Vec& psi0, double t);

struct TimeSeries {
  RVec times;
  std::vector<std::string> names;
  RMat columns;  // one row per time sample, one column per observable
};

using NamedOps = std::vector<std::pair<std::string, Mat>>;

// Sampled expectation values; asserts imaginary parts below 1e-8 before
// discarding them.  Samples are independent and evaluated in parallel;
// evolve_series_serial is the bit-identical single-threaded reference.
TimeSeries evolve_series(const Propagator& prop, const Vec& psi0,
                         const RVec& times, const NamedOps& observables);
TimeSeries evolve_series_serial(const Propagator& prop, const Vec& psi0,
                                const RVec& times, const NamedOps& observables);

// Population in the top `guard` levels of a single-oscillator state.
double leakage(const Vec& psi, Index guard);

// Composite mode1 x mode2 x qubit state: maximum over the two modes of the
// population within `guard` levels of that mode's truncation boundary.
double leakage_composite(const Vec& psi, Index d1, Index d2, Index guard);

}  // namespace parabose
