#pragma once

// Hypergeometric series needed by the closed-form results, on real
// arguments of moderate size.

namespace parabose {

struct SeriesResult {
  double value = 0;
  int terms_used = 0;
  double est_error = 0;
};

// 1F1(a,b;z) by term-ratio recurrence.  For z < 0 the Kummer transform
// 1F1(a,b;z) = e^z 1F1(b-a,b;-z) avoids alternating-series cancellation.
// b at a nonpositive integer, or |z| > 200, is rejected.
SeriesResult hyp1f1(double a, double b, double z);

// 2F2(1,1; 3/2, 2; z) for z <= 0, |z| <= 400.  Compensated double
// summation up to |z| = 25; beyond that the alternating series cancels
// catastrophically in double precision and the extended-precision path
// takes over.
SeriesResult hyp2f2_1132(double z);

// The extended-precision (MPFR) series path, exposed directly.
double hyp2f2_1132_extended(double z);

// ln(n!) for n >= 0.
double log_factorial(long n);

}  // namespace parabose
