#include "ptrank/convert.hpp"

#include <cmath>

namespace ptrank {

double to_double(const BigRat& x) { return static_cast<double>(x); }

std::complex<double> to_complex(const GaussianRational& x) {
  return {to_double(x.real()), to_double(x.imag())};
}

BigRat best_rational(double x, const BigInt& limit) {
  if (limit < 1) throw Error("best_rational: denominator limit must be >= 1");
  if (!std::isfinite(x)) throw Error("best_rational: input not finite");

  // Exact dyadic value of the double, then walk its continued fraction.
  const BigRat target(x);
  const bool neg = target < 0;
  BigRat t = neg ? BigRat(-target) : target;

  // Convergents p/q of t; when the next convergent would overshoot the
  // limit, compare the largest admissible semiconvergent against the
  // last convergent. The first convergent has denominator 1, so by the
  // time the limit can be exceeded q1 >= 1 holds.
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  BigRat frac = t;
  for (;;) {
    BigInt a = numerator(frac) / denominator(frac);  // floor (frac >= 0)
    BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > limit) {
      BigInt k = (limit - q0) / q1;
      BigRat semi(k * p1 + p0, k * q1 + q0);
      BigRat conv(p1, q1);
      using boost::multiprecision::abs;
      BigRat best = abs(semi - t) < abs(conv - t) ? semi : conv;
      return neg ? -best : best;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    BigRat rem = frac - BigRat(a);
    if (rem == 0) break;  // exact
    frac = 1 / rem;
  }
  BigRat exact(p1, q1);
  return neg ? -exact : exact;
}

FloatMatrix to_float(const ExactMatrix& m) {
  FloatMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = to_complex(m(i, j));
  return r;
}

ExactMatrix to_exact(const FloatMatrix& m, const BigInt& denominator_limit) {
  ExactMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      r(i, j) = GaussianRational(best_rational(m(i, j).real(), denominator_limit),
                                 best_rational(m(i, j).imag(), denominator_limit));
  return r;
}

}  // namespace ptrank
