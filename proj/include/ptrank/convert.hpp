#ifndef PTRANK_CONVERT_HPP
#define PTRANK_CONVERT_HPP

#include "ptrank/matrix.hpp"

namespace ptrank {

double to_double(const BigRat& x);
std::complex<double> to_complex(const GaussianRational& x);

/// Best rational approximation to x with denominator <= limit
/// (continued-fraction convergents and semiconvergents).
BigRat best_rational(double x, const BigInt& limit);

FloatMatrix to_float(const ExactMatrix& m);

/// Componentwise continued-fraction rounding, denominators <= limit.
ExactMatrix to_exact(const FloatMatrix& m, const BigInt& denominator_limit);

}  // namespace ptrank

#endif  // PTRANK_CONVERT_HPP
