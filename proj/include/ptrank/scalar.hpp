#ifndef PTRANK_SCALAR_HPP
#define PTRANK_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <string>
#include <type_traits>

namespace ptrank {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

/// Complex number with exact rational real and imaginary parts.
///
/// Both components are kept canonical by the underlying GMP rational:
/// lowest terms, strictly positive denominator. All arithmetic is exact,
/// including division, so ranks computed over this scalar carry no
/// tolerance at all.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long re, long im) : re_(re), im_(im) {}
  GaussianRational(BigRat re, BigRat im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit GaussianRational(const BigRat& re) : re_(re) {}

  static GaussianRational from_parts(const BigInt& re_num, const BigInt& re_den,
                                     const BigInt& im_num, const BigInt& im_den) {
    return GaussianRational(BigRat(re_num, re_den), BigRat(im_num, im_den));
  }

  const BigRat& real() const { return re_; }
  const BigRat& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  /// |z|^2 = re^2 + im^2, a nonnegative rational.
  BigRat norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    BigRat re = re_ * o.re_ - im_ * o.im_;
    BigRat im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
    BigRat n2 = o.norm2();
    if (n2 == 0) throw std::domain_error("GaussianRational: division by zero");
    BigRat re = (re_ * o.re_ + im_ * o.im_) / n2;
    BigRat im = (im_ * o.re_ - re_ * o.im_) / n2;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational inverse() const {
    GaussianRational one(1);
    return one /= *this;
  }

  std::string str() const {
    std::string s = re_.str();
    if (im_ != 0) {
      s += (im_ > 0 ? "+" : "") + im_.str() + "i";
    }
    return s;
  }

  /// Pivot-selection key: the larger numerator magnitude of the two
  /// components. On denominator-free entries this is the plain magnitude.
  BigInt pivot_key() const {
    using boost::multiprecision::abs;
    BigInt a = abs(numerator(re_));
    BigInt b = abs(numerator(im_));
    return a >= b ? a : b;
  }

 private:
  BigRat re_, im_;
};

// ---------------------------------------------------------------------------
// Generic scalar helpers shared between the exact and float variants.

template <typename T>
inline constexpr bool is_exact_scalar_v = std::is_same_v<T, GaussianRational>;

inline GaussianRational conjugate(const GaussianRational& x) { return x.conj(); }
inline std::complex<double> conjugate(const std::complex<double>& x) { return std::conj(x); }

inline bool scalar_is_zero(const GaussianRational& x) { return x.is_zero(); }
inline bool scalar_is_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0); }

template <typename T>
T scalar_from_int(long v) {
  if constexpr (is_exact_scalar_v<T>) {
    return GaussianRational(v);
  } else {
    return std::complex<double>(static_cast<double>(v), 0.0);
  }
}

}  // namespace ptrank

#endif  // PTRANK_SCALAR_HPP
