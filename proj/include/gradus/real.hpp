#pragma once

// Thin RAII wrapper over MPFR. Every value carries its own precision; the
// result of a binary operation takes the larger of the operand precisions.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>

namespace gradus {

class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64);
  Real(long value, mpfr_prec_t prec);
  Real(const mpz_class& value, mpfr_prec_t prec);
  // Decimal string such as "-1.25e3". Throws Parse on malformed input.
  Real(const std::string& decimal, mpfr_prec_t prec);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  std::string to_string(int digits = 0) const;
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  static Real pow2(long exponent, mpfr_prec_t prec);

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long k);
  // this += k * o, with k a small integer
  void add_mul(const mpz_class& k, const Real& o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator-(Real a) {
    mpfr_neg(a.value_, a.value_, MPFR_RNDN);
    return a;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_); }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_less_p(a.value_, b.value_)) return std::partial_ordering::less;
    if (mpfr_greater_p(a.value_, b.value_)) return std::partial_ordering::greater;
    if (mpfr_equal_p(a.value_, b.value_)) return std::partial_ordering::equivalent;
    return std::partial_ordering::unordered;
  }

 private:
  void raise_to(mpfr_prec_t prec);
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real max(const Real& a, const Real& b);

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return re.precision(); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
};

Complex conj(const Complex& z);
Real norm2(const Complex& z);  // |z|^2
Real abs(const Complex& z);

}  // namespace gradus
