#include "gradus/real.hpp"

#include <algorithm>
#include <memory>

#include "gradus/errors.hpp"

namespace gradus {

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  bool ok = !decimal.empty();
  if (ok) {
    char* end = nullptr;
    mpfr_strtofr(value_, decimal.c_str(), &end, 10, MPFR_RNDN);
    ok = *end == '\0' && mpfr_number_p(value_);
  }
  if (!ok) {
    mpfr_clear(value_);
    throw Error(ErrorCode::Parse, "not a decimal number: '" + decimal + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_string(int digits) const {
  // %.*Rg with digits == 0 means "enough for the precision".
  if (digits <= 0) digits = static_cast<int>(precision() * 0.30103) + 2;
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, value_);
  std::unique_ptr<char, void (*)(char*)> holder(raw, [](char* p) { mpfr_free_str(p); });
  return std::string(raw);
}

Real Real::pow2(long exponent, mpfr_prec_t prec) {
  Real r(1, prec);
  mpfr_mul_2si(r.value_, r.value_, exponent, MPFR_RNDN);
  return r;
}

void Real::raise_to(mpfr_prec_t prec) {
  if (prec > precision()) mpfr_prec_round(value_, prec, MPFR_RNDN);
}

Real& Real::operator+=(const Real& o) {
  raise_to(o.precision());
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  raise_to(o.precision());
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  raise_to(o.precision());
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  raise_to(o.precision());
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long k) {
  mpfr_mul_si(value_, value_, k, MPFR_RNDN);
  return *this;
}

void Real::add_mul(const mpz_class& k, const Real& o) {
  raise_to(o.precision());
  if (k == 0) return;
  Real t(o.precision());
  mpfr_mul_z(t.value_, o.value_, k.get_mpz_t(), MPFR_RNDN);
  mpfr_add(value_, value_, t.value_, MPFR_RNDN);
}

Real abs(const Real& x) {
  Real r = x;
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r = x;
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real d = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / d;
  Real i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Real norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real abs(const Complex& z) { return sqrt(norm2(z)); }

}  // namespace gradus
