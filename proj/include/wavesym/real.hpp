#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace wavesym {

using Rational = mpq_class;

// Thin RAII wrapper over mpfr_t. Every value carries its own precision so
// concurrent evaluations never share global state.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 256);
  Real(const Rational& q, mpfr_prec_t bits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(int digits = 20) const;

  static mpfr_prec_t digits_to_bits(int digits);

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);
Real abs(const Real& a);
bool operator<(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);

// 10^k at the given precision.
Real pow10(long k, mpfr_prec_t bits);

// Closest rational with denominator <= max_den (continued fractions).
Rational rationalize(const Real& r, const mpz_class& max_den);

}  // namespace wavesym
