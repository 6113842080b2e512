#include "wavesym/real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace wavesym {

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Rational& q, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.bits());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, o.bits());
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.bits());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) {
    if (bits() != o.bits()) mpfr_set_prec(v_, o.bits());
    mpfr_swap(v_, o.v_);
  }
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

mpfr_prec_t Real::digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

std::string Real::str(int digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  mpfr_asprintf(&buf, fmt.c_str(), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

static mpfr_prec_t join(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

Real operator+(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a) {
  Real r(a.bits());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}
Real abs(const Real& a) {
  Real r(a.bits());
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }

Real pow10(long k, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_ui(r.get(), 10, MPFR_RNDN);
  mpfr_pow_si(r.get(), r.get(), k, MPFR_RNDN);
  return r;
}

Rational rationalize(const Real& r, const mpz_class& max_den) {
  // Convergents h_k/k_k of the continued fraction of r.
  mpfr_prec_t bits = r.bits();
  Real x = r;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Rational best = 0;
  for (int it = 0; it < 200; ++it) {
    Real fl(bits);
    mpfr_floor(fl.get(), x.get());
    mpz_class a;
    mpfr_get_z(a.get_mpz_t(), fl.get(), MPFR_RNDN);
    mpz_class h2 = a * h1 + h0;
    mpz_class k2 = a * k1 + k0;
    if (abs(k2) > max_den) break;
    best = Rational(h2, k2);
    best.canonicalize();
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    Real frac = x - fl;
    if (frac.is_zero()) break;
    // Stop once the fractional part is at the noise floor.
    Real eps = pow10(-static_cast<long>(bits / 4), bits);
    if (abs(frac) < eps) break;
    Real one(Rational(1), bits);
    x = one / frac;
  }
  return best;
}

}  // namespace wavesym
