#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Exact number backends: Gaussian integers, the ring Z[i][1/(1+i)] of
// cleared trace values, certified real intervals on top of MPFR, and
// integer polynomials with cyclotomic constructors.

namespace airy {

// ---------------------------------------------------------------- GaussInt

struct GaussInt {
  mpz_class re, im;

  GaussInt() = default;
  GaussInt(long r, long i) : re(r), im(i) {}
  GaussInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussInt conj() const { return {re, -im}; }
  mpz_class norm() const { return re * re + im * im; }

  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re == b.re && a.im == b.im;
  }

  // z * i^k
  GaussInt times_i_pow(unsigned k) const;

  // Exact quotient; throws if b does not divide a in Z[i].
  static GaussInt div_exact(const GaussInt& a, const GaussInt& b);

  bool divisible_by_one_plus_i() const { return mpz_even_p(mpz_class(re + im).get_mpz_t()); }
  GaussInt div_one_plus_i() const;  // a/(1+i), assumes divisibility

  std::string to_string() const;
};

GaussInt gauss_pow(const GaussInt& z, unsigned long e);

// ------------------------------------------------------------ ClearedValue

// num / (1+i)^denom_exp in canonical form: either num = 0 and exp = 0, or
// exp = 0, or (1+i) does not divide num.
class ClearedValue {
public:
  ClearedValue() = default;
  ClearedValue(GaussInt num, unsigned denom_exp) { assign(std::move(num), denom_exp); }

  const GaussInt& num() const { return num_; }
  unsigned denom_exp() const { return exp_; }

  mpq_class abs_square() const;  // |v|^2 = norm(num) / 2^exp

  friend bool operator==(const ClearedValue& a, const ClearedValue& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend ClearedValue operator+(const ClearedValue& a, const ClearedValue& b);
  friend ClearedValue operator*(const ClearedValue& a, const ClearedValue& b);

  std::string to_string() const;          // "a+bi over (1+i)^e"
  std::string rational_string() const;    // "(a+bi)/2^k" reduced form

private:
  void assign(GaussInt num, unsigned denom_exp);

  GaussInt num_{};
  unsigned exp_ = 0;
};

ClearedValue cleared_normalize(GaussInt num, unsigned denom_exp);

// ------------------------------------------------------------ RealInterval

// Closed interval with dyadic endpoints at a fixed MPFR precision; every
// operation rounds outward.
class RealInterval {
public:
  RealInterval() : RealInterval(64) {}
  explicit RealInterval(mpfr_prec_t prec);
  RealInterval(const RealInterval& o);
  RealInterval(RealInterval&& o) noexcept;
  RealInterval& operator=(RealInterval o);
  ~RealInterval();

  static RealInterval from_int(long v, mpfr_prec_t prec);
  static RealInterval from_mpz(const mpz_class& v, mpfr_prec_t prec);
  static RealInterval from_mpq(const mpq_class& v, mpfr_prec_t prec);
  static RealInterval sqrt_of_int(unsigned long v, mpfr_prec_t prec);
  // cos(pi * num/den), certified via a Lipschitz bound around the midpoint.
  static RealInterval cos_pi_ratio(unsigned long num, unsigned long den, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }

  friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator/(const RealInterval& a, const RealInterval& b);
  RealInterval pow_int(long e) const;  // negative e inverts (interval must avoid 0)

  bool contains_zero() const;
  bool contains(const mpq_class& v) const;
  bool definitely_less(const RealInterval& o) const;     // hi < o.lo
  bool definitely_greater(const RealInterval& o) const;  // lo > o.hi
  bool overlaps(const RealInterval& o) const;

  // The unique integer in the interval, if there is exactly one.
  std::optional<mpz_class> unique_integer() const;

  double lower_d() const;
  double upper_d() const;
  std::string to_string() const;

private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;

  friend class IntervalOps;
};

// Default hard cap on interval precision when doubling to separate values.
constexpr mpfr_prec_t kIntervalPrecisionCap = mpfr_prec_t(1) << 20;

// --------------------------------------------------------------- IntPoly

// Dense integer polynomial, coefficients low to high; the top coefficient
// is nonzero unless the polynomial is zero (empty vector).
struct IntPoly {
  std::vector<mpz_class> c;

  int degree() const { return int(c.size()) - 1; }
  void normalize();
  bool is_zero() const { return c.empty(); }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }

  // Exact division; throws if the remainder is nonzero.
  static IntPoly div_exact(const IntPoly& num, const IntPoly& den);

  IntPoly compose_x_pow(unsigned k) const;  // p(X^k)

  std::string to_string() const;
};

IntPoly x_pow_minus_one(unsigned n);

// n-th cyclotomic polynomial, exact integer coefficients.
IntPoly cyclotomic_poly(unsigned long n);

mpz_class eval_poly_int(const IntPoly& p, const mpz_class& x);    // Horner
GaussInt eval_poly_gauss(const IntPoly& p, const GaussInt& z);    // Horner

// Phi_n evaluated without building the polynomial, via the Moebius
// product over divisors of the radical; exact.
mpz_class cyclotomic_eval_int(unsigned long n, const mpz_class& x);
GaussInt cyclotomic_eval_gauss(unsigned long n, const GaussInt& z);

// ------------------------------------------------------------- decimals

// Decimal expansion of a non-negative rational, `digits` significant
// digits after the point, truncated (not rounded).
std::string decimal_string(const mpq_class& v, int digits);

}  // namespace airy
