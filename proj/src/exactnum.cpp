#include "airy/exactnum.hpp"

#include <sstream>
#include <stdexcept>

namespace airy {

// ---------------------------------------------------------------- GaussInt

GaussInt GaussInt::times_i_pow(unsigned k) const {
  switch (k & 3) {
    case 0: return *this;
    case 1: return {-im, re};
    case 2: return {-re, -im};
    default: return {im, -re};
  }
}

GaussInt GaussInt::div_exact(const GaussInt& a, const GaussInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Gaussian integer");
  GaussInt num = a * b.conj();
  mpz_class n = b.norm();
  GaussInt q;
  if (!mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t()))
    throw std::domain_error("inexact Gaussian division");
  q.re = num.re / n;
  q.im = num.im / n;
  return q;
}

GaussInt GaussInt::div_one_plus_i() const {
  // z/(1+i) = z*(1-i)/2
  return {(re + im) / 2, (im - re) / 2};
}

std::string GaussInt::to_string() const {
  std::ostringstream os;
  os << re.get_str();
  if (im >= 0) os << "+" << im.get_str() << "i";
  else os << im.get_str() << "i";
  return os.str();
}

GaussInt gauss_pow(const GaussInt& z, unsigned long e) {
  GaussInt r(1, 0), base = z;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

// ------------------------------------------------------------ ClearedValue

void ClearedValue::assign(GaussInt num, unsigned denom_exp) {
  if (num.is_zero()) {
    num_ = GaussInt(0, 0);
    exp_ = 0;
    return;
  }
  while (denom_exp > 0 && num.divisible_by_one_plus_i()) {
    num = num.div_one_plus_i();
    --denom_exp;
  }
  num_ = std::move(num);
  exp_ = denom_exp;
}

ClearedValue cleared_normalize(GaussInt num, unsigned denom_exp) {
  return ClearedValue(std::move(num), denom_exp);
}

mpq_class ClearedValue::abs_square() const {
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), exp_);
  mpq_class q(num_.norm(), den);
  q.canonicalize();
  return q;
}

ClearedValue operator+(const ClearedValue& a, const ClearedValue& b) {
  unsigned e = std::max(a.exp_, b.exp_);
  GaussInt one_plus_i(1, 1);
  GaussInt na = a.num_ * gauss_pow(one_plus_i, e - a.exp_);
  GaussInt nb = b.num_ * gauss_pow(one_plus_i, e - b.exp_);
  return ClearedValue(na + nb, e);
}

ClearedValue operator*(const ClearedValue& a, const ClearedValue& b) {
  return ClearedValue(a.num_ * b.num_, a.exp_ + b.exp_);
}

std::string ClearedValue::to_string() const {
  std::ostringstream os;
  os << num_.to_string() << " over (1+i)^" << exp_;
  return os.str();
}

std::string ClearedValue::rational_string() const {
  // num/(1+i)^e rewritten as a Gaussian integer over a power of 2, using
  // (1+i)^(2k) = 2^k i^k and, for odd e, one extra factor z -> z(1-i)/2.
  GaussInt z = num_;
  unsigned k = exp_ / 2;
  unsigned pow2 = k;
  if (exp_ & 1) {
    z = z * GaussInt(1, -1);
    ++pow2;
  }
  z = z.times_i_pow((4 - (k & 3)) & 3);  // divide by i^k
  while (pow2 > 0 && mpz_even_p(z.re.get_mpz_t()) && mpz_even_p(z.im.get_mpz_t())) {
    z.re /= 2;
    z.im /= 2;
    --pow2;
  }
  std::ostringstream os;
  if (pow2 == 0) {
    os << z.to_string();
  } else {
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), pow2);
    os << "(" << z.to_string() << ")/" << den.get_str();
  }
  return os.str();
}

// ------------------------------------------------------------ RealInterval

RealInterval::RealInterval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

RealInterval& RealInterval::operator=(RealInterval o) {
  std::swap(prec_, o.prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

RealInterval RealInterval::from_int(long v, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::sqrt_of_int(unsigned long v, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_sqrt_ui(r.lo_, v, MPFR_RNDD);
  mpfr_sqrt_ui(r.hi_, v, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::cos_pi_ratio(unsigned long num, unsigned long den,
                                        mpfr_prec_t prec) {
  mpfr_prec_t p = prec + 16;
  mpfr_t pi_lo, pi_hi, th_lo, th_hi, c, delta;
  mpfr_inits2(p, pi_lo, pi_hi, th_lo, th_hi, c, delta, (mpfr_ptr) nullptr);
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);
  // theta in [th_lo, th_hi], both nonnegative since num, den >= 0
  mpfr_mul_ui(th_lo, pi_lo, num, MPFR_RNDD);
  mpfr_div_ui(th_lo, th_lo, den, MPFR_RNDD);
  mpfr_mul_ui(th_hi, pi_hi, num, MPFR_RNDU);
  mpfr_div_ui(th_hi, th_hi, den, MPFR_RNDU);
  // |cos x - cos y| <= |x - y|: evaluate at th_lo and pad by the width
  mpfr_sub(delta, th_hi, th_lo, MPFR_RNDU);
  mpfr_cos(c, th_lo, MPFR_RNDN);
  RealInterval r(prec);
  mpfr_sub(r.lo_, c, delta, MPFR_RNDD);
  mpfr_nextbelow(r.lo_);
  mpfr_add(r.hi_, c, delta, MPFR_RNDU);
  mpfr_nextabove(r.hi_);
  mpfr_clears(pi_lo, pi_hi, th_lo, th_hi, c, delta, (mpfr_ptr) nullptr);
  return r;
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  RealInterval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  RealInterval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  RealInterval r(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  // lower
  mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  // upper
  mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by zero");
  RealInterval r(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

RealInterval RealInterval::pow_int(long e) const {
  RealInterval one = RealInterval::from_int(1, prec_);
  if (e == 0) return one;
  bool invert = e < 0;
  unsigned long k = invert ? -(unsigned long)e : (unsigned long)e;
  RealInterval acc = one, base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return invert ? one / acc : acc;
}

bool RealInterval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool RealInterval::contains(const mpq_class& v) const {
  return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool RealInterval::definitely_less(const RealInterval& o) const {
  return mpfr_cmp(hi_, o.lo_) < 0;
}

bool RealInterval::definitely_greater(const RealInterval& o) const {
  return mpfr_cmp(lo_, o.hi_) > 0;
}

bool RealInterval::overlaps(const RealInterval& o) const {
  return !definitely_less(o) && !definitely_greater(o);
}

std::optional<mpz_class> RealInterval::unique_integer() const {
  mpz_class zlo, zhi;
  mpfr_get_z(zlo.get_mpz_t(), lo_, MPFR_RNDU);  // ceil(lo)
  mpfr_get_z(zhi.get_mpz_t(), hi_, MPFR_RNDD);  // floor(hi)
  if (zlo == zhi) return zlo;
  return std::nullopt;
}

double RealInterval::lower_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealInterval::upper_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

std::string RealInterval::to_string() const {
  std::ostringstream os;
  os << "[" << lower_d() << ", " << upper_d() << "]";
  return os.str();
}

// --------------------------------------------------------------- IntPoly

void IntPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.normalize();
  return r;
}

IntPoly IntPoly::div_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  IntPoly rem = num, q;
  rem.normalize();
  if (rem.degree() < den.degree()) {
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    return {};
  }
  q.c.assign(rem.degree() - den.degree() + 1, mpz_class(0));
  const mpz_class& lead = den.c.back();
  for (int k = rem.degree() - den.degree(); k >= 0; --k) {
    mpz_class top = rem.c[k + den.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    mpz_class f = top / lead;
    q.c[k] = f;
    for (int j = 0; j <= den.degree(); ++j) rem.c[k + j] -= f * den.c[j];
  }
  for (const auto& r : rem.c)
    if (r != 0) throw std::domain_error("inexact polynomial division");
  q.normalize();
  return q;
}

IntPoly IntPoly::compose_x_pow(unsigned k) const {
  if (is_zero() || k == 0) {
    if (k == 0) throw std::invalid_argument("compose_x_pow: k must be positive");
    return {};
  }
  IntPoly r;
  r.c.assign((c.size() - 1) * k + 1, mpz_class(0));
  for (size_t i = 0; i < c.size(); ++i) r.c[i * k] = c[i];
  r.normalize();
  return r;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << (c[i] > 0 ? " + " : " - ");
    else if (c[i] < 0) os << "-";
    mpz_class a = abs(c[i]);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) os << "X";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

IntPoly x_pow_minus_one(unsigned n) {
  IntPoly p;
  p.c.assign(n + 1, mpz_class(0));
  p.c[0] = -1;
  p.c[n] = 1;
  return p;
}

namespace {

std::vector<unsigned long> distinct_prime_factors(unsigned long n) {
  std::vector<unsigned long> ps;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

IntPoly cyclotomic_poly(unsigned long n) {
  if (n == 0) throw std::invalid_argument("cyclotomic index must be >= 1");
  auto ps = distinct_prime_factors(n);
  unsigned long rad = 1;
  for (auto p : ps) rad *= p;
  // Phi over the radical: Phi_{mp}(X) = Phi_m(X^p) / Phi_m(X) for new primes p
  IntPoly phi = x_pow_minus_one(1);  // Phi_1 = X - 1
  unsigned long m = 1;
  for (auto p : ps) {
    phi = IntPoly::div_exact(phi.compose_x_pow(unsigned(p)), phi);
    m *= p;
  }
  (void)m;
  if (n != rad) phi = phi.compose_x_pow(unsigned(n / rad));
  return phi;
}

mpz_class eval_poly_int(const IntPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

GaussInt eval_poly_gauss(const IntPoly& p, const GaussInt& z) {
  GaussInt acc(0, 0);
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

mpz_class cyclotomic_eval_int(unsigned long n, const mpz_class& x) {
  auto ps = distinct_prime_factors(n);
  unsigned long rad = 1;
  for (auto p : ps) rad *= p;
  mpz_class y;
  mpz_pow_ui(y.get_mpz_t(), x.get_mpz_t(), n / rad);
  // Phi_rad(y) = prod_{d | rad} (y^d - 1)^{mu(rad/d)}
  mpz_class num = 1, den = 1;
  unsigned k = unsigned(ps.size());
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    unsigned long d = rad;
    int bits = 0;
    for (unsigned i = 0; i < k; ++i)
      if (mask >> i & 1) {
        d /= ps[i];
        ++bits;
      }
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), y.get_mpz_t(), d);
    t -= 1;
    if (t == 0) throw std::domain_error("cyclotomic_eval_int at a root of unity");
    if (bits % 2 == 0) num *= t;
    else den *= t;
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("cyclotomic divisor product not exact");
  return num / den;
}

GaussInt cyclotomic_eval_gauss(unsigned long n, const GaussInt& z) {
  auto ps = distinct_prime_factors(n);
  unsigned long rad = 1;
  for (auto p : ps) rad *= p;
  GaussInt y = gauss_pow(z, n / rad);
  GaussInt num(1, 0), den(1, 0);
  unsigned k = unsigned(ps.size());
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    unsigned long d = rad;
    int bits = 0;
    for (unsigned i = 0; i < k; ++i)
      if (mask >> i & 1) {
        d /= ps[i];
        ++bits;
      }
    GaussInt t = gauss_pow(y, d);
    t.re -= 1;
    if (t.is_zero()) throw std::domain_error("cyclotomic_eval_gauss at a root of unity");
    if (bits % 2 == 0) num = num * t;
    else den = den * t;
  }
  return GaussInt::div_exact(num, den);
}

std::string decimal_string(const mpq_class& v, int digits) {
  if (v < 0) throw std::invalid_argument("decimal_string: negative value");
  mpz_class num = v.get_num(), den = v.get_den();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, unsigned(digits));
  mpz_class n10 = num * scale;
  mpz_class q = n10 / den, r = n10 % den;
  if (2 * r >= den) ++q;  // round half up
  std::string s = q.get_str();
  if (int(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return s;
}

}  // namespace airy
