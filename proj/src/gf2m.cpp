#include "airy/gf2m.hpp"

#include <stdexcept>
#include <sstream>

namespace airy {

namespace {

int poly_degree(std::uint64_t p) {
  return p ? 63 - __builtin_clzll(p) : -1;
}

// Product of two polynomials over F_2 reduced modulo `mod` of degree d.
std::uint64_t polymulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod, int d) {
  std::uint64_t acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> d & 1) a ^= mod;
  }
  return acc;
}

std::uint64_t polygcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    int da = poly_degree(a), db = poly_degree(b);
    while (da >= db) {
      a ^= b << (da - db);
      da = poly_degree(a);
    }
    std::swap(a, b);
  }
  return a;
}

}  // namespace

bool is_irreducible(std::uint64_t poly, int degree) {
  if (degree < 1 || poly_degree(poly) != degree) return false;
  if (degree == 1) return true;
  // h = X^(2^i) mod poly, by repeated squaring of X.
  std::uint64_t h = 2;  // X
  for (int i = 1; i <= degree / 2; ++i) {
    h = polymulmod(h, h, poly, degree);
    if (polygcd(h ^ 2u, poly) != 1) return false;
  }
  return true;
}

std::uint64_t least_irreducible(int degree) {
  if (degree < 1 || degree > FieldCtx::kMaxDegree)
    throw std::out_of_range("field degree must be in 1..30");
  std::uint64_t top = std::uint64_t(1) << degree;
  for (std::uint64_t low = 1; low < top; low += 2)
    if (is_irreducible(top | low, degree)) return top | low;
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::uint64_t next_irreducible(int degree, std::uint64_t poly) {
  std::uint64_t top = std::uint64_t(1) << degree;
  for (std::uint64_t low = (poly ^ top) + 1; low < top; ++low)
    if (is_irreducible(top | low, degree)) return top | low;
  throw std::runtime_error("no further irreducible of this degree");
}

FieldCtx::FieldCtx(int degree) : degree_(degree), modulus_(least_irreducible(degree)) {
  init();
}

FieldCtx::FieldCtx(int degree, std::uint64_t modulus)
    : degree_(degree), modulus_(modulus) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::out_of_range("field degree must be in 1..30");
  if (!is_irreducible(modulus, degree))
    throw std::invalid_argument("modulus fails the irreducibility certificate");
  init();
}

FqElt FieldCtx::mul(FqElt a, FqElt b) const {
  std::uint64_t acc = 0, aa = a, bb = b;
  while (bb) {
    if (bb & 1) acc ^= aa;
    bb >>= 1;
    aa <<= 1;
  }
  // reduce: degree of acc is at most 2d-2
  for (int bit = 2 * degree_ - 2; bit >= degree_; --bit)
    if (acc >> bit & 1) acc ^= modulus_ << (bit - degree_);
  return FqElt(acc);
}

FqElt FieldCtx::pow(FqElt a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  FqElt base = a, r = 1;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FqElt FieldCtx::inv(FqElt a) const {
  if (a == 0) throw std::domain_error("0 is not invertible");
  return pow(a, group_order() - 1);
}

FqElt FieldCtx::frobenius(FqElt a, long i) const {
  if (i < 0) throw std::invalid_argument("frobenius exponent must be >= 0");
  i %= degree_;
  FqElt r = a;
  for (long j = 0; j < i; ++j) r = mul(r, r);
  return r;
}

FqElt FieldCtx::trace_mask(FqElt x) const {
  FqElt m = 0;
  while (x) {
    int j = __builtin_ctz(x);
    m ^= basis_masks_[j];
    x &= x - 1;
  }
  return m;
}

std::uint32_t FieldCtx::log(FqElt a) const {
  if (a == 0) throw std::domain_error("log of 0");
  if (!has_tables()) throw std::logic_error("log tables not built for this degree");
  return log_[a];
}

FqElt FieldCtx::alog(std::uint64_t e) const {
  if (!has_tables()) throw std::logic_error("log tables not built for this degree");
  return alog_[e % group_order()];
}

std::string FieldCtx::modulus_hex() const {
  std::ostringstream os;
  os << "0x" << std::hex << modulus_;
  return os.str();
}

void FieldCtx::init() {
  // Trace of a basis element X^j by summing its Frobenius orbit.
  auto raw_trace = [&](FqElt a) {
    FqElt acc = a, c = a;
    for (int i = 1; i < degree_; ++i) {
      c = mul(c, c);
      acc ^= c;
    }
    if (acc > 1) throw std::logic_error("trace escaped F_2");
    return int(acc);
  };
  trace_vector_ = 0;
  // Tr(X^c) for c <= 2d-2 drives both the trace vector and the pairing masks.
  std::vector<int> tr_pow(2 * degree_ - 1);
  for (int c = 0; c < 2 * degree_ - 1; ++c) {
    std::uint64_t v = std::uint64_t(1) << c;
    for (int bit = 2 * degree_ - 2; bit >= degree_; --bit)
      if (v >> bit & 1) v ^= modulus_ << (bit - degree_);
    tr_pow[c] = raw_trace(FqElt(v));
  }
  for (int j = 0; j < degree_; ++j)
    trace_vector_ |= FqElt(tr_pow[j]) << j;

  basis_masks_.assign(degree_, 0);
  for (int j = 0; j < degree_; ++j) {
    FqElt m = 0;
    for (int i = 0; i < degree_; ++i) m |= FqElt(tr_pow[i + j]) << i;
    basis_masks_[j] = m;
  }

  // Generator: smallest bit pattern whose order is 2^d - 1.
  std::uint64_t n = group_order();
  std::vector<std::uint64_t> prime_factors;
  {
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        prime_factors.push_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) prime_factors.push_back(m);
  }
  if (n == 1) {
    generator_ = 1;
  } else {
    for (FqElt g = 2;; ++g) {
      bool ok = true;
      for (std::uint64_t p : prime_factors)
        if (pow(g, n / p) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        generator_ = g;
        break;
      }
    }
  }

  if (degree_ <= kTableDegree) {
    log_.assign(order(), 0);
    alog_.assign(n, 0);
    FqElt cur = 1;
    for (std::uint64_t j = 0; j < n; ++j) {
      alog_[j] = cur;
      log_[cur] = std::uint32_t(j);
      cur = mul(cur, generator_);
    }
  }
}

FieldCtx make_field(int degree) { return FieldCtx(degree); }

}  // namespace airy
