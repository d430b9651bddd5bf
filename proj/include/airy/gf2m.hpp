#pragma once

#include <cstdint>
#include <vector>
#include <string>

// Arithmetic in GF(2^d), d <= 30, with residues bit-packed into a
// 32-bit word: bit i of an element is the coefficient of X^i of the
// representative polynomial modulo the defining irreducible.

namespace airy {

using FqElt = std::uint32_t;

// Ben-Or certificate: a degree-d polynomial over F_2 is irreducible iff
// gcd(poly, X^(2^i) - X) = 1 for all 1 <= i <= d/2.
bool is_irreducible(std::uint64_t poly, int degree);

// Smallest (in the coefficient order from X^d downward, i.e. numerically
// smallest low word) irreducible polynomial of the given degree.
std::uint64_t least_irreducible(int degree);

class FieldCtx {
public:
  static constexpr int kMaxDegree = 30;
  static constexpr int kTableDegree = 20;  // log/antilog built up to here

  // Field with the canonical (least) modulus of the given degree.
  explicit FieldCtx(int degree);
  // Field with an explicit modulus; the irreducibility certificate is
  // rerun and failure throws.
  FieldCtx(int degree, std::uint64_t modulus);

  int degree() const { return degree_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t order() const { return std::uint64_t(1) << degree_; }  // #k
  std::uint64_t group_order() const { return order() - 1; }            // #k^x
  bool has_tables() const { return !log_.empty(); }

  bool same_field(const FieldCtx& other) const {
    return degree_ == other.degree_ && modulus_ == other.modulus_;
  }

  FqElt add(FqElt a, FqElt b) const { return a ^ b; }
  FqElt mul(FqElt a, FqElt b) const;
  FqElt sqr(FqElt a) const { return mul(a, a); }

  // Same product routed through the log tables when present.
  FqElt mul_fast(FqElt a, FqElt b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
      std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
      std::uint64_t n = group_order();
      if (s >= n) s -= n;
      return alog_[s];
    }
    return mul(a, b);
  }
  FqElt pow(FqElt a, std::uint64_t e) const;
  FqElt inv(FqElt a) const;             // throws on 0
  FqElt frobenius(FqElt a, long i) const;  // a^(2^i), i >= 0

  // Absolute trace to F_2, as a bit.
  int trace(FqElt a) const { return parity(a & trace_vector_); }

  // Mask m(x) with Tr(t*x) = parity(t & m(x)) for every t.
  FqElt trace_mask(FqElt x) const;

  // Fixed generator of the multiplicative group (smallest bit pattern).
  FqElt generator() const { return generator_; }

  // Discrete log / antilog, valid when has_tables().
  std::uint32_t log(FqElt a) const;
  FqElt alog(std::uint64_t e) const;  // g^(e mod 2^d-1)

  std::string modulus_hex() const;

  static int parity(std::uint64_t v) { return __builtin_parityll(v); }

private:
  void init();

  int degree_ = 0;
  std::uint64_t modulus_ = 0;
  FqElt trace_vector_ = 0;  // Tr(x) = parity(x & trace_vector_)
  FqElt generator_ = 0;
  std::vector<FqElt> basis_masks_;  // m(X^j)
  std::vector<std::uint32_t> log_;
  std::vector<FqElt> alog_;
};

FieldCtx make_field(int degree);

// Next irreducible strictly above `poly` of the same degree (for
// basis-independence checks); throws if none exists.
std::uint64_t next_irreducible(int degree, std::uint64_t poly);

}  // namespace airy
