#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "airy/exactnum.hpp"
#include "airy/gf2m.hpp"
#include "airy/witt2.hpp"

// Rank-one Artin-Schreier-Witt trace functions and the Airy-type local
// systems built from them: F(q,f) on the affine line and its descents
// G(q,f,r) on the multiplicative group, with exactly cleared traces.

namespace airy {

enum class SheafForm { F, G };

// q = 2^(2n+1), q0 = 2^n, t(q) = q + 1 - 2*q0, rank D = q0*(q-1).
// f is a polynomial over F_2 of degree (q0+1)*t(q) with f(0) = 0, kept as
// its sorted list of exponents.  When f(x) = f1(x^t(q)) the exponents of
// f1 are kept too; the G form needs them.
struct SheafSpec {
  int n = 1;
  std::uint64_t q = 8, q0 = 2, t_q = 5, rank = 14;
  std::vector<std::uint64_t> f_exps;
  std::vector<std::uint64_t> f1_exps;  // empty when f is not a function of x^t(q)
  SheafForm form = SheafForm::F;
  std::uint64_t kummer_r = 0;  // divides t_q; set for form G
  std::string family = "custom";

  std::string summary() const;
};

std::uint64_t t_of_q(int n);  // 2^(2n+1) + 1 - 2^(n+1), n >= 0

// f1(x) = sum_{i=1..n} x^(1+2^i)
SheafSpec suzuki_standard(int n);
// f1(x) = sum_{i=0..floor((n-1)/2)} x^(1+2^(n-2i))
SheafSpec infg_family(int n);
// f1(x) = x^e with e = q0+1 (the only degree keeping the standard rank)
SheafSpec monomial_family(int n, std::uint64_t e);
// arbitrary f given by exponents; degree and f(0)=0 are validated
SheafSpec custom_spec(int n, std::vector<std::uint64_t> f_exps);

// Descent of an F-form spec built from f1 to the r-th Kummer cover form.
SheafSpec descend(const SheafSpec& spec, std::uint64_t r);

// ----------------------------------------------------------- trace sums

// Polynomial with coefficients in the field, sparse.
struct SparsePoly {
  std::vector<std::pair<std::uint64_t, FqElt>> terms;  // (exponent, coeff)
};

// Trace of the rank-one sheaf attached to [a(x), b(x)] at the point x.
GaussUnit trace_L(const FieldCtx& k, const SparsePoly& a, const SparsePoly& b, FqElt x);

// Exact raw character sum sum_x psi2(w_trace([x^t(q), f(x)+t x])) as a
// Gaussian integer pair; |sum| <= #k so int64 components are safe for
// every supported degree.
struct RawSum {
  std::int64_t re = 0, im = 0;
};

RawSum raw_sum_F(const SheafSpec& spec, const FieldCtx& k, FqElt t, int threads = 1);
RawSum raw_sum_G(const SheafSpec& spec, const FieldCtx& k, FqElt t, int threads = 1);

// Divide the negated raw sum by the clearing factor (1-(-1)^n i)^deg.
ClearedValue clear_raw(RawSum s, int degree, int n);

ClearedValue trace_F(const SheafSpec& spec, const FieldCtx& k, FqElt t, int threads = 1);
ClearedValue trace_G(const SheafSpec& spec, const FieldCtx& k, FqElt t, int threads = 1);

}  // namespace airy
