#include "airy/witt2.hpp"

#include <stdexcept>

namespace airy {

Witt2 w_add(const Witt2& u, const Witt2& v) {
  if (!u.field || !v.field || !u.field->same_field(*v.field))
    throw std::invalid_argument("w_add: operands live in different fields");
  const FieldCtx& k = *u.field;
  return {u.field, k.add(u.a, v.a), k.add(k.add(u.b, v.b), k.mul(u.a, v.a))};
}

Witt2 w_neg(const Witt2& u) {
  const FieldCtx& k = *u.field;
  return {u.field, u.a, k.add(u.b, k.mul(u.a, u.a))};
}

int witt_cross_term(const FieldCtx& k, FqElt a) {
  // e_2 of the conjugates via a running prefix sum:
  //   e_2 = sum_j a^(2^j) * (a^(2^0) + ... + a^(2^(j-1))).
  FqElt prefix = a, conj = a, e2 = 0;
  for (int j = 1; j < k.degree(); ++j) {
    conj = k.mul_fast(conj, conj);
    e2 ^= k.mul_fast(conj, prefix);
    prefix ^= conj;
  }
  if (e2 > 1) throw std::logic_error("cross term escaped F_2");
  return int(e2);
}

int witt_class(const FieldCtx& k, FqElt a, FqElt b) {
  int alpha = k.trace(a);
  int beta = k.trace(b) ^ witt_cross_term(k, a);
  return (alpha + 2 * beta) & 3;
}

W2F2 w_trace(const FieldCtx& k, const Witt2& u) {
  if (u.field && !u.field->same_field(k))
    throw std::invalid_argument("w_trace: wrong field context");
  return {std::uint8_t(witt_class(k, u.a, u.b))};
}

W2F2 w_trace_fold(const FieldCtx& k, const Witt2& u) {
  Witt2 acc{&k, 0, 0};
  FqElt ca = u.a, cb = u.b;
  for (int i = 0; i < k.degree(); ++i) {
    acc = w_add(acc, Witt2{&k, ca, cb});
    ca = k.mul(ca, ca);
    cb = k.mul(cb, cb);
  }
  if (acc.a > 1 || acc.b > 1) throw std::logic_error("Witt trace escaped W_2(F_2)");
  return {std::uint8_t((acc.a * acc.a + 2 * acc.b) & 3)};
}

GaussUnit psi2(W2F2 c) {
  switch (c.value & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace airy
