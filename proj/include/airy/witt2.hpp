#pragma once

#include <cstdint>

#include "airy/gf2m.hpp"

// Length-2 Witt vectors over F_2-algebras.  Addition is the twisted rule
// [a,b] + [A,B] = [a+A, B+b+aA]; W_2(F_2) is identified with Z/4 by
// [a,b] -> a^2 + 2b.

namespace airy {

struct Witt2 {
  const FieldCtx* field = nullptr;
  FqElt a = 0;
  FqElt b = 0;
};

// Residue class mod 4, the image of the Witt trace.
struct W2F2 {
  std::uint8_t value = 0;  // 0..3

  friend bool operator==(W2F2 x, W2F2 y) { return x.value == y.value; }
  friend W2F2 operator+(W2F2 x, W2F2 y) { return {std::uint8_t((x.value + y.value) & 3)}; }
};

Witt2 w_add(const Witt2& u, const Witt2& v);  // throws on mismatched fields
Witt2 w_neg(const Witt2& u);                  // -[x,y] = [x, y + x^2]

// Trace down to W_2(F_2) as a class mod 4.  Closed form: first coordinate
// Tr(a), second Tr(b) + sum_{i<j} a^(2^i) a^(2^j).
W2F2 w_trace(const FieldCtx& k, const Witt2& u);

// The same trace computed by folding w_add over all Frobenius conjugates;
// the reference the closed form is checked against.
W2F2 w_trace_fold(const FieldCtx& k, const Witt2& u);

// Class mod 4 of the Witt trace of [a, b]; the inner loop of every
// trace sum, so it avoids Witt2 plumbing.
int witt_class(const FieldCtx& k, FqElt a, FqElt b);

// Second elementary symmetric function of the Frobenius conjugates of a,
// which always lands in F_2.
int witt_cross_term(const FieldCtx& k, FqElt a);

// psi2(c) = i^c as a (re, im) unit pair.
struct GaussUnit {
  int re = 1;
  int im = 0;
};
GaussUnit psi2(W2F2 c);

}  // namespace airy
