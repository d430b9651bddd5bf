#include "doctest.h"

#include <random>

#include "airy/witt2.hpp"

using namespace airy;

namespace {

Witt2 rnd_witt(const FieldCtx& k, std::mt19937_64& rng) {
  return {&k, FqElt(rng() & (k.order() - 1)), FqElt(rng() & (k.order() - 1))};
}

bool weq(const Witt2& u, const Witt2& v) { return u.a == v.a && u.b == v.b; }

}  // namespace

TEST_CASE("witt addition basics") {
  FieldCtx f2(1);
  Witt2 one{&f2, 1, 0};
  // [1,0]+[1,0] = [0,1]
  Witt2 s = w_add(one, one);
  CHECK(s.a == 0);
  CHECK(s.b == 1);

  std::mt19937_64 rng(5);
  FieldCtx k(6);
  Witt2 zero{&k, 0, 0};
  for (int it = 0; it < 100; ++it) {
    Witt2 u = rnd_witt(k, rng), v = rnd_witt(k, rng), w = rnd_witt(k, rng);
    CHECK(weq(w_add(u, zero), u));
    CHECK(weq(w_add(u, v), w_add(v, u)));
    CHECK(weq(w_add(w_add(u, v), w), w_add(u, w_add(v, w))));
    // 2*[a,b] = [0, a^2], 4*[a,b] = [0,0]
    Witt2 twice = w_add(u, u);
    CHECK(twice.a == 0);
    CHECK(twice.b == k.mul(u.a, u.a));
    Witt2 quad = w_add(twice, twice);
    CHECK(weq(quad, zero));
  }

  FieldCtx other(7);
  Witt2 alien{&other, 1, 0};
  CHECK_THROWS(w_add(one, alien));
}

TEST_CASE("witt negation") {
  FieldCtx f2(1);
  Witt2 m = w_neg(Witt2{&f2, 1, 0});
  CHECK(m.a == 1);
  CHECK(m.b == 1);

  std::mt19937_64 rng(6);
  FieldCtx k(9);
  for (int it = 0; it < 100; ++it) {
    Witt2 u = rnd_witt(k, rng);
    Witt2 z = w_add(u, w_neg(u));
    CHECK(z.a == 0);
    CHECK(z.b == 0);
    Witt2 v{&k, 0, u.b};
    CHECK(weq(w_neg(v), v));
  }
}

TEST_CASE("witt trace closed form vs fold oracle") {
  // degree 1: the trace is the identity map
  FieldCtx f2(1);
  CHECK(w_trace(f2, {&f2, 1, 1}).value == 3);

  // F_4, [w, 0] with w a generator: trace is (1,1) -> 3
  FieldCtx f4(2);
  CHECK(w_trace(f4, {&f4, 0b10, 0}).value == 3);
  CHECK(w_trace_fold(f4, {&f4, 0b10, 0}).value == 3);

  // exhaustive agreement for d <= 8, randomized above
  for (int d = 1; d <= 8; ++d) {
    FieldCtx k(d);
    for (std::uint64_t a = 0; a < k.order(); ++a)
      for (std::uint64_t b = 0; b < k.order(); ++b) {
        Witt2 u{&k, FqElt(a), FqElt(b)};
        CHECK(w_trace(k, u) == w_trace_fold(k, u));
      }
  }
  std::mt19937_64 rng(7);
  for (int d : {9, 10, 11, 12}) {
    FieldCtx k(d);
    for (int it = 0; it < 500; ++it) {
      Witt2 u = rnd_witt(k, rng);
      CHECK(w_trace(k, u) == w_trace_fold(k, u));
    }
  }
}

TEST_CASE("witt trace additivity") {
  std::mt19937_64 rng(8);
  for (int d : {3, 6, 10}) {
    FieldCtx k(d);
    for (int it = 0; it < 200; ++it) {
      Witt2 u = rnd_witt(k, rng), v = rnd_witt(k, rng);
      CHECK(w_trace(k, w_add(u, v)) == w_trace(k, u) + w_trace(k, v));
    }
  }
}

TEST_CASE("psi2") {
  CHECK(psi2({0}).re == 1);
  CHECK(psi2({0}).im == 0);
  CHECK(psi2({1}).re == 0);
  CHECK(psi2({1}).im == 1);
  CHECK(psi2({2}).re == -1);
  CHECK(psi2({3}).im == -1);
  // character property
  for (std::uint8_t c1 = 0; c1 < 4; ++c1)
    for (std::uint8_t c2 = 0; c2 < 4; ++c2) {
      auto p1 = psi2({c1}), p2 = psi2({c2}), p = psi2(W2F2{c1} + W2F2{c2});
      CHECK(p.re == p1.re * p2.re - p1.im * p2.im);
      CHECK(p.im == p1.re * p2.im + p1.im * p2.re);
    }
  // psi2(w_trace([0,b])) = (-1)^Tr(b)
  std::mt19937_64 rng(9);
  FieldCtx k(7);
  for (int it = 0; it < 100; ++it) {
    FqElt b = FqElt(rng() & (k.order() - 1));
    auto u = psi2(w_trace(k, {&k, 0, b}));
    CHECK(u.im == 0);
    CHECK(u.re == (k.trace(b) ? -1 : 1));
  }
}
