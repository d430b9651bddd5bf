#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "airy/gf2m.hpp"

using namespace airy;

namespace {

// Independent symbolic oracle: multiply polynomials over F_2 and divide by
// the modulus, keeping only the remainder.
std::uint64_t slow_polymul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t acc = 0;
  for (int i = 0; i < 64 && (b >> i); ++i)
    if (b >> i & 1) acc ^= a << i;
  return acc;
}

std::uint64_t slow_polymod(std::uint64_t a, std::uint64_t mod) {
  int dm = 63 - __builtin_clzll(mod);
  for (int bit = 62; bit >= dm; --bit)
    if (a >> bit & 1) a ^= mod << (bit - dm);
  return a;
}

// Brute-force irreducibility: no divisor of degree 1..d-1.
bool brute_irreducible(std::uint64_t poly, int d) {
  for (int e = 1; e < d; ++e)
    for (std::uint64_t f = (1ull << e); f < (2ull << e); ++f)
      if (slow_polymod(poly, f) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("least irreducible moduli") {
  CHECK(least_irreducible(1) == 0b11);     // X + 1
  CHECK(least_irreducible(3) == 0b1011);   // X^3 + X + 1
  // brute-force scan agrees for all small degrees
  for (int d = 1; d <= 10; ++d) {
    std::uint64_t m = least_irreducible(d);
    CHECK(brute_irreducible(m, d));
    for (std::uint64_t low = 1; low < (m ^ (1ull << d)); ++low)
      CHECK(!brute_irreducible((1ull << d) | low, d));
  }
  // certificate passes for every generated modulus, here up to 30
  for (int d = 1; d <= 30; ++d) CHECK(is_irreducible(least_irreducible(d), d));
  CHECK(is_irreducible(least_irreducible(18), 18));
  CHECK_THROWS(make_field(0));
  CHECK_THROWS(make_field(31));
}

TEST_CASE("field multiplication against the symbolic oracle") {
  FieldCtx f8(3);
  // X * X^2 = X + 1 mod X^3+X+1
  CHECK(f8.mul(0b010, 0b100) == 0b011);

  std::mt19937_64 rng(12345);
  for (int d : {2, 5, 8, 13, 21}) {
    FieldCtx k(d);
    for (int it = 0; it < 200; ++it) {
      FqElt a = FqElt(rng() & (k.order() - 1));
      FqElt b = FqElt(rng() & (k.order() - 1));
      CHECK(k.mul(a, b) == slow_polymod(slow_polymul(a, b), k.modulus()));
      CHECK(k.mul_fast(a, b) == k.mul(a, b));
    }
  }
}

TEST_CASE("identities, inverses, frobenius") {
  std::mt19937_64 rng(999);
  for (int d : {3, 7, 11}) {
    FieldCtx k(d);
    for (int it = 0; it < 50; ++it) {
      FqElt a = FqElt(rng() & (k.order() - 1));
      CHECK(k.mul(a, 1) == a);
      if (a != 0) CHECK(k.mul(a, k.pow(a, k.group_order() - 1)) == 1);
      CHECK(k.frobenius(a, d) == a);
      CHECK(k.frobenius(a, 1) == k.mul(a, a));
      FqElt b = FqElt(rng() & (k.order() - 1));
      CHECK(k.frobenius(a ^ b, 2) == (k.frobenius(a, 2) ^ k.frobenius(b, 2)));
    }
    CHECK_THROWS(k.inv(0));
  }
}

TEST_CASE("trace to F_2") {
  // Tr(1) = d mod 2
  for (int d = 1; d <= 12; ++d) {
    FieldCtx k(d);
    CHECK(k.trace(1) == d % 2);
  }
  // F_4: Tr(X) = X + X^2 = 1
  FieldCtx f4(2);
  CHECK(f4.trace(0b10) == 1);
  // additivity and agreement with the Frobenius-orbit sum
  std::mt19937_64 rng(77);
  for (int d : {4, 9, 14}) {
    FieldCtx k(d);
    for (int it = 0; it < 100; ++it) {
      FqElt a = FqElt(rng() & (k.order() - 1));
      FqElt b = FqElt(rng() & (k.order() - 1));
      CHECK((k.trace(a) ^ k.trace(b)) == k.trace(a ^ b));
      FqElt acc = a, c = a;
      for (int i = 1; i < d; ++i) {
        c = k.mul(c, c);
        acc ^= c;
      }
      CHECK(k.trace(a) == int(acc));
    }
  }
}

TEST_CASE("trace pairing masks") {
  std::mt19937_64 rng(31337);
  for (int d : {2, 6, 9, 13}) {
    FieldCtx k(d);
    CHECK(k.trace_mask(0) == 0);
    for (int it = 0; it < 200; ++it) {
      FqElt t = FqElt(rng() & (k.order() - 1));
      FqElt x = FqElt(rng() & (k.order() - 1));
      CHECK(FieldCtx::parity(t & k.trace_mask(x)) == k.trace(k.mul(t, x)));
    }
  }
  // bijectivity of x -> m(x) over F_{2^9}
  FieldCtx k9(9);
  std::set<FqElt> seen;
  for (std::uint64_t x = 0; x < k9.order(); ++x) seen.insert(k9.trace_mask(FqElt(x)));
  CHECK(seen.size() == k9.order());
}

TEST_CASE("nondegenerate pairing: Gram matrix has full rank") {
  for (int d : {2, 5, 12}) {
    FieldCtx k(d);
    // rows r_i = m(X^i); full rank over F_2 iff the pairing is nondegenerate
    std::vector<std::uint32_t> rows(d);
    for (int i = 0; i < d; ++i) rows[i] = k.trace_mask(FqElt(1) << i);
    int rank = 0;
    for (int col = 0; col < d; ++col) {
      int pivot = -1;
      for (int r = rank; r < d; ++r)
        if (rows[r] >> col & 1) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(rows[rank], rows[pivot]);
      for (int r = 0; r < d; ++r)
        if (r != rank && (rows[r] >> col & 1)) rows[r] ^= rows[rank];
      ++rank;
    }
    CHECK(rank == d);
  }
}

TEST_CASE("log/antilog tables compose with mul") {
  std::mt19937_64 rng(4242);
  FieldCtx k(11);
  REQUIRE(k.has_tables());
  for (int it = 0; it < 300; ++it) {
    FqElt a = FqElt(1 + rng() % (k.order() - 1));
    FqElt b = FqElt(1 + rng() % (k.order() - 1));
    CHECK(k.alog((std::uint64_t(k.log(a)) + k.log(b)) % k.group_order()) == k.mul(a, b));
  }
}

TEST_CASE("trace multiset is independent of the modulus") {
  for (int d : {4, 7, 10}) {
    FieldCtx k1(d);
    FieldCtx k2(d, next_irreducible(d, k1.modulus()));
    for (std::uint64_t e : {1ull, 3ull, 5ull}) {
      std::vector<int> h1(2, 0), h2(2, 0);
      for (std::uint64_t x = 0; x < k1.order(); ++x) {
        ++h1[k1.trace(k1.pow(FqElt(x), e))];
        ++h2[k2.trace(k2.pow(FqElt(x), e))];
      }
      CHECK(h1 == h2);
    }
  }
}

TEST_CASE("explicit modulus must pass the certificate") {
  CHECK_THROWS(FieldCtx(3, 0b1111));  // X^3+X^2+X+1 = (X+1)(X^2+1)
  FieldCtx k(3, 0b1101);                // the other irreducible cubic
  CHECK(k.mul(0b010, 0b100) == 0b101);  // X^3 = X^2 + 1 here
}
