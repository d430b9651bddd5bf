#include "doctest.h"

#include <complex>
#include <random>

#include "airy/exactnum.hpp"

using namespace airy;

TEST_CASE("cleared values normalize") {
  // 2i = (1+i)^2, so (2i, e=2) -> (1, 0)
  ClearedValue v(GaussInt(0, 2), 2);
  CHECK(v.num() == GaussInt(1, 0));
  CHECK(v.denom_exp() == 0);

  ClearedValue z(GaussInt(0, 0), 7);
  CHECK(z.num().is_zero());
  CHECK(z.denom_exp() == 0);

  ClearedValue w(GaussInt(3, 2), 0);
  CHECK(w.num() == GaussInt(3, 2));
  CHECK(w.denom_exp() == 0);
}

TEST_CASE("abs_square") {
  CHECK(ClearedValue(GaussInt(3, 2), 0).abs_square() == mpq_class(13));
  CHECK(ClearedValue(GaussInt(-7, 2), 2).abs_square() == mpq_class(53, 4));
  CHECK(ClearedValue(GaussInt(0, 0), 0).abs_square() == 0);
}

TEST_CASE("cleared arithmetic matches complex arithmetic") {
  std::mt19937_64 rng(11);
  auto rnd = [&]() {
    return ClearedValue(GaussInt(long(rng() % 41) - 20, long(rng() % 41) - 20),
                        unsigned(rng() % 6));
  };
  auto embed = [](const ClearedValue& v) {
    std::complex<double> num(v.num().re.get_d(), v.num().im.get_d());
    std::complex<double> den = std::pow(std::complex<double>(1, 1), int(v.denom_exp()));
    return num / den;
  };
  for (int it = 0; it < 300; ++it) {
    ClearedValue a = rnd(), b = rnd();
    auto sum = embed(a + b), prod = embed(a * b);
    CHECK(std::abs(sum - (embed(a) + embed(b))) < 1e-6);
    CHECK(std::abs(prod - embed(a) * embed(b)) < 1e-6);
  }
}

TEST_CASE("cleared rendering") {
  // (2i-7)/2 in canonical form: numerator (2i-7)*i = -2-7i over (1+i)^2
  ClearedValue v(GaussInt(-2, -7), 2);
  CHECK(v.to_string() == "-2-7i over (1+i)^2");
  CHECK(v.rational_string() == "(-7+2i)/2");
  CHECK(ClearedValue(GaussInt(14, 0), 0).rational_string() == "14+0i");
}

TEST_CASE("gaussian exact division") {
  GaussInt a(5, 5), b(1, 1);
  CHECK(GaussInt::div_exact(a, b) == GaussInt(5, 0));
  CHECK_THROWS(GaussInt::div_exact(GaussInt(1, 0), GaussInt(1, 1)));
  CHECK_THROWS(GaussInt::div_exact(a, GaussInt(0, 0)));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1).to_string() == "X - 1");
  IntPoly p12 = cyclotomic_poly(12);  // X^4 - X^2 + 1
  CHECK(p12.degree() == 4);
  CHECK(p12.c[0] == 1);
  CHECK(p12.c[2] == -1);
  CHECK(p12.c[4] == 1);
  CHECK(p12.c[1] == 0);

  // Phi_{8n}(X) = Phi_{4n}(X^2) for odd n
  for (unsigned n : {3u, 5u, 7u})
    CHECK(cyclotomic_poly(8 * n) == cyclotomic_poly(4 * n).compose_x_pow(2));

  // Phi_n divides X^n - 1 exactly
  for (unsigned n = 1; n <= 40; ++n)
    CHECK_NOTHROW(IntPoly::div_exact(x_pow_minus_one(n), cyclotomic_poly(n)));

  // degree phi(n)
  CHECK(cyclotomic_poly(9).degree() == 6);
  CHECK(cyclotomic_poly(105).degree() == 48);
}

TEST_CASE("polynomial evaluation") {
  IntPoly p12 = cyclotomic_poly(12);
  CHECK(eval_poly_int(p12, 2) == 13);
  CHECK(eval_poly_gauss(cyclotomic_poly(3), GaussInt(1, 1)) == GaussInt(2, 3));
  IntPoly p;
  p.c = {mpz_class(7), mpz_class(3), mpz_class(-1)};
  CHECK(eval_poly_int(p, 0) == 7);
}

TEST_CASE("divisor-product evaluation agrees with Horner") {
  for (unsigned long n : {1ul, 2ul, 6ul, 9ul, 12ul, 15ul, 36ul, 105ul, 128ul}) {
    IntPoly p = cyclotomic_poly(n);
    for (long x : {2l, 3l, -5l})
      CHECK(cyclotomic_eval_int(n, x) == eval_poly_int(p, x));
    GaussInt z(1, 1), w(-1, 1);
    CHECK(cyclotomic_eval_gauss(n, z) == eval_poly_gauss(p, z));
    CHECK(cyclotomic_eval_gauss(n, w) == eval_poly_gauss(p, w));
  }
}

TEST_CASE("interval arithmetic encloses rational samples") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 200; ++it) {
    long an = long(rng() % 2001) - 1000, ad = 1 + long(rng() % 50);
    long bn = long(rng() % 2001) - 1000, bd = 1 + long(rng() % 50);
    mpq_class a(an, ad), b(bn, bd);
    a.canonicalize();
    b.canonicalize();
    auto ia = RealInterval::from_mpq(a, 64), ib = RealInterval::from_mpq(b, 64);
    CHECK((ia + ib).contains(a + b));
    CHECK((ia - ib).contains(a - b));
    CHECK((ia * ib).contains(a * b));
    if (b != 0 && !ib.contains_zero()) CHECK((ia / ib).contains(mpq_class(a / b)));
  }
}

TEST_CASE("interval sqrt and cos") {
  auto s2 = RealInterval::sqrt_of_int(2, 128);
  auto sq = s2 * s2;
  CHECK(sq.contains(mpq_class(2)));
  CHECK(sq.unique_integer().has_value());
  CHECK(*sq.unique_integer() == 2);

  // cos(pi/3) = 1/2, cos(pi) = -1, cos(pi/2) = 0
  CHECK(RealInterval::cos_pi_ratio(1, 3, 96).contains(mpq_class(1, 2)));
  CHECK(RealInterval::cos_pi_ratio(1, 1, 96).contains(mpq_class(-1)));
  CHECK(RealInterval::cos_pi_ratio(1, 2, 96).contains(mpq_class(0)));
  // and the enclosures are tight enough to separate
  CHECK(RealInterval::cos_pi_ratio(1, 3, 96).definitely_less(
      RealInterval::from_int(1, 96)));
}

TEST_CASE("interval integer isolation") {
  auto v = RealInterval::from_int(7, 64);
  CHECK(v.unique_integer().has_value());
  CHECK(*v.unique_integer() == 7);
  // [7.5, 7.5] contains no integer
  auto off = RealInterval::from_mpq(mpq_class(15, 2), 64);
  CHECK(!off.unique_integer().has_value());
}

TEST_CASE("interval pow") {
  auto s2 = RealInterval::sqrt_of_int(2, 128);
  CHECK(s2.pow_int(4).contains(mpq_class(4)));
  CHECK(s2.pow_int(-2).contains(mpq_class(1, 2)));
}

TEST_CASE("decimal strings") {
  CHECK(decimal_string(mpq_class(1, 3), 5) == "0.33333");
  CHECK(decimal_string(mpq_class(14), 2) == "14.00");
  CHECK(decimal_string(mpq_class(1048476, 262143), 29) ==
        "3.99963378766551080898593515753");
}
