#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "vhiggs/spectral.hpp"

using namespace vhiggs;
using namespace vhiggs::spectral;
using algebra::Section;
using vhiggs::testing::Rng;

namespace {

const Poly z = Poly::identity();
const Poly one(1);

SpectralDatum datum(Poly b1, Poly b2, Poly b3, int m1, int m2) {
  return {Section(b1, 2 * m1), Section(b2, 2 * m2), Section(b3, m1 + m2)};
}

}  // namespace

TEST_CASE("zero locus examples") {
  auto zl = zero_locus(datum(z, z, z, 1, 1));
  REQUIRE(zl.finite.size() == 1);
  CHECK(zl.finite[0].factor == z);
  CHECK(zl.finite[0].orders == std::array<int, 3>{1, 1, 1});
  REQUIRE(zl.infinity.size() == 1);
  CHECK(zl.infinity[0].orders == std::array<int, 3>{1, 1, 1});

  CHECK(zero_locus(datum(one, one, one, 0, 0)).empty());
  CHECK(zero_locus(datum(z * z, one, z, 1, 0)).empty());
  CHECK_THROWS_WITH(zero_locus(datum(Poly(), Poly(), Poly(), 1, 1)), "not in B'");
}

TEST_CASE("zero locus orders satisfy 2 n3 = n1 + n2 and zero components") {
  // b = (z^3 (z+1)^2, z, z^2 (z+1)) with bounds (6, 2, 4)
  Poly zp1 = poly_of({1, 1});
  auto zl = zero_locus(datum(pow(z, 3) * zp1 * zp1, z, z * z * zp1, 3, 1));
  REQUIRE(zl.finite.size() == 1);
  CHECK(zl.finite[0].orders == std::array<int, 3>{3, 1, 2});

  // b2 = b3 = 0: the zero locus is the zero set of b1.
  auto zz = zero_locus(datum(pow(poly_of({-2, 0, 1}), 2), Poly(), Poly(), 2, 0));
  REQUIRE(zz.finite.size() == 1);
  CHECK(zz.finite[0].factor == poly_of({-2, 0, 1}));
  CHECK(zz.finite[0].orders[1] == kInfiniteOrder);
}

TEST_CASE("reducibility examples") {
  auto r = is_reducible(datum(z * z, one, z, 1, 0));
  REQUIRE(r.verdict == Reducibility::Verdict::yes);
  CHECK(r.a[0] == to_quad(z));
  CHECK(r.a[1] == to_quad(one));

  CHECK(is_reducible(datum(z, z, z, 1, 1)).verdict == Reducibility::Verdict::no);
  CHECK(is_reducible(datum(Poly(), Poly(), Poly(), 1, 1)).verdict == Reducibility::Verdict::yes);

  // (2 z^2, 2, 2z) = (sqrt2 z, sqrt2)^2
  auto q = is_reducible(datum(Rational(2) * z * z, Poly(2), Rational(2) * z, 1, 0));
  REQUIRE(q.verdict == Reducibility::Verdict::yes);
  CHECK(q.a[0] * q.a[0] == to_quad(Rational(2) * z * z));
  CHECK(q.a[0] * q.a[1] == to_quad(Rational(2) * z));

  // (0, -3, 0): a = (0, sqrt(-3))
  auto n = is_reducible(datum(Poly(), Poly(-3), Poly(), 1, 0));
  REQUIRE(n.verdict == Reducibility::Verdict::yes);
  CHECK(n.a[1] * n.a[1] == to_quad(Poly(-3)));
}

TEST_CASE("reducible data: a squares to b and the zero locus doubles orders") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int m1 = static_cast<int>(rng.integer(0, 3));
    const int m2 = static_cast<int>(rng.integer(0, m1));
    Poly a1 = rng.poly(m1, 4);
    Poly a2 = rng.poly(m2, 4);
    if (a1.is_zero() && a2.is_zero()) continue;
    Rational c(rng.integer(1, 3) == 1 ? 3 : 1);
    SpectralDatum b = datum(c * a1 * a1, c * a2 * a2, c * a1 * a2, m1, m2);
    auto r = is_reducible(b);
    REQUIRE(r.verdict == Reducibility::Verdict::yes);
    CHECK(r.a[0] * r.a[0] == to_quad(b.b1.poly));
    CHECK(r.a[1] * r.a[1] == to_quad(b.b2.poly));
    CHECK(r.a[0] * r.a[1] == to_quad(b.b3.poly));
    for (const auto& pt : zero_locus(b).finite) {
      CHECK(pt.orders[0] == (a1.is_zero() ? kInfiniteOrder : 2 * valuation(a1, pt.factor)));
      CHECK(pt.orders[1] == (a2.is_zero() ? kInfiniteOrder : 2 * valuation(a2, pt.factor)));
    }
    if (is_etale(b)) CHECK_FALSE(has_multiple_zero(b));
  }
}

TEST_CASE("multiple zeros and etaleness") {
  CHECK(has_multiple_zero(datum(z * z, z * z, z * z, 1, 1)));
  CHECK_FALSE(has_multiple_zero(datum(z, z, z, 1, 1)));
  CHECK_FALSE(has_multiple_zero(datum(one, one, one, 0, 0)));
  // a double zero at infinity only: b = (1, 1, 1) with bounds (2, 2, 2)
  CHECK(has_multiple_zero(datum(one, one, one, 1, 1)));

  CHECK(is_etale(datum(one, one, one, 0, 0)));
  CHECK_FALSE(is_etale(datum(z, z, z, 1, 1)));
  CHECK(is_etale(datum(z * z, one, z, 1, 0)));
}

TEST_CASE("etale genus") {
  CHECK(etale_genus(1).value == 1);
  CHECK(etale_genus(2).value == 3);
  CHECK_FALSE(etale_genus(0).possible);
  CHECK(etale_genus(1).possible);
  CHECK_THROWS_AS(etale_genus(-1), Error);
}

TEST_CASE("local torsion examples") {
  CHECK(local_torsion_length(datum(z, z, z, 1, 1), Chart::finite, z) == 1);
  CHECK(local_torsion_length(datum(z, z, z, 1, 1), Chart::infinity, z) == 1);
  CHECK(local_torsion_length(datum(z * z, z * z, z * z, 1, 1), Chart::finite, z) == 2);
  CHECK(local_torsion_length(datum(pow(z, 3), z, z * z, 2, 1), Chart::finite, z) == 1);
  CHECK_THROWS_AS(local_torsion_length(datum(one, one, one, 0, 0), Chart::finite, z), Error);
  CHECK_THROWS_AS(local_torsion_length(datum(z, z, z, 1, 1), Chart::finite, poly_of({1, 1})), Error);

  // Away from the zero locus the module is free of rank 2.
  auto v = module_valuations(datum(one, one, one, 0, 0), Chart::finite, z);
  CHECK(algebra::torsion_length(v) == 0);
  CHECK(std::count(v.begin(), v.end(), algebra::kFree) == 2);
}

TEST_CASE("local torsion agrees with the truncated module oracle") {
  Rng rng(5);
  const Poly primes[] = {z, poly_of({-1, 1}), poly_of({1, 0, 1})};
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Poly& p = primes[trial % 3];
    const int a = static_cast<int>(rng.integer(0, 2));
    const int c = static_cast<int>(rng.integer(0, 2));
    const int s = static_cast<int>(rng.integer(1, 2));
    // b1 = 2 p^(2a+s), b2 = 2 p^(2c+s) u^2, b3 = 2 p^(a+c+s) u
    Poly u = rng.poly(1, 3);
    if (u.is_zero() || valuation(u, p) > 0) u = one;
    Poly b1 = pow(p, 2 * a + s) * Rational(2);
    Poly b2 = pow(p, 2 * c + s) * u * u * Rational(2);
    Poly b3 = pow(p, a + c + s) * u * Rational(2);
    const int m1 = std::max(b1.degree(), b2.degree());
    SpectralDatum b = datum(b1, b2, b3, m1, m1);
    auto oracle = testing::spectral_module_valuations(b1, b2, b3, p, 7, 4);
    CHECK(local_torsion_length(b, Chart::finite, p) == algebra::torsion_length(oracle));
    ++checked;
  }
  CHECK(checked == 40);
}

TEST_CASE("local equations examples") {
  auto eq = local_equations(datum(z, z, z, 1, 1), Chart::finite, z);
  CHECK(eq.n == 1);
  CHECK(eq.m == 1);
  CHECK(eq.generators[0].str('z') == "X^2 + -z");
  CHECK(eq.generators[3].str('z') == "X + (-1)*Y");
  CHECK(eq.truncation == 2);

  auto eq2 = local_equations(datum(z, pow(z, 3), z * z, 2, 2), Chart::finite, z);
  CHECK(eq2.swapped);
  CHECK(eq2.n == 3);
  CHECK(eq2.m == 2);
  CHECK(eq2.generators[0].one == -pow(z, 3));
  CHECK(eq2.generators[1].one == -z);
  CHECK(eq2.generators[3].x == one);
  CHECK(eq2.generators[3].y == -z);

  CHECK_THROWS_AS(local_equations(datum(one, one, one, 0, 0), Chart::finite, z), Error);
  CHECK_THROWS_AS(local_equations(datum(z, z, z, 1, 1), Chart::finite, z, 1), Error);

  Poly u = poly_of({1, 1});
  auto eq3 = local_equations(datum(z * u * u, z, z * u, 2, 1), Chart::finite, z, 4);
  CHECK(eq3.g1 == u * u);
  CHECK(eq3.g1_truncated == (u * u) % pow(z, 4));
  CHECK(eq3.g3 == u);
}

TEST_CASE("jacobian rank matches the multiple-zero verdict") {
  struct Case {
    SpectralDatum b;
    bool multiple;
  };
  Poly q = poly_of({2, 0, 1});
  std::vector<Case> cases = {
      {datum(z, z, z, 1, 1), false},
      {datum(pow(z, 3), z, z * z, 2, 1), false},
      {datum(z * z, z * z, z * z, 1, 1), true},
      {datum(Rational(3) * q, Rational(3) * q, Rational(3) * q, 1, 1), false},
      {datum(Rational(3) * q * q, Rational(3) * q * q, Rational(3) * q * q, 2, 2), true},
      {datum(z * z * z, z * z * z, z * z * z, 2, 2), true},
  };
  for (const auto& c : cases) {
    CHECK(has_multiple_zero(c.b) == c.multiple);
    for (const auto& pt : zero_locus(c.b).all()) {
      const int rank = jacobian_rank(local_equations(c.b, pt.chart, pt.factor));
      if (pt.min_order() >= 2) {
        CHECK(rank <= 1);
      } else {
        CHECK(rank >= 2);
      }
    }
  }
}

TEST_CASE("spectral report examples") {
  auto r = spectral_report(datum(z, z, z, 1, 1));
  CHECK(r.reducible.verdict == Reducibility::Verdict::no);
  CHECK_FALSE(r.etale);
  CHECK_FALSE(r.multiple_zero);
  CHECK(r.smooth == Smoothness::smooth);
  REQUIRE(r.torsion.size() == 2);
  CHECK(r.torsion[0].point.chart == Chart::finite);
  CHECK(r.torsion[0].length == 1);
  CHECK(r.torsion[1].point.chart == Chart::infinity);
  CHECK(r.torsion[1].length == 1);
  CHECK_FALSE(r.genus.has_value());

  auto e = spectral_report(datum(one, one, one, 0, 0));
  CHECK(e.reducible.verdict == Reducibility::Verdict::yes);
  CHECK(e.reducible.a[0] == to_quad(one));
  CHECK(e.etale);
  CHECK(e.smooth == Smoothness::not_applicable);

  auto s = spectral_report(datum(z * z, z * z, z * z, 1, 1));
  CHECK(s.reducible.verdict == Reducibility::Verdict::yes);
  CHECK(s.reducible.a[0] == to_quad(z));
  CHECK(s.multiple_zero);
  CHECK(s.smooth == Smoothness::not_applicable);

  CHECK_THROWS_WITH(spectral_report(datum(one, one, Poly(), 0, 0)), "cone relation violated");

  // Etale and irreducible: (3, 3, 3) on bounds (0, 0, 0) needs sqrt 3, which is
  // still a square root, so the curve is reducible over Q(sqrt 3).
  auto t = spectral_report(datum(Poly(3), Poly(3), Poly(3), 0, 0), 2);
  CHECK(t.reducible.verdict == Reducibility::Verdict::yes);
  CHECK_FALSE(t.genus.has_value());
}

TEST_CASE("etale data on P^1 are reducible") {
  Rng rng(99);
  int etale = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto b = hitchin::hitchin_map(testing::random_pair(rng));
    if (b.is_zero() || !is_etale(b)) continue;
    ++etale;
    CHECK(is_reducible(b).verdict == Reducibility::Verdict::yes);
  }
  CHECK(etale > 0);
}

TEST_CASE("spectral report is invariant under gauge transformations of the pair") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = testing::random_pair(rng);
    auto b = hitchin::hitchin_map(p);
    if (b.is_zero()) continue;
    auto q = testing::gauge_transform(p, testing::random_gauge(rng, p.e1, p.e2));
    auto r1 = spectral_report(b);
    auto r2 = spectral_report(hitchin::hitchin_map(q));
    CHECK(r1.etale == r2.etale);
    CHECK(r1.multiple_zero == r2.multiple_zero);
    CHECK(r1.smooth == r2.smooth);
    CHECK(r1.reducible.verdict == r2.reducible.verdict);
    REQUIRE(r1.torsion.size() == r2.torsion.size());
    for (size_t i = 0; i < r1.torsion.size(); ++i) CHECK(r1.torsion[i].length == r2.torsion[i].length);
  }
}
