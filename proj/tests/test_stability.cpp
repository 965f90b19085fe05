#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "vhiggs/stability.hpp"

using namespace vhiggs;
using namespace vhiggs::higgs;
using vhiggs::testing::Rng;

namespace {

const Poly z = Poly::identity();
const Poly one(1);

HiggsPair make_pair(int e1, int e2, int m1, int m2, PolyMat p1, PolyMat p2) {
  HiggsPair p;
  p.e1 = e1;
  p.e2 = e2;
  p.twist = {m1, m2};
  p.phi1 = std::move(p1);
  p.phi2 = std::move(p2);
  return p;
}

HiggsPair stable_example() {
  PolyMat phi = PolyMat::of(Poly(), one, z, Poly());
  return make_pair(0, 0, 1, 1, phi, phi);
}

HiggsPair diagonal_example() {
  return make_pair(0, 0, 1, 1, PolyMat::of(z, Poly(), Poly(), -z), PolyMat::of(one, Poly(), Poly(), -one));
}

bool is_invariant(const HiggsPair& p, const LineSubbundle& l) {
  for (int k = 0; k < 2; ++k) {
    const PolyMat& phi = p.phi(k);
    const QuadPoly half = to_quad(phi.trace() * Rational(1, 2));
    for (int i = 0; i < 2; ++i) {
      QuadPoly lhs = to_quad(phi(i, 0)) * l.generator[0] + to_quad(phi(i, 1)) * l.generator[1];
      QuadPoly rhs = (l.eigen[k] + half) * l.generator[i];
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("invariant line subbundle examples") {
  auto all = invariant_line_subbundles(make_pair(1, -1, 0, 0, PolyMat(), PolyMat()));
  CHECK(all.all);

  auto diag = invariant_line_subbundles(diagonal_example());
  CHECK_FALSE(diag.all);
  REQUIRE(diag.lines.size() == 2);
  for (const auto& l : diag.lines) {
    CHECK(l.degree == 0);
    CHECK(is_invariant(diagonal_example(), l));
  }
  CHECK(((diag.lines[0].generator[0].is_zero() && diag.lines[1].generator[1].is_zero()) ||
         (diag.lines[0].generator[1].is_zero() && diag.lines[1].generator[0].is_zero())));

  auto none = invariant_line_subbundles(stable_example());
  CHECK_FALSE(none.all);
  CHECK(none.lines.empty());
}

TEST_CASE("invariant lines need a quadratic extension") {
  // phi1 = [[0, 2], [1, 0]] has eigenlines (sqrt 2, +-1).
  auto p = make_pair(0, 0, 0, 0, PolyMat::of(Poly(), Poly(2), one, Poly()), PolyMat());
  auto r = invariant_line_subbundles(p);
  REQUIRE(r.lines.size() == 2);
  for (const auto& l : r.lines) {
    CHECK(is_invariant(p, l));
    CHECK(l.degree == 0);
  }
  CHECK(stability_verdict(p) == Stability::strictly_semistable);
}

TEST_CASE("nilpotent pairs have one invariant line") {
  // E = O(1) + O(-1), phi1 = [[0, z^2], [0, 0]]: the kernel is O(1) itself.
  auto p = make_pair(1, -1, 0, 0, PolyMat::of(Poly(), z * z, Poly(), Poly()), PolyMat());
  auto r = invariant_line_subbundles(p);
  REQUIRE(r.lines.size() == 1);
  CHECK(r.lines[0].degree == 1);
  CHECK(stability_verdict(p) == Stability::unstable);

  // E = O(-1) + O(1), phi1 = [[0, 0], [z^2, 0]] kills O(1); invariant line is O(1).
  auto q = make_pair(-1, 1, 0, 0, PolyMat::of(Poly(), Poly(), z * z, Poly()), PolyMat());
  auto s = invariant_line_subbundles(q);
  REQUIRE(s.lines.size() == 1);
  CHECK(s.lines[0].degree == 1);
  CHECK(stability_verdict(q) == Stability::unstable);

  // E = O + O, phi1 = [[z, -z^2], [1, -z]] (nilpotent): the kernel is spanned
  // by (z, 1), a copy of O(-1), so the pair is stable.
  auto n = make_pair(0, 0, 2, 0, PolyMat::of(z, -(z * z), one, -z), PolyMat());
  REQUIRE(validate(n).ok());
  auto t = invariant_line_subbundles(n);
  REQUIRE(t.lines.size() == 1);
  CHECK(t.lines[0].generator[0] == to_quad(z));
  CHECK(t.lines[0].generator[1] == to_quad(one));
  CHECK(t.lines[0].degree == -1);
  CHECK(stability_verdict(n) == Stability::stable);
  CHECK(endomorphism_algebra_dim(n) == 1);
}

TEST_CASE("stability verdict examples") {
  CHECK(stability_verdict(make_pair(0, 0, 1, 1, PolyMat(), PolyMat())) == Stability::strictly_semistable);
  CHECK(stability_verdict(make_pair(1, -1, 1, 1, PolyMat(), PolyMat())) == Stability::unstable);
  CHECK(stability_verdict(stable_example()) == Stability::stable);
  CHECK(stability_verdict(diagonal_example()) == Stability::strictly_semistable);
}

TEST_CASE("endomorphism algebra examples") {
  CHECK(endomorphism_algebra_dim(stable_example()) == 1);
  CHECK(endomorphism_algebra_dim(make_pair(0, 0, 1, 1, PolyMat(), PolyMat())) == 4);
  CHECK(endomorphism_algebra_dim(make_pair(0, 0, 1, 1, PolyMat::of(z, Poly(), Poly(), -z), PolyMat())) == 2);
  // End(O(1) + O(-1)) = Q^2 diagonal plus the 3 dimensional H^0(O(2)).
  CHECK(endomorphism_algebra_dim(make_pair(1, -1, 0, 0, PolyMat(), PolyMat())) == 5);
}

TEST_CASE("euler identity") {
  auto a = euler_identity_check(0, 0, 1, 1, 0);
  CHECK(a.chi_end_v == 16);
  CHECK(a.chi_end == 4);
  CHECK(a.chi_end_wedge == 12);
  CHECK(a.defect == 0);
  auto b = euler_identity_check(0, 0, 0, 0, 0);
  CHECK(b.chi_end_v == 8);
  CHECK(b.chi_end == 4);
  CHECK(b.chi_end_wedge == 4);
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = euler_identity_check(static_cast<int>(rng.integer(-20, 20)), static_cast<int>(rng.integer(-20, 20)),
                                  static_cast<int>(rng.integer(0, 20)), static_cast<int>(rng.integer(0, 20)),
                                  static_cast<int>(rng.integer(0, 3)));
    CHECK(c.defect == 0);
  }
}

TEST_CASE("random pairs: invariance, twisting, simplicity") {
  Rng rng(77);
  for (int trial = 0; trial < 120; ++trial) {
    HiggsPair p = testing::random_pair(rng);
    auto lines = invariant_line_subbundles(p);
    for (const auto& l : lines.lines) {
      CHECK(is_invariant(p, l));
      CHECK(gcd(l.generator[0], l.generator[1]).degree() == 0);
    }
    const Stability s = stability_verdict(p);
    for (int k = -2; k <= 2; ++k) CHECK(stability_verdict(twist_by(p, k)) == s);
    const int dim = endomorphism_algebra_dim(p);
    CHECK(dim >= 1);
    if (s == Stability::stable) CHECK(dim == 1);
  }
}
