#include "vhiggs/spectral.hpp"

#include <algorithm>

namespace vhiggs::spectral {

using algebra::poly_gcd;

const char* to_string(Chart c) { return c == Chart::finite ? "finite" : "infinity"; }

const char* to_string(Reducibility::Verdict v) {
  switch (v) {
    case Reducibility::Verdict::yes: return "yes";
    case Reducibility::Verdict::no: return "no";
    case Reducibility::Verdict::undecided: return "undecided-over-Q";
  }
  return "?";
}

const char* to_string(Smoothness s) {
  switch (s) {
    case Smoothness::smooth: return "true";
    case Smoothness::singular: return "false";
    case Smoothness::not_applicable: return "n/a";
  }
  return "?";
}

std::vector<ZeroPoint> ZeroLocus::all() const {
  std::vector<ZeroPoint> out = finite;
  out.insert(out.end(), infinity.begin(), infinity.end());
  return out;
}

namespace {

std::array<Poly, 3> chart_polys(const SpectralDatum& b, Chart chart) {
  if (chart == Chart::finite) return {b.b1.poly, b.b2.poly, b.b3.poly};
  return {b.b1.chart1(), b.b2.chart1(), b.b3.chart1()};
}

void require_nonzero(const SpectralDatum& b) {
  if (b.is_zero()) throw Error("not in B'");
}

std::array<int, 3> orders_at(const std::array<Poly, 3>& f, const Poly& p) {
  return {valuation(f[0], p), valuation(f[1], p), valuation(f[2], p)};
}

void check_cone_orders(const std::array<int, 3>& n, const Poly& p) {
  const bool ok = n[2] == kInfiniteOrder
                      ? (n[0] == kInfiniteOrder || n[1] == kInfiniteOrder)
                      : (n[0] != kInfiniteOrder && n[1] != kInfiniteOrder && 2 * n[2] == n[0] + n[1]);
  if (!ok) throw Error("orders at " + to_string(p) + " violate 2 n3 = n1 + n2");
}

bool is_common_zero(const std::array<int, 3>& n) { return n[0] > 0 && n[1] > 0 && n[2] > 0; }

Poly gcd3(const std::array<Poly, 3>& f) { return poly_gcd(poly_gcd(f[0], f[1]), f[2]); }

}  // namespace

ZeroLocus zero_locus(const SpectralDatum& b) {
  require_nonzero(b);
  ZeroLocus locus;
  const auto f0 = chart_polys(b, Chart::finite);
  const Poly g = gcd3(f0);
  if (g.degree() >= 1) {
    for (const auto& fac : algebra::squarefree_decomposition(g)) {
      auto n = orders_at(f0, fac.factor);
      check_cone_orders(n, fac.factor);
      locus.finite.push_back({Chart::finite, fac.factor, n});
    }
    std::sort(locus.finite.begin(), locus.finite.end(), [](const ZeroPoint& a, const ZeroPoint& c) {
      if (a.factor.degree() != c.factor.degree()) return a.factor.degree() < c.factor.degree();
      return std::lexicographical_compare(a.factor.coeffs().begin(), a.factor.coeffs().end(),
                                          c.factor.coeffs().begin(), c.factor.coeffs().end());
    });
  }
  const auto f1 = chart_polys(b, Chart::infinity);
  const Poly w = Poly::identity();
  auto n = orders_at(f1, w);
  if (is_common_zero(n)) {
    check_cone_orders(n, w);
    locus.infinity.push_back({Chart::infinity, w, n});
  }
  return locus;
}

Reducibility is_reducible(const SpectralDatum& b) {
  Reducibility r;
  if (b.is_zero()) {
    r.verdict = Reducibility::Verdict::yes;
    return r;
  }
  // Over Q(sqrt c) the cone relation fixes a2 = b3 / a1 once a1 is known, so
  // a single square root decides the question.
  if (!b.b1.is_zero()) {
    auto s = algebra::exact_sqrt(b.b1.poly);
    if (!s) {
      r.obstruction = "b1 = " + to_string(b.b1.poly) + " has a factor of odd multiplicity";
      return r;
    }
    QuadPoly a1 = s->full_root();
    auto [a2, rem] = divmod(to_quad(b.b3.poly), a1);
    if (!rem.is_zero() || !(a2 * a2 == to_quad(b.b2.poly))) {
      throw Error("cone relation violated");
    }
    r.verdict = Reducibility::Verdict::yes;
    r.a = {a1, a2};
    return r;
  }
  if (!b.b3.is_zero()) throw Error("cone relation violated");
  auto s = algebra::exact_sqrt(b.b2.poly);
  if (!s) {
    r.obstruction = "b2 = " + to_string(b.b2.poly) + " has a factor of odd multiplicity";
    return r;
  }
  r.verdict = Reducibility::Verdict::yes;
  r.a = {QuadPoly(), s->full_root()};
  return r;
}

bool has_multiple_zero(const SpectralDatum& b) {
  require_nonzero(b);
  for (Chart chart : {Chart::finite, Chart::infinity}) {
    auto f = chart_polys(b, chart);
    Poly g = gcd3(f);
    for (const auto& p : f) g = poly_gcd(g, p.derivative());
    // A zero component contributes nothing, but its derivative is zero too,
    // so gcd with it leaves g unchanged as required.
    if (g.degree() >= 1) return true;
  }
  return false;
}

bool is_etale(const SpectralDatum& b) { return zero_locus(b).empty(); }

EtaleGenus etale_genus(int g) {
  if (g < 0) throw Error("negative genus");
  return {2 * g - 1, g >= 1};
}

std::vector<int> module_valuations(const SpectralDatum& b, Chart chart, const Poly& prime) {
  auto f = chart_polys(b, chart);
  // Generators 1, X, Y; relations b3 X - b1 Y and b3 Y - b2 X.
  algebra::PolyMatrix m = {
      {Poly(), Poly()},
      {f[2], -f[1]},
      {-f[0], f[2]},
  };
  return algebra::snf_over_dvr(m, prime);
}

namespace {

std::array<int, 3> require_zero(const SpectralDatum& b, Chart chart, const Poly& factor) {
  require_nonzero(b);
  if (chart == Chart::infinity && factor != Poly::identity()) {
    throw Error("the only point on the chart at infinity is w = 0");
  }
  if (!algebra::is_irreducible(factor) || factor.leading() != 1) {
    throw Error("point factor " + to_string(factor) + " is not monic irreducible");
  }
  auto n = orders_at(chart_polys(b, chart), factor);
  if (!is_common_zero(n)) throw Error("factor not in zero locus");
  return n;
}

}  // namespace

int local_torsion_length(const SpectralDatum& b, Chart chart, const Poly& factor) {
  require_zero(b, chart, factor);
  return algebra::torsion_length(module_valuations(b, chart, factor));
}

std::string LocalGenerator::str(char var) const {
  std::string out;
  auto term = [&](const Poly& c, const char* mono) {
    if (c.is_zero()) return;
    if (!out.empty()) out += " + ";
    std::string cs = to_string(c, var);
    if (*mono == '\0') {
      out += cs;
    } else if (c == Poly(1)) {
      out += mono;
    } else {
      out += "(" + cs + ")*" + mono;
    }
  };
  term(xx, "X^2");
  term(yy, "Y^2");
  term(xy, "X*Y");
  term(x, "X");
  term(y, "Y");
  term(one, "");
  return out.empty() ? "0" : out;
}

LocalEquations local_equations(const SpectralDatum& b, Chart chart, const Poly& factor,
                               int truncation) {
  auto orders = require_zero(b, chart, factor);
  auto f = chart_polys(b, chart);
  LocalEquations eq;
  eq.chart = chart;
  eq.factor = factor;
  eq.swapped = orders[0] < orders[1];
  if (eq.swapped) {
    std::swap(f[0], f[1]);
    std::swap(orders[0], orders[1]);
  }
  eq.f = f;
  eq.n = orders[0];
  eq.m = orders[2];

  const Poly one(1);
  LocalGenerator fourth;
  if (eq.n == kInfiniteOrder) {
    // f1 = f3 = 0: f2 X = 0, so X itself is the torsion generator.
    eq.g1 = one;
    eq.g3 = one;
    fourth.x = one;
  } else {
    eq.g1 = exact_div(f[0], pow(factor, eq.n));
    eq.g3 = exact_div(f[2], pow(factor, eq.m));
    fourth.x = eq.g3;
    fourth.y = -(pow(factor, eq.n - eq.m) * eq.g1);
  }

  const int base = eq.n == kInfiniteOrder ? eq.m : eq.n;
  const int default_k = base == kInfiniteOrder ? 1 : base + 1;
  if (truncation != 0 && truncation < default_k) {
    throw Error("truncation order must be at least n + 1 = " + std::to_string(default_k));
  }
  eq.truncation = truncation == 0 ? default_k : truncation;
  const Poly modulus = pow(factor, eq.truncation);
  eq.g1_truncated = eq.g1 % modulus;
  eq.g3_truncated = eq.g3 % modulus;

  LocalGenerator x2, y2, xy;
  x2.xx = one;
  x2.one = -f[0];
  y2.yy = one;
  y2.one = -f[1];
  xy.xy = one;
  xy.one = -f[2];
  eq.generators = {x2, y2, xy, fourth};
  return eq;
}

int jacobian_rank(const LocalEquations& eq) {
  const Poly& p = eq.factor;
  std::vector<std::array<Poly, 3>> rows;
  for (const auto& g : eq.generators) {
    rows.push_back({g.x % p, g.y % p, g.one.derivative() % p});
  }
  // Gaussian elimination over the field Q[z]/(p).
  int rank = 0;
  for (int col = 0; col < 3 && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const Poly inv = extended_gcd(rows[rank][col], p).s;
    for (auto& e : rows[rank]) e = (e * inv) % p;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Poly c = rows[r][col];
      for (int k = 0; k < 3; ++k) rows[r][k] = (rows[r][k] - c * rows[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

SpectralCurveReport spectral_report(const SpectralDatum& b, int genus, int truncation) {
  if (!hitchin::base_membership(b)) throw Error("cone relation violated");
  SpectralCurveReport report;
  report.zeros = zero_locus(b);
  report.reducible = is_reducible(b);
  report.etale = report.zeros.empty();
  report.multiple_zero = has_multiple_zero(b);
  if (report.reducible.verdict == Reducibility::Verdict::no) {
    report.smooth = report.multiple_zero ? Smoothness::singular : Smoothness::smooth;
  } else {
    report.smooth = Smoothness::not_applicable;
  }
  for (const auto& pt : report.zeros.all()) {
    const int len = local_torsion_length(b, pt.chart, pt.factor);
    const int rank = jacobian_rank(local_equations(b, pt.chart, pt.factor, truncation));
    report.torsion.push_back({pt, len, rank});
  }
  if (report.etale && report.reducible.verdict == Reducibility::Verdict::no) {
    report.genus = etale_genus(genus);
  }
  return report;
}

}  // namespace vhiggs::spectral
