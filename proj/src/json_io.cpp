#include "vhiggs/json_io.hpp"

#include <cmath>

namespace vhiggs::json_io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw SchemaError(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

int int_from(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

// Folds -0.0 into 0.0 so reports do not depend on the sign of a vanishing result.
double real_json(double x) { return x == 0 ? 0.0 : x; }

json order_json(int n) { return n == kInfiniteOrder ? json(nullptr) : json(n); }

}  // namespace

// ---- output ----------------------------------------------------------------

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const QuadNumber& q) {
  if (q.is_rational()) return to_json(q.rational_part());
  return {{"rational", to_json(q.rational_part())},
          {"surd", to_json(q.surd_part())},
          {"radicand", q.radicand().get_str()}};
}

json to_json(const QuadPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const algebra::Section& s) { return {{"coeffs", to_json(s.poly)}, {"bound", s.bound}}; }

json to_json(const higgs::HiggsPair& p) {
  auto mat = [&](int k) {
    json m = json::array();
    for (int i = 0; i < 2; ++i) {
      json row = json::array();
      for (int j = 0; j < 2; ++j) row.push_back({{"coeffs", to_json(p.phi(k)(i, j))}, {"bound", p.entry_bound(k, i, j)}});
      m.push_back(row);
    }
    return m;
  };
  return {{"E", {{"e1", p.e1}, {"e2", p.e2}}},
          {"V", {{"m1", p.twist.m1}, {"m2", p.twist.m2}}},
          {"phi1", mat(0)},
          {"phi2", mat(1)}};
}

json to_json(const hitchin::SpectralDatum& b) {
  return {{"b1", to_json(b.b1)}, {"b2", to_json(b.b2)}, {"b3", to_json(b.b3)}};
}

json to_json(const GaussRational& g) {
  if (g.im == 0) return to_json(g.re);
  return {{"re", to_json(g.re)}, {"im", to_json(g.im)}};
}

json to_json(const hitchin::ExactPointPair& p) {
  auto mat = [](const Mat2<GaussRational>& m) {
    return json::array({json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                        json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
  };
  return {{"phi1", mat(p.phi1)}, {"phi2", mat(p.phi2)}};
}

json to_json(const hitchin::ConePoint<GaussRational>& c) {
  return {{"x", to_json(c.x)}, {"y", to_json(c.y)}, {"z", to_json(c.z)}};
}

json to_json(const moment_map::Complex& c) { return {{"re", real_json(c.real())}, {"im", real_json(c.imag())}}; }

json to_json(const moment_map::CMat& m) {
  return json::array({json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                      json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

json to_json(const spectral::SpectralCurveReport& r, const spectral::SpectralDatum& b, int truncation) {
  using spectral::Chart;
  json zeros = json::array();
  json torsion = json::array();
  for (const auto& t : r.torsion) {
    const char var = t.point.chart == Chart::finite ? 'z' : 'w';
    const std::string name = to_string(t.point.factor, var);
    const auto eq = spectral::local_equations(b, t.point.chart, t.point.factor, truncation);
    json gens = json::array();
    for (const auto& g : eq.generators) gens.push_back(g.str(var));
    zeros.push_back({{"chart", spectral::to_string(t.point.chart)},
                     {"factor", name},
                     {"factor_coeffs", to_json(t.point.factor)},
                     {"orders", json::array({order_json(t.point.orders[0]), order_json(t.point.orders[1]),
                                             order_json(t.point.orders[2])})},
                     {"torsion_length", t.length},
                     {"jacobian_rank", t.jacobian_rank},
                     {"local_equations", gens},
                     {"swapped", eq.swapped},
                     {"n", order_json(eq.n)},
                     {"m", order_json(eq.m)},
                     {"truncation", eq.truncation},
                     {"g1", to_string(eq.g1_truncated, var)},
                     {"g3", to_string(eq.g3_truncated, var)}});
    torsion.push_back(json::array({name, t.length}));
  }
  json reducible = {{"verdict", spectral::to_string(r.reducible.verdict)}};
  if (r.reducible.verdict == spectral::Reducibility::Verdict::yes) {
    reducible["a"] = json::array({to_json(r.reducible.a[0]), to_json(r.reducible.a[1])});
    reducible["a_text"] = json::array({to_string(r.reducible.a[0]), to_string(r.reducible.a[1])});
  }
  if (!r.reducible.obstruction.empty()) reducible["obstruction"] = r.reducible.obstruction;
  json out = {{"zeros", zeros},
              {"reducible", reducible},
              {"etale", r.etale},
              {"multiple_zero", r.multiple_zero},
              {"smooth", spectral::to_string(r.smooth)},
              {"torsion", torsion},
              {"genus", nullptr}};
  if (r.genus) {
    if (r.genus->possible) {
      out["genus"] = r.genus->value;
    } else {
      out["genus_flag"] = "no connected etale double cover";
    }
  }
  return out;
}

json to_json(const higgs::LineSubbundleReport& r) {
  if (r.all) return "all";
  json a = json::array();
  for (const auto& l : r.lines) {
    a.push_back({{"degree", l.degree},
                 {"generator", json::array({to_json(l.generator[0]), to_json(l.generator[1])})},
                 {"generator_text", json::array({to_string(l.generator[0]), to_string(l.generator[1])})},
                 {"eigen", json::array({to_json(l.eigen[0]), to_json(l.eigen[1])})}});
  }
  return a;
}

json to_json(const moment_map::FlowResult& r) {
  return {{"status", moment_map::to_string(r.status)},
          {"H", to_json(r.metric.h)},
          {"residual", real_json(r.residual)},
          {"relative_residual", real_json(r.relative_residual)},
          {"iters", r.iters},
          {"cond", r.cond}};
}

// ---- input -----------------------------------------------------------------

Rational rational_from(const json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    if (j.is_number_float()) {
      const double d = j.get<double>();
      if (!std::isfinite(d)) fail("non-finite number");
      return Rational(d);
    }
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    fail(e.what());
  }
  fail("expected a rational (\"p/q\" string or number), got " + j.dump());
}

Poly poly_from(const json& j) {
  if (!j.is_array()) fail("polynomial must be a coefficient array, got " + j.dump());
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& x : j) c.push_back(rational_from(x));
  return Poly(std::move(c));
}

algebra::Section section_from(const json& j) {
  const Poly p = poly_from(field(j, "coeffs"));
  const int bound = int_from(field(j, "bound"), "bound");
  try {
    return algebra::Section(p, bound);
  } catch (const Error& e) {
    fail(e.what());
  }
}

higgs::HiggsPair pair_from(const json& j) {
  higgs::HiggsPair p;
  const json& e = field(j, "E");
  p.e1 = int_from(field(e, "e1"), "e1");
  p.e2 = int_from(field(e, "e2"), "e2");
  const json& v = field(j, "V");
  p.twist.m1 = int_from(field(v, "m1"), "m1");
  p.twist.m2 = int_from(field(v, "m2"), "m2");
  for (int k = 0; k < 2; ++k) {
    const char* key = k == 0 ? "phi1" : "phi2";
    const json& m = field(j, key);
    if (!m.is_array() || m.size() != 2) fail(std::string(key) + " must be a 2x2 array");
    higgs::PolyMat& phi = k == 0 ? p.phi1 : p.phi2;
    for (int r = 0; r < 2; ++r) {
      const json& row = m[static_cast<size_t>(r)];
      if (!row.is_array() || row.size() != 2) fail(std::string(key) + " must be a 2x2 array");
      for (int c = 0; c < 2; ++c) {
        const json& entry = row[static_cast<size_t>(c)];
        if (entry.is_object()) {
          phi(r, c) = poly_from(field(entry, "coeffs"));
          if (entry.contains("bound") && int_from(entry["bound"], "bound") != p.entry_bound(k, r, c)) {
            fail(std::string(key) + "[" + std::to_string(r) + "][" + std::to_string(c) + "] bound " +
                 entry["bound"].dump() + " differs from e_i - e_j + m_k = " +
                 std::to_string(p.entry_bound(k, r, c)));
          }
        } else {
          phi(r, c) = poly_from(entry);
        }
      }
    }
  }
  return p;
}

hitchin::SpectralDatum datum_from(const json& j) {
  return {section_from(field(j, "b1")), section_from(field(j, "b2")), section_from(field(j, "b3"))};
}

GaussRational gauss_from(const json& j) {
  if (j.is_object()) return {rational_from(field(j, "re")), rational_from(field(j, "im"))};
  return {rational_from(j)};
}

hitchin::ExactPointPair point_pair_from(const json& j) {
  hitchin::ExactPointPair p;
  for (int k = 0; k < 2; ++k) {
    const char* key = k == 0 ? "phi1" : "phi2";
    const json& m = field(j, key);
    if (!m.is_array() || m.size() != 2) fail(std::string(key) + " must be a 2x2 array");
    auto& phi = k == 0 ? p.phi1 : p.phi2;
    for (int r = 0; r < 2; ++r) {
      const json& row = m[static_cast<size_t>(r)];
      if (!row.is_array() || row.size() != 2) fail(std::string(key) + " must be a 2x2 array");
      for (int c = 0; c < 2; ++c) phi(r, c) = gauss_from(row[static_cast<size_t>(c)]);
    }
  }
  return p;
}

moment_map::FlowConfig flow_config_from(const json& j, moment_map::FlowConfig base) {
  if (!j.is_object()) fail("flow config must be an object");
  auto real = [&](const char* key, double& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_number()) fail(std::string(key) + " must be a number");
    out = j[key].get<double>();
  };
  real("step", base.step);
  real("tol", base.tol);
  real("divergence_cond", base.divergence_cond);
  if (j.contains("max_iters")) base.max_iters = int_from(j["max_iters"], "max_iters");
  return base;
}

}  // namespace vhiggs::json_io
