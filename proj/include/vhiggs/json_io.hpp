#pragma once

// JSON schemas for the library types.
//
//   Rational      "num/den" (den omitted when 1); integers and decimal
//                 numbers are accepted on input and converted exactly
//   Poly          [c0, c1, ...] lowest degree first
//   Section       {"coeffs": Poly, "bound": d}
//   HiggsPair     {"E": {"e1", "e2"}, "V": {"m1", "m2"}, "phi1": [[Section, Section], [...]], "phi2": ...}
//                 entries may also be bare Poly arrays
//   SpectralDatum {"b1": Section, "b2": Section, "b3": Section}
//   PointPair     {"phi1": [[s, s], [s, s]], "phi2": ...} with s a Rational or {"re": Rational, "im": Rational}
//   ConePoint     {"x": s, "y": s, "z": s}

#include <json.hpp>

#include "vhiggs/moment_map.hpp"
#include "vhiggs/spectral.hpp"
#include "vhiggs/stability.hpp"

namespace vhiggs::json_io {

using nlohmann::json;

/// Thrown for input that does not match a schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

json to_json(const Rational& q);
json to_json(const Poly& p);
json to_json(const QuadNumber& q);
json to_json(const QuadPoly& p);
json to_json(const algebra::Section& s);
json to_json(const higgs::HiggsPair& p);
json to_json(const hitchin::SpectralDatum& b);
json to_json(const GaussRational& g);
json to_json(const hitchin::ExactPointPair& p);
json to_json(const hitchin::ConePoint<GaussRational>& c);
json to_json(const moment_map::Complex& c);
json to_json(const moment_map::CMat& m);

json to_json(const spectral::SpectralCurveReport& r, const spectral::SpectralDatum& b, int truncation);
json to_json(const higgs::LineSubbundleReport& r);
json to_json(const moment_map::FlowResult& r);

Rational rational_from(const json& j);
Poly poly_from(const json& j);
algebra::Section section_from(const json& j);
higgs::HiggsPair pair_from(const json& j);
hitchin::SpectralDatum datum_from(const json& j);
GaussRational gauss_from(const json& j);
hitchin::ExactPointPair point_pair_from(const json& j);

/// Applies "step", "tol", "max_iters", "divergence_cond" keys over `base`.
moment_map::FlowConfig flow_config_from(const json& j, moment_map::FlowConfig base);

}  // namespace vhiggs::json_io
