#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "dca/distributions.hpp"
#include "dca/representations.hpp"
#include "dca/spin.hpp"

namespace dca {

using Json = nlohmann::json;

Json to_json(const Scalar& s);
Json to_json(const CliffordElement& c);
Json to_json(const PolyState& f);
Json to_json(const DistState& d);
Json to_json(const OperatorElement& a);
Json to_json(const RtElement& a);
Json to_json(const SpinElement& s);

Scalar scalar_from_json(const Json& j);
CliffordElement clifford_from_json(const Json& j);
PolyState poly_from_json(const Json& j);
DistState dist_from_json(const Json& j);
OperatorElement operator_from_json(const Json& j);
RtElement rt_from_json(const Json& j);
SpinElement spin_from_json(const Json& j);

/// Angle specification: either "sym" (keep the angle symbolic) or a
/// rational multiple of pi such as "1/3pi", "-2/5 pi" or "1pi".
struct AngleSpec {
  bool symbolic = false;
  Rational multiple_of_pi;  // meaningful when !symbolic
};

AngleSpec parse_angle_spec(const std::string& text);

}  // namespace dca
