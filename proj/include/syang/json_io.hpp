#pragma once

#include "syang/glmn.hpp"
#include "syang/induced.hpp"
#include "syang/pbw.hpp"
#include "syang/weights.hpp"
#include "syang/ymodule.hpp"

#include <json.hpp>

#include <string>

namespace syang {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const RatFun& f);
RatFun ratfun_from_json(const Json& j);

Json to_json(const GradingContext& ctx);
GradingContext ctx_from_json(const Json& j);

Json to_json(const AlgebraElement& x);
AlgebraElement algebra_element_from_json(const Json& j);

Json to_json(const GlWeight& w);
GlWeight gl_weight_from_json(const Json& j);

Json to_json(const GlModule& m);
GlModule gl_module_from_json(const Json& j);

Json to_json(const YModule& m);
YModule y_module_from_json(const Json& j);

Json to_json(const HighestWeight& w);
HighestWeight highest_weight_from_json(const Json& j);

Json to_json(const DrinfeldData& d);

Json to_json(const FdVerdict& v);

Json to_json(const WeightFactorization& f);

/// Canonical serialization: sorted keys, canonical rational strings, two-space
/// indent, trailing newline. Byte-identical for equal values.
std::string canonical_dump(const Json& j);

} // namespace syang
