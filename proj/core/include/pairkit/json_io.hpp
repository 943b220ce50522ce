#ifndef PAIRKIT_JSON_IO_HPP
#define PAIRKIT_JSON_IO_HPP

#include "pairkit/fitter.hpp"
#include "pairkit/mapping.hpp"

#include <string>

#include "json.hpp"

namespace pairkit {

using Json = nlohmann::json;

// Rationals serialize as "num" or "num/den" strings; points as [x, y] string
// arrays so arbitrary precision survives the round-trip bit-exactly.
Json to_json(const Rational& r);
Json to_json(const Point2& p);
Json to_json(const QuadForm& f);
Json to_json(const RegionPredicate& pr);
Json to_json(const PiecewiseMapping& m);
Json to_json(const FitReport& r);

Rational rational_from_json(const Json& j);
Point2 point2_from_json(const Json& j);
QuadForm quadform_from_json(const Json& j);
RegionPredicate predicate_from_json(const Json& j);
PiecewiseMapping mapping_from_json(const Json& j);

}  // namespace pairkit

#endif
