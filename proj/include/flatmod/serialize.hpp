#pragma once

#include <json.hpp>

#include "flatmod/catalog.hpp"
#include "flatmod/cone.hpp"
#include "flatmod/domain.hpp"
#include "flatmod/moduli.hpp"
#include "flatmod/normalizer.hpp"

namespace flatmod {

using Json = nlohmann::ordered_json;

/// {"a": "p/q", "b": "r/s"}
Json to_json(const Scalar& s);
Json to_json(const Vec& v);
/// Row-major nested arrays of scalars.
Json to_json(const Mat& m);
Json to_json(const Mat2& m);
Json to_json(const AffineMap& f);
Json to_json(const CatalogEntry& g);
Json to_json(const HolonomyGroup& h);
Json to_json(const SymmetricCommutant& c);
Json to_json(const NormalizerVerdict& v);
Json to_json(const CosetTable& t);
Json to_json(const FundamentalDomain& d);
Json to_json(const OrbifoldInvariants& o);
Json to_json(const ModuliExpression& m);
Json to_json(const VerificationReport& r);

/// Accepts {"a", "b"} objects, numbers, and strings such as "1/2" or "1/3*sqrt3".
/// Throws ParseError.
Scalar scalar_from_json(const Json& j);
Mat mat_from_json(const Json& j);
Mat parse_matrix(const std::string& text);

}  // namespace flatmod
