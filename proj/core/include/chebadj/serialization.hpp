#pragma once

#include <variant>

#include <json.hpp>

#include "chebadj/adjuster.hpp"
#include "chebadj/matrix.hpp"
#include "chebadj/polynomials.hpp"

namespace chebadj {

using json = nlohmann::json;

// Polynomial document: {"basis": "trig"|"power",
//                       "coeffs": [{"k": int, "v": "num/den"}, ...]}
// with coefficients sorted by k ascending and no zero entries.
json to_json(const TrigPoly& p);
json to_json(const PowerPoly& p);

using Polynomial = std::variant<TrigPoly, PowerPoly>;

// Parses either basis; malformed documents raise DomainError.
Polynomial polynomial_from_json(const json& doc);

// Row-major entries as "num/den" strings plus the shape.
json to_json(const RatMatrix& m);

json to_json(const AdjustmentCertificate& cert);

} // namespace chebadj
