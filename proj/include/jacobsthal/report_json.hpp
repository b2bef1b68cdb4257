#pragma once

#include <vector>

#include <json.hpp>

#include "jacobsthal/identity_suite.hpp"

namespace jacobsthal {

/// 3x3 nested array of rendered scalars.
nlohmann::json matrix_to_json(const RenderedMatrix& matrix);

/// {identity, status, checks, counterexample?{k, m?, n, lhs, rhs}}; matrices
/// render as nested arrays, scalars as strings. Extension checks carry an
/// additional "extension": true.
nlohmann::json report_to_json(const VerificationReport& report);
nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace jacobsthal
