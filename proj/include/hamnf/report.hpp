#pragma once

#include "hamnf/matrix.hpp"
#include "hamnf/normal_form.hpp"
#include "hamnf/polynomial.hpp"
#include "hamnf/problem.hpp"
#include "hamnf/subspace.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace hamnf {

/// Machine section is canonical JSON (sorted keys, rationals as "p/q"
/// strings); human section is plain text.
struct ReportDocument {
    nlohmann::json machine;
    std::string human;
};

/// Dispatches on spec.task. Hypothesis and certificate failures propagate
/// as Error; every returned report has all its certificates passed.
ReportDocument run_task(const ProblemSpec& spec);

nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const GradedSubspace& s);
nlohmann::json to_json(const NormalFormReport& r);

Scalar scalar_from_json(const nlohmann::json& j);
Matrix matrix_from_json(const nlohmann::json& j);
Poly poly_from_json(const nlohmann::json& j);
GradedSubspace subspace_from_json(const nlohmann::json& j);

} // namespace hamnf
