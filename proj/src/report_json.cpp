#include "betalab/report_json.hpp"

#include <cmath>

namespace betalab {
namespace {

// JSON has no inf/nan; nlohmann writes them as null.
nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

nlohmann::json triple(const Triple& t) {
  return nlohmann::json::array({number(t.x), number(t.y), number(t.t)});
}

}  // namespace

nlohmann::json to_json(const FitReport& r) {
  nlohmann::json per_point = nlohmann::json::array();
  for (const auto& [x, res] : r.per_point) {
    per_point.push_back(nlohmann::json::array({number(x), number(res)}));
  }
  return {
      {"b", number(r.b_hat)},
      {"p", number(r.p_hat)},
      {"a", number(r.a_hat)},
      {"residual_rms", number(r.residual_rms)},
      {"residual_max", number(r.residual_max)},
      {"condition", number(r.condition_estimate)},
      {"per_point", per_point},
  };
}

nlohmann::json to_json(const DefectReport& r) {
  return {
      {"p", number(r.p_tested)},
      {"defect_max", number(r.max_defect)},
      {"defect_mean", number(r.mean_defect)},
      {"defect_max_log", number(r.max_log_defect)},
      {"defect_argmax", triple(r.argmax)},
  };
}

nlohmann::json to_json(const DegreeEstimate& r) {
  return {
      {"p", number(r.p_hat)},
      {"residual", number(r.residual)},
      {"triples", r.triples_used},
  };
}

nlohmann::json to_json(const LambdaReport& r) {
  return {
      {"c", number(r.c_hat)},
      {"d", number(r.d_hat)},
      {"deviation_max", number(r.max_deviation)},
      {"reference", number(r.reference_x)},
      {"b", number(r.b_implied)},
  };
}

nlohmann::json to_json(const Classification& c) {
  nlohmann::json params = nullptr;
  if (c.canonical_params) {
    params = {{"b", number(c.canonical_params->b)},
              {"p", number(c.canonical_params->p)},
              {"a", number(c.canonical_params->a)}};
  }
  return {
      {"degree", number(c.degree_estimate)},
      {"degree_residual", number(c.degree_residual)},
      {"homogeneous", c.is_homogeneous},
      {"reflexive", c.is_reflexive},
      {"pre_mean", c.is_pre_mean},
      {"mean", c.is_mean},
      {"harmonic", c.is_harmonic},
      {"params", params},
      {"notes", c.notes},
  };
}

nlohmann::json to_json(const CauchyDefectReport& r) {
  return {
      {"p", number(r.p_tested)},
      {"defect_max", number(r.max_defect)},
      {"defect_argmax", triple(r.argmax)},
  };
}

nlohmann::json to_json(const DualityBridgeReport& r) {
  return {
      {"p", number(r.p)},
      {"cauchy_defect", number(r.cauchy_defect)},
      {"beta_degree", number(0.0 - r.p)},
      {"beta_defect", number(r.beta_defect)},
      {"beta_log_defect", number(r.beta_log_defect)},
      {"cauchy_holds", r.cauchy_holds},
      {"beta_holds", r.beta_holds},
      {"agree", r.agree},
  };
}

nlohmann::json to_json(const ResidualReport& r) {
  return {
      {"residual_max", number(r.max_residual)},
      {"witness", nlohmann::json::array({number(r.witness.first), number(r.witness.second)})},
  };
}

}  // namespace betalab
