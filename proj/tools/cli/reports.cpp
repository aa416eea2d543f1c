#include "reports.hpp"

namespace langdual::cli {

Json to_json(const IntegerVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.convert_to<long long>());
  return a;
}

Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json to_json(const RootDatum& rd) {
  Json j;
  j["type"] = std::string(1, to_char(rd.label().type));
  j["rank"] = rd.rank();
  j["form"] = rd.label().form;
  j["roots"] = Json::array();
  for (const auto& r : rd.roots()) j["roots"].push_back(to_json(r));
  j["coroots"] = Json::array();
  for (const auto& c : rd.coroots()) j["coroots"].push_back(to_json(c));
  return j;
}

Json to_json(const GradedRank& k) { return Json{{"k0", k.k0}, {"k1", k.k1}}; }

Json to_json(const ClassContribution& c) {
  return Json{{"representative", c.representative}, {"class_size", c.class_size},
              {"centralizer_order", c.centralizer_order}, {"fixed_dim", c.fixed_dim},
              {"components", c.components}, {"even", c.even}, {"odd", c.odd}};
}

Json to_json(const DualityReport& r) {
  Json j;
  j["type"] = std::string(1, to_char(r.primal_label.type));
  j["rank"] = r.primal_label.rank;
  j["form"] = r.primal_label.form;
  j["dual_label"] = r.dual_label.to_string();
  j["primal"] = to_json(r.primal);
  j["dual"] = to_json(r.dual);
  j["verdict"] = r.equal ? "equal" : "different";
  j["cross_degree_equal"] = r.cross_equal;
  Json classes;
  classes["primal"] = Json::array();
  for (const auto& c : r.primal_classes) classes["primal"].push_back(to_json(c));
  classes["dual"] = Json::array();
  for (const auto& c : r.dual_classes) classes["dual"].push_back(to_json(c));
  j["classes"] = classes;
  return j;
}

Json to_json(const AffineReport& r) {
  Json j;
  j["type"] = std::string(1, to_char(r.label.type));
  j["rank"] = r.label.rank;
  j["form"] = r.label.form;
  j["extended_affine"] = to_json(r.extended);
  j["dual_affine"] = to_json(r.dual_affine);
  j["affine"] = to_json(r.affine);
  j["dual_affine_equal"] = r.dual_affine_equal;
  j["affine_asserted"] = r.affine_asserted;
  j["affine_equal"] = r.affine_equal;
  j["verdict"] = r.passed() ? "equal" : "different";
  return j;
}

Json to_json(const FixedSetReport& r) {
  Json j;
  if (r.element) j["element"] = *r.element;
  j["fixed_dim"] = r.fixed_dim;
  j["component_count"] = r.components.size();
  j["components"] = Json::array();
  for (const auto& c : r.components) j["components"].push_back(to_json(c));
  return j;
}

Json to_json(const SpectralReport& r) {
  Json j;
  j["dim"] = r.dimension;
  j["grid"] = r.grid;
  j["halfwidth"] = r.halfwidth;
  j["eigenvalues"] = r.eigenvalues;
  j["kernel_dim"] = r.kernel_dim;
  j["kernel_parity"] = r.kernel_parity;
  j["residual_max"] = r.residual_max;
  j["expected"] = r.expected;
  j["deviations"] = r.deviations;
  j["kernel_cosine"] = r.kernel_cosine;
  j["residual_tolerance"] = r.residual_tolerance;
  return j;
}

Json to_json(const PoincareSuiteResult& r) {
  return Json{{"seed", r.seed},
              {"samples", r.samples},
              {"quasi_periodicity", r.quasi_periodicity},
              {"periodicity_x", r.periodicity_x},
              {"periodicity_eta", r.periodicity_eta},
              {"equivariance", r.equivariance},
              {"hermitian", r.hermitian},
              {"sesquilinearity", r.sesquilinearity},
              {"gram_min_eigenvalue", r.gram_min_eigenvalue},
              {"weyl_elements", r.weyl_elements},
              {"max_deviation", r.max_deviation()}};
}

Json to_json(const RowResult& r) {
  return Json{{"group", r.row.group},
              {"dual", r.row.dual},
              {"f", r.row.f},
              {"representative", r.computed_label},
              {"computed_dual", r.computed_dual},
              {"expected_f", r.row.connection_index},
              {"computed_f", r.computed_f},
              {"computed_dual_f", r.computed_dual_f},
              {"passed", r.passed()}};
}

}  // namespace langdual::cli
