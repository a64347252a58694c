#include "skewfree/report.hpp"

namespace skewfree::report {

Json envelope(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

Json of(const QuadExt& q) {
  Json j;
  j["exact"] = q.str();
  j["approx"] = q.to_double();
  return j;
}

Json of(const Relation& r, bool verified) {
  Json j;
  j["text"] = r.str();
  Json terms = Json::array();
  for (const auto& [w, c] : r.terms) terms.push_back({{"word", w.str()}, {"coeff", c.str()}});
  j["terms"] = std::move(terms);
  j["verified"] = verified;
  return j;
}

Json of(const ClassificationReport& r) {
  Json j;
  j["matrix"] = r.matrix.str();
  j["trace"] = r.trace;
  j["det"] = r.det;
  j["rho"] = of(r.rho);
  j["branch"] = branch_name(r.branch);
  j["order"] = r.order ? Json(*r.order) : Json(nullptr);
  Json cat = Json::array();
  for (const auto& e : r.catalog) {
    Json item;
    item["clause"] = e.clause;
    item["relation"] = of(e.relation, verify_relation(e.relation));
    cat.push_back(std::move(item));
  }
  j["catalog_relations"] = std::move(cat);
  j["free_generators_hint"] = r.free_generators_hint ? Json(*r.free_generators_hint) : Json(nullptr);
  j["even_power_hint"] = r.even_power_hint ? Json(*r.even_power_hint) : Json(nullptr);
  if (r.free_generators_hint)
    j["hint_note"] =
        "minimal p with rho(M^p) >= 2; the even-power form of the criterion gives p = " +
        std::to_string(*r.even_power_hint);
  return j;
}

Json of(const FreenessReport& r) {
  Json j;
  j["sigma"] = r.sigma;
  j["generators"] = Json::array({{{"name", r.a.name}, {"poly", r.a.poly.str()}},
                                 {{"name", r.b.name}, {"poly", r.b.poly.str()}}});
  j["t_power"] = r.t_power;
  j["depth"] = r.depth;
  j["route"] = r.route;
  j["dims"] = r.dims;
  j["expected"] = r.expected;
  j["verdict"] = verdict_name(r.verdict);
  j["deficient_degree"] = r.deficient_degree ? Json(*r.deficient_degree) : Json(nullptr);
  j["witness"] = r.witness ? of(*r.witness, true) : Json(nullptr);
  j["certificate"] = r.certificate == CertificateKind::None ? Json(nullptr)
                                                            : Json(certificate_name(r.certificate));
  j["unbounded"] = r.unbounded;
  j["certificate_detail"] = r.certificate_detail;
  j["notes"] = r.notes;
  return j;
}

Json of(const ValuationCertificate& c, const IntMat2& m, int t_power) {
  Json j;
  j["matrix"] = m.str();
  j["t_power"] = t_power;
  j["power_matrix"] = c.power_matrix.str();
  j["status"] = c.certified ? "CERTIFIED" : "NOT_APPLICABLE";
  if (c.valuation) {
    j["beta"] = of(c.valuation->beta);
    j["alpha"] = of(c.valuation->w_y);
  }
  j["unbounded"] = c.certified;
  j["reason"] = c.reason;
  return j;
}

Json of(const DoublingResult& d) {
  Json j;
  j["status"] = d.certified ? "CERTIFIED" : "FAILED";
  j["weights"] = Json::array({d.weights.wx, d.weights.wy});
  j["horizon"] = d.horizon;
  j["degrees"] = d.degrees;
  j["failed_at"] = d.failed_at ? Json(*d.failed_at) : Json(nullptr);
  if (d.certified) j["n_min"] = d.n_min;
  j["scope"] = "checked for m < horizon only";
  return j;
}

Json of(const GrowthSeries& s) {
  Json j;
  j["basis"] = s.basis_spec;
  j["graded"] = s.graded;
  j["dims"] = s.dims;
  return j;
}

Json of(const GkEstimate& g) {
  Json j;
  j["kind"] = growth_kind_name(g.kind);
  if (g.kind == GrowthKind::Polynomial) j["degree"] = g.degree;
  j["slope"] = g.slope;
  j["ratio"] = g.ratio;
  j["rss_polynomial"] = g.rss_polynomial;
  j["rss_exponential"] = g.rss_exponential;
  j["window"] = Json::array({g.window_lo, g.window_hi});
  j["cumulative"] = g.cumulative;
  j["label"] = "window-fit heuristic";
  return j;
}

namespace {

bool scalar_array(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v)
    if (e.is_structured()) return false;
  return true;
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void flatten(const std::string& prefix, const Json& v, std::string& out) {
  if (v.is_object()) {
    for (const auto& [k, e] : v.items()) flatten(prefix.empty() ? k : prefix + "." + k, e, out);
  } else if (scalar_array(v)) {
    out += prefix + ": ";
    bool first = true;
    for (const auto& e : v) {
      if (!first) out += ", ";
      out += scalar(e);
      first = false;
    }
    out += '\n';
  } else if (v.is_array()) {
    std::size_t k = 0;
    for (const auto& e : v) flatten(prefix + "[" + std::to_string(k++) + "]", e, out);
  } else {
    out += prefix + ": " + scalar(v) + '\n';
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::string out;
  flatten("", j, out);
  return out;
}

}  // namespace skewfree::report
