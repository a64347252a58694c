#include "skewfree/cli.hpp"

#include <ostream>
#include <set>

#include <CLI11.hpp>

#include "skewfree/error.hpp"
#include "skewfree/freeness.hpp"
#include "skewfree/growth.hpp"
#include "skewfree/monomial.hpp"
#include "skewfree/parse.hpp"
#include "skewfree/report.hpp"

namespace skewfree::cli {

namespace {

using report::Json;

Automorphism sigma_of(const RunConfig& c) {
  if (!c.sigma_spec.empty()) return parse_automorphism(c.sigma_spec, c.mode);
  if (!c.matrix_spec.empty()) return monomial_autom(IntMat2::parse(c.matrix_spec));
  throw InputError("--sigma or -M is required");
}

IntMat2 matrix_of(const RunConfig& c) {
  if (!c.matrix_spec.empty()) return IntMat2::parse(c.matrix_spec);
  if (!c.sigma_spec.empty()) {
    if (auto m = parse_automorphism(c.sigma_spec, c.mode).monomial_matrix()) return *m;
    throw InputError("this command needs a monomial automorphism");
  }
  throw InputError("-M is required");
}

std::vector<Generator> generators_of(const RunConfig& c, Mode mode,
                                     std::vector<std::string> fallback) {
  const auto& specs = c.generator_specs.empty() ? fallback : c.generator_specs;
  std::vector<Generator> out;
  for (const auto& s : specs) {
    auto eq = s.find('=');
    if (eq == std::string::npos) {
      out.push_back(Generator::of(Poly::parse(s, mode)));
    } else {
      std::string name = parse::trim(s.substr(0, eq));
      if (name.empty()) throw InputError("empty generator name in '" + s + "'");
      out.push_back({name, Poly::parse(s.substr(eq + 1), mode)});
    }
  }
  std::set<std::string> names;
  for (const auto& g : out)
    if (!names.insert(g.name).second) throw InputError("duplicate generator name " + g.name);
  return out;
}

std::pair<Generator, Generator> pair_of(const RunConfig& c, Mode mode) {
  auto gens = generators_of(c, mode, {"x", "y"});
  if (gens.size() != 2) throw InputError("exactly two generators are needed");
  return {gens[0], gens[1]};
}

WeightedDegree weights_of(const RunConfig& c) {
  auto parts = parse::split_top_level(c.weights, ',');
  if (parts.size() != 2) throw InputError("weights must look like 'wx,wy'");
  try {
    WeightedDegree w{std::stoll(parts[0]), std::stoll(parts[1])};
    if (w.wx < 1 || w.wy < 1) throw InputError("weights must be positive");
    return w;
  } catch (const std::logic_error&) {
    throw InputError("weights must be integers");
  }
}

FreenessOptions options_of(const RunConfig& c) {
  FreenessOptions o;
  if (c.route == "rank")
    o.route = DimRoute::RankOracle;
  else if (c.route == "sumset")
    o.route = DimRoute::MonomialFastPath;
  else if (c.route != "auto")
    throw InputError("route must be auto, rank or sumset");
  if (c.max_entries) o.max_entries = *c.max_entries;
  o.doubling_horizon = c.horizon;
  return o;
}

void require_positive(int v, const char* what) {
  if (v < 1) throw InputError(std::string(what) + " must be at least 1");
}

int cmd_classify(const RunConfig& c, Json& j) {
  j["classification"] = report::of(classify(matrix_of(c)));
  return kVerified;
}

int cmd_check_free(const RunConfig& c, Json& j) {
  require_positive(c.depth, "--depth");
  require_positive(c.power, "--power");
  Automorphism sigma = sigma_of(c);
  auto [a, b] = pair_of(c, sigma.mode());
  FreenessOptions opts = options_of(c);
  opts.doubling_horizon = 0;
  auto rep = check_free(sigma, a, b, c.power, c.depth, opts);
  j["report"] = report::of(rep);
  switch (rep.verdict) {
    case Verdict::FreeUpToDepth: return kVerified;
    case Verdict::NotFree: return kRefuted;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

int cmd_certify(const RunConfig& c, Json& j) {
  require_positive(c.power, "--power");
  bool monomial = !c.matrix_spec.empty();
  if (!monomial && !c.sigma_spec.empty())
    monomial = parse_automorphism(c.sigma_spec, c.mode).monomial_matrix().has_value();
  if (monomial) {
    IntMat2 m = matrix_of(c);
    auto gens = generators_of(c, Mode::Laurent, {"x", "y"});
    if (gens.size() != 2 || !gens[0].poly.is_monomial() || !gens[1].poly.is_monomial())
      throw InputError("valuation certificates need two monomial generators");
    auto vc = valuation_certificate(m, c.power, gens[0].poly.terms()[0].e, gens[1].poly.terms()[0].e);
    j["kind"] = "VALUATION";
    j["certificate"] = report::of(vc, m, c.power);
    return vc.certified ? kVerified : kInconclusive;
  }
  require_positive(c.horizon, "--horizon");
  Automorphism sigma = sigma_of(c);
  auto gens = generators_of(c, sigma.mode(), {"x"});
  if (gens.size() != 1) throw InputError("degree doubling takes one generator g");
  Automorphism tau = power(sigma, c.power);
  auto d = degree_doubling_certificate(tau, gens[0].poly, weights_of(c), c.horizon);
  j["kind"] = "DEGREE_DOUBLING";
  j["g"] = gens[0].poly.str();
  j["certificate"] = report::of(d);
  return d.certified ? kVerified : kInconclusive;
}

int cmd_verify_relation(const RunConfig& c, Json& j) {
  require_positive(c.power, "--power");
  if (c.relation.empty()) throw InputError("--relation is required");
  auto sigma = share(sigma_of(c));
  auto gens = generators_of(c, sigma->mode(), {"x", "y"});
  std::vector<Letter> alphabet;
  for (const auto& g : gens) alphabet.push_back({g.name, g.poly, c.power});
  Relation r = parse_relation(sigma, c.relation, alphabet);
  bool ok = verify_relation(r);
  j["sigma"] = sigma->str();
  j["relation"] = report::of(r, ok);
  return ok ? kVerified : kRefuted;
}

int cmd_dims(const RunConfig& c, Json& j) {
  require_positive(c.depth, "--depth");
  require_positive(c.power, "--power");
  Automorphism sigma = sigma_of(c);
  auto [a, b] = pair_of(c, sigma.mode());
  auto opts = options_of(c);
  auto dims = component_dimensions(sigma, a.poly, b.poly, c.depth, c.power, opts);
  std::vector<std::size_t> expected;
  for (int n = 1; n <= c.depth && n < 63; ++n) expected.push_back(std::size_t{1} << n);
  j["sigma"] = sigma.str();
  j["generators"] = Json::array({a.poly.str(), b.poly.str()});
  j["t_power"] = c.power;
  j["dims"] = dims;
  j["expected"] = expected;
  return kVerified;
}

int cmd_henon_degrees(const RunConfig& c, Json& j) {
  require_positive(c.horizon, "--horizon");
  RunConfig cc = c;
  if (cc.sigma_spec.empty() && cc.matrix_spec.empty()) cc.sigma_spec = "henon:1,1";
  Automorphism sigma = sigma_of(cc);
  if (sigma.mode() != Mode::Poly) throw InputError("henon-degrees needs a polynomial automorphism");
  WeightedDegree w = weights_of(c);
  auto orbit = orbit_images(sigma, c.horizon);
  std::vector<std::int64_t> dx, dy;
  for (const auto& [px, py] : orbit) {
    dx.push_back(weighted_degree(px, w));
    dy.push_back(weighted_degree(py, w));
  }
  auto gens = generators_of(c, Mode::Poly, {"y"});
  if (gens.size() != 1) throw InputError("henon-degrees takes one generator g");
  auto d = degree_doubling_certificate(sigma, gens[0].poly, w, c.horizon);
  j["sigma"] = sigma.str();
  j["weights"] = Json::array({w.wx, w.wy});
  j["degrees_x"] = dx;
  j["degrees_y"] = dy;
  j["g"] = gens[0].poly.str();
  j["doubling"] = report::of(d);
  return d.certified ? kVerified : kInconclusive;
}

int cmd_growth(const RunConfig& c, Json& j) {
  if (c.N < 0) throw InputError("-N must be non-negative");
  auto sigma = share(sigma_of(c));
  std::vector<std::string> specs = c.generator_specs;
  if (specs.empty()) specs = {"x", "y", "t"};
  std::vector<SkewPoly> gens;
  for (const auto& s : specs) {
    bool neg_t = sigma->mode() == Mode::Laurent && s.find("t^-") != std::string::npos;
    gens.push_back(SkewPoly::parse(sigma, s, neg_t));
  }
  GrowthSeries series = c.graded ? graded_dims(gens, c.N) : filtration_dims(gens, c.N);
  j["sigma"] = sigma->str();
  j["series"] = report::of(series);
  if (series.dims.size() >= 8)
    j["estimate"] = report::of(gk_estimate(series));
  else
    j["estimate"] = nullptr;
  return kVerified;
}

int cmd_parity(const RunConfig& c, Json& j) {
  require_positive(c.depth, "--depth");
  IntMat2 m = matrix_of(c);
  bool obstructed = parity_obstruction(m);
  j["matrix"] = m.str();
  j["status"] = obstructed ? "OBSTRUCTED" : "NOT_OBSTRUCTED";
  // Total-degree parities present in the degree-n component, n = 1..depth.
  Json per = Json::array();
  for (int n = 1; n <= c.depth; ++n) {
    std::set<int> parities;
    for (const auto& e : exponent_sumset(m, n)) parities.insert(static_cast<int>(((e.i + e.j) % 2 + 2) % 2));
    per.push_back(Json(std::vector<int>(parities.begin(), parities.end())));
  }
  j["parities"] = std::move(per);
  return kVerified;
}

}  // namespace

RunResult run(const RunConfig& c) {
  RunResult res;
  Json j = report::envelope(c.command);
  try {
    if (c.command == "classify")
      res.exit_code = cmd_classify(c, j);
    else if (c.command == "check-free")
      res.exit_code = cmd_check_free(c, j);
    else if (c.command == "certify")
      res.exit_code = cmd_certify(c, j);
    else if (c.command == "verify-relation")
      res.exit_code = cmd_verify_relation(c, j);
    else if (c.command == "dims")
      res.exit_code = cmd_dims(c, j);
    else if (c.command == "henon-degrees")
      res.exit_code = cmd_henon_degrees(c, j);
    else if (c.command == "growth")
      res.exit_code = cmd_growth(c, j);
    else if (c.command == "parity")
      res.exit_code = cmd_parity(c, j);
    else
      throw InputError("unknown command '" + c.command + "'");
  } catch (const ResourceCapExceeded& e) {
    j = report::envelope(c.command);
    j["error"] = std::string("resource cap: ") + e.what();
    res.exit_code = kInconclusive;
    res.diagnostic = j["error"].get<std::string>();
  } catch (const Error& e) {
    j = report::envelope(c.command);
    j["error"] = e.what();
    res.exit_code = kInputError;
    res.diagnostic = e.what();
  }
  res.output = c.json ? j.dump(2) + "\n" : report::render_text(j);
  return res;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Freeness of two-generator subalgebras of skew polynomial rings"};
  app.require_subcommand(1);
  RunConfig c;
  bool text = false;
  std::string mode = "poly";
  std::string gens;
  std::size_t max_entries = 0;

  auto common = [&](CLI::App* s) {
    s->add_flag("--json", "JSON report (default)");
    s->add_flag("--text", text, "plain key: value report");
    s->add_option("--mode", mode, "ring for custom/identity maps: poly or laurent")
        ->check(CLI::IsMember({"poly", "laurent"}));
  };
  auto with_sigma = [&](CLI::App* s) {
    s->add_option("--sigma", c.sigma_spec,
                  "monomial:a,b;c,d | elementary:a,b,c,p(y) | henon:a,b | custom:ix|iy|vx|vy");
    s->add_option("-M,--matrix", c.matrix_spec, "monomial matrix a,b;c,d");
  };
  auto with_gens = [&](CLI::App* s) {
    s->add_option("--gens", gens, "comma separated generators, optionally name=poly");
  };

  auto* classify_cmd = app.add_subcommand("classify", "spectral classification of a monomial map");
  with_sigma(classify_cmd);
  common(classify_cmd);

  auto* check = app.add_subcommand("check-free", "graded dimensions and a freeness verdict");
  with_sigma(check);
  with_gens(check);
  check->add_option("--depth", c.depth, "highest degree");
  check->add_option("--power", c.power, "t power p of the generators a t^p, b t^p");
  check->add_option("--route", c.route, "auto, rank or sumset");
  check->add_option("--max-entries", max_entries, "cap on expanded terms per degree");
  common(check);

  auto* certify = app.add_subcommand("certify", "valuation or degree-doubling certificate");
  with_sigma(certify);
  with_gens(certify);
  certify->add_option("--power", c.power, "t power");
  certify->add_option("--horizon", c.horizon, "doubling horizon");
  certify->add_option("--weights", c.weights, "weights wx,wy");
  common(certify);

  auto* verify = app.add_subcommand("verify-relation", "expand a relation and test it is zero");
  with_sigma(verify);
  with_gens(verify);
  verify->add_option("--relation", c.relation, "e.g. '(xt)^2(yt) = (yt)^2(xt)'")->required();
  verify->add_option("--power", c.power, "t power of the letters");
  common(verify);

  auto* dims = app.add_subcommand("dims", "dimensions of the graded components");
  with_sigma(dims);
  with_gens(dims);
  dims->add_option("--depth", c.depth, "highest degree");
  dims->add_option("--power", c.power, "t power");
  dims->add_option("--route", c.route, "auto, rank or sumset");
  dims->add_option("--max-entries", max_entries, "cap on expanded terms per degree");
  common(dims);

  auto* henon = app.add_subcommand("henon-degrees", "weighted degrees along an orbit");
  with_sigma(henon);
  with_gens(henon);
  henon->add_option("--horizon", c.horizon, "number of iterates");
  henon->add_option("--weights", c.weights, "weights wx,wy");
  common(henon);

  auto* growth = app.add_subcommand("growth", "growth series and a GK-dimension estimate");
  with_sigma(growth);
  growth->add_option("--gens", gens, "generators such as 'x,y,y^2,t'");
  growth->add_option("-N", c.N, "largest n");
  growth->add_flag("--graded", c.graded, "graded components instead of the filtration");
  common(growth);

  auto* parity = app.add_subcommand("parity", "total-degree parity obstruction");
  with_sigma(parity);
  parity->add_option("--depth", c.depth, "enumerate components up to this degree");
  common(parity);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  c.command = app.get_subcommands().front()->get_name();
  c.json = !text;
  c.mode = mode == "laurent" ? Mode::Laurent : Mode::Poly;
  if (max_entries > 0) c.max_entries = max_entries;
  if (!gens.empty()) c.generator_specs = parse::split_top_level(gens, ',');
  for (auto& s : c.generator_specs) s = parse::trim(s);

  RunResult r = run(c);
  out << r.output;
  if (!r.diagnostic.empty()) err << "skewfree: " << r.diagnostic << '\n';
  return r.exit_code;
}

}  // namespace skewfree::cli
