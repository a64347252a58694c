#include "skewfree/freeness.hpp"

#include <cstdlib>
#include <unordered_map>

#include "skewfree/error.hpp"
#include "skewfree/kernels.hpp"
#include "skewfree/monomial.hpp"

namespace skewfree {

std::size_t default_max_entries() {
  if (const char* env = std::getenv("SKEWFREE_MAX_ENTRIES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 20;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::FreeUpToDepth: return "FREE_UP_TO_DEPTH";
    case Verdict::NotFree: return "NOT_FREE";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string certificate_name(CertificateKind c) {
  switch (c) {
    case CertificateKind::None: return "NONE";
    case CertificateKind::Valuation: return "VALUATION";
    case CertificateKind::DegreeDoubling: return "DEGREE_DOUBLING";
    case CertificateKind::RankOnly: return "RANK_ONLY";
  }
  return "?";
}

namespace {

std::size_t two_pow(int n) { return std::size_t{1} << n; }

void require_independent(const Poly& a, const Poly& b) {
  require_same_mode(a, b, "generators");
  const Poly pair[] = {a, b};
  if (linalg::rank_rational(pair) != 2) throw DomainError("generators are linearly dependent");
}

struct MonomialData {
  IntMat2 m;
  Term ta, tb;
};

std::optional<MonomialData> monomial_data(const Automorphism& sigma, const Poly& a, const Poly& b) {
  auto m = sigma.monomial_matrix();
  if (!m || !a.is_monomial() || !b.is_monomial()) return std::nullopt;
  return MonomialData{*m, a.terms()[0], b.terms()[0]};
}

/// Produces the coefficient polynomials of all 2^n words, one degree at a time.
class WordExpander {
 public:
  WordExpander(const Automorphism& sigma, Poly a, Poly b, int t_power, std::size_t max_entries)
      : tau_(power(sigma, t_power)), a_(std::move(a)), b_(std::move(b)),
        ix_(Poly::x(sigma.mode())), iy_(Poly::y(sigma.mode())), max_entries_(max_entries) {
    level_.push_back(Poly::constant(Rat(1), sigma.mode()));
  }

  int degree() const { return degree_; }
  const std::vector<Poly>& level() const { return level_; }

  const std::vector<Poly>& advance() {
    Poly fa = substitute(a_, ix_, iy_);
    Poly fb = substitute(b_, ix_, iy_);
    std::size_t bound = 0;
    for (const auto& p : level_) bound += p.size() * (fa.size() + fb.size());
    if (bound / 16 > max_entries_)
      throw ResourceCapExceeded("degree " + std::to_string(degree_ + 1) +
                                " would expand to about " + std::to_string(bound) + " terms");
    auto next = kernels::parallel::expand_level(level_, fa, fb);
    std::size_t entries = 0;
    for (const auto& p : next) entries += p.size();
    if (entries > max_entries_)
      throw ResourceCapExceeded("degree " + std::to_string(degree_ + 1) + " expands to " +
                                std::to_string(entries) + " terms, cap is " +
                                std::to_string(max_entries_));
    level_ = std::move(next);
    ++degree_;
    Poly nx = substitute(tau_.img_x(), ix_, iy_);
    Poly ny = substitute(tau_.img_y(), ix_, iy_);
    ix_ = std::move(nx);
    iy_ = std::move(ny);
    return level_;
  }

 private:
  Automorphism tau_;
  Poly a_, b_;
  Poly ix_, iy_;  // tau^degree(x), tau^degree(y)
  std::vector<Poly> level_;
  int degree_ = 0;
  std::size_t max_entries_;
};

Relation relation_from_dependency(const AutomPtr& sigma, const linalg::Dependency& dep, int n,
                                  const Letter& la, const Letter& lb) {
  Relation r{sigma, {}};
  for (std::size_t k = 0; k < dep.coeffs.size(); ++k)
    if (!dep.coeffs[k].is_zero())
      r.terms.emplace_back(word_from_index(k, n, la, lb), dep.coeffs[k]);
  return normalize(std::move(r));
}

/// First word whose exponent repeats an earlier one, for monomial data.
Relation first_collision(const AutomPtr& sigma, const MonomialData& md, int n, int t_power,
                         const Letter& la, const Letter& lb) {
  const IntMat2 step = md.m.transpose().pow(t_power);
  IntMat2 cur = IntMat2::identity();
  std::vector<ExpVec> sums{{0, 0}};
  for (int k = 0; k < n; ++k) {
    ExpVec va = cur.apply(md.ta.e), vb = cur.apply(md.tb.e);
    std::vector<ExpVec> next(2 * sums.size());
    for (std::size_t w = 0; w < sums.size(); ++w) {
      next[2 * w] = {sums[w].i + va.i, sums[w].j + va.j};
      next[2 * w + 1] = {sums[w].i + vb.i, sums[w].j + vb.j};
    }
    sums = std::move(next);
    cur = step * cur;
  }
  std::unordered_map<ExpVec, std::size_t, ExpVecHash> first;
  for (std::size_t w = 0; w < sums.size(); ++w) {
    auto [it, fresh] = first.emplace(sums[w], w);
    if (fresh) continue;
    auto coeff = [&](std::size_t idx) {
      Rat c(1);
      for (int k = 0; k < n; ++k) c *= (idx >> k) & 1U ? md.tb.c : md.ta.c;
      return c;
    };
    Relation r{sigma, {}};
    r.terms.emplace_back(word_from_index(it->second, n, la, lb), coeff(w));
    r.terms.emplace_back(word_from_index(w, n, la, lb), -coeff(it->second));
    return normalize(std::move(r));
  }
  throw Error("no exponent collision in degree " + std::to_string(n));
}

struct DimsRun {
  std::vector<std::size_t> dims;
  bool monomial = false;
  std::optional<std::string> stopped;  // why dims end before the requested depth
  std::optional<Relation> witness;
  std::optional<MonomialData> md;
};

DimsRun run_dims(const Automorphism& sigma, const Generator& ga, const Generator& gb, int t_power,
                 int depth, const FreenessOptions& opts, bool want_witness, bool throw_on_cap) {
  if (depth < 1) throw InputError("depth must be at least 1");
  if (t_power < 1) throw InputError("t power must be at least 1");
  require_same_mode(sigma.img_x(), ga.poly, "generators");
  require_independent(ga.poly, gb.poly);

  DimsRun run;
  run.md = opts.route == DimRoute::RankOracle ? std::nullopt
                                              : monomial_data(sigma, ga.poly, gb.poly);
  if (opts.route == DimRoute::MonomialFastPath && !run.md)
    throw DomainError("monomial fast path needs a monomial automorphism and monomial generators");
  run.monomial = run.md.has_value();

  const int cap = run.monomial ? opts.max_depth_monomial : opts.max_depth_generic;
  int reach = depth;
  if (depth > cap) {
    std::string why = "depth capped at " + std::to_string(cap);
    if (throw_on_cap) throw ResourceCapExceeded(why);
    run.stopped = why;
    reach = cap;
  }

  AutomPtr shared = share(sigma);
  const Letter la{ga.name, ga.poly, t_power}, lb{gb.name, gb.poly, t_power};

  if (run.monomial) {
    const IntMat2 step = run.md->m.transpose().pow(t_power);
    IntMat2 cur = IntMat2::identity();
    std::vector<ExpVec> s{{0, 0}};
    for (int k = 0; k < reach; ++k) {
      try {
        s = kernels::parallel::sumset_step(s, cur.apply(run.md->ta.e), cur.apply(run.md->tb.e));
        if (k + 1 < reach) cur = step * cur;
      } catch (const ResourceCapExceeded& e) {
        if (throw_on_cap) throw;
        run.stopped = e.what();
        break;
      }
      run.dims.push_back(s.size());
      if (want_witness && !run.witness && s.size() < two_pow(k + 1))
        run.witness = first_collision(shared, *run.md, k + 1, t_power, la, lb);
    }
    return run;
  }

  WordExpander ex(sigma, ga.poly, gb.poly, t_power, opts.max_entries);
  for (int n = 1; n <= reach; ++n) {
    try {
      ex.advance();
    } catch (const ResourceCapExceeded& e) {
      if (throw_on_cap) throw;
      run.stopped = e.what();
      break;
    }
    auto m = linalg::assemble(ex.level());
    run.dims.push_back(linalg::rank(m, opts.rank_method));
    if (want_witness && !run.witness && run.dims.back() < two_pow(n)) {
      auto dep = linalg::first_dependency(ex.level());
      if (!dep) throw Error("rank deficit without a dependency in degree " + std::to_string(n));
      run.witness = relation_from_dependency(shared, *dep, n, la, lb);
    }
  }
  return run;
}

bool proportional(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero() || p.size() != q.size()) return false;
  Rat c = q.terms()[0].c / p.terms()[0].c;
  return p * c == q;
}

}  // namespace

std::vector<std::size_t> component_dimensions(const Automorphism& sigma, const Poly& a,
                                              const Poly& b, int depth, int t_power,
                                              const FreenessOptions& opts) {
  return run_dims(sigma, Generator::of(a), Generator::of(b), t_power, depth, opts, false, true).dims;
}

std::size_t component_dimension(const Automorphism& sigma, const Poly& a, const Poly& b, int n,
                                const FreenessOptions& opts) {
  return component_dimensions(sigma, a, b, n, 1, opts).back();
}

std::optional<Relation> find_relation(const Automorphism& sigma, const Generator& a,
                                      const Generator& b, int n, int t_power,
                                      const FreenessOptions& opts) {
  auto run = run_dims(sigma, a, b, t_power, n, opts, false, true);
  if (run.dims.back() == two_pow(n)) return std::nullopt;
  AutomPtr shared = share(sigma);
  const Letter la{a.name, a.poly, t_power}, lb{b.name, b.poly, t_power};
  Relation r = [&] {
    if (run.md) return first_collision(shared, *run.md, n, t_power, la, lb);
    WordExpander ex(sigma, a.poly, b.poly, t_power, opts.max_entries);
    for (int k = 0; k < n; ++k) ex.advance();
    auto dep = linalg::first_dependency(ex.level());
    if (!dep) throw Error("rank deficit without a dependency in degree " + std::to_string(n));
    return relation_from_dependency(shared, *dep, n, la, lb);
  }();
  if (!verify_relation(r)) throw Error("extracted relation does not verify: " + r.str());
  return r;
}

std::optional<Relation> find_relation(const Automorphism& sigma, const Poly& a, const Poly& b,
                                      int n, const FreenessOptions& opts) {
  return find_relation(sigma, Generator::of(a), Generator::of(b), n, 1, opts);
}

DoublingResult degree_doubling_certificate(const Automorphism& sigma, const Poly& g,
                                           WeightedDegree w, int horizon) {
  if (sigma.mode() != Mode::Poly || g.mode() != Mode::Poly)
    throw ModeMismatch("degree doubling needs the polynomial ring");
  if (g.is_zero() || g.is_constant()) throw DomainError("degree doubling needs a non-constant g");
  if (horizon < 1) throw InputError("horizon must be at least 1");

  DoublingResult r;
  r.horizon = horizon;
  r.weights = w;
  // sigma^m(x), sigma^m(y), computed only when some later step needs them.
  std::vector<std::optional<Poly>> xs{Poly::x(Mode::Poly)}, ys{Poly::y(Mode::Poly)};
  const Poly zero(Mode::Poly);
  auto image = [&](auto&& self, int m, bool want_x) -> const Poly& {
    auto& slot = want_x ? xs : ys;
    if (slot.size() <= static_cast<std::size_t>(m)) {
      xs.resize(m + 1);
      ys.resize(m + 1);
    }
    auto& cell = (want_x ? xs : ys)[m];
    if (!cell) {
      const Poly& f = want_x ? sigma.img_x() : sigma.img_y();
      Poly px = f.degree_in_x() > 0 ? self(self, m - 1, true) : zero;
      Poly py = f.degree_in_y() > 0 ? self(self, m - 1, false) : zero;
      (want_x ? xs : ys)[m] = substitute(f, px, py);
    }
    return *(want_x ? xs : ys)[m];
  };
  auto orbit = [&](int m) {
    Poly px = g.degree_in_x() > 0 ? image(image, m, true) : zero;
    Poly py = g.degree_in_y() > 0 ? image(image, m, false) : zero;
    return substitute(g, px, py);
  };

  r.degrees.push_back(weighted_degree(g, w));
  for (int m = 0; m < horizon; ++m) {
    r.degrees.push_back(weighted_degree(orbit(m + 1), w));
    if (!(r.degrees[m] > 0 && r.degrees[m + 1] >= 2 * r.degrees[m])) {
      r.failed_at = m;
      return r;
    }
  }
  r.certified = true;
  return r;
}

FreenessReport check_free(const Automorphism& sigma, const Generator& a, const Generator& b,
                          int t_power, int depth, const FreenessOptions& opts) {
  FreenessReport rep;
  rep.sigma = sigma.str();
  rep.a = a;
  rep.b = b;
  rep.t_power = t_power;
  rep.depth = depth;
  for (int n = 1; n <= depth && n < 63; ++n) rep.expected.push_back(two_pow(n));

  auto run = run_dims(sigma, a, b, t_power, depth, opts, true, false);
  rep.dims = run.dims;
  rep.route = run.monomial ? "monomial-sumset" : "rank";
  if (run.stopped) rep.notes.push_back("stopped at degree " + std::to_string(run.dims.size()) +
                                       ": " + *run.stopped);

  for (std::size_t k = 0; k < rep.dims.size(); ++k) {
    if (rep.dims[k] < two_pow(static_cast<int>(k) + 1)) {
      rep.deficient_degree = static_cast<int>(k) + 1;
      break;
    }
  }

  if (rep.deficient_degree) {
    rep.verdict = Verdict::NotFree;
    rep.witness = run.witness;
    if (!rep.witness || !verify_relation(*rep.witness))
      throw Error("witness relation failed re-verification");
    return rep;
  }
  rep.verdict = rep.dims.size() == static_cast<std::size_t>(depth) ? Verdict::FreeUpToDepth
                                                                    : Verdict::Inconclusive;

  if (run.md) {
    auto vc = valuation_certificate(run.md->m, t_power, run.md->ta.e, run.md->tb.e);
    if (vc.certified) {
      rep.certificate = CertificateKind::Valuation;
      rep.unbounded = true;
      rep.certificate_detail = "beta = " + vc.valuation->beta.str() + ", nu(a) = " +
                               vc.valuation->value(run.md->ta.e).str() + ", nu(b) = " +
                               vc.valuation->value(run.md->tb.e).str();
    } else {
      rep.notes.push_back("valuation certificate not applicable: " + vc.reason);
    }
  } else if (sigma.mode() == Mode::Poly) {
    Automorphism tau = power(sigma, t_power);
    std::optional<Poly> g;
    if (proportional(tau.apply(a.poly), b.poly))
      g = a.poly;
    else if (proportional(tau.apply(b.poly), a.poly))
      g = b.poly;
    if (g && !g->is_constant()) {
      const int horizon =
          opts.doubling_horizon > 0 ? opts.doubling_horizon : static_cast<int>(rep.dims.size());
      for (WeightedDegree w : {WeightedDegree{1, 1}, WeightedDegree{2, 1}, WeightedDegree{1, 2}}) {
        auto dd = degree_doubling_certificate(tau, *g, w, horizon);
        if (!dd.certified) continue;
        rep.certificate = CertificateKind::DegreeDoubling;
        rep.certificate_detail = "degree doubling of g = " + g->str() + " with weights (" +
                                 std::to_string(w.wx) + "," + std::to_string(w.wy) +
                                 ") checked for m < " + std::to_string(horizon);
        rep.notes.push_back("degree doubling is verified only up to the horizon");
        break;
      }
    }
  }
  if (rep.certificate == CertificateKind::None && rep.verdict == Verdict::FreeUpToDepth) {
    rep.certificate = CertificateKind::RankOnly;
    rep.notes.push_back("freeness shown only for degrees 1.." + std::to_string(depth));
  }
  return rep;
}

}  // namespace skewfree
