#include "skewfree/monomial.hpp"

#include <algorithm>

#include "skewfree/error.hpp"
#include "skewfree/kernels.hpp"

namespace skewfree {

namespace {

void require_gl2(const IntMat2& m) {
  auto dt = m.det();
  if (dt != 1 && dt != -1) throw DomainError("matrix " + m.str() + " has det " + std::to_string(dt) + ", not +-1");
}

std::int64_t disc_of(const IntMat2& m) { return m.trace() * m.trace() - 4 * m.det(); }

std::vector<Letter> xy_letters() {
  return {Letter{"x", Poly::x(Mode::Laurent), 1}, Letter{"y", Poly::y(Mode::Laurent), 1}};
}

}  // namespace

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::FiniteOrder: return "FINITE_ORDER";
    case Branch::Parabolic: return "PARABOLIC";
    case Branch::Golden: return "GOLDEN";
    case Branch::Large: return "LARGE";
  }
  return "?";
}

QuadExt spectral_radius(const IntMat2& m) {
  const std::int64_t t = m.trace() < 0 ? -m.trace() : m.trace();
  const std::int64_t disc = disc_of(m);
  if (disc < 0) return QuadExt(Rat(1));  // complex pair, |z|^2 = det = 1
  if (disc == 0) return QuadExt(Rat(t, 2));
  return (QuadExt(t) + QuadExt::sqrt_of(disc)) * QuadExt(Rat(1, 2));
}

std::optional<int> finite_order(const IntMat2& m) {
  IntMat2 p = m;
  for (int k = 1; k <= 12; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return std::nullopt;
}

ClassificationReport classify(const IntMat2& m) {
  require_gl2(m);
  ClassificationReport r;
  r.matrix = m;
  r.trace = m.trace();
  r.det = m.det();
  r.rho = spectral_radius(m);
  if (r.rho == QuadExt(1)) {
    r.order = finite_order(m);
    r.branch = r.order ? Branch::FiniteOrder : Branch::Parabolic;
  } else if ((r.trace == 1 || r.trace == -1) && r.det == -1) {
    r.branch = Branch::Golden;
  } else {
    r.branch = Branch::Large;
  }

  if (r.branch == Branch::Golden || r.branch == Branch::Large) {
    QuadExt pw = r.rho;
    for (int p = 1; p <= 64; ++p, pw *= r.rho) {
      if (quad_abs_geq(pw, Rat(2))) {
        r.free_generators_hint = p;
        r.even_power_hint = p % 2 == 0 ? p : 2 * p;
        break;
      }
    }
  }

  auto sigma = share(monomial_autom(m));
  auto letters = xy_letters();
  auto add = [&](std::string clause, const char* text) {
    r.catalog.push_back({std::move(clause), parse_relation(sigma, text, letters)});
  };
  const auto t = r.trace, d = r.det;
  if (t == 0) add("trace 0", "(xt)^4(yt)^4 = (yt)^4(xt)^4");
  if (t == 1 && d == -1) add("trace 1, det -1", "(xt)^2(yt) = (yt)^2(xt)");
  if (t == -1 && d == -1) add("trace -1, det -1", "(xt)(yt)^2 = (yt)(xt)^2");
  if (d == 1 && t == 2) add("trace 2, det 1", "(xt)(yt)^2(xt) = (yt)(xt)^2(yt)");
  if (d == 1 && t == -2) add("trace -2, det 1", "(xt)^2(yt)^2 = (yt)^2(xt)^2");
  if (d == 1 && t == 1) {
    add("trace 1, det 1", "(xt)(yt)(xt) = (yt)(xt)(yt)");
    add("trace 1, det 1, M^6 = I", "(xt)^6(yt)^6 = (yt)^6(xt)^6");
  }
  if (d == 1 && t == -1) add("trace -1, det 1", "(xt)^3 = (yt)^3");
  if (r.order) {
    const int k = *r.order;
    std::string w = "(xt)^" + std::to_string(k) + "(yt)^" + std::to_string(k);
    std::string v = "(yt)^" + std::to_string(k) + "(xt)^" + std::to_string(k);
    Relation rel = parse_relation(sigma, w + " = " + v, letters);
    const bool listed = std::any_of(r.catalog.begin(), r.catalog.end(),
                                    [&](const CatalogEntry& e) { return e.relation.str() == rel.str(); });
    if (!listed) r.catalog.push_back({"M^" + std::to_string(k) + " = I", std::move(rel)});
  }
  return r;
}

QuadExt Valuation::value(ExpVec e) const { return w_x * QuadExt(e.i) + w_y * QuadExt(e.j); }

QuadExt Valuation::value(const Poly& f) const {
  if (f.is_zero()) throw DomainError("valuation of zero");
  QuadExt best = value(f.terms().front().e);
  for (const auto& t : f.terms()) {
    QuadExt v = value(t.e);
    if (v < best) best = std::move(v);
  }
  return best;
}

Valuation eigen_data(const IntMat2& m) {
  require_gl2(m);
  const std::int64_t disc = disc_of(m);
  if (disc <= 0) throw DomainError("matrix " + m.str() + " has no pair of distinct real eigenvalues");
  QuadExt root = QuadExt::sqrt_of(disc);
  QuadExt beta = (QuadExt(m.trace()) + (m.trace() >= 0 ? root : -root)) * QuadExt(Rat(1, 2));
  if (!(quad_abs(beta) > QuadExt(1)))
    throw DomainError("matrix " + m.str() + " has eigenvalues of absolute value 1");
  if (m.b == 0) throw DomainError("matrix " + m.str() + " has b = 0");
  QuadExt alpha = (beta - QuadExt(m.a)) / QuadExt(m.b);
  if (QuadExt(m.a) + QuadExt(m.b) * alpha != beta ||
      QuadExt(m.c) + QuadExt(m.d) * alpha != alpha * beta)
    throw Error("eigenvector check failed for " + m.str());
  return Valuation{QuadExt(1), alpha, beta};
}

std::vector<ExpVec> exponent_sumset(const IntMat2& m, int n, ExpVec u, ExpVec v, int t_power) {
  if (n < 0) throw InputError("sumset length must be non-negative");
  const IntMat2 step = m.transpose().pow(t_power);
  IntMat2 cur = IntMat2::identity();
  std::vector<ExpVec> s{{0, 0}};
  for (int k = 0; k < n; ++k) {
    s = kernels::parallel::sumset_step(s, cur.apply(u), cur.apply(v));
    if (k + 1 < n) cur = step * cur;
  }
  return s;
}

std::vector<std::size_t> exponent_sumset_sizes(const IntMat2& m, int depth, ExpVec u, ExpVec v,
                                               int t_power) {
  const IntMat2 step = m.transpose().pow(t_power);
  IntMat2 cur = IntMat2::identity();
  std::vector<ExpVec> s{{0, 0}};
  std::vector<std::size_t> sizes;
  for (int k = 0; k < depth; ++k) {
    s = kernels::parallel::sumset_step(s, cur.apply(u), cur.apply(v));
    sizes.push_back(s.size());
    if (k + 1 < depth) cur = step * cur;
  }
  return sizes;
}

std::size_t exp_set_dimension(const IntMat2& m, int n) {
  require_gl2(m);
  return exponent_sumset(m, n).size();
}

ValuationCertificate valuation_certificate(const IntMat2& m, int t_power) {
  return valuation_certificate(m, t_power, {1, 0}, {0, 1});
}

ValuationCertificate valuation_certificate(const IntMat2& m, int t_power, ExpVec u, ExpVec v) {
  require_gl2(m);
  if (t_power < 1) throw InputError("t power must be positive");
  ValuationCertificate c;
  try {
    c.power_matrix = m.pow(t_power);
  } catch (const ResourceCapExceeded& e) {
    c.reason = e.what();
    return c;
  }
  try {
    c.valuation = eigen_data(c.power_matrix);
  } catch (const DomainError& e) {
    c.reason = std::string("no valuation eigenvector: ") + e.what();
    return c;
  }
  if (!quad_abs_geq(c.valuation->beta, Rat(2))) {
    c.reason = "|beta| = " + quad_abs(c.valuation->beta).str() + " < 2";
    return c;
  }
  if (c.valuation->value(u) == c.valuation->value(v)) {
    c.reason = "generators have equal valuation";
    return c;
  }
  c.certified = true;
  return c;
}

bool parity_obstruction(const IntMat2& m) {
  require_gl2(m);
  return ((m.a + m.b) - (m.c + m.d)) % 2 == 0;
}

}  // namespace skewfree
