#include "skewfree/growth.hpp"

#include <cmath>
#include <map>
#include <unordered_map>

#include "skewfree/error.hpp"

namespace skewfree {

std::string growth_kind_name(GrowthKind k) {
  return k == GrowthKind::Exponential ? "EXPONENTIAL" : "POLYNOMIAL";
}

namespace {

struct Key {
  std::int64_t t;
  ExpVec e;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    return ExpVecHash{}(k.e) * 1000003u ^ std::hash<std::int64_t>{}(k.t);
  }
};

// Leading key first: larger t-degree, then larger 2i + j, then larger i. Any
// total order gives the same ranks; this one makes x + c y^2 lead with x.
bool key_before(const Key& a, const Key& b) {
  if (a.t != b.t) return a.t > b.t;
  const std::int64_t wa = 2 * a.e.i + a.e.j, wb = 2 * b.e.i + b.e.j;
  if (wa != wb) return wa > wb;
  if (a.e.i != b.e.i) return a.e.i > b.e.i;
  return a.e.j > b.e.j;
}

using Vec = std::vector<std::pair<Key, Rat>>;

Vec flatten(const SkewPoly& u) {
  Vec v;
  for (const auto& [deg, f] : u.coeffs())
    for (const auto& t : f.terms()) v.push_back({Key{deg, t.e}, t.c});
  std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) { return key_before(p.first, q.first); });
  return v;
}

Vec axpy(const Vec& r, const Rat& f, const Vec& s) {
  Vec out;
  out.reserve(r.size() + s.size());
  std::size_t x = 0, y = 0;
  while (x < r.size() || y < s.size()) {
    if (y == s.size() || (x < r.size() && key_before(r[x].first, s[y].first))) {
      out.push_back(r[x++]);
    } else if (x == r.size() || key_before(s[y].first, r[x].first)) {
      out.push_back({s[y].first, -(f * s[y].second)});
      ++y;
    } else {
      Rat v = r[x].second - f * s[y].second;
      if (!v.is_zero()) out.push_back({r[x].first, std::move(v)});
      ++x;
      ++y;
    }
  }
  return out;
}

/// Echelon form keyed by leading key; rows normalised to leading coefficient 1.
class Echelon {
 public:
  /// Reduces v; when something survives it becomes a pivot and true is returned.
  bool insert(Vec v) {
    while (!v.empty()) {
      auto it = pivots_.find(v.front().first);
      if (it == pivots_.end()) break;
      Rat f = v.front().second;
      v = axpy(v, f, it->second);
    }
    if (v.empty()) return false;
    Rat inv = v.front().second.inverse();
    for (auto& [k, c] : v) c *= inv;
    Key lead = v.front().first;
    pivots_.emplace(lead, std::move(v));
    return true;
  }
  std::size_t size() const { return pivots_.size(); }

 private:
  std::unordered_map<Key, Vec, KeyHash> pivots_;
};

std::string describe(std::span<const SkewPoly> gens, bool with_one) {
  std::string s = with_one ? "span{1" : "span{";
  bool first = !with_one;
  for (const auto& g : gens) {
    s += first ? "" : ", ";
    s += g.str();
    first = false;
  }
  return s + "}";
}

void check_gens(std::span<const SkewPoly> gens, int N) {
  if (gens.empty()) throw InputError("growth needs at least one generator");
  if (N < 0) throw InputError("N must be non-negative");
  for (const auto& g : gens) {
    if (g.is_zero()) throw InputError("zero generator");
    require_same_sigma(gens[0].sigma(), g.sigma(), "growth");
  }
}

}  // namespace

GrowthSeries filtration_dims(std::span<const SkewPoly> gens, int N, const GrowthOptions& opts) {
  check_gens(gens, N);
  const AutomPtr& sigma = gens[0].sigma();
  bool laurent_t = false;
  for (const auto& g : gens) laurent_t = laurent_t || g.laurent_t();

  GrowthSeries s;
  s.basis_spec = describe(gens, true);
  Echelon ech;
  SkewPoly one = SkewPoly::term(sigma, Poly::constant(Rat(1), sigma->mode()), 0, laurent_t);
  std::vector<SkewPoly> frontier{one};
  ech.insert(flatten(one));
  s.dims.push_back(1);
  for (int n = 1; n <= N; ++n) {
    std::vector<SkewPoly> fresh;
    for (const auto& f : frontier) {
      for (const auto& g : gens) {
        SkewPoly prod = skew_mul(f, g);
        if (ech.insert(flatten(prod))) fresh.push_back(std::move(prod));
      }
      if (ech.size() > opts.max_basis)
        throw ResourceCapExceeded("filtration basis exceeds " + std::to_string(opts.max_basis));
    }
    s.dims.push_back(ech.size());
    frontier = std::move(fresh);
  }
  return s;
}

GrowthSeries graded_dims(std::span<const SkewPoly> gens, int N, const GrowthOptions& opts) {
  check_gens(gens, N);
  const std::int64_t d = gens[0].max_degree();
  for (const auto& g : gens)
    if (!g.is_homogeneous() || g.max_degree() != d)
      throw InputError("graded growth needs generators homogeneous of one t-degree");
  if (d < 1) throw InputError("graded growth needs generators of positive t-degree");
  const AutomPtr& sigma = gens[0].sigma();

  GrowthSeries s;
  s.graded = true;
  s.basis_spec = describe(gens, false);
  s.dims.push_back(1);
  // Basis of V_n as coefficient polynomials; V_(n+1) = span{ f sigma^(n d)(c_g) }.
  std::vector<Poly> basis{Poly::constant(Rat(1), sigma->mode())};
  std::vector<Poly> coeffs;
  for (const auto& g : gens) coeffs.push_back(g.coeff(d));
  Automorphism step = power(*sigma, d);
  for (int n = 1; n <= N; ++n) {
    Echelon ech;
    std::vector<Poly> next;
    for (const auto& f : basis) {
      for (const auto& c : coeffs) {
        Poly prod = f * c;
        SkewPoly as = SkewPoly::term(sigma, prod, 0);
        if (ech.insert(flatten(as))) next.push_back(std::move(prod));
      }
      if (ech.size() > opts.max_basis)
        throw ResourceCapExceeded("graded basis exceeds " + std::to_string(opts.max_basis));
    }
    s.dims.push_back(ech.size());
    basis = std::move(next);
    for (auto& c : coeffs) c = step.apply(c);
  }
  return s;
}

namespace {

struct LineFit {
  double slope = 0;
  double rss = 0;
};

LineFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    sxx += xs[k] * xs[k];
    sxy += xs[k] * ys[k];
  }
  const double denom = m * sxx - sx * sx;
  LineFit fit;
  if (denom == 0) return fit;
  fit.slope = (m * sxy - sx * sy) / denom;
  const double icept = (sy - fit.slope * sx) / m;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double r = ys[k] - icept - fit.slope * xs[k];
    fit.rss += r * r;
  }
  return fit;
}

}  // namespace

GkEstimate gk_estimate(const GrowthSeries& s) {
  if (s.dims.size() < 8) throw DomainError("growth series needs at least 8 entries");
  std::vector<double> f;
  double acc = 0;
  for (auto v : s.dims) {
    acc = s.graded ? acc + static_cast<double>(v) : static_cast<double>(v);
    f.push_back(acc);
  }
  GkEstimate g;
  g.cumulative = s.graded;
  const std::size_t N = f.size() - 1;
  const std::size_t q = std::max<std::size_t>(1, N / 4);
  bool above = true;
  for (std::size_t n = N - q; n <= N; ++n)
    if (n >= 1 && f[n] < std::pow(1.2, static_cast<double>(n))) above = false;
  g.ratio = f[N - q] > 0 ? std::pow(f[N] / f[N - q], 1.0 / static_cast<double>(q)) : 0.0;

  g.window_lo = std::max<std::size_t>(1, N / 2);
  g.window_hi = N;
  std::vector<double> ns, logn, logf;
  for (std::size_t n = g.window_lo; n <= N; ++n) {
    if (f[n] <= 0) continue;
    ns.push_back(static_cast<double>(n));
    logn.push_back(std::log(static_cast<double>(n)));
    logf.push_back(std::log(f[n]));
  }
  const LineFit power_law = least_squares(logn, logf);
  const LineFit geometric = least_squares(ns, logf);
  g.slope = power_law.slope;
  g.rss_polynomial = power_law.rss;
  g.rss_exponential = geometric.rss;

  if (above && g.ratio >= 1.2 && geometric.rss < power_law.rss) {
    g.kind = GrowthKind::Exponential;
  } else {
    g.kind = GrowthKind::Polynomial;
    g.degree = std::lround(g.slope);
  }
  return g;
}

}  // namespace skewfree
