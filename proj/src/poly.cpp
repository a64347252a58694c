#include "skewfree/poly.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "skewfree/error.hpp"
#include "skewfree/kernels.hpp"

namespace skewfree {

std::string_view to_string(Mode m) { return m == Mode::Poly ? "POLY" : "LAURENT"; }

void require_same_mode(const Poly& f, const Poly& g, std::string_view op) {
  if (f.mode() != g.mode())
    throw ModeMismatch(std::string(op) + ": mode mismatch (" + std::string(to_string(f.mode())) +
                       " vs " + std::string(to_string(g.mode())) + ")");
}

namespace {

void check_mode(const ExpVec& e, Mode mode) {
  if (mode == Mode::Poly && (e.i < 0 || e.j < 0))
    throw DomainError("negative exponent in POLY mode (use LAURENT)");
}

bool term_before(const Term& a, const Term& b) { return canonical_before(a.e, b.e); }

}  // namespace

Poly Poly::constant(const Rat& c, Mode mode) { return monomial(c, {0, 0}, mode); }

Poly Poly::monomial(const Rat& c, ExpVec e, Mode mode) {
  check_mode(e, mode);
  Poly p(mode);
  if (!c.is_zero()) p.terms_.push_back({e, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms, Mode mode) {
  for (const auto& t : terms) check_mode(t.e, mode);
  std::stable_sort(terms.begin(), terms.end(), term_before);
  Poly p(mode);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().e == t.e)
      p.terms_.back().c += t.c;
    else
      p.terms_.push_back(std::move(t));
    // A cancelled entry is dropped; a later duplicate re-creates it.
    if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
  }
  return p;
}

Poly Poly::from_canonical(std::vector<Term> terms, Mode mode) {
  Poly p(mode);
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].e == ExpVec{0, 0});
}

bool Poly::is_univariate_y() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.e.i == 0; });
}

bool Poly::is_univariate_x() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.e.j == 0; });
}

Rat Poly::coeff(ExpVec e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{e, Rat(0)}, term_before);
  if (it != terms_.end() && it->e == e) return it->c;
  return Rat(0);
}

std::int64_t Poly::degree() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  return terms_.front().e.total();
}

std::int64_t Poly::degree_in_x() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  std::int64_t d = terms_.front().e.i;
  for (const auto& t : terms_) d = std::max(d, t.e.i);
  return d;
}

std::int64_t Poly::degree_in_y() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  std::int64_t d = terms_.front().e.j;
  for (const auto& t : terms_) d = std::max(d, t.e.j);
  return d;
}

std::optional<Poly> Poly::unit_inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const Term& t = terms_[0];
  if (mode_ == Mode::Poly && !(t.e == ExpVec{0, 0})) return std::nullopt;
  return monomial(t.c.inverse(), {-t.e.i, -t.e.j}, mode_);
}

Poly Poly::with_mode(Mode m) const {
  Poly p = *this;
  if (m == Mode::Poly)
    for (const auto& t : terms_) check_mode(t.e, m);
  p.mode_ = m;
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_mode(*this, o, "poly_add");
  if (o.is_zero()) return *this;
  if (is_zero()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && canonical_before(a->e, b->e))) {
      out.push_back(std::move(*a++));
    } else if (a == ae || canonical_before(b->e, a->e)) {
      out.push_back(*b++);
    } else {
      Rat c = a->c + b->c;
      if (!c.is_zero()) out.push_back({a->e, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_mode(a, b, "poly_mul");
  if (a.is_zero() || b.is_zero()) return Poly(a.mode());
  if (a.is_monomial() || b.is_monomial()) {
    // Shifting by a fixed exponent preserves canonical order.
    const Term& m = a.is_monomial() ? a.terms_[0] : b.terms_[0];
    const Poly& other = a.is_monomial() ? b : a;
    std::vector<Term> out;
    out.reserve(other.terms_.size());
    for (const auto& t : other.terms_) out.push_back({t.e + m.e, t.c * m.c});
    return Poly::from_canonical(std::move(out), a.mode());
  }
  if (a.size() * b.size() <= 256) return kernels::serial::mul(a, b);
  return kernels::parallel::mul(a, b);
}

Poly Poly::pow(std::int64_t e) const {
  if (e < 0) {
    auto inv = unit_inverse();
    if (!inv) throw DomainError("negative power of a non-unit");
    return inv->pow(-e);
  }
  Poly result = constant(Rat(1), mode_);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

namespace {

void append_monomial(std::string& out, const ExpVec& e) {
  bool first = true;
  auto var = [&](char v, std::int64_t p) {
    if (p == 0) return;
    if (!first) out += '*';
    out += v;
    if (p != 1) out += "^" + std::to_string(p);
    first = false;
  };
  var('x', e.i);
  var('y', e.j);
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rat mag = t.c.abs();
    if (first) {
      if (t.c.sign() < 0) out += "-";
    } else {
      out += t.c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    bool constant_term = t.e == ExpVec{0, 0};
    if (constant_term) {
      out += mag.str();
      continue;
    }
    if (!mag.is_one()) {
      out += mag.str();
      if (!mag.is_integer()) out += "*";
    }
    append_monomial(out, t.e);
  }
  return out;
}

Poly poly_add(const Poly& f, const Poly& g) { return f + g; }
Poly poly_mul(const Poly& f, const Poly& g) { return f * g; }

namespace {

/// Powers img^e for e >= 0 (or of the unit inverse for e < 0), filled lazily
/// by consecutive multiplication.
class PowerCache {
 public:
  explicit PowerCache(const Poly& base) : base_(base) {}

  const Poly& get(std::int64_t e) {
    auto& table = e >= 0 ? pos_ : neg_;
    if (table.empty()) table.push_back(Poly::constant(Rat(1), base_.mode()));
    std::size_t n = static_cast<std::size_t>(e >= 0 ? e : -e);
    if (e < 0 && !inv_) {
      inv_ = base_.unit_inverse();
      if (!inv_ || base_.mode() != Mode::Laurent)
        throw DomainError("negative exponent applied to non-unit image " + base_.str());
    }
    const Poly& step = e >= 0 ? base_ : *inv_;
    while (table.size() <= n) table.push_back(table.back() * step);
    return table[n];
  }

 private:
  const Poly& base_;
  std::optional<Poly> inv_;
  std::vector<Poly> pos_, neg_;
};

}  // namespace

Poly substitute(const Poly& f, const Poly& img_x, const Poly& img_y) {
  require_same_mode(img_x, img_y, "substitute");
  require_same_mode(f, img_x, "substitute");
  const Mode mode = f.mode();
  if (f.is_zero()) return Poly(mode);

  if (img_x.is_monomial() && img_y.is_monomial()) {
    const Term& tx = img_x.terms()[0];
    const Term& ty = img_y.terms()[0];
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
      if ((t.e.i < 0 || t.e.j < 0) && mode != Mode::Laurent)
        throw DomainError("negative exponent applied to non-unit image");
      ExpVec e{tx.e.i * t.e.i + ty.e.i * t.e.j, tx.e.j * t.e.i + ty.e.j * t.e.j};
      out.push_back({e, t.c * tx.c.pow(t.e.i) * ty.c.pow(t.e.j)});
    }
    return Poly::from_terms(std::move(out), mode);
  }

  // f = sum_i x^i P_i(y): evaluate each P_i at img_y, then combine with
  // powers of img_x.
  std::map<std::int64_t, std::vector<const Term*>> rows;
  for (const auto& t : f.terms()) rows[t.e.i].push_back(&t);
  PowerCache xs(img_x), ys(img_y);
  Poly result(mode);
  for (const auto& [i, row] : rows) {
    Poly inner(mode);
    for (const Term* t : row) inner += ys.get(t->e.j) * t->c;
    result += xs.get(i) * inner;
  }
  return result;
}

std::int64_t weighted_degree(const Poly& f, WeightedDegree w) {
  if (w.wx < 1 || w.wy < 1) throw DomainError("weights must be positive");
  if (f.mode() != Mode::Poly) throw ModeMismatch("weighted_degree requires POLY mode");
  if (f.is_zero()) throw DomainError("weighted degree of the zero polynomial");
  std::int64_t best = w.wx * f.terms()[0].e.i + w.wy * f.terms()[0].e.j;
  for (const auto& t : f.terms()) best = std::max(best, w.wx * t.e.i + w.wy * t.e.j);
  return best;
}

}  // namespace skewfree
