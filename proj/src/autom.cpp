#include "skewfree/autom.hpp"

#include "skewfree/error.hpp"
#include "skewfree/parse.hpp"

namespace skewfree {

IntMat2 IntMat2::inverse() const {
  auto dt = det();
  if (dt != 1 && dt != -1) throw DomainError("matrix " + str() + " is not in GL(2,Z)");
  return {d * dt, -b * dt, -c * dt, a * dt};
}

namespace {

std::int64_t dot2(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
  std::int64_t u, v, w;
  if (__builtin_mul_overflow(p, q, &u) || __builtin_mul_overflow(r, s, &v) ||
      __builtin_add_overflow(u, v, &w))
    throw ResourceCapExceeded("matrix entries overflow 64 bits");
  return w;
}

}  // namespace

IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
  return {dot2(x.a, y.a, x.b, y.c), dot2(x.a, y.b, x.b, y.d), dot2(x.c, y.a, x.d, y.c),
          dot2(x.c, y.b, x.d, y.d)};
}

IntMat2 IntMat2::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  IntMat2 r = identity(), base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return r;
}

std::string IntMat2::str() const {
  return std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," +
         std::to_string(d);
}

IntMat2 IntMat2::parse(std::string_view text) {
  std::string s = parse::trim(text);
  const auto shape_error = [&] {
    return InputError("matrix must look like 'a,b;c,d' or 'a,b,c,d', got '" + s + "'");
  };
  std::vector<std::string> entries;
  auto rows = parse::split_top_level(s, ';');
  if (rows.size() == 2) {
    for (const auto& row : rows) {
      auto cols = parse::split_top_level(row, ',');
      if (cols.size() != 2) throw shape_error();
      entries.insert(entries.end(), cols.begin(), cols.end());
    }
  } else if (rows.size() == 1) {
    entries = parse::split_top_level(s, ',');
    if (entries.size() != 4) throw shape_error();
  } else {
    throw shape_error();
  }
  std::int64_t v[4] = {};
  for (int k = 0; k < 4; ++k) {
    const std::string c = parse::trim(entries[static_cast<std::size_t>(k)]);
    try {
      std::size_t used = 0;
      v[k] = std::stoll(c, &used);
      if (used != c.size()) throw std::invalid_argument(c);
    } catch (const std::exception&) {
      throw InputError("bad matrix entry '" + c + "'");
    }
  }
  return {v[0], v[1], v[2], v[3]};
}

std::string kind_name(const AutomKind& k) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MonomialKind>) return "MONOMIAL";
        if constexpr (std::is_same_v<T, ElementaryKind>) return "ELEMENTARY";
        if constexpr (std::is_same_v<T, HenonKind>) return "HENON";
        return "CUSTOM";
      },
      k);
}

Automorphism make_trusted(Mode mode, Poly ix, Poly iy, Poly vx, Poly vy, AutomKind kind) {
  return Automorphism(mode, std::move(ix), std::move(iy), std::move(vx), std::move(vy),
                      std::move(kind));
}

void Automorphism::check_inverse() const {
  for (const Poly* p : {&img_x_, &img_y_, &inv_x_, &inv_y_})
    if (p->mode() != mode_) throw ModeMismatch("automorphism images must share one mode");
  const Poly x = Poly::x(mode_), y = Poly::y(mode_);
  if (substitute(img_x_, inv_x_, inv_y_) != x || substitute(img_y_, inv_x_, inv_y_) != y ||
      substitute(inv_x_, img_x_, img_y_) != x || substitute(inv_y_, img_x_, img_y_) != y)
    throw DomainError("supplied inverse images do not invert x -> " + img_x_.str() +
                      ", y -> " + img_y_.str());
}

Automorphism Automorphism::identity(Mode mode) {
  return make_trusted(mode, Poly::x(mode), Poly::y(mode), Poly::x(mode), Poly::y(mode),
                      MonomialKind{IntMat2::identity()});
}

Automorphism Automorphism::custom(Poly img_x, Poly img_y, Poly inv_x, Poly inv_y) {
  Mode mode = img_x.mode();
  Automorphism a(mode, std::move(img_x), std::move(img_y), std::move(inv_x), std::move(inv_y),
                 CustomKind{});
  a.check_inverse();
  if (auto m = a.monomial_matrix()) a.kind_ = MonomialKind{*m};
  return a;
}

Automorphism Automorphism::inverse() const {
  AutomKind k = CustomKind{};
  if (auto* m = std::get_if<MonomialKind>(&kind_)) k = MonomialKind{m->matrix.inverse()};
  return make_trusted(mode_, inv_x_, inv_y_, img_x_, img_y_, k);
}

bool Automorphism::is_identity() const {
  return img_x_ == Poly::x(mode_) && img_y_ == Poly::y(mode_);
}

std::optional<IntMat2> Automorphism::monomial_matrix() const {
  if (!img_x_.is_monomial() || !img_y_.is_monomial()) return std::nullopt;
  const Term& tx = img_x_.terms()[0];
  const Term& ty = img_y_.terms()[0];
  if (!tx.c.is_one() || !ty.c.is_one()) return std::nullopt;
  IntMat2 m{tx.e.i, tx.e.j, ty.e.i, ty.e.j};
  if (m.det() != 1 && m.det() != -1) return std::nullopt;
  return m;
}

std::string Automorphism::str() const {
  return "x -> " + img_x_.str() + ", y -> " + img_y_.str();
}

Automorphism monomial_autom(const IntMat2& m) {
  if (m.det() != 1 && m.det() != -1)
    throw DomainError("det(" + m.str() + ") = " + std::to_string(m.det()) +
                      " is not +-1; not an automorphism of the Laurent ring");
  const Mode L = Mode::Laurent;
  IntMat2 inv = m.inverse();
  return make_trusted(L, Poly::monomial(Rat(1), {m.a, m.b}, L), Poly::monomial(Rat(1), {m.c, m.d}, L),
                      Poly::monomial(Rat(1), {inv.a, inv.b}, L),
                      Poly::monomial(Rat(1), {inv.c, inv.d}, L), MonomialKind{m});
}

Automorphism elementary_autom(const Rat& a, const Rat& b, const Rat& c, const Poly& p) {
  if (a.is_zero() || b.is_zero()) throw DomainError("elementary automorphism needs a != 0 and b != 0");
  if (!p.is_univariate_y()) throw DomainError("elementary automorphism needs p in k[y], got " + p.str());
  const Mode P = Mode::Poly;
  Poly pp = p.with_mode(P);
  Poly x = Poly::x(P), y = Poly::y(P);
  Poly img_x = x * a + pp;
  Poly img_y = y * b + Poly::constant(c, P);
  Poly inv_y = (y - Poly::constant(c, P)) * b.inverse();
  Poly inv_x = (x - substitute(pp, x, inv_y)) * a.inverse();
  Automorphism s = make_trusted(P, img_x, img_y, inv_x, inv_y, ElementaryKind{a, b, c, pp});
  s.check_inverse();
  return s;
}

namespace {

Automorphism henon_general(const Poly& p, const Rat& a, const Rat& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("Henon automorphism needs a != 0 and b != 0");
  if (p.is_zero() || !p.is_univariate_x() || p.degree() < 2)
    throw DomainError("Henon automorphism needs p in k[x] with deg p >= 2, got " + p.str());
  const Mode P = Mode::Poly;
  Poly pp = p.with_mode(P);
  Poly x = Poly::x(P), y = Poly::y(P);
  Poly img_x = pp - y * a;
  Poly img_y = x * b;
  Poly inv_x = y * b.inverse();
  Poly inv_y = (substitute(pp, inv_x, y) - x) * a.inverse();
  Automorphism s = make_trusted(P, img_x, img_y, inv_x, inv_y, HenonKind{pp, a, b});
  s.check_inverse();
  return s;
}

}  // namespace

Automorphism henon_autom(const Poly& p, const Rat& a) { return henon_general(p, a, Rat(1)); }

Automorphism henon_paper(const Rat& a, const Rat& b) {
  const Mode P = Mode::Poly;
  Poly p = Poly::constant(Rat(1), P) - Poly::monomial(a, {2, 0}, P);
  return henon_general(p, Rat(-1), b);
}

Automorphism compose(const Automorphism& s, const Automorphism& t) {
  if (s.mode() != t.mode()) throw ModeMismatch("compose: automorphisms of different rings");
  Poly ix = substitute(t.img_x(), s.img_x(), s.img_y());
  Poly iy = substitute(t.img_y(), s.img_x(), s.img_y());
  Poly vx = substitute(s.inv_x(), t.inv_x(), t.inv_y());
  Poly vy = substitute(s.inv_y(), t.inv_x(), t.inv_y());
  AutomKind k = CustomKind{};
  auto ms = s.monomial_matrix(), mt = t.monomial_matrix();
  if (ms && mt) k = MonomialKind{*mt * *ms};
  return make_trusted(s.mode(), std::move(ix), std::move(iy), std::move(vx), std::move(vy), k);
}

Automorphism power(const Automorphism& s, std::int64_t n) {
  if (n == 0) return Automorphism::identity(s.mode());
  if (n < 0) return power(s.inverse(), -n);
  if (auto m = s.monomial_matrix()) {
    IntMat2 mn = m->pow(n);
    Automorphism r = monomial_autom(mn);
    if (s.mode() == Mode::Laurent) return r;
    // Monomial automorphisms of k[x,y] permute x and y, so M^n stays non-negative.
    return make_trusted(Mode::Poly, r.img_x().with_mode(Mode::Poly), r.img_y().with_mode(Mode::Poly),
                        r.inv_x().with_mode(Mode::Poly), r.inv_y().with_mode(Mode::Poly),
                        MonomialKind{mn});
  }
  // sigma^k(x) = sigma^(k-1)(sigma(x)): substitute the large images into the
  // small ones; the inverse images are iterated the same way.
  Poly fx = s.img_x(), fy = s.img_y(), gx = s.inv_x(), gy = s.inv_y();
  for (std::int64_t k = 2; k <= n; ++k) {
    Poly nfx = substitute(s.img_x(), fx, fy);
    Poly nfy = substitute(s.img_y(), fx, fy);
    Poly ngx = substitute(s.inv_x(), gx, gy);
    Poly ngy = substitute(s.inv_y(), gx, gy);
    fx = std::move(nfx);
    fy = std::move(nfy);
    gx = std::move(ngx);
    gy = std::move(ngy);
  }
  return make_trusted(s.mode(), fx, fy, gx, gy, n == 1 ? s.kind() : AutomKind{CustomKind{}});
}

std::vector<std::pair<Poly, Poly>> orbit_images(const Automorphism& s, int n) {
  std::vector<std::pair<Poly, Poly>> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  out.emplace_back(Poly::x(s.mode()), Poly::y(s.mode()));
  for (int k = 1; k <= n; ++k) {
    const auto& [px, py] = out.back();
    Poly nx = substitute(s.img_x(), px, py);
    Poly ny = substitute(s.img_y(), px, py);
    out.emplace_back(std::move(nx), std::move(ny));
  }
  return out;
}

Automorphism parse_automorphism(std::string_view spec_text, Mode custom_mode) {
  std::string spec = parse::trim(spec_text);
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "identity") return Automorphism::identity(body == "laurent" ? Mode::Laurent : custom_mode);
  if (colon == std::string::npos)
    throw InputError("automorphism spec '" + spec + "' lacks a 'kind:' prefix");
  if (head == "monomial") return monomial_autom(IntMat2::parse(body));
  if (head == "elementary") {
    auto parts = parse::split_top_level(body, ',');
    if (parts.size() != 4) throw InputError("expected elementary:a,b,c,p(y), got '" + spec + "'");
    return elementary_autom(Rat::parse(parts[0]), Rat::parse(parts[1]), Rat::parse(parts[2]),
                            Poly::parse(parts[3], Mode::Poly));
  }
  if (head == "henon") {
    auto parts = parse::split_top_level(body, ',');
    if (parts.size() != 2) throw InputError("expected henon:a,b, got '" + spec + "'");
    return henon_paper(Rat::parse(parts[0]), Rat::parse(parts[1]));
  }
  if (head == "henon-std") {
    auto parts = parse::split_top_level(body, ',');
    if (parts.size() != 2) throw InputError("expected henon-std:p(x),a, got '" + spec + "'");
    return henon_autom(Poly::parse(parts[0], Mode::Poly), Rat::parse(parts[1]));
  }
  if (head == "custom") {
    auto parts = parse::split_top_level(body, '|');
    if (parts.size() != 4)
      throw InputError("expected custom:img_x|img_y|inv_x|inv_y, got '" + spec + "'");
    return Automorphism::custom(Poly::parse(parts[0], custom_mode), Poly::parse(parts[1], custom_mode),
                                Poly::parse(parts[2], custom_mode), Poly::parse(parts[3], custom_mode));
  }
  throw InputError("unknown automorphism kind '" + head + "'");
}

}  // namespace skewfree
