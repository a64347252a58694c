#include "skewfree/skew.hpp"

#include <cctype>
#include <unordered_map>

#include "skewfree/error.hpp"
#include "skewfree/parse.hpp"

namespace skewfree {

void require_same_sigma(const AutomPtr& a, const AutomPtr& b, std::string_view op) {
  if (a == b) return;
  if (!a || !b || !a->same_map(*b))
    throw ModeMismatch(std::string(op) + ": elements of skew rings with different sigma");
}

SkewPoly::SkewPoly(AutomPtr sigma, bool laurent_t) : sigma_(std::move(sigma)), laurent_t_(laurent_t) {
  if (!sigma_) throw DomainError("skew polynomial without an automorphism");
  if (laurent_t_ && sigma_->mode() != Mode::Laurent)
    throw ModeMismatch("skew Laurent elements need sigma on the Laurent ring");
}

void SkewPoly::check_degree(std::int64_t degree) const {
  if (degree < 0 && !laurent_t_)
    throw DomainError("negative t-degree " + std::to_string(degree) +
                      " outside the skew Laurent extension");
}

void SkewPoly::add_term(std::int64_t degree, Poly f) {
  if (f.mode() != sigma_->mode()) throw ModeMismatch("coefficient mode differs from sigma's ring");
  if (f.is_zero()) return;
  check_degree(degree);
  auto [it, fresh] = coeffs_.try_emplace(degree, f);
  if (!fresh) {
    it->second += f;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SkewPoly SkewPoly::term(AutomPtr sigma, Poly f, std::int64_t degree, bool laurent_t) {
  SkewPoly s(std::move(sigma), laurent_t);
  s.add_term(degree, std::move(f));
  return s;
}

SkewPoly SkewPoly::parse(AutomPtr sigma, std::string_view text, bool laurent_t) {
  SkewPoly s(std::move(sigma), laurent_t);
  std::map<std::int64_t, std::vector<Term>> by_degree;
  for (auto& t : parse::expand(text, /*allow_t=*/true)) by_degree[t.k].push_back({{t.i, t.j}, t.c});
  for (auto& [k, terms] : by_degree) s.add_term(k, Poly::from_terms(std::move(terms), s.sigma_->mode()));
  return s;
}

Poly SkewPoly::coeff(std::int64_t degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? Poly(sigma_->mode()) : it->second;
}

std::int64_t SkewPoly::max_degree() const {
  if (is_zero()) throw DomainError("degree of the zero skew polynomial");
  return coeffs_.rbegin()->first;
}

std::int64_t SkewPoly::min_degree() const {
  if (is_zero()) throw DomainError("degree of the zero skew polynomial");
  return coeffs_.begin()->first;
}

SkewPoly& SkewPoly::operator+=(const SkewPoly& o) {
  require_same_sigma(sigma_, o.sigma_, "skew add");
  laurent_t_ = laurent_t_ || o.laurent_t_;
  for (const auto& [k, f] : o.coeffs_) add_term(k, f);
  return *this;
}

SkewPoly& SkewPoly::operator-=(const SkewPoly& o) {
  SkewPoly neg = o;
  neg *= Rat(-1);
  return *this += neg;
}

SkewPoly& SkewPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, f] : coeffs_) f *= c;
  return *this;
}

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) { return skew_mul(a, b); }

bool operator==(const SkewPoly& a, const SkewPoly& b) {
  if (a.sigma_ != b.sigma_ && !a.sigma_->same_map(*b.sigma_)) return false;
  return a.coeffs_ == b.coeffs_;
}

std::string SkewPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::string piece;
    const Poly& f = it->second;
    const std::string t = it->first == 0   ? ""
                          : it->first == 1 ? "t"
                                           : "t^" + std::to_string(it->first);
    if (t.empty())
      piece = f.is_monomial() ? f.str() : "(" + f.str() + ")";
    else if (f == Poly::constant(Rat(1), f.mode()))
      piece = t;
    else
      piece = (f.is_monomial() ? f.str() : "(" + f.str() + ")") + "*" + t;
    if (out.empty())
      out = piece;
    else if (piece[0] == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out;
}

SkewPoly skew_mul(const SkewPoly& u, const SkewPoly& v) {
  require_same_sigma(u.sigma(), v.sigma(), "skew_mul");
  SkewPoly out(u.sigma(), u.laurent_t() || v.laurent_t());
  std::map<std::int64_t, Automorphism> powers;
  for (const auto& [i, f] : u.coeffs()) {
    auto it = powers.find(i);
    if (it == powers.end()) it = powers.emplace(i, power(*u.sigma(), i)).first;
    for (const auto& [j, g] : v.coeffs()) out += SkewPoly::term(u.sigma(), f * it->second.apply(g), i + j, out.laurent_t());
  }
  return out;
}

SkewPoly conjugate_map(const SkewPoly& u, const Automorphism& tau) {
  const Automorphism& sigma = *u.sigma();
  if (tau.mode() != sigma.mode()) throw ModeMismatch("conjugate_map: tau acts on a different ring");
  AutomPtr target = share(compose(tau, compose(sigma, tau.inverse())));
  SkewPoly out(target, u.laurent_t());
  for (const auto& [j, f] : u.coeffs()) out += SkewPoly::term(target, tau.apply(f), j, u.laurent_t());
  return out;
}

Poly gauge_factor(const Automorphism& sigma, const Poly& a, std::int64_t m) {
  auto a_inv = a.unit_inverse();
  if (!a_inv) throw DomainError("gauge element " + a.str() + " is not a unit");
  Poly out = Poly::constant(Rat(1), sigma.mode());
  if (m >= 0) {
    Poly s = a;  // sigma^k(a)
    for (std::int64_t k = 0; k < m; ++k) {
      out *= s;
      s = sigma.apply(s);
    }
  } else {
    Poly s = sigma.apply_inverse(*a_inv);  // sigma^-k(a^-1)
    for (std::int64_t k = 1; k <= -m; ++k) {
      out *= s;
      s = sigma.apply_inverse(s);
    }
  }
  return out;
}

SkewPoly gauge_map(const SkewPoly& u, const Poly& a) {
  if (a.mode() != u.sigma()->mode()) throw ModeMismatch("gauge element lives in a different ring");
  if (!a.unit_inverse()) throw DomainError("gauge element " + a.str() + " is not a unit");
  SkewPoly out(u.sigma(), u.laurent_t());
  for (const auto& [m, g] : u.coeffs())
    out += SkewPoly::term(u.sigma(), gauge_factor(*u.sigma(), a, m) * g, m, u.laurent_t());
  return out;
}

std::string Letter::str() const {
  std::string s = "(" + name + "t";
  if (t_power != 1) s += "^" + std::to_string(t_power);
  return s + ")";
}

SkewPoly Letter::as_skew(const AutomPtr& sigma) const {
  return SkewPoly::term(sigma, coeff, t_power, t_power < 0);
}

std::int64_t Word::t_degree() const {
  std::int64_t d = 0;
  for (const auto& l : letters) d += l.t_power;
  return d;
}

std::string Word::str() const {
  std::string out;
  for (std::size_t k = 0; k < letters.size();) {
    std::size_t run = 1;
    while (k + run < letters.size() && letters[k + run] == letters[k]) ++run;
    out += letters[k].str();
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

SkewPoly expand_word(const AutomPtr& sigma, const Word& w) {
  if (w.letters.empty()) throw DomainError("empty word");
  SkewPoly acc = w.letters[0].as_skew(sigma);
  for (std::size_t k = 1; k < w.letters.size(); ++k) acc = skew_mul(acc, w.letters[k].as_skew(sigma));
  return acc;
}

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

Word parse_word(std::string_view text, std::span<const Letter> alphabet) {
  const std::string s = strip_spaces(text);
  auto bad = [&](const std::string& why) { return InputError("cannot parse word '" + s + "': " + why); };
  std::vector<std::string> rendered;
  for (const auto& l : alphabet) rendered.push_back(strip_spaces(l.str()));

  Word w;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw bad("expected '('");
    int depth = 0;
    std::size_t end = pos;
    for (; end < s.size(); ++end) {
      if (s[end] == '(') ++depth;
      if (s[end] == ')' && --depth == 0) break;
    }
    if (end >= s.size()) throw bad("unbalanced parentheses");
    std::string token = s.substr(pos, end - pos + 1);
    const Letter* found = nullptr;
    for (std::size_t k = 0; k < alphabet.size(); ++k)
      if (rendered[k] == token) found = &alphabet[k];
    if (!found) throw bad("unknown generator " + token);
    pos = end + 1;
    std::int64_t reps = 1;
    if (pos < s.size() && s[pos] == '^') {
      std::size_t start = ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw bad("expected a repeat count after '^'");
      reps = std::stoll(s.substr(start, pos - start));
      if (reps < 1) throw bad("repeat count must be positive");
    }
    for (std::int64_t r = 0; r < reps; ++r) w.letters.push_back(*found);
  }
  if (w.letters.empty()) throw bad("empty word");
  return w;
}

std::string letter_name_for(const Poly& p) {
  if (p.is_monomial()) return p.str();
  return "(" + p.str() + ")";
}

}  // namespace skewfree
