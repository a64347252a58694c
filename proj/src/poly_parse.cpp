#include <array>
#include <cctype>
#include <map>

#include "skewfree/error.hpp"
#include "skewfree/parse.hpp"
#include "skewfree/poly.hpp"

namespace skewfree::parse {

namespace {

using Key = std::array<std::int64_t, 3>;
using Expr = std::map<Key, Rat>;

Expr mul(const Expr& a, const Expr& b) {
  Expr out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
      out[k] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, bool allow_t) : s_(text), allow_t_(allow_t) {}

  std::vector<RawTerm> run() {
    auto terms = parse_expr(/*nested=*/false);
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse polynomial '" + std::string(s_) + "': " + why +
                     " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::int64_t small_int() {
    auto d = digits();
    if (d.size() > 12) fail("exponent too large");
    return std::stoll(d);
  }

  std::vector<RawTerm> parse_expr(bool nested) {
    std::vector<RawTerm> out;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (eat('+')) {
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        break;
      }
      Expr t = parse_term(nested);
      for (auto& [k, c] : t) out.push_back({k[0], k[1], k[2], sign > 0 ? c : -c});
      first = false;
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] == ')') break;
      if (s_[pos_] != '+' && s_[pos_] != '-') fail("expected '+' or '-'");
    }
    return out;
  }

  bool at_factor_start() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 't' ||
           c == '(';
  }

  Expr parse_term(bool nested) {
    Expr acc{{Key{0, 0, 0}, Rat(1)}};
    bool seen_t = false;
    bool any = false;
    while (true) {
      bool star = eat('*');
      if (!at_factor_start()) {
        if (star || !any) fail("expected a factor");
        break;
      }
      char c = s_[pos_];
      if (c == 't') {
        if (!allow_t_ || nested) fail("t is not allowed here");
        ++pos_;
        std::int64_t e = exponent();
        acc = mul(acc, Expr{{Key{0, 0, e}, Rat(1)}});
        seen_t = true;
      } else {
        if (seen_t) fail("t must be the last factor of a term");
        acc = mul(acc, parse_factor());
      }
      any = true;
    }
    return acc;
  }

  std::int64_t exponent() {
    if (!eat('^')) return 1;
    bool neg = eat('-');
    std::int64_t e = small_int();
    return neg ? -e : e;
  }

  Expr parse_factor() {
    skip_ws();
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num(digits());
      BigInt den(1);
      if (eat('/')) {
        den = BigInt(digits());
        if (den == 0) fail("zero denominator");
      }
      return Expr{{Key{0, 0, 0}, Rat(num, den)}};
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      std::int64_t e = exponent();
      Key k{c == 'x' ? e : 0, c == 'y' ? e : 0, 0};
      return Expr{{k, Rat(1)}};
    }
    // '('
    ++pos_;
    auto inner = parse_expr(/*nested=*/true);
    if (!eat(')')) fail("missing ')'");
    Expr base;
    for (auto& t : inner) base[{t.i, t.j, t.k}] += t.c;
    std::erase_if(base, [](const auto& kv) { return kv.second.is_zero(); });
    std::int64_t e = 1;
    if (eat('^')) {
      if (peek('-')) fail("negative power of a parenthesised group");
      e = small_int();
    }
    Expr r{{Key{0, 0, 0}, Rat(1)}};
    for (std::int64_t n = 0; n < e; ++n) r = mul(r, base);
    return r;
  }

  std::string_view s_;
  bool allow_t_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<RawTerm> expand(std::string_view text, bool allow_t) {
  if (trim(text).empty()) throw InputError("empty polynomial string");
  return Parser(text, allow_t).run();
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace skewfree::parse

namespace skewfree {

Poly Poly::parse(std::string_view text, Mode mode) {
  std::vector<Term> terms;
  for (auto& t : parse::expand(text, /*allow_t=*/false))
    terms.push_back({{t.i, t.j}, std::move(t.c)});
  return from_terms(std::move(terms), mode);
}

}  // namespace skewfree
