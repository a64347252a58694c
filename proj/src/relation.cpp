#include "skewfree/relation.hpp"

#include <algorithm>
#include <cctype>

#include "skewfree/error.hpp"
#include "skewfree/parse.hpp"

namespace skewfree {

std::string Relation::str() const {
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (c.is_zero()) continue;
    Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (!mag.is_one()) out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
    out += w.str();
    first = false;
  }
  return first ? "0" : out;
}

Relation normalize(Relation r) {
  std::erase_if(r.terms, [](const auto& t) { return t.second.is_zero(); });
  if (r.terms.empty()) return r;
  BigInt den(1), num(0);
  for (const auto& [w, c] : r.terms) den = lcm(den, c.den());
  for (const auto& [w, c] : r.terms) num = gcd(num, c.num() * (den / c.den()));
  Rat scale = Rat(den) / Rat(num);
  if (r.terms.front().second.sign() < 0) scale = -scale;
  for (auto& [w, c] : r.terms) c *= scale;
  return r;
}

namespace {

void add_side(const AutomPtr& sigma, std::string_view side, std::span<const Letter> alphabet,
              const Rat& side_sign, std::vector<std::pair<Word, Rat>>& out) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < side.size() && std::isspace(static_cast<unsigned char>(side[pos]))) ++pos;
  };
  (void)sigma;
  skip_ws();
  if (pos == side.size()) throw InputError("empty side in relation");
  while (pos < side.size()) {
    Rat sign = side_sign;
    skip_ws();
    while (pos < side.size() && (side[pos] == '+' || side[pos] == '-')) {
      if (side[pos] == '-') sign = -sign;
      ++pos;
      skip_ws();
    }
    std::size_t num_start = pos;
    while (pos < side.size() &&
           (std::isdigit(static_cast<unsigned char>(side[pos])) || side[pos] == '/'))
      ++pos;
    Rat coeff(1);
    if (pos > num_start) coeff = Rat::parse(side.substr(num_start, pos - num_start));
    skip_ws();
    if (pos < side.size() && side[pos] == '*') {
      ++pos;
      skip_ws();
    }
    std::size_t word_start = pos;
    int depth = 0;
    while (pos < side.size()) {
      char ch = side[pos];
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth < 0) throw InputError("unbalanced ')' in relation");
      if (depth == 0 && (ch == '+' || ch == '-')) break;
      ++pos;
    }
    if (depth != 0) throw InputError("unbalanced '(' in relation");
    std::string word_text = parse::trim(side.substr(word_start, pos - word_start));
    if (word_text.empty()) throw InputError("relation term without a word");
    out.emplace_back(parse_word(word_text, alphabet), sign * coeff);
  }
}

}  // namespace

Relation parse_relation(const AutomPtr& sigma, std::string_view text,
                        std::span<const Letter> alphabet) {
  Relation r{sigma, {}};
  auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    add_side(sigma, text, alphabet, Rat(1), r.terms);
  } else {
    if (text.find('=', eq + 1) != std::string_view::npos)
      throw InputError("relation has more than one '='");
    add_side(sigma, text.substr(0, eq), alphabet, Rat(1), r.terms);
    add_side(sigma, text.substr(eq + 1), alphabet, Rat(-1), r.terms);
  }
  return r;
}

bool verify_relation(const Relation& r) {
  // Merge repeated words so that "w - w" does not count as two terms.
  std::vector<std::pair<Word, Rat>> merged;
  for (const auto& [w, c] : r.terms) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& m) { return m.first == w; });
    if (it == merged.end())
      merged.emplace_back(w, c);
    else
      it->second += c;
  }
  std::erase_if(merged, [](const auto& m) { return m.second.is_zero(); });
  if (merged.size() < 2) return false;
  const std::int64_t degree = merged.front().first.t_degree();
  for (const auto& [w, c] : merged)
    if (w.t_degree() != degree) return false;
  SkewPoly sum(r.sigma);
  for (const auto& [w, c] : merged) sum += expand_word(r.sigma, w) * c;
  return sum.is_zero();
}

Word word_from_index(std::size_t index, int n, const Letter& a, const Letter& b) {
  Word w;
  w.letters.reserve(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) w.letters.push_back((index >> k) & 1U ? b : a);
  return w;
}

}  // namespace skewfree
