#include "skewfree/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <set>
#include <unordered_map>
#include <utility>

#include "skewfree/error.hpp"

namespace skewfree::kernels {

namespace serial {

Poly mul(const Poly& f, const Poly& g) {
  require_same_mode(f, g, "poly_mul");
  std::unordered_map<ExpVec, Rat, ExpVecHash> acc;
  acc.reserve(f.size() * g.size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) acc[a.e + b.e] += a.c * b.c;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) terms.push_back({e, std::move(c)});
  return Poly::from_terms(std::move(terms), f.mode());
}

std::vector<Poly> expand_level(std::span<const Poly> prefixes, const Poly& fa, const Poly& fb) {
  std::vector<Poly> out;
  out.reserve(2 * prefixes.size());
  for (const auto& p : prefixes) {
    out.push_back(p * fa);
    out.push_back(p * fb);
  }
  return out;
}

std::size_t sumset_bruteforce(std::span<const std::pair<ExpVec, ExpVec>> choices) {
  if (choices.size() > 24) throw ResourceCapExceeded("brute-force sumset limited to 24 levels");
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  const std::size_t n = choices.size();
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    std::int64_t i = 0, j = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const ExpVec& v = ((w >> k) & 1) ? choices[k].second : choices[k].first;
      if (__builtin_add_overflow(i, v.i, &i) || __builtin_add_overflow(j, v.j, &j))
        throw ResourceCapExceeded("exponent overflow in sumset");
    }
    seen.emplace(i, j);
  }
  return seen.size();
}

}  // namespace serial

namespace parallel {

namespace {

struct Row {
  std::int64_t i;
  std::vector<std::int64_t> js;
  std::vector<BigInt> cs;
};

BigInt common_denominator(const Poly& p) {
  BigInt d(1);
  for (const auto& t : p.terms())
    if (!t.c.is_integer()) d = lcm(d, t.c.den());
  return d;
}

std::vector<Row> rows_of(const Poly& p, const BigInt& den) {
  std::vector<const Term*> sorted;
  sorted.reserve(p.size());
  for (const auto& t : p.terms()) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [](const Term* a, const Term* b) { return lex_less(a->e, b->e); });
  std::vector<Row> rows;
  for (const Term* t : sorted) {
    if (rows.empty() || rows.back().i != t->e.i) rows.push_back({t->e.i, {}, {}});
    rows.back().js.push_back(t->e.j);
    if (den == 1) {
      rows.back().cs.push_back(t->c.num());
    } else {
      BigInt scaled = t->c.num() * (den / t->c.den());
      rows.back().cs.push_back(std::move(scaled));
    }
  }
  return rows;
}

/// Accumulates one output row, dense when the j-range is small.
class RowAccumulator {
 public:
  RowAccumulator(std::int64_t jmin, std::int64_t width, bool dense)
      : jmin_(jmin), dense_(dense) {
    if (dense_) cells_.resize(static_cast<std::size_t>(width));
  }

  void addmul(std::int64_t j, const BigInt& a, const BigInt& b) {
    if (dense_) {
      auto k = static_cast<std::size_t>(j - jmin_);
      if (mpz_sgn(cells_[k].get_mpz_t()) == 0) touched_.push_back(k);
      mpz_addmul(cells_[k].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    } else {
      BigInt& c = sparse_[j];
      mpz_addmul(c.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
  }

  void drain(std::int64_t i, const BigInt& den, std::vector<Term>& out) {
    if (dense_) {
      std::sort(touched_.begin(), touched_.end());
      touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
      for (auto k : touched_) {
        BigInt& c = cells_[k];
        if (mpz_sgn(c.get_mpz_t()) != 0)
          out.push_back({{i, jmin_ + static_cast<std::int64_t>(k)}, den == 1 ? Rat(c) : Rat(c, den)});
        c = 0;
      }
      touched_.clear();
    } else {
      for (auto& [j, c] : sparse_)
        if (mpz_sgn(c.get_mpz_t()) != 0) out.push_back({{i, j}, den == 1 ? Rat(c) : Rat(c, den)});
      sparse_.clear();
    }
  }

 private:
  std::int64_t jmin_;
  bool dense_;
  std::vector<BigInt> cells_;
  std::vector<std::size_t> touched_;
  std::unordered_map<std::int64_t, BigInt> sparse_;
};

}  // namespace

Poly mul(const Poly& f, const Poly& g) {
  require_same_mode(f, g, "poly_mul");
  if (f.is_zero() || g.is_zero()) return Poly(f.mode());
  const BigInt df = common_denominator(f), dg = common_denominator(g);
  const BigInt den = df * dg;
  const auto frows = rows_of(f, df);
  const auto grows = rows_of(g, dg);

  std::unordered_map<std::int64_t, std::size_t> grow_at;
  for (std::size_t k = 0; k < grows.size(); ++k) grow_at[grows[k].i] = k;

  std::vector<std::int64_t> outs;
  outs.reserve(frows.size() * grows.size());
  for (const auto& a : frows)
    for (const auto& b : grows) outs.push_back(a.i + b.i);
  std::sort(outs.begin(), outs.end());
  outs.erase(std::unique(outs.begin(), outs.end()), outs.end());

  std::int64_t fjmin = frows[0].js[0], fjmax = fjmin, gjmin = grows[0].js[0], gjmax = gjmin;
  for (const auto& r : frows) {
    fjmin = std::min(fjmin, r.js.front());
    fjmax = std::max(fjmax, r.js.back());
  }
  for (const auto& r : grows) {
    gjmin = std::min(gjmin, r.js.front());
    gjmax = std::max(gjmax, r.js.back());
  }
  const std::int64_t jmin = fjmin + gjmin;
  const std::int64_t width = fjmax + gjmax - jmin + 1;
  const bool dense =
      width <= 4096 || width <= 4 * static_cast<std::int64_t>(f.size() + g.size());

  std::vector<std::vector<Term>> produced(outs.size());
  const auto n_out = static_cast<std::int64_t>(outs.size());

#pragma omp parallel
  {
    RowAccumulator acc(jmin, width, dense);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < n_out; ++k) {
      const std::int64_t target = outs[static_cast<std::size_t>(k)];
      for (const auto& a : frows) {
        auto it = grow_at.find(target - a.i);
        if (it == grow_at.end()) continue;
        const Row& b = grows[it->second];
        for (std::size_t p = 0; p < a.js.size(); ++p)
          for (std::size_t q = 0; q < b.js.size(); ++q)
            acc.addmul(a.js[p] + b.js[q], a.cs[p], b.cs[q]);
      }
      acc.drain(target, den, produced[static_cast<std::size_t>(k)]);
    }
  }

  std::size_t total = 0;
  for (const auto& r : produced) total += r.size();
  std::vector<Term> terms;
  terms.reserve(total);
  for (auto& r : produced)
    for (auto& t : r) terms.push_back(std::move(t));
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return canonical_before(a.e, b.e); });
  return Poly::from_canonical(std::move(terms), f.mode());
}

std::vector<Poly> expand_level(std::span<const Poly> prefixes, const Poly& fa, const Poly& fb) {
  std::vector<Poly> out(2 * prefixes.size(), Poly(fa.mode()));
  const auto n = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < n; ++k) {
    const auto u = static_cast<std::size_t>(k);
    out[2 * u] = prefixes[u] * fa;
    out[2 * u + 1] = prefixes[u] * fb;
  }
  return out;
}

std::vector<ExpVec> sumset_step(std::span<const ExpVec> sorted, ExpVec va, ExpVec vb) {
  const auto n = static_cast<std::int64_t>(sorted.size());
  std::vector<ExpVec> a(sorted.size()), b(sorted.size());
  bool overflow = false;
#pragma omp parallel for reduction(|| : overflow)
  for (std::int64_t k = 0; k < n; ++k) {
    const auto u = static_cast<std::size_t>(k);
    const ExpVec& s = sorted[u];
    overflow = overflow || __builtin_add_overflow(s.i, va.i, &a[u].i) ||
               __builtin_add_overflow(s.j, va.j, &a[u].j) ||
               __builtin_add_overflow(s.i, vb.i, &b[u].i) ||
               __builtin_add_overflow(s.j, vb.j, &b[u].j);
  }
  if (overflow) throw ResourceCapExceeded("exponent overflow in sumset");
  std::vector<ExpVec> out;
  out.reserve(2 * sorted.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), lex_less);
  return out;
}

}  // namespace parallel

}  // namespace skewfree::kernels
