#include "skewfree/linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace skewfree::linalg {

std::size_t IntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.cols.size();
  return n;
}

IntMatrix assemble(std::span<const Poly> polys) {
  std::vector<ExpVec> support;
  for (const auto& p : polys)
    for (const auto& t : p.terms()) support.push_back(t.e);
  std::sort(support.begin(), support.end(), canonical_before);
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::unordered_map<ExpVec, std::size_t, ExpVecHash> col_of;
  col_of.reserve(support.size());
  for (std::size_t k = 0; k < support.size(); ++k) col_of.emplace(support[k], k);

  IntMatrix m;
  m.ncols = support.size();
  m.rows.reserve(polys.size());
  for (const auto& p : polys) {
    BigInt den(1);
    for (const auto& t : p.terms())
      if (!t.c.is_integer()) den = lcm(den, t.c.den());
    SparseRow row;
    row.cols.reserve(p.size());
    row.vals.reserve(p.size());
    for (const auto& t : p.terms()) {
      row.cols.push_back(col_of.at(t.e));
      row.vals.push_back(t.c.num() * (den / t.c.den()));
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

namespace {

/// (p*r - a*s) / q, all exact.
SparseRow combine(const SparseRow& r, const BigInt& p, const SparseRow& s, const BigInt& a,
                  const BigInt& q) {
  SparseRow out;
  out.cols.reserve(r.cols.size() + s.cols.size());
  out.vals.reserve(r.cols.size() + s.cols.size());
  std::size_t x = 0, y = 0;
  BigInt v;
  while (x < r.cols.size() || y < s.cols.size()) {
    std::size_t col;
    if (y == s.cols.size() || (x < r.cols.size() && r.cols[x] < s.cols[y])) {
      col = r.cols[x];
      v = p * r.vals[x++];
    } else if (x == r.cols.size() || s.cols[y] < r.cols[x]) {
      col = s.cols[y];
      v = -a * s.vals[y++];
    } else {
      col = r.cols[x];
      v = p * r.vals[x++] - a * s.vals[y++];
    }
    if (v == 0) continue;
    if (q != 1) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
    out.cols.push_back(col);
    out.vals.push_back(v);
  }
  return out;
}

}  // namespace

std::size_t rank_bareiss(IntMatrix m) {
  std::vector<SparseRow> active;
  for (auto& r : m.rows)
    if (!r.cols.empty()) active.push_back(std::move(r));
  BigInt prev(1);
  std::size_t rank = 0;
  const SparseRow empty;
  while (!active.empty()) {
    // Pivot: smallest leading column, fewest entries among ties.
    std::size_t best = 0;
    for (std::size_t k = 1; k < active.size(); ++k) {
      const auto& a = active[k];
      const auto& b = active[best];
      if (a.cols[0] < b.cols[0] || (a.cols[0] == b.cols[0] && a.cols.size() < b.cols.size()))
        best = k;
    }
    SparseRow pivot = std::move(active[best]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
    const std::size_t col = pivot.cols[0];
    const BigInt piv = pivot.vals[0];
    std::vector<SparseRow> next;
    next.reserve(active.size());
    for (auto& r : active) {
      SparseRow nr = r.cols[0] == col ? combine(r, piv, pivot, r.vals[0], prev)
                                      : combine(r, piv, empty, BigInt(0), prev);
      if (!nr.cols.empty()) next.push_back(std::move(nr));
    }
    active = std::move(next);
    prev = piv;
    ++rank;
  }
  return rank;
}

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<u128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

struct ModRow {
  std::vector<std::size_t> cols;
  std::vector<u64> vals;
};

/// r - f*s mod p.
ModRow axpy(const ModRow& r, u64 f, const ModRow& s, u64 p) {
  ModRow out;
  out.cols.reserve(r.cols.size() + s.cols.size());
  out.vals.reserve(r.cols.size() + s.cols.size());
  std::size_t x = 0, y = 0;
  while (x < r.cols.size() || y < s.cols.size()) {
    std::size_t col;
    u64 v;
    if (y == s.cols.size() || (x < r.cols.size() && r.cols[x] < s.cols[y])) {
      col = r.cols[x];
      v = r.vals[x++];
    } else {
      u64 sub = mulmod(f, s.vals[y], p);
      if (x == r.cols.size() || s.cols[y] < r.cols[x]) {
        col = s.cols[y++];
        v = sub == 0 ? 0 : p - sub;
      } else {
        col = r.cols[x];
        u64 a = r.vals[x++];
        ++y;
        v = a >= sub ? a - sub : a + (p - sub);
      }
    }
    if (v == 0) continue;
    out.cols.push_back(col);
    out.vals.push_back(v);
  }
  return out;
}

}  // namespace

std::size_t rank_modp(const IntMatrix& m, std::uint64_t prime) {
  std::unordered_map<std::size_t, ModRow> pivots;
  for (const auto& r : m.rows) {
    ModRow row;
    for (std::size_t k = 0; k < r.cols.size(); ++k) {
      BigInt red;
      mpz_fdiv_r_ui(red.get_mpz_t(), r.vals[k].get_mpz_t(), prime);
      u64 v = red.get_ui();
      if (v == 0) continue;
      row.cols.push_back(r.cols[k]);
      row.vals.push_back(v);
    }
    while (!row.cols.empty()) {
      auto it = pivots.find(row.cols[0]);
      if (it == pivots.end()) break;
      row = axpy(row, row.vals[0], it->second, prime);
    }
    if (row.cols.empty()) continue;
    u64 inv = powmod(row.vals[0], prime - 2, prime);
    for (auto& v : row.vals) v = mulmod(v, inv, prime);
    std::size_t lead = row.cols[0];
    pivots.emplace(lead, std::move(row));
  }
  return pivots.size();
}

std::size_t rank(const IntMatrix& m, RankMethod method) {
  if (method == RankMethod::Auto && rank_modp(m) == m.rows.size()) return m.rows.size();
  return rank_bareiss(m);
}

namespace {

/// Sparse rational vector keyed by column index, increasing.
struct QRow {
  std::vector<std::size_t> cols;
  std::vector<Rat> vals;
};

QRow q_axpy(const QRow& r, const Rat& f, const QRow& s) {
  QRow out;
  std::size_t x = 0, y = 0;
  while (x < r.cols.size() || y < s.cols.size()) {
    std::size_t col;
    Rat v;
    if (y == s.cols.size() || (x < r.cols.size() && r.cols[x] < s.cols[y])) {
      col = r.cols[x];
      v = r.vals[x++];
    } else if (x == r.cols.size() || s.cols[y] < r.cols[x]) {
      col = s.cols[y];
      v = -(f * s.vals[y++]);
    } else {
      col = r.cols[x];
      v = r.vals[x++] - f * s.vals[y++];
    }
    if (v.is_zero()) continue;
    out.cols.push_back(col);
    out.vals.push_back(std::move(v));
  }
  return out;
}

std::vector<QRow> rational_rows(std::span<const Poly> polys) {
  IntMatrix m = assemble(polys);
  std::vector<QRow> rows;
  rows.reserve(polys.size());
  for (std::size_t k = 0; k < polys.size(); ++k) {
    // Use the original rational coefficients, not the integer-scaled ones.
    QRow r;
    r.cols = m.rows[k].cols;
    for (const auto& t : polys[k].terms()) r.vals.push_back(t.c);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::size_t rank_rational(std::span<const Poly> polys) {
  std::unordered_map<std::size_t, QRow> pivots;
  for (auto& row : rational_rows(polys)) {
    while (!row.cols.empty()) {
      auto it = pivots.find(row.cols[0]);
      if (it == pivots.end()) break;
      row = q_axpy(row, row.vals[0], it->second);
    }
    if (row.cols.empty()) continue;
    Rat inv = row.vals[0].inverse();
    for (auto& v : row.vals) v *= inv;
    std::size_t lead = row.cols[0];
    pivots.emplace(lead, std::move(row));
  }
  return pivots.size();
}

std::optional<Dependency> first_dependency(std::span<const Poly> polys) {
  struct Pivot {
    QRow row;
    QRow comb;  // row = sum comb[i] * polys[i]
  };
  std::unordered_map<std::size_t, Pivot> pivots;
  auto rows = rational_rows(polys);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    QRow row = std::move(rows[k]);
    QRow comb{{k}, {Rat(1)}};
    while (!row.cols.empty()) {
      auto it = pivots.find(row.cols[0]);
      if (it == pivots.end()) break;
      Rat f = row.vals[0];
      row = q_axpy(row, f, it->second.row);
      comb = q_axpy(comb, f, it->second.comb);
    }
    if (row.cols.empty()) {
      Dependency dep;
      dep.index = k;
      dep.coeffs.assign(k + 1, Rat(0));
      for (std::size_t q = 0; q < comb.cols.size(); ++q) dep.coeffs[comb.cols[q]] = comb.vals[q];
      return dep;
    }
    Rat inv = row.vals[0].inverse();
    for (auto& v : row.vals) v *= inv;
    for (auto& v : comb.vals) v *= inv;
    std::size_t lead = row.cols[0];
    pivots.emplace(lead, Pivot{std::move(row), std::move(comb)});
  }
  return std::nullopt;
}

}  // namespace skewfree::linalg
