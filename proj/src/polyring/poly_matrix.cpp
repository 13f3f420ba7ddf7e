#include "koszul/polyring/poly_matrix.hpp"

#include <unordered_map>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == t) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (t - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

Polynomial minor(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.size() != cols.size()) throw InputError("minor needs as many rows as columns");
  if (m.empty()) throw InputError("empty polynomial matrix");
  const RingDescriptor& ring = m.front().front().ring();
  const std::size_t k = rows.size();
  if (k == 0) return Polynomial::constant(ring, ring.field().one());
  if (k > 30) throw InputError("minor too large");
  // memo[mask] = determinant of rows[0..popcount) against the columns in mask.
  std::unordered_map<std::uint32_t, Polynomial> memo;
  memo.emplace(0u, Polynomial::constant(ring, ring.field().one()));
  std::vector<std::uint32_t> layer{0u};
  for (std::size_t r = 0; r < k; ++r) {
    std::unordered_map<std::uint32_t, Polynomial> next;
    for (std::uint32_t mask : layer) {
      const Polynomial& base = memo.at(mask);
      if (base.is_zero()) continue;
      for (std::size_t c = 0; c < k; ++c) {
        if (mask & (1u << c)) continue;
        const Polynomial& entry = m[rows[r]][cols[c]];
        if (entry.is_zero()) continue;
        // Sign: number of chosen columns to the right of c.
        std::size_t above = 0;
        for (std::size_t c2 = c + 1; c2 < k; ++c2) above += (mask >> c2) & 1u;
        Polynomial term = entry * base;
        if (above % 2 == 1) term = -term;
        auto [it, fresh] = next.try_emplace(mask | (1u << c), Polynomial(ring));
        it->second += term;
      }
    }
    memo = std::move(next);
    layer.clear();
    for (const auto& [mask, p] : memo) layer.push_back(mask);
  }
  auto it = memo.find((k == 32 ? 0u : (1u << k)) - 1u);
  return it == memo.end() ? Polynomial(ring) : it->second;
}

Polynomial determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InputError("determinant of a non-square matrix");
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return minor(m, idx, idx);
}

std::vector<Polynomial> all_minors(const PolyMatrix& m, std::size_t t) {
  if (m.empty()) throw InputError("empty polynomial matrix");
  const std::size_t rows = m.size(), cols = m.front().size();
  if (t == 0 || t > rows || t > cols) throw InputError("minor size out of range");
  std::vector<Polynomial> out;
  const auto row_sets = subsets(rows, t);
  const auto col_sets = subsets(cols, t);
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) {
      Polynomial p = minor(m, rs, cs);
      if (!p.is_zero()) out.push_back(std::move(p));
    }
  return out;
}

}  // namespace koszul
