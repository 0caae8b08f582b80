#include "linalg.hpp"

#include <cstdlib>
#include <utility>

namespace rootforge::detail {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> eliminate(std::vector<std::vector<Rat>>& m, int cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].numerator() == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rat lead = m[r][c];
    for (auto& x : m[r]) x /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].numerator() == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(const std::vector<Coords>& rows) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows.front().size());
  std::vector<std::vector<Rat>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) m.emplace_back(row.begin(), row.end());
  return static_cast<int>(eliminate(m, cols).size());
}

std::optional<std::vector<Rat>> solve(const std::vector<Coords>& basis, const Coords& v) {
  const int k = static_cast<int>(basis.size());
  const int dim = static_cast<int>(v.size());
  // Columns are basis vectors, last column is v.
  std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(k + 1));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < k; ++j) m[i][j] = basis[j][i];
    m[i][k] = v[i];
  }
  const auto pivots = eliminate(m, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (static_cast<int>(pivots.size()) != k) return std::nullopt;
  std::vector<Rat> out(k);
  for (int r = 0; r < k; ++r) out[pivots[r]] = m[r][k];
  return out;
}

Lattice::Lattice(const std::vector<Coords>& generators) {
  if (generators.empty()) return;
  const int dim = static_cast<int>(generators.front().size());
  std::vector<std::vector<long long>> rows;
  for (const auto& g : generators) rows.emplace_back(g.begin(), g.end());
  std::size_t r = 0;
  for (int c = 0; c < dim && r < rows.size(); ++c) {
    bool found = false;
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] != 0 && (best == rows.size() || std::llabs(rows[i][c]) < std::llabs(rows[best][c])))
          best = i;
      }
      if (best == rows.size()) break;
      found = true;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        const long long q = rows[i][c] / rows[r][c];
        for (int j = 0; j < dim; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (found) {
      pivots_.push_back(c);
      ++r;
    }
  }
  rows.resize(r);
  rows_ = std::move(rows);
}

bool Lattice::contains(const Coords& v) const {
  std::vector<long long> w(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int p = pivots_[i];
    const long long d = rows_[i][p];
    if (w[p] % d != 0) return false;
    const long long q = w[p] / d;
    if (q == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= q * rows_[i][j];
  }
  for (long long x : w)
    if (x != 0) return false;
  return true;
}

}  // namespace rootforge::detail
