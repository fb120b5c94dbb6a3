#include "icotk/algebra/linalg.hpp"

#include "icotk/errors.hpp"

namespace icotk {

std::vector<std::size_t> RatMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = rows_;
    for (std::size_t r = row; r < rows_; ++r) {
      if (at(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel == rows_) continue;
    if (sel != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(row, c));
    const Rat inv = 1 / at(row, col);
    for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col) == 0) continue;
      const Rat f = at(r, col);
      for (std::size_t c = col; c < cols_; ++c)
        if (at(row, c) != 0) at(r, c) -= f * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t RatMatrix::rank() const {
  RatMatrix copy = *this;
  return copy.rref().size();
}

std::vector<RatVector> RatMatrix::kernel() const {
  RatMatrix m = *this;
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

void RowSpace::reduce(RatVector& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p] == 0) continue;
    const Rat f = v[p];
    for (std::size_t c = 0; c < dim_; ++c)
      if (rows_[i][c] != 0) v[c] -= f * rows_[i][c];
  }
}

bool RowSpace::insert(RatVector v) {
  if (v.size() != dim_) throw DomainError("RowSpace: dimension mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p] == 0) ++p;
  if (p == dim_) return false;
  const Rat inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  // Keep existing rows reduced against the new pivot.
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    const Rat f = row[p];
    for (std::size_t c = 0; c < dim_; ++c)
      if (v[c] != 0) row[c] -= f * v[c];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(RatVector v) const {
  reduce(v);
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace icotk
