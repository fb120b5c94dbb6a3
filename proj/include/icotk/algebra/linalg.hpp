#pragma once

#include <cstddef>
#include <vector>

#include "icotk/algebra/integer.hpp"

namespace icotk {

using RatVector = std::vector<Rat>;

/// Dense matrix over Q with exact Gauss-Jordan elimination.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Reduces in place to reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of {v : M v = 0}, one vector per free column (that entry is 1).
  std::vector<RatVector> kernel() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

/// Incrementally maintained row space, used for greedy basis extension.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}
  /// Adds v if it is independent of the current rows; returns whether it was added.
  bool insert(RatVector v);
  bool contains(RatVector v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(RatVector& v) const;

  std::size_t dim_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace icotk
