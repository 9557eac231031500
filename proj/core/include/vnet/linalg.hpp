#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vnet/base_field.hpp"

namespace vnet {

/// Dense row-major matrix over F_q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BaseElement& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  BaseElement operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  std::span<BaseElement> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const BaseElement> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  static Matrix identity(std::size_t n);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BaseElement> data_;
};

/// Incrementally maintained row-echelon basis. Rows are reduced in insertion
/// order, so each insert costs O(rank * dim).
class EchelonBasis {
 public:
  EchelonBasis(const BaseField& field, std::size_t dim) : field_(&field), dim_(dim) {}

  /// Adds v if it is independent of the rows so far; returns whether it was.
  bool insert(std::span<const BaseElement> v);
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }

 private:
  const BaseField* field_;
  std::size_t dim_;
  std::vector<std::vector<BaseElement>> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const BaseField& field, const Matrix& a);

/// A basis of the left kernel {c in F_q^rows : sum_i c_i row_i(a) = 0}.
/// Basis vector k has a 1 in a position where all earlier vectors are 0, so
/// the basis is independent by construction.
std::vector<std::vector<BaseElement>> left_kernel(const BaseField& field, const Matrix& a);

/// y = a * x for a column vector x.
std::vector<BaseElement> apply(const BaseField& field, const Matrix& a, std::span<const BaseElement> x);

}  // namespace vnet
