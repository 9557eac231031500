#include "vnet/linalg.hpp"

#include "vnet/error.hpp"

namespace vnet {

Matrix Matrix::identity(std::size_t n) {
  Matrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = BaseElement{1};
  return id;
}

bool EchelonBasis::insert(std::span<const BaseElement> v) {
  if (v.size() != dim_) throw Error(ErrorKind::MixedFieldLevels, "vector length does not match basis");
  const BaseField& f = *field_;
  std::vector<BaseElement> w(v.begin(), v.end());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const BaseElement c = w[pivots_[r]];
    if (c.code == 0) continue;
    const auto& row = rows_[r];
    for (std::size_t k = 0; k < dim_; ++k) {
      if (row[k].code != 0) w[k] = f.sub(w[k], f.mul(c, row[k]));
    }
  }
  std::size_t pivot = 0;
  while (pivot < dim_ && w[pivot].code == 0) ++pivot;
  if (pivot == dim_) return false;
  const BaseElement inv = f.inv(w[pivot]);
  for (auto& x : w) x = f.mul(x, inv);
  rows_.push_back(std::move(w));
  pivots_.push_back(pivot);
  return true;
}

std::size_t rank(const BaseField& field, const Matrix& a) {
  EchelonBasis basis(field, a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) basis.insert(a.row(r));
  return basis.rank();
}

std::vector<std::vector<BaseElement>> left_kernel(const BaseField& field, const Matrix& a) {
  const BaseField& f = field;
  const std::size_t n = a.cols();
  const std::size_t width = n + a.rows();
  std::vector<std::vector<BaseElement>> pivot_rows;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<BaseElement>> kernel;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<BaseElement> w(width);
    for (std::size_t k = 0; k < n; ++k) w[k] = a(i, k);
    w[n + i] = f.one();
    for (std::size_t r = 0; r < pivot_rows.size(); ++r) {
      const BaseElement c = w[pivots[r]];
      if (c.code == 0) continue;
      const auto& row = pivot_rows[r];
      for (std::size_t k = 0; k < width; ++k) {
        if (row[k].code != 0) w[k] = f.sub(w[k], f.mul(c, row[k]));
      }
    }
    std::size_t pivot = 0;
    while (pivot < n && w[pivot].code == 0) ++pivot;
    if (pivot == n) {
      kernel.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(n), w.end());
      continue;
    }
    const BaseElement inv = f.inv(w[pivot]);
    for (auto& x : w) x = f.mul(x, inv);
    pivot_rows.push_back(std::move(w));
    pivots.push_back(pivot);
  }
  return kernel;
}

std::vector<BaseElement> apply(const BaseField& field, const Matrix& a, std::span<const BaseElement> x) {
  if (x.size() != a.cols()) throw Error(ErrorKind::MixedFieldLevels, "vector length does not match matrix");
  std::vector<BaseElement> y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BaseElement acc{};
    for (std::size_t c = 0; c < a.cols(); ++c) acc = field.add(acc, field.mul(a(r, c), x[c]));
    y[r] = acc;
  }
  return y;
}

}  // namespace vnet
