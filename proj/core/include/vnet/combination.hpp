#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vnet/base_field.hpp"
#include "vnet/error.hpp"

namespace vnet {

/// Walks every F_q-linear combination sum_j c_j v_j of a fixed list of
/// generators. Coefficient tuples are visited in canonical order: the index
/// of (c_0, ..., c_{k-1}) is sum_j code(c_j) q^j, so c_0 changes fastest.
/// Each step updates the running value in O(dim) amortized.
class CombinationWalker {
 public:
  CombinationWalker(const BaseField& field, std::vector<std::vector<BaseElement>> generators,
                    std::size_t dim);

  std::size_t generator_count() const noexcept { return gens_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  /// q^k; throws SizeCap on 64-bit overflow.
  std::uint64_t size() const { return checked_pow(field_->q(), static_cast<unsigned>(gens_.size())); }

  /// Calls fn(index, coefficients, value) for every index in [begin, end).
  template <class Fn>
  void walk(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
    if (begin >= end) return;
    const std::uint32_t q = field_->q();
    std::vector<BaseElement> coeffs(gens_.size());
    std::vector<BaseElement> value(dim_);
    std::uint64_t rest = begin;
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      coeffs[j] = {static_cast<std::uint32_t>(rest % q)};
      rest /= q;
      if (coeffs[j].code != 0) accumulate(value, multiple(j, coeffs[j].code));
    }
    for (std::uint64_t index = begin;;) {
      fn(index, std::span<const BaseElement>(coeffs), std::span<const BaseElement>(value));
      if (++index == end) break;
      for (std::size_t j = 0;; ++j) {
        const std::uint32_t c = coeffs[j].code;
        if (c + 1 < q) {
          coeffs[j] = {c + 1};
          accumulate(value, step(j, c));
          break;
        }
        coeffs[j] = {0};
        accumulate(value, wrap(j));
      }
    }
  }

 private:
  std::span<const BaseElement> multiple(std::size_t j, std::uint32_t c) const {
    return {multiples_.data() + (j * field_->q() + c) * dim_, dim_};
  }
  // value(c + 1) - value(c) for generator j
  std::span<const BaseElement> step(std::size_t j, std::uint32_t c) const {
    return {steps_.data() + (j * field_->q() + c) * dim_, dim_};
  }
  // -(q - 1) * v_j, applied when digit j carries
  std::span<const BaseElement> wrap(std::size_t j) const {
    return {steps_.data() + (j * field_->q() + field_->q() - 1) * dim_, dim_};
  }
  void accumulate(std::vector<BaseElement>& value, std::span<const BaseElement> delta) const {
    for (std::size_t k = 0; k < dim_; ++k) {
      if (delta[k].code != 0) value[k] = field_->add(value[k], delta[k]);
    }
  }

  const BaseField* field_;
  std::vector<std::vector<BaseElement>> gens_;
  std::size_t dim_;
  std::vector<BaseElement> multiples_;
  std::vector<BaseElement> steps_;
};

/// A fixed partition of [0, total) into at most `target` contiguous ranges.
/// The partition depends only on its arguments, never on the thread count.
std::vector<std::pair<std::uint64_t, std::uint64_t>> chunk_ranges(std::uint64_t total,
                                                                  std::uint64_t target = 64);

}  // namespace vnet
