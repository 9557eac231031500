#include "vnet/combination.hpp"

#include <algorithm>

namespace vnet {

CombinationWalker::CombinationWalker(const BaseField& field,
                                     std::vector<std::vector<BaseElement>> generators,
                                     std::size_t dim)
    : field_(&field), gens_(std::move(generators)), dim_(dim) {
  const std::uint32_t q = field.q();
  multiples_.assign(gens_.size() * q * dim_, BaseElement{});
  steps_.assign(gens_.size() * q * dim_, BaseElement{});
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    if (gens_[j].size() != dim_) throw Error(ErrorKind::MixedFieldLevels, "generator length != dim");
    for (std::uint32_t c = 0; c < q; ++c) {
      for (std::size_t k = 0; k < dim_; ++k) {
        multiples_[(j * q + c) * dim_ + k] = field.mul(BaseElement{c}, gens_[j][k]);
      }
    }
    for (std::uint32_t c = 0; c < q; ++c) {
      const std::uint32_t next = (c + 1 == q) ? 0 : c + 1;
      for (std::size_t k = 0; k < dim_; ++k) {
        steps_[(j * q + c) * dim_ + k] =
            field.sub(multiples_[(j * q + next) * dim_ + k], multiples_[(j * q + c) * dim_ + k]);
      }
    }
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> chunk_ranges(std::uint64_t total,
                                                                  std::uint64_t target) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (total == 0) return out;
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min(total, target));
  const std::uint64_t base = total / chunks;
  const std::uint64_t extra = total % chunks;
  std::uint64_t begin = 0;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t len = base + (c < extra ? 1 : 0);
    out.emplace_back(begin, begin + len);
    begin += len;
  }
  return out;
}

}  // namespace vnet
