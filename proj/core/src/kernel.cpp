#include "vnet/kernel.hpp"

namespace vnet {

bool in_domain(const HTuple& h, unsigned m) {
  if (h.h.empty()) return false;
  if (h.h[0].degree_star() >= static_cast<int>(m)) return false;
  for (std::size_t i = 1; i < h.h.size(); ++i) {
    if (h.h[i].degree() > static_cast<int>(m) || h.h[i].coeff(0).code != 0) return false;
  }
  return true;
}

int weighted_degree(const HTuple& h) {
  int total = h.h.empty() ? 0 : h.h[0].degree_star();
  for (std::size_t i = 1; i < h.h.size(); ++i) total += h.h[i].degree();
  return total;
}

ExtElement annihilator_value(const FieldTower& tower, const AlphaVector& alpha, const HTuple& h) {
  if (h.h.size() != alpha.size()) throw Error(ErrorKind::InvalidArgument, "tuple length != s");
  ExtElement acc = tower.zero();
  for (std::size_t i = 0; i < alpha.size(); ++i) acc = tower.add(acc, eval_poly(tower, h.h[i], alpha[i]));
  return acc;
}

HTuple to_htuple(std::span<const BaseElement> slots, std::size_t s, unsigned m) {
  if (slots.size() != s * m) throw Error(ErrorKind::InvalidArgument, "slot vector length != s*m");
  HTuple out;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<BaseElement> c(m + 1);
    for (unsigned j = 0; j < m; ++j) c[i == 0 ? j : j + 1] = slots[i * m + j];
    out.h.emplace_back(std::move(c));
  }
  return out;
}

std::vector<BaseElement> to_slots(const HTuple& h, unsigned m) {
  if (!in_domain(h, m)) throw Error(ErrorKind::InvalidArgument, "tuple outside H* x H^{s-1}");
  std::vector<BaseElement> slots(h.h.size() * m);
  for (std::size_t i = 0; i < h.h.size(); ++i) {
    for (unsigned j = 0; j < m; ++j) slots[i * m + j] = h.h[i].coeff(i == 0 ? j : j + 1);
  }
  return slots;
}

KernelBasis kernel_basis(const FieldTower& tower, const AlphaVector& alpha) {
  const unsigned m = tower.m();
  const std::size_t s = alpha.size();
  // Row (i, j) is the image of the monomial in slot (i, j).
  Matrix images(s * m, m);
  for (std::size_t i = 0; i < s; ++i) {
    tower.check(alpha[i]);
    ExtElement power = i == 0 ? tower.one() : alpha[i];
    for (unsigned j = 0; j < m; ++j) {
      for (unsigned k = 0; k < m; ++k) images(i * m + j, k) = power.coeffs[k];
      power = tower.mul(power, alpha[i]);
    }
  }
  return {s, m, left_kernel(tower.base(), images)};
}

KernelBasis kernel_basis(const GeneratingMatrices& mats) {
  const unsigned m = mats.m;
  Matrix stacked(mats.s() * m, m);
  for (std::size_t i = 0; i < mats.s(); ++i) {
    for (unsigned j = 0; j < m; ++j) {
      for (unsigned k = 0; k < m; ++k) stacked(i * m + j, k) = mats.mats[i](j, k);
    }
  }
  return {mats.s(), m, left_kernel(*mats.field, stacked)};
}

KernelWalk kernel_walk(const BaseField& field, const KernelBasis& kb, std::uint64_t cap) {
  CombinationWalker walker(field, kb.basis, kb.ambient());
  const std::uint64_t total = walker.size();
  require_within_cap(total, cap, "kernel size q^dim");
  auto chunks = chunk_ranges(total);
  return {std::move(walker), std::move(chunks)};
}

}  // namespace vnet
