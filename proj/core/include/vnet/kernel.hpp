#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vnet/combination.hpp"
#include "vnet/error.hpp"
#include "vnet/field_tower.hpp"
#include "vnet/net.hpp"

namespace vnet {

/// (h_1, ..., h_s) with h_1 in H*_{q,m} (deg < m) and h_i in H_{q,m}
/// (deg <= m, h_i(0) = 0) for i >= 2.
struct HTuple {
  std::vector<BasePoly> h;

  bool is_zero() const noexcept {
    for (const auto& p : h) {
      if (!p.is_zero()) return false;
    }
    return true;
  }
  friend bool operator==(const HTuple&, const HTuple&) = default;
};

bool in_domain(const HTuple& h, unsigned m);
/// deg*(h_1) + sum_{i >= 2} deg(h_i).
int weighted_degree(const HTuple& h);
/// sum_i h_i(alpha_i) evaluated in F_{q^m}.
ExtElement annihilator_value(const FieldTower& tower, const AlphaVector& alpha, const HTuple& h);

/// Slot layout shared by every dual-space routine. An HTuple is a vector of
/// m*s coefficients; component i owns slots [i*m, (i+1)*m). Slot j of the
/// first component holds the coefficient of x^j, slot j of every later
/// component the coefficient of x^{j+1}. Under this layout the same slots are
/// the row coefficients k_i of F' for the expanded generating matrices.
HTuple to_htuple(std::span<const BaseElement> slots, std::size_t s, unsigned m);
std::vector<BaseElement> to_slots(const HTuple& h, unsigned m);

/// 1-based position of the last nonzero slot of one component (0 if all
/// zero). For the first component this is deg(x h_1); for the others deg(h_i).
/// This is the single place that applies the x-shift of the first component.
inline unsigned shifted_degree(std::span<const BaseElement> component) noexcept {
  for (std::size_t j = component.size(); j-- > 0;) {
    if (component[j].code != 0) return static_cast<unsigned>(j + 1);
  }
  return 0;
}

/// Basis of D_{q,m,alpha} (or of F' for general matrices) in slot layout.
struct KernelBasis {
  std::size_t s = 0;
  unsigned m = 0;
  std::vector<std::vector<BaseElement>> basis;

  std::size_t dimension() const noexcept { return basis.size(); }
  std::size_t ambient() const noexcept { return s * m; }
};

/// Kernel of (h_1, ..., h_s) -> sum h_i(alpha_i), built from powers of the
/// alpha_i in F_{q^m}. Works for any prime power q.
KernelBasis kernel_basis(const FieldTower& tower, const AlphaVector& alpha);
/// Kernel of (k_1, ..., k_s) -> sum k_i C^{(i)}.
KernelBasis kernel_basis(const GeneratingMatrices& mats);

/// Walker over span(basis) plus its fixed chunk partition. Throws SizeCap
/// when q^dim exceeds `cap`.
struct KernelWalk {
  CombinationWalker walker;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> chunks;
};
KernelWalk kernel_walk(const BaseField& field, const KernelBasis& kb, std::uint64_t cap);

}  // namespace vnet
