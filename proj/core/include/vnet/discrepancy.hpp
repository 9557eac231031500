#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vnet/error.hpp"
#include "vnet/kernel.hpp"
#include "vnet/net.hpp"
#include "vnet/numeric.hpp"

namespace vnet {

/// Real-valued comparisons against closed-form bounds use this slack.
inline constexpr long double kBoundTolerance = 1e-12L;

/// true iff lhs <= rhs up to kBoundTolerance (absolute, scaled by |rhs| >= 1).
bool within_bound(long double lhs, long double rhs) noexcept;

struct WeightedSum {
  long double value = 0.0L;
  std::uint64_t term_count = 0;
  bool cap_hit = false;
};

/// rho_q(h) for h in H_{q,m}: 1 for h = 0, else 1 / (q^r sin(pi k_r / q)) with
/// r = deg(h) and k_r the leading coefficient. q must be prime.
long double rho_weight(const BasePoly& h, std::uint32_t q);
/// Weight of a first component: rho_q(x h_1(x)).
long double rho_weight_first(const BasePoly& h1, std::uint32_t q);
/// rho_q(x h_1) rho_q(h_2) ... rho_q(h_s).
long double rho_tuple(const HTuple& h, std::uint32_t q);

/// Lookup of rho_q for one component stored in slot layout (see kernel.hpp).
class WeightTable {
 public:
  WeightTable(std::uint32_t q, unsigned m);
  long double component(std::span<const BaseElement> slots) const noexcept {
    const unsigned r = shifted_degree(slots);
    return r == 0 ? 1.0L : table_[(r - 1) * q_ + slots[r - 1].code];
  }
  /// Product of component weights over the s components of a slot vector.
  long double tuple(std::span<const BaseElement> slots, std::size_t s) const noexcept {
    long double w = 1.0L;
    for (std::size_t i = 0; i < s; ++i) w *= component(slots.subspan(i * m_, m_));
    return w;
  }

 private:
  std::uint32_t q_;
  unsigned m_;
  std::vector<long double> table_;
};

/// R_q(alpha): sum of rho_q^{(s)} over the nonzero elements of D_{q,m,alpha},
/// enumerated through a kernel basis. Requires prime q; SizeCap beyond
/// caps.kernel elements.
WeightedSum r_q(const FieldTower& tower, const AlphaVector& alpha, const Caps& caps = {},
                unsigned threads = 1);

/// R_q(C^{(1)}, ..., C^{(s)}) over F' for arbitrary generating matrices.
WeightedSum r_q_matrices(const GeneratingMatrices& mats, const Caps& caps = {}, unsigned threads = 1);

/// m/2 + 1 for q = 2, ((2/pi) log q + 2/5) m + 1 otherwise.
long double weight_bound_base(std::uint32_t q, unsigned m);

struct WeightSumCheck {
  long double single_sum = 0;   // sum over H_{q,m} of rho_q(h)
  long double single_bound = 0;
  long double tuple_sum = 0;    // sum over H* x H^{v-1} of rho_q^{(v)}(h)
  long double tuple_bound = 0;

  bool holds() const noexcept {
    return within_bound(single_sum, single_bound) && within_bound(tuple_sum, tuple_bound);
  }
};

/// Computed weight sums next to their closed-form bounds. The tuple sum is
/// evaluated as a product of one-dimensional sums.
WeightSumCheck weight_sum_bound(std::uint32_t q, unsigned m, unsigned v, const Caps& caps = {});

/// 1 - (1 - q^{-m})^s + (m / q^m) B^s, B = weight_bound_base(q, m).
long double average_bound(std::uint32_t q, unsigned m, unsigned s);

/// 1 - (1 - q^{-m})^s + R_q.
long double disc_bound(unsigned s, std::uint32_t q, unsigned m, const WeightedSum& rq);

struct StarOptions {
  std::size_t max_dim = 3;
  std::uint64_t cap = Caps{}.points;  // grid cells
};

/// Exact star discrepancy sup_J |Z(J)/N - vol(J)| over anchored boxes,
/// evaluated on the critical grid of point coordinates and 1 with both open
/// and closed counts. Throws DimensionCap when s > max_dim and SizeCap when
/// the grid exceeds `cap` cells.
Rational star_discrepancy_exact(const NetPointSet& points, const StarOptions& options = {});

}  // namespace vnet
