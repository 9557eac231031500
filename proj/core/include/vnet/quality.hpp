#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vnet/error.hpp"
#include "vnet/kernel.hpp"
#include "vnet/net.hpp"
#include "vnet/numeric.hpp"

namespace vnet {

/// (d_1, ..., d_s) with sum d_i = m - t.
using Composition = std::vector<unsigned>;

struct TValue {
  unsigned t = 0;
  /// Lexicographically smallest composition of m - t + 1 whose row prefixes
  /// are dependent; empty when t = 0.
  std::optional<Composition> witness;
};

/// Least t such that the first d_i rows of each C^{(i)} are jointly
/// independent for every composition of m - t. Scans k = m - t downward and
/// stops at the first k where every composition passes.
TValue t_value(const GeneratingMatrices& mats);

struct RhoValue {
  int rho = 0;
  /// First tuple (in kernel enumeration order) attaining the minimum; empty
  /// when D' is empty and rho = m.
  std::optional<HTuple> witness;
};

/// Figure of merit: minimum weighted degree over the nonzero elements of
/// D_{q,m,alpha}, or m if there are none. Enumerates the q^{dim} kernel
/// elements; throws SizeCap beyond `caps.kernel`.
RhoValue rho_direct(const FieldTower& tower, const AlphaVector& alpha, const Caps& caps = {},
                    unsigned threads = 1);

/// Quality of a Vandermonde net computed by both routes.
struct MeritReport {
  unsigned m = 0;
  TValue t;
  RhoValue rho;

  bool consistent() const noexcept { return static_cast<int>(t.t) + rho.rho == static_cast<int>(m); }
};

MeritReport merit_report(const FieldTower& tower, const AlphaVector& alpha, const Caps& caps = {},
                         unsigned threads = 1);

/// Number of (h_1, ..., h_l) with h_i != 0, h_i(0) = 0 and sum deg(h_i) = n.
BigInt count_A(std::uint64_t q, unsigned l, long long n);

/// Delta_q(s, sigma) = sum_{d=0}^{s-1} C(s,d) (q-1)^{s-d}
///     * sum_{n=0}^{sigma-s+d} C(n+s-d-1, n) floor((n+s-d)/(s-d)) q^n.
BigInt delta_q(std::uint64_t q, unsigned s, unsigned sigma);

/// Largest sigma <= m with Delta_q(s, sigma) < q^m (0 if only sigma = 0
/// qualifies). Some alpha then has rho(alpha) >= sigma.
unsigned existence_sigma(std::uint64_t q, unsigned s, unsigned m);

/// floor(m - s log_q m - 3) evaluated with integer arithmetic only; may be
/// negative.
long long corollary_floor(std::uint64_t q, unsigned s, unsigned m);

/// The usable lower bound on the best rho: m for s = 1 (a root of an
/// irreducible polynomial), otherwise max(0, corollary_floor).
unsigned corollary_guarantee(std::uint64_t q, unsigned s, unsigned m);

/// True iff every elementary interval of volume q^{t-m} holds exactly q^t
/// points. Throws SizeCap when q^{m-t} > caps.intervals.
bool equidist_check(const NetPointSet& points, unsigned t, const Caps& caps = {});

}  // namespace vnet
