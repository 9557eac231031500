#pragma once

#include <cstdint>
#include <vector>

#include "vnet/discrepancy.hpp"
#include "vnet/error.hpp"
#include "vnet/net.hpp"

namespace vnet {

/// alpha_1 = theta (the residue class of x, a root of the tower modulus) and
/// alpha_i = (theta + c_i)^{-1} for i >= 2, with c_2, c_3, ... the elements of
/// F_q in ascending code order. The resulting net has t = 0.
/// Throws DegreeTooSmall for m < 2 and DimensionTooLarge for s > q + 1.
AlphaVector explicit_alpha(const FieldTower& tower, unsigned s);

enum class Seed { Irreducible, Explicit };

const char* to_string(Seed seed) noexcept;

struct SearchOptions {
  Caps caps;
  unsigned threads = 1;
};

struct SearchResult {
  AlphaVector alpha;
  std::vector<WeightedSum> per_dim_rq;  // R_q of each prefix (alpha_1, ..., alpha_d)
  std::vector<bool> bound_ok;           // per prefix: R_q <= cbc_bound(q, m, d)
  std::size_t ties_broken = 0;          // candidates tied with the chosen minimizer
  Seed seed = Seed::Irreducible;
};

/// (m / q^m) B^d with B = weight_bound_base(q, m).
long double cbc_bound(std::uint32_t q, unsigned m, unsigned d);

/// Component-by-component search seeded with alpha_1 = theta. Step d scans
/// all q^m candidates and keeps the minimizer of R_q((alpha_1..alpha_d));
/// ties (relative 1e-12) go to the smallest encoding. Needs prime q,
/// q^m <= caps.points and q^{2m} <= caps.kernel.
SearchResult cbc_search(const FieldTower& tower, unsigned s, const SearchOptions& options = {});

/// Same scan, seeded with explicit_alpha(tower, q + 1). Requires s > q + 1.
SearchResult cbc_from_explicit(const FieldTower& tower, unsigned s, const SearchOptions& options = {});

/// R_q((prefix, beta)) - R_q(prefix) for every beta in F_{q^m}, indexed by
/// encoding. The prefix must be non-empty.
std::vector<long double> cbc_candidate_scores(const FieldTower& tower, const AlphaVector& prefix,
                                              const SearchOptions& options = {});

}  // namespace vnet
