#include "vnet/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vnet/parallel.hpp"

namespace vnet {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;

void require_prime(std::uint32_t q) {
  if (!is_prime(q)) {
    throw Error(ErrorKind::NotPrime, "discrepancy weights need prime q, got " + std::to_string(q));
  }
}

long double single_weight(unsigned r, std::uint32_t lead, std::uint32_t q) {
  if (r == 0) return 1.0L;
  return 1.0L / (std::pow(static_cast<long double>(q), static_cast<long double>(r)) *
                 std::sin(kPi * static_cast<long double>(lead) / static_cast<long double>(q)));
}

// (N^s - (N-1)^s) / N^s, the point-count term of the bound.
long double count_term(std::uint64_t n, unsigned s) {
  BigInt total = 1;
  BigInt rest = 1;
  for (unsigned i = 0; i < s; ++i) {
    total *= n;
    rest *= n - 1;
  }
  const Rational r(total - rest, total);
  return static_cast<long double>(r);
}

WeightedSum sum_over_kernel(const BaseField& field, const KernelBasis& kb, const Caps& caps,
                            unsigned threads) {
  const std::uint32_t q = field.q();
  require_prime(q);
  if (kb.dimension() == 0) return {0.0L, 0, false};
  const WeightTable weights(q, kb.m);
  const KernelWalk walk = kernel_walk(field, kb, caps.kernel);
  std::vector<CompensatedSum> partial(walk.chunks.size());
  parallel_for(walk.chunks.size(), threads, [&](std::size_t c) {
    CompensatedSum& acc = partial[c];
    walk.walker.walk(walk.chunks[c].first, walk.chunks[c].second,
                     [&](std::uint64_t index, std::span<const BaseElement>, std::span<const BaseElement> v) {
                       if (index != 0) acc.add(weights.tuple(v, kb.s));
                     });
  });
  CompensatedSum total;
  for (const auto& p : partial) total.add(p.value());
  return {total.value(), walk.walker.size() - 1, false};
}

__extension__ typedef __int128 wide_int;
BigInt to_big(wide_int v) {
  BigInt out = 0;
  BigInt scale = 1;
  while (v > 0) {
    out += scale * static_cast<unsigned>(v % 1000000000);
    v /= 1000000000;
    scale *= 1000000000;
  }
  return out;
}

}  // namespace

bool within_bound(long double lhs, long double rhs) noexcept {
  const long double scale = std::max(1.0L, rhs < 0 ? -rhs : rhs);
  return lhs <= rhs + kBoundTolerance * scale;
}

long double rho_weight(const BasePoly& h, std::uint32_t q) {
  require_prime(q);
  if (h.is_zero()) return 1.0L;
  if (h.coeff(0).code != 0) throw Error(ErrorKind::InvalidArgument, "rho_q is defined on H_{q,m} (h(0) = 0)");
  return single_weight(static_cast<unsigned>(h.degree()), h.leading().code, q);
}

long double rho_weight_first(const BasePoly& h1, std::uint32_t q) {
  require_prime(q);
  if (h1.is_zero()) return 1.0L;
  return single_weight(static_cast<unsigned>(h1.degree()) + 1, h1.leading().code, q);
}

long double rho_tuple(const HTuple& h, std::uint32_t q) {
  if (h.h.empty()) return 1.0L;
  long double w = rho_weight_first(h.h[0], q);
  for (std::size_t i = 1; i < h.h.size(); ++i) w *= rho_weight(h.h[i], q);
  return w;
}

WeightTable::WeightTable(std::uint32_t q, unsigned m) : q_(q), m_(m), table_(std::size_t{m} * q, 0.0L) {
  require_prime(q);
  for (unsigned r = 1; r <= m; ++r) {
    for (std::uint32_t k = 1; k < q; ++k) table_[(r - 1) * q + k] = single_weight(r, k, q);
  }
}

WeightedSum r_q(const FieldTower& tower, const AlphaVector& alpha, const Caps& caps, unsigned threads) {
  require_prime(tower.q());
  return sum_over_kernel(tower.base(), kernel_basis(tower, alpha), caps, threads);
}

WeightedSum r_q_matrices(const GeneratingMatrices& mats, const Caps& caps, unsigned threads) {
  require_prime(mats.field->q());
  return sum_over_kernel(*mats.field, kernel_basis(mats), caps, threads);
}

long double weight_bound_base(std::uint32_t q, unsigned m) {
  require_prime(q);
  const long double mm = m;
  if (q == 2) return mm / 2.0L + 1.0L;
  return (2.0L / kPi * std::log(static_cast<long double>(q)) + 0.4L) * mm + 1.0L;
}

WeightSumCheck weight_sum_bound(std::uint32_t q, unsigned m, unsigned v, const Caps& caps) {
  require_prime(q);
  if (m == 0 || v == 0) throw Error(ErrorKind::InvalidArgument, "weight_sum_bound needs m, v >= 1");
  const std::uint64_t count = checked_pow(q, m);
  require_within_cap(count, caps.kernel, "polynomial count q^m");
  const auto field = BaseField::prime(q);
  CompensatedSum single;
  CompensatedSum first;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<BaseElement> c(m + 1);
    std::uint64_t rest = code;
    for (unsigned j = 0; j < m; ++j) {
      c[j + 1] = {static_cast<std::uint32_t>(rest % q)};
      rest /= q;
    }
    const BasePoly h(c);                                  // h in H_{q,m}
    const BasePoly h1(std::vector<BaseElement>(c.begin() + 1, c.end()));  // h1 in H*_{q,m}
    single.add(rho_weight(h, q));
    first.add(rho_weight_first(h1, q));
  }
  WeightSumCheck out;
  out.single_sum = single.value();
  out.single_bound = weight_bound_base(q, m);
  out.tuple_sum = first.value() * std::pow(out.single_sum, static_cast<long double>(v - 1));
  out.tuple_bound = std::pow(out.single_bound, static_cast<long double>(v));
  return out;
}

long double average_bound(std::uint32_t q, unsigned m, unsigned s) {
  const std::uint64_t n = checked_pow(q, m);
  const long double base = weight_bound_base(q, m);
  return count_term(n, s) + static_cast<long double>(m) / static_cast<long double>(n) *
                                std::pow(base, static_cast<long double>(s));
}

long double disc_bound(unsigned s, std::uint32_t q, unsigned m, const WeightedSum& rq) {
  return count_term(checked_pow(q, m), s) + rq.value;
}

Rational star_discrepancy_exact(const NetPointSet& points, const StarOptions& options) {
  const std::size_t s = points.s;
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "empty point dimension");
  if (s > options.max_dim) {
    throw Error(ErrorKind::DimensionCap, "exact D* limited to s <= " + std::to_string(options.max_dim));
  }
  const std::uint64_t npts = points.size();
  if (npts == 0) throw Error(ErrorKind::InvalidArgument, "empty point set");
  const std::uint64_t den = points.den;
  // Work over the common denominator den^s; must fit comfortably in 128 bits.
  if (std::log2(static_cast<long double>(den)) * s + std::log2(static_cast<long double>(npts)) > 125.0L) {
    throw Error(ErrorKind::SizeCap, "den^s too large for exact D*");
  }

  std::vector<std::vector<std::uint64_t>> grid(s);
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < s; ++i) {
    auto& g = grid[i];
    g.reserve(npts + 1);
    for (std::uint64_t n = 0; n < npts; ++n) g.push_back(points.at(n, i));
    g.push_back(den);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    if (cells > options.cap / g.size() + 1) throw Error(ErrorKind::SizeCap, "D* grid too large");
    cells *= g.size();
  }
  require_within_cap(cells, options.cap, "D* grid cells");

  std::vector<std::uint64_t> stride(s, 1);
  for (std::size_t i = s - 1; i-- > 0;) stride[i] = stride[i + 1] * grid[i + 1].size();

  std::vector<std::uint64_t> closed(cells, 0);
  for (std::uint64_t n = 0; n < npts; ++n) {
    std::uint64_t flat = 0;
    for (std::size_t i = 0; i < s; ++i) {
      const auto pos = std::lower_bound(grid[i].begin(), grid[i].end(), points.at(n, i)) - grid[i].begin();
      flat += static_cast<std::uint64_t>(pos) * stride[i];
    }
    ++closed[flat];
  }
  // Inclusive prefix sums along each axis turn cell counts into closed-box counts.
  for (std::size_t i = 0; i < s; ++i) {
    const std::uint64_t len = grid[i].size();
    for (std::uint64_t f = 0; f < cells; ++f) {
      if ((f / stride[i]) % len != 0) closed[f] += closed[f - stride[i]];
    }
  }

  using i128 = wide_int;
  // |Z/N - vol| over the common denominator N * den^s.
  i128 den_s = 1;
  for (std::size_t i = 0; i < s; ++i) den_s *= static_cast<i128>(den);
  std::uint64_t diag = 0;
  for (std::size_t i = 0; i < s; ++i) diag += stride[i];

  i128 best = 0;
  std::vector<std::uint64_t> idx(s, 0);
  for (std::uint64_t f = 0; f < cells; ++f) {
    i128 vol = static_cast<i128>(npts);
    bool interior = true;
    for (std::size_t i = 0; i < s; ++i) {
      vol *= static_cast<i128>(grid[i][idx[i]]);
      interior = interior && idx[i] > 0;
    }
    const i128 closed_count = static_cast<i128>(closed[f]) * den_s;
    const i128 open_count = interior ? static_cast<i128>(closed[f - diag]) * den_s : 0;
    best = std::max({best, vol - open_count, closed_count - vol});
    for (std::size_t i = s; i-- > 0;) {
      if (++idx[i] < grid[i].size()) break;
      idx[i] = 0;
    }
  }
  return Rational(to_big(best), to_big(den_s * static_cast<i128>(npts)));
}

}  // namespace vnet
