#include "vnet/quality.hpp"

#include <algorithm>
#include <functional>

#include "vnet/parallel.hpp"

namespace vnet {

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

namespace {

BigInt big_pow(std::uint64_t base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

// All compositions of k = m - t for one level, depth first in lex order.
class LevelScan {
 public:
  LevelScan(const GeneratingMatrices& mats) : mats_(mats), m_(mats.m), s_(mats.s()), current_(s_) {}

  bool passes(unsigned k) {
    failure_.reset();
    std::fill(current_.begin(), current_.end(), 0U);
    return dfs(0, k, EchelonBasis(*mats_.field, m_));
  }
  const std::optional<Composition>& failure() const { return failure_; }

 private:
  unsigned capacity_after(std::size_t i) const { return m_ * static_cast<unsigned>(s_ - 1 - i); }

  void record_failure(std::size_t i, unsigned d, unsigned remaining) {
    current_[i] = d;
    unsigned rest = remaining - d;
    for (std::size_t j = i + 1; j < s_; ++j) {
      const unsigned after = capacity_after(j);
      current_[j] = rest > after ? rest - after : 0;
      rest -= current_[j];
    }
    failure_ = current_;
  }

  bool dfs(std::size_t i, unsigned remaining, const EchelonBasis& basis) {
    const Matrix& c = mats_.mats[i];
    EchelonBasis b = basis;
    if (i + 1 == s_) {
      for (unsigned j = 0; j < remaining; ++j) {
        if (!b.insert(c.row(j))) {
          record_failure(i, remaining, remaining);
          return false;
        }
      }
      return true;
    }
    const unsigned max_d = std::min(m_, remaining);
    for (unsigned d = 0; d <= max_d; ++d) {
      if (d > 0 && !b.insert(c.row(d - 1))) {
        // Every d' >= d fails here; report the first one that completes.
        for (unsigned dd = d; dd <= max_d; ++dd) {
          if (remaining - dd <= capacity_after(i)) {
            record_failure(i, dd, remaining);
            return false;
          }
        }
        return true;
      }
      if (remaining - d <= capacity_after(i)) {
        current_[i] = d;
        if (!dfs(i + 1, remaining - d, b)) return false;
      }
    }
    return true;
  }

  const GeneratingMatrices& mats_;
  unsigned m_;
  std::size_t s_;
  Composition current_;
  std::optional<Composition> failure_;
};

int slot_weighted_degree(std::span<const BaseElement> slots, std::size_t s, unsigned m) {
  int total = static_cast<int>(shifted_degree(slots.subspan(0, m))) - 1;
  for (std::size_t i = 1; i < s; ++i) total += static_cast<int>(shifted_degree(slots.subspan(i * m, m)));
  return total;
}

}  // namespace

TValue t_value(const GeneratingMatrices& mats) {
  if (mats.s() == 0) throw Error(ErrorKind::InvalidArgument, "need at least one generating matrix");
  for (const auto& c : mats.mats) {
    if (c.rows() != mats.m || c.cols() != mats.m) {
      throw Error(ErrorKind::InvalidArgument, "generating matrices must be m x m");
    }
  }
  LevelScan scan(mats);
  std::optional<Composition> last_failure;
  for (unsigned k = mats.m;; --k) {
    if (scan.passes(k)) return {mats.m - k, last_failure};
    last_failure = scan.failure();
    if (k == 0) break;
  }
  return {mats.m, last_failure};  // unreachable: k = 0 always passes
}

RhoValue rho_direct(const FieldTower& tower, const AlphaVector& alpha, const Caps& caps, unsigned threads) {
  const KernelBasis kb = kernel_basis(tower, alpha);
  const unsigned m = tower.m();
  if (kb.dimension() == 0) return {static_cast<int>(m), std::nullopt};
  const KernelWalk walk = kernel_walk(tower.base(), kb, caps.kernel);

  struct Best {
    int degree = 0;
    std::uint64_t index = 0;
    std::vector<BaseElement> slots;
    bool found = false;
  };
  std::vector<Best> best(walk.chunks.size());
  parallel_for(walk.chunks.size(), threads, [&](std::size_t c) {
    Best& b = best[c];
    walk.walker.walk(walk.chunks[c].first, walk.chunks[c].second,
                     [&](std::uint64_t index, std::span<const BaseElement>, std::span<const BaseElement> v) {
                       if (index == 0) return;
                       const int deg = slot_weighted_degree(v, kb.s, m);
                       if (!b.found || deg < b.degree) {
                         b = {deg, index, {v.begin(), v.end()}, true};
                       }
                     });
  });
  const Best* winner = nullptr;
  for (const auto& b : best) {
    if (b.found && (!winner || b.degree < winner->degree)) winner = &b;
  }
  return {winner->degree, to_htuple(winner->slots, kb.s, m)};
}

MeritReport merit_report(const FieldTower& tower, const AlphaVector& alpha, const Caps& caps, unsigned threads) {
  return {tower.m(), t_value(vandermonde_matrices(tower, alpha)), rho_direct(tower, alpha, caps, threads)};
}

BigInt count_A(std::uint64_t q, unsigned l, long long n) {
  if (l == 0) throw Error(ErrorKind::InvalidArgument, "count_A needs l >= 1");
  const long long excess = n - static_cast<long long>(l);
  if (excess < 0) return 0;
  return binomial(n - 1, excess) * big_pow(q - 1, l) * big_pow(q, static_cast<unsigned>(excess));
}

BigInt delta_q(std::uint64_t q, unsigned s, unsigned sigma) {
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "delta_q needs s >= 1");
  BigInt total = 0;
  for (unsigned d = 0; d < s; ++d) {
    const long long width = static_cast<long long>(s - d);
    const long long upper = static_cast<long long>(sigma) - width;
    BigInt inner = 0;
    BigInt qn = 1;
    for (long long n = 0; n <= upper; ++n) {
      inner += binomial(n + width - 1, n) * ((n + width) / width) * qn;
      qn *= q;
    }
    total += binomial(s, d) * big_pow(q - 1, static_cast<unsigned>(width)) * inner;
  }
  return total;
}

unsigned existence_sigma(std::uint64_t q, unsigned s, unsigned m) {
  const BigInt points = big_pow(q, m);
  for (unsigned sigma = m;; --sigma) {
    if (delta_q(q, s, sigma) < points) return sigma;
    if (sigma == 0) break;
  }
  return 0;
}

long long corollary_floor(std::uint64_t q, unsigned s, unsigned m) {
  if (q < 2 || m == 0) throw Error(ErrorKind::InvalidArgument, "corollary_floor needs q >= 2, m >= 1");
  // floor(m - 3 - s log_q m) = m - 3 - ceil(log_q m^s)
  const BigInt target = big_pow(m, s);
  long long e = 0;
  for (BigInt power = 1; power < target; power *= q) ++e;
  return static_cast<long long>(m) - 3 - e;
}

unsigned corollary_guarantee(std::uint64_t q, unsigned s, unsigned m) {
  if (s == 1) return m;
  return static_cast<unsigned>(std::max<long long>(0, corollary_floor(q, s, m)));
}

bool equidist_check(const NetPointSet& points, unsigned t, const Caps& caps) {
  if (t > points.m) throw Error(ErrorKind::InvalidArgument, "t must be <= m");
  const unsigned k = points.m - t;
  const std::uint64_t q = points.q;
  const std::uint64_t bins = checked_pow(q, k);
  require_within_cap(bins, caps.intervals, "elementary interval count q^{m-t}");
  const std::uint64_t expected = checked_pow(q, t);
  if (points.size() != points.den) return false;

  std::vector<std::uint64_t> qpow(points.m + 1, 1);
  for (unsigned j = 1; j <= points.m; ++j) qpow[j] = qpow[j - 1] * q;

  std::vector<std::uint64_t> counts(bins);
  Composition d(points.s, 0);
  std::function<bool(std::size_t, unsigned)> visit = [&](std::size_t i, unsigned remaining) -> bool {
    if (i + 1 == points.s) {
      if (remaining > points.m) return true;
      d[i] = remaining;
      std::fill(counts.begin(), counts.end(), 0);
      for (std::uint64_t n = 0; n < points.size(); ++n) {
        std::uint64_t index = 0;
        for (std::size_t c = 0; c < points.s; ++c) {
          index = index * qpow[d[c]] + points.at(n, c) / qpow[points.m - d[c]];
        }
        ++counts[index];
      }
      return std::all_of(counts.begin(), counts.end(), [&](std::uint64_t c) { return c == expected; });
    }
    for (unsigned di = 0; di <= std::min(points.m, remaining); ++di) {
      d[i] = di;
      if (!visit(i + 1, remaining - di)) return false;
    }
    return true;
  };
  return visit(0, k);
}

}  // namespace vnet
