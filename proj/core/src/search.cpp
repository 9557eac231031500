#include "vnet/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "vnet/combination.hpp"
#include "vnet/parallel.hpp"

namespace vnet {

namespace {

constexpr long double kTieTolerance = 1e-12L;

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  try {
    return checked_pow(base, static_cast<unsigned>(exp));
  } catch (const Error&) {
    return std::numeric_limits<std::uint64_t>::max();
  }
}

std::vector<std::vector<BaseElement>> power_coords(const FieldTower& tower, const ExtElement& a,
                                                   unsigned first_exp) {
  std::vector<std::vector<BaseElement>> out;
  ExtElement power = tower.pow(a, first_exp);
  for (unsigned j = 0; j < tower.m(); ++j) {
    out.push_back(power.coeffs);
    power = tower.mul(power, a);
  }
  return out;
}

// Distribution of sum_i h_i(alpha_i) over F_{q^m}, weighted by
// rho_q^{(d)}(h), for the current prefix. Bins are element encodings.
class PrefixDistribution {
 public:
  PrefixDistribution(const FieldTower& tower, const SearchOptions& options)
      : tower_(tower), options_(options), weights_(tower.q(), tower.m()), size_(tower.order()) {
    if (!tower.base().is_prime_field()) {
      throw Error(ErrorKind::NotPrime, "CBC search needs prime q, got " + std::to_string(tower.q()));
    }
    require_within_cap(size_, options.caps.points, "candidate count q^m");
    const std::uint64_t work = size_ > std::numeric_limits<std::uint64_t>::max() / size_
                                   ? std::numeric_limits<std::uint64_t>::max()
                                   : size_ * size_;
    require_within_cap(work, options.caps.kernel, "CBC step work q^{2m}");
  }

  /// Starts the prefix with alpha_1; returns R_q((alpha_1)).
  long double seed(const ExtElement& alpha1) {
    dist_.assign(size_, 0.0L);
    CompensatedSum rq;
    std::vector<CompensatedSum> bins(size_);
    walk_component(alpha1, 0, [&](std::uint64_t index, long double w, std::uint64_t bin) {
      bins[bin].add(w);
      if (bin == 0 && index != 0) rq.add(w);
    });
    for (std::uint64_t v = 0; v < size_; ++v) dist_[v] = bins[v].value();
    prefix_len_ = 1;
    return rq.value();
  }

  /// theta(beta) = sum_{h != 0 in H} rho(h) dist[-h(beta)].
  long double theta(const ExtElement& beta) const {
    CompensatedSum acc;
    walk_component(beta, 1, [&](std::uint64_t index, long double w, std::uint64_t bin) {
      if (index != 0) acc.add(w * dist_[negate(bin)]);
    });
    return acc.value();
  }

  std::vector<long double> all_thetas() const {
    std::vector<long double> out(size_);
    const auto chunks = chunk_ranges(size_);
    parallel_for(chunks.size(), options_.threads, [&](std::size_t c) {
      for (std::uint64_t b = chunks[c].first; b < chunks[c].second; ++b) out[b] = theta(tower_.decode(b));
    });
    return out;
  }

  /// Appends alpha_d: dist <- dist (+) component distribution of alpha_d.
  void append(const ExtElement& alpha) {
    std::vector<CompensatedSum> bins(size_);
    walk_component(alpha, 1, [&](std::uint64_t, long double w, std::uint64_t bin) { bins[bin].add(w); });
    std::vector<long double> comp(size_);
    for (std::uint64_t v = 0; v < size_; ++v) comp[v] = bins[v].value();

    std::vector<long double> next(size_);
    const auto chunks = chunk_ranges(size_);
    parallel_for(chunks.size(), options_.threads, [&](std::size_t c) {
      for (std::uint64_t v = chunks[c].first; v < chunks[c].second; ++v) {
        CompensatedSum acc;
        for (std::uint64_t u = 0; u < size_; ++u) {
          if (dist_[u] != 0.0L) acc.add(dist_[u] * comp[subtract(v, u)]);
        }
        next[v] = acc.value();
      }
    });
    dist_ = std::move(next);
    ++prefix_len_;
  }

  std::size_t prefix_len() const noexcept { return prefix_len_; }

 private:
  // fn(poly index, weight, bin of h(alpha)) over all h with coefficients on
  // alpha^{first_exp}, ..., alpha^{first_exp + m - 1}.
  template <class Fn>
  void walk_component(const ExtElement& alpha, unsigned first_exp, Fn&& fn) const {
    CombinationWalker walker(tower_.base(), power_coords(tower_, alpha, first_exp), tower_.m());
    walker.walk(0, size_, [&](std::uint64_t index, std::span<const BaseElement> coeffs,
                              std::span<const BaseElement> value) {
      fn(index, weights_.component(coeffs), encode(value));
    });
  }

  std::uint64_t encode(std::span<const BaseElement> v) const {
    std::uint64_t code = 0;
    for (std::size_t k = v.size(); k-- > 0;) code = code * tower_.q() + v[k].code;
    return code;
  }
  std::uint64_t negate(std::uint64_t a) const {
    const std::uint64_t q = tower_.q();
    std::uint64_t out = 0, scale = 1;
    for (unsigned k = 0; k < tower_.m(); ++k, a /= q, scale *= q) out += ((q - a % q) % q) * scale;
    return out;
  }
  std::uint64_t subtract(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t q = tower_.q();
    std::uint64_t out = 0, scale = 1;
    for (unsigned k = 0; k < tower_.m(); ++k, a /= q, b /= q, scale *= q) {
      out += ((a % q + q - b % q) % q) * scale;
    }
    return out;
  }

  const FieldTower& tower_;
  const SearchOptions& options_;
  WeightTable weights_;
  std::uint64_t size_;
  std::vector<long double> dist_;
  std::size_t prefix_len_ = 0;
};

void record(SearchResult& result, const FieldTower& tower, long double rq) {
  const unsigned d = static_cast<unsigned>(result.per_dim_rq.size() + 1);
  const std::uint64_t terms = saturating_pow(tower.q(), std::uint64_t{tower.m()} * (d - 1));
  result.per_dim_rq.push_back({rq, terms == 0 ? 0 : terms - 1, false});
  result.bound_ok.push_back(within_bound(rq, cbc_bound(tower.q(), tower.m(), d)));
}

void extend(SearchResult& result, PrefixDistribution& dist, const FieldTower& tower, unsigned s) {
  long double rq = result.per_dim_rq.back().value;
  while (result.alpha.size() < s) {
    const std::vector<long double> thetas = dist.all_thetas();
    const long double best = *std::min_element(thetas.begin(), thetas.end());
    const long double slack = kTieTolerance * std::max(1e-300L, best < 0 ? -best : best);
    std::uint64_t winner = thetas.size();
    for (std::uint64_t b = 0; b < thetas.size(); ++b) {
      if (thetas[b] <= best + slack) {
        if (winner == thetas.size()) {
          winner = b;
        } else {
          ++result.ties_broken;
        }
      }
    }
    const ExtElement chosen = tower.decode(winner);
    rq += thetas[winner];
    result.alpha.alphas.push_back(chosen);
    dist.append(chosen);
    record(result, tower, rq);
  }
}

}  // namespace

const char* to_string(Seed seed) noexcept { return seed == Seed::Explicit ? "explicit" : "irreducible"; }

AlphaVector explicit_alpha(const FieldTower& tower, unsigned s) {
  if (tower.m() < 2) throw Error(ErrorKind::DegreeTooSmall, "explicit construction needs m >= 2");
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "s must be >= 1");
  if (s > tower.q() + 1) {
    throw Error(ErrorKind::DimensionTooLarge, "a (0,m,s)-net needs s <= q + 1 = " + std::to_string(tower.q() + 1));
  }
  const ExtElement theta = tower.generator();
  AlphaVector alpha{{theta}};
  for (unsigned i = 2; i <= s; ++i) {
    const BaseElement c{i - 2};
    alpha.alphas.push_back(tower.inv(tower.add(theta, tower.from_base(c))));
  }
  return alpha;
}

long double cbc_bound(std::uint32_t q, unsigned m, unsigned d) {
  const long double n = static_cast<long double>(checked_pow(q, m));
  return static_cast<long double>(m) / n * std::pow(weight_bound_base(q, m), static_cast<long double>(d));
}

SearchResult cbc_search(const FieldTower& tower, unsigned s, const SearchOptions& options) {
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "s must be >= 1");
  PrefixDistribution dist(tower, options);
  SearchResult result;
  result.seed = Seed::Irreducible;
  const ExtElement theta = tower.generator();
  result.alpha.alphas.push_back(theta);
  record(result, tower, dist.seed(theta));
  extend(result, dist, tower, s);
  return result;
}

SearchResult cbc_from_explicit(const FieldTower& tower, unsigned s, const SearchOptions& options) {
  if (!tower.base().is_prime_field()) {
    throw Error(ErrorKind::NotPrime, "CBC search needs prime q, got " + std::to_string(tower.q()));
  }
  if (s <= tower.q() + 1) {
    throw Error(ErrorKind::DimensionTooSmall, "explicit seed needs s > q + 1 = " + std::to_string(tower.q() + 1));
  }
  const AlphaVector seed = explicit_alpha(tower, tower.q() + 1);
  PrefixDistribution dist(tower, options);
  SearchResult result;
  result.seed = Seed::Explicit;
  result.alpha.alphas.push_back(seed[0]);
  long double rq = dist.seed(seed[0]);
  record(result, tower, rq);
  for (std::size_t i = 1; i < seed.size(); ++i) {
    rq += dist.theta(seed[i]);
    result.alpha.alphas.push_back(seed[i]);
    dist.append(seed[i]);
    record(result, tower, rq);
  }
  extend(result, dist, tower, s);
  return result;
}

std::vector<long double> cbc_candidate_scores(const FieldTower& tower, const AlphaVector& prefix,
                                              const SearchOptions& options) {
  if (prefix.size() == 0) throw Error(ErrorKind::InvalidArgument, "prefix must be non-empty");
  PrefixDistribution dist(tower, options);
  dist.seed(prefix[0]);
  for (std::size_t i = 1; i < prefix.size(); ++i) dist.append(prefix[i]);
  return dist.all_thetas();
}

}  // namespace vnet
