#pragma once

// Deliberately naive reference implementations used only by tests. Nothing
// here calls into the library's arithmetic, so agreement is meaningful.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;

inline int mod(long long a, int p) {
  const long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Polynomials over F_p, constant term first.
inline Vec poly_mul(const Vec& a, const Vec& b, int p) {
  if (a.empty() || b.empty()) return {};
  Vec out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = mod(out[i + j] + a[i] * b[j], p);
  trim(out);
  return out;
}

inline int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (mod(static_cast<long long>(a) * x, p) == 1) return x;
  return 0;
}

inline Vec poly_rem(Vec a, const Vec& b, int p) {
  trim(a);
  const int lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const int c = mod(static_cast<long long>(a.back()) * lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = mod(a[shift + j] - c * b[j], p);
    trim(a);
  }
  return a;
}

// Irreducible iff no monic factor of degree 1..deg/2 divides it.
inline bool irreducible_by_trial(const Vec& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  for (int k = 1; 2 * k <= d; ++k) {
    const std::uint64_t count = ipow(p, k);
    for (std::uint64_t code = 0; code < count; ++code) {
      Vec g(k + 1, 0);
      std::uint64_t c = code;
      for (int j = 0; j < k; ++j, c /= p) g[j] = static_cast<int>(c % p);
      g[k] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// F_{p^m} = F_p[x]/(f) for prime p; elements are length-m digit vectors.
struct NaiveExt {
  int p;
  Vec f;  // monic, degree m
  unsigned m() const { return static_cast<unsigned>(f.size() - 1); }

  Vec reduce(Vec a) const {
    a = poly_rem(std::move(a), f, p);
    a.resize(m(), 0);
    return a;
  }
  Vec mul(const Vec& a, const Vec& b) const {
    Vec x = a, y = b;
    trim(x);
    trim(y);
    return reduce(poly_mul(x, y, p));
  }
  Vec add(const Vec& a, const Vec& b) const {
    Vec out(m());
    for (unsigned j = 0; j < m(); ++j) out[j] = mod(a[j] + b[j], p);
    return out;
  }
  Vec one() const {
    Vec out(m(), 0);
    out[0] = 1;
    return out;
  }
  Vec pow(const Vec& a, unsigned e) const {
    Vec r = one();
    for (unsigned i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  Vec decode(std::uint64_t code) const {
    Vec out(m());
    for (unsigned j = 0; j < m(); ++j, code /= p) out[j] = static_cast<int>(code % p);
    return out;
  }
  std::uint64_t encode(const Vec& a) const {
    std::uint64_t code = 0;
    for (unsigned j = m(); j-- > 0;) code = code * p + a[j];
    return code;
  }
  // h(alpha) for h with coefficients in F_p
  Vec eval(const Vec& h, const Vec& alpha) const {
    Vec acc(m(), 0);
    for (std::size_t k = h.size(); k-- > 0;) {
      acc = mul(acc, alpha);
      acc[0] = mod(acc[0] + h[k], p);
    }
    return acc;
  }
};

// Rows of the s generating matrices of the Vandermonde net, computed from
// powers in the naive field: result[i][j] is row j of matrix i.
inline std::vector<std::vector<Vec>> vandermonde_rows(const NaiveExt& F, const std::vector<Vec>& alpha) {
  std::vector<std::vector<Vec>> out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    std::vector<Vec> rows;
    for (unsigned j = 0; j < F.m(); ++j) rows.push_back(F.pow(alpha[i], i == 0 ? j : j + 1));
    out.push_back(rows);
  }
  return out;
}

// Rank over F_p by brute-force span counting (tiny sizes only).
inline unsigned rank_by_span(const std::vector<Vec>& rows, int p) {
  if (rows.empty()) return 0;
  const std::size_t dim = rows[0].size();
  const std::uint64_t combos = ipow(p, static_cast<unsigned>(rows.size()));
  std::vector<std::uint64_t> seen;
  for (std::uint64_t c = 0; c < combos; ++c) {
    Vec v(dim, 0);
    std::uint64_t code = c;
    for (const auto& r : rows) {
      const int k = static_cast<int>(code % p);
      code /= p;
      for (std::size_t t = 0; t < dim; ++t) v[t] = mod(v[t] + k * r[t], p);
    }
    std::uint64_t key = 0;
    for (int x : v) key = key * p + x;
    seen.push_back(key);
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  unsigned r = 0;
  for (std::uint64_t size = 1; size < seen.size(); size *= p) ++r;
  return r;
}

inline void compositions(unsigned total, unsigned parts, std::vector<unsigned>& cur,
                         std::vector<std::vector<unsigned>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned d = 0; d <= total; ++d) {
    cur.push_back(d);
    compositions(total - d, parts - 1, cur, out);
    cur.pop_back();
  }
}

// t straight from the definition: smallest t with every composition of m-t
// giving independent row prefixes.
inline unsigned t_by_definition(const std::vector<std::vector<Vec>>& mats, int p) {
  const unsigned m = static_cast<unsigned>(mats[0].size());
  for (unsigned t = 0; t <= m; ++t) {
    std::vector<std::vector<unsigned>> comps;
    std::vector<unsigned> cur;
    compositions(m - t, static_cast<unsigned>(mats.size()), cur, comps);
    bool ok = true;
    for (const auto& c : comps) {
      std::vector<Vec> rows;
      for (std::size_t i = 0; i < mats.size(); ++i)
        for (unsigned j = 0; j < c[i]; ++j) rows.push_back(mats[i][j]);
      if (rank_by_span(rows, p) != rows.size()) {
        ok = false;
        break;
      }
    }
    if (ok) return t;
  }
  return m;
}

inline int degree(const Vec& h) {
  for (std::size_t k = h.size(); k-- > 0;)
    if (h[k] != 0) return static_cast<int>(k);
  return -1;
}

// rho_q for h with h(0) = 0 (or x * h_1), prime q.
inline long double rho_weight(const Vec& h, int q) {
  const int r = degree(h);
  if (r < 0) return 1.0L;
  return 1.0L / (std::pow(static_cast<long double>(q), r) *
                 std::sin(std::numbers::pi_v<long double> * h[r] / q));
}

struct DualScan {
  int rho = 0;
  long double rq = 0;
  std::uint64_t count = 0;
};

// Walks all (h_1, ..., h_s) with h_1 of degree < m and h_i (i >= 2) of
// degree <= m vanishing at 0, keeping the nonzero ones that annihilate alpha.
inline DualScan scan_dual(const NaiveExt& F, const std::vector<Vec>& alpha) {
  const unsigned m = F.m();
  const std::size_t s = alpha.size();
  const std::uint64_t per = ipow(F.p, m);
  const std::uint64_t total = ipow(per, static_cast<unsigned>(s));
  DualScan out{static_cast<int>(m), 0.0L, 0};
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    Vec sum(m, 0);
    int wdeg = 0;
    long double w = 1.0L;
    for (std::size_t i = 0; i < s; ++i) {
      const Vec digits = F.decode(c % per);
      c /= per;
      Vec h(m + 1, 0);
      for (unsigned j = 0; j < m; ++j) h[i == 0 ? j : j + 1] = digits[j];
      sum = F.add(sum, F.eval(h, alpha[i]));
      if (i == 0) {
        wdeg += degree(h);
        Vec xh(m + 1, 0);
        for (unsigned j = 0; j < m; ++j) xh[j + 1] = h[j];
        w *= rho_weight(xh, F.p);
      } else {
        wdeg += std::max(degree(h), 0);
        w *= rho_weight(h, F.p);
      }
    }
    bool zero = true;
    for (int v : sum) zero = zero && v == 0;
    if (!zero) continue;
    ++out.count;
    out.rq += w;
    out.rho = std::min(out.rho, wdeg);
  }
  return out;
}

}  // namespace oracle
