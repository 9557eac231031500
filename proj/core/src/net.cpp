#include "vnet/net.hpp"

#include <string>

#include "vnet/combination.hpp"

namespace vnet {

GammaMatrix::GammaMatrix(std::size_t s, unsigned m, std::vector<ExtElement> entries)
    : s_(s), m_(m), entries_(std::move(entries)) {
  if (entries_.size() != s_ * m_) throw Error(ErrorKind::InvalidArgument, "gamma entries != s*m");
}

GammaMatrix vandermonde_gamma(const FieldTower& tower, const AlphaVector& alpha) {
  if (alpha.size() == 0) throw Error(ErrorKind::InvalidArgument, "alpha must have s >= 1 components");
  const unsigned m = tower.m();
  std::vector<ExtElement> entries;
  entries.reserve(alpha.size() * m);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    tower.check(alpha[i]);
    ExtElement power = i == 0 ? tower.one() : alpha[i];
    for (unsigned j = 0; j < m; ++j) {
      entries.push_back(power);
      power = tower.mul(power, alpha[i]);
    }
  }
  return GammaMatrix(alpha.size(), m, std::move(entries));
}

GeneratingMatrices expand(const FieldTower& tower, const GammaMatrix& gamma) {
  if (gamma.m() != tower.m()) throw Error(ErrorKind::MixedFieldLevels, "gamma width != field degree");
  GeneratingMatrices out{tower.base_ptr(), gamma.m(), {}};
  for (std::size_t i = 0; i < gamma.s(); ++i) {
    Matrix c(gamma.m(), gamma.m());
    for (unsigned j = 0; j < gamma.m(); ++j) {
      const ExtElement& g = gamma.at(i, j);
      tower.check(g);
      for (unsigned k = 0; k < gamma.m(); ++k) c(j, k) = g.coeffs[k];
    }
    out.mats.push_back(std::move(c));
  }
  return out;
}

GammaMatrix reinterpret(const GeneratingMatrices& mats) {
  std::vector<ExtElement> entries;
  for (const auto& c : mats.mats) {
    for (unsigned j = 0; j < mats.m; ++j) {
      const auto row = c.row(j);
      entries.push_back(ExtElement{{row.begin(), row.end()}});
    }
  }
  return GammaMatrix(mats.s(), mats.m, std::move(entries));
}

GeneratingMatrices vandermonde_matrices(const FieldTower& tower, const AlphaVector& alpha) {
  return expand(tower, vandermonde_gamma(tower, alpha));
}

NetPointSet generate_points(const GeneratingMatrices& mats, std::uint64_t cap) {
  const BaseField& f = *mats.field;
  const unsigned m = mats.m;
  const std::size_t s = mats.s();
  const std::uint64_t n = checked_pow(f.q(), m);
  require_within_cap(n, cap, "point count q^m");

  // C^{(i)} b for all i at once: column k of the stacked (s*m) x m matrix is
  // the generator for digit b_k.
  std::vector<std::vector<BaseElement>> columns(m, std::vector<BaseElement>(s * m));
  for (std::size_t i = 0; i < s; ++i) {
    for (unsigned j = 0; j < m; ++j) {
      for (unsigned k = 0; k < m; ++k) columns[k][i * m + j] = mats.mats[i](j, k);
    }
  }
  CombinationWalker walker(f, std::move(columns), s * m);
  NetPointSet out{f.q(), m, s, n, std::vector<std::uint64_t>(n * s)};
  walker.walk(0, n, [&](std::uint64_t index, std::span<const BaseElement>, std::span<const BaseElement> y) {
    for (std::size_t i = 0; i < s; ++i) out.numerators[index * s + i] = psi_numerator(f, y.subspan(i * m, m));
  });
  return out;
}

GammaMatrix hyperplane_gamma(const FieldTower& tower, const AlphaVector& alpha,
                             std::span<const ExtElement> basis) {
  if (basis.size() != tower.m()) throw Error(ErrorKind::InvalidArgument, "basis must have m elements");
  bool any = false;
  for (const auto& a : alpha.alphas) any = any || !a.is_zero();
  if (!any) throw Error(ErrorKind::AllZero, "hyperplane net needs some alpha_i != 0");
  std::vector<ExtElement> entries;
  for (const auto& a : alpha.alphas) {
    for (const auto& w : basis) entries.push_back(tower.mul(a, w));
  }
  return GammaMatrix(alpha.size(), tower.m(), std::move(entries));
}

GeneratingMatrices general_vandermonde(std::shared_ptr<const BaseField> field, const BasePoly& f,
                                       std::span<const BasePoly> g) {
  if (f.degree_star() < 1 || !f.is_monic()) {
    throw Error(ErrorKind::DegreeViolation, "modulus must be monic of degree >= 1");
  }
  if (g.empty()) throw Error(ErrorKind::InvalidArgument, "need s >= 1 polynomials g_i");
  const unsigned m = static_cast<unsigned>(f.degree());
  const BaseField& fld = *field;
  GeneratingMatrices out{field, m, {}};
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].degree_star() >= static_cast<int>(m)) {
      throw Error(ErrorKind::DegreeViolation, "g_" + std::to_string(i + 1) + " must have degree < m");
    }
    Matrix c(m, m);
    BasePoly power = i == 0 ? mod(fld, BasePoly::constant(fld.one()), f) : g[i];
    for (unsigned j = 0; j < m; ++j) {
      for (unsigned k = 0; k < m; ++k) c(j, k) = power.coeff(k);
      power = mod(fld, mul(fld, power, g[i]), f);
    }
    out.mats.push_back(std::move(c));
  }
  return out;
}

}  // namespace vnet
