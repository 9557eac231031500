#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "vnet/error.hpp"
#include "vnet/field_tower.hpp"
#include "vnet/linalg.hpp"

namespace vnet {

/// The s-tuple (alpha_1, ..., alpha_s) in F_{q^m}^s defining a Vandermonde net.
struct AlphaVector {
  std::vector<ExtElement> alphas;

  std::size_t size() const noexcept { return alphas.size(); }
  const ExtElement& operator[](std::size_t i) const noexcept { return alphas[i]; }
  friend bool operator==(const AlphaVector&, const AlphaVector&) = default;
};

/// s x m matrix over F_{q^m}; entry (i, j) is gamma_{j+1}^{(i+1)}.
class GammaMatrix {
 public:
  GammaMatrix(std::size_t s, unsigned m, std::vector<ExtElement> entries);

  std::size_t s() const noexcept { return s_; }
  unsigned m() const noexcept { return m_; }
  const ExtElement& at(std::size_t i, std::size_t j) const noexcept { return entries_[i * m_ + j]; }
  friend bool operator==(const GammaMatrix&, const GammaMatrix&) = default;

 private:
  std::size_t s_;
  unsigned m_;
  std::vector<ExtElement> entries_;
};

/// The s generating matrices C^{(1)}, ..., C^{(s)}, each m x m over F_q.
struct GeneratingMatrices {
  std::shared_ptr<const BaseField> field;
  unsigned m = 0;
  std::vector<Matrix> mats;

  std::size_t s() const noexcept { return mats.size(); }
};

/// q^m points in [0,1)^s held as exact numerators over den = q^m.
struct NetPointSet {
  std::uint32_t q = 0;
  unsigned m = 0;
  std::size_t s = 0;
  std::uint64_t den = 0;
  std::vector<std::uint64_t> numerators;  // row-major, one row of s per point

  std::uint64_t size() const noexcept { return s == 0 ? 0 : numerators.size() / s; }
  std::uint64_t at(std::uint64_t n, std::size_t i) const noexcept { return numerators[n * s + i]; }
  friend bool operator==(const NetPointSet&, const NetPointSet&) = default;
};

/// Row 1 is (1, a_1, ..., a_1^{m-1}); row i >= 2 is (a_i, ..., a_i^m), with 0^0 = 1.
GammaMatrix vandermonde_gamma(const FieldTower& tower, const AlphaVector& alpha);

/// Row j of C^{(i)} is the coordinate vector of gamma_j^{(i)}.
GeneratingMatrices expand(const FieldTower& tower, const GammaMatrix& gamma);

/// Inverse of expand: rows read back as elements of F_{q^m}.
GammaMatrix reinterpret(const GeneratingMatrices& mats);

/// Generating matrices of the Vandermonde net for alpha.
GeneratingMatrices vandermonde_matrices(const FieldTower& tower, const AlphaVector& alpha);

/// For each b in F_q^m in canonical order (b_1 least significant), the point
/// (Psi_m(C^{(1)} b), ..., Psi_m(C^{(s)} b)). Throws SizeCap when q^m > cap.
NetPointSet generate_points(const GeneratingMatrices& mats, std::uint64_t cap = Caps{}.points);

/// Hyperplane net matrix gamma_j^{(i)} = alpha_i * omega_j; throws AllZero if
/// every alpha_i is zero.
GammaMatrix hyperplane_gamma(const FieldTower& tower, const AlphaVector& alpha,
                             std::span<const ExtElement> basis);

/// Vandermonde-type matrices over the residue ring F_q[x]/(f) for any monic f
/// of degree m (reducible allowed): row j of C^{(1)} holds g_1^{j-1} mod f and
/// row j of C^{(i)}, i >= 2, holds g_i^j mod f. Requires deg(g_i) < m.
GeneratingMatrices general_vandermonde(std::shared_ptr<const BaseField> field, const BasePoly& f,
                                       std::span<const BasePoly> g);

/// CSV with header `# q=<q> m=<m> s=<s> den=<q^m>` and one row of s numerators
/// per point; `as_float` writes decimal coordinates instead.
void write_points_csv(std::ostream& out, const NetPointSet& points, bool as_float = false);
/// Reads the integer form written by write_points_csv.
NetPointSet read_points_csv(std::istream& in);

}  // namespace vnet
