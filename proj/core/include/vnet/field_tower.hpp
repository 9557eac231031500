#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "vnet/base_field.hpp"
#include "vnet/poly.hpp"

namespace vnet {

/// An element of F_{q^m}: its coordinates in the polynomial basis
/// 1, x, ..., x^{m-1} over F_q. The coordinate vector is also the image of the
/// element under the fixed isomorphism F_{q^m} -> F_q^m.
struct ExtElement {
  std::vector<BaseElement> coeffs;

  bool is_zero() const noexcept {
    for (auto c : coeffs) {
      if (c.code != 0) return false;
    }
    return true;
  }
  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

/// F_p < F_q = F_p[y]/(g) < F_{q^m} = F_q[x]/(f). Immutable.
class FieldTower {
 public:
  /// Validates that `modulus` is monic of degree >= 1 and irreducible over F_q.
  FieldTower(std::shared_ptr<const BaseField> base, BasePoly modulus);

  /// q = p^e with default moduli g and f (lex-smallest irreducibles).
  static FieldTower standard(std::uint32_t q, unsigned m);

  const BaseField& base() const noexcept { return *base_; }
  const std::shared_ptr<const BaseField>& base_ptr() const noexcept { return base_; }
  std::uint32_t q() const noexcept { return base_->q(); }
  unsigned m() const noexcept { return m_; }
  const BasePoly& modulus() const noexcept { return modulus_; }
  /// q^m; throws SizeCap when it does not fit in 64 bits.
  std::uint64_t order() const { return order_; }

  ExtElement zero() const { return {std::vector<BaseElement>(m_)}; }
  ExtElement one() const;
  /// The residue class of x, a root of the modulus.
  ExtElement generator() const;
  ExtElement from_base(BaseElement c) const;
  /// Residue of h modulo f.
  ExtElement from_poly(const BasePoly& h) const;
  BasePoly to_poly(const ExtElement& a) const;

  ExtElement add(const ExtElement& a, const ExtElement& b) const;
  ExtElement sub(const ExtElement& a, const ExtElement& b) const;
  ExtElement neg(const ExtElement& a) const;
  ExtElement scale(const ExtElement& a, BaseElement c) const;
  ExtElement mul(const ExtElement& a, const ExtElement& b) const;
  ExtElement inv(const ExtElement& a) const;
  ExtElement div(const ExtElement& a, const ExtElement& b) const { return mul(a, inv(b)); }
  ExtElement pow(ExtElement a, std::uint64_t exp) const;

  /// sum_j code(c_j) q^j.
  std::uint64_t encode(const ExtElement& a) const;
  ExtElement decode(std::uint64_t code) const;

  /// Throws MixedFieldLevels unless `a` is a canonical element of this field.
  void check(const ExtElement& a) const;

 private:
  std::shared_ptr<const BaseField> base_;
  BasePoly modulus_;
  unsigned m_;
  std::uint64_t order_ = 0;
};

/// Horner evaluation of h (coefficients in F_q) at alpha in F_{q^m}.
ExtElement eval_poly(const FieldTower& tower, const BasePoly& h, const ExtElement& alpha);

/// Numerator of Psi_m(v) = sum_j psi(v_j) q^{-j} over the denominator q^{|v|};
/// psi is the integer encoding of F_q.
std::uint64_t psi_numerator(const BaseField& f, std::span<const BaseElement> v);

}  // namespace vnet
