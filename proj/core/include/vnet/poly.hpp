#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vnet/base_field.hpp"

namespace vnet {

/// A polynomial over F_q, coefficients constant term first. The stored vector
/// never has a trailing zero, so the zero polynomial is empty.
class BasePoly {
 public:
  BasePoly() = default;
  explicit BasePoly(std::vector<BaseElement> coeffs);

  static BasePoly constant(BaseElement c) { return BasePoly({c}); }
  static BasePoly monomial(BaseElement c, std::size_t k);
  /// The polynomial x.
  static BasePoly x() { return monomial({1}, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// deg(0) = 0.
  int degree() const noexcept { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
  /// deg*(0) = -1.
  int degree_star() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  BaseElement coeff(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : BaseElement{}; }
  BaseElement leading() const noexcept { return coeffs_.empty() ? BaseElement{} : coeffs_.back(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().code == 1; }
  std::span<const BaseElement> coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const BasePoly&, const BasePoly&) = default;

 private:
  std::vector<BaseElement> coeffs_;
};

BasePoly add(const BaseField& f, const BasePoly& a, const BasePoly& b);
BasePoly sub(const BaseField& f, const BasePoly& a, const BasePoly& b);
BasePoly scale(const BaseField& f, const BasePoly& a, BaseElement c);
BasePoly mul(const BaseField& f, const BasePoly& a, const BasePoly& b);
/// Quotient and remainder; throws DivisionByZero for b = 0.
std::pair<BasePoly, BasePoly> divmod(const BaseField& f, const BasePoly& a, const BasePoly& b);
BasePoly mod(const BaseField& f, const BasePoly& a, const BasePoly& b);
/// Monic gcd (zero when both inputs are zero).
BasePoly gcd(const BaseField& f, BasePoly a, BasePoly b);
BasePoly powmod(const BaseField& f, BasePoly base, std::uint64_t exp, const BasePoly& modulus);

/// Rabin's test: x^{q^d} = x mod h and gcd(x^{q^{d/l}} - x, h) = 1 for each
/// prime l | d. Requires deg(h) >= 1.
bool is_irreducible(const BaseField& f, const BasePoly& h);

/// The monic irreducible polynomial of degree d whose lower coefficients have
/// the smallest integer encoding sum_k code(c_k) q^k. Deterministic.
BasePoly find_irreducible(const BaseField& f, unsigned degree);

/// Integer encoding sum_k code(c_k) q^k.
std::uint64_t encode(const BaseField& f, const BasePoly& h);

/// Comma-separated coefficient codes, constant term first ("1,1,0,1" is
/// x^3 + x + 1 over F_2). Trailing zeros are accepted and dropped.
BasePoly parse_poly(const BaseField& f, std::string_view text);
std::string format_poly(const BasePoly& h);

}  // namespace vnet
