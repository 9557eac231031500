#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace vnet {

/// An element of F_q stored by its canonical integer encoding
/// sum_k a_k p^k, where (a_0, ..., a_{e-1}) are its coordinates over F_p.
/// Zero is code 0 and one is code 1 at every tower level.
struct BaseElement {
  std::uint32_t code = 0;

  friend constexpr bool operator==(BaseElement, BaseElement) = default;
  friend constexpr auto operator<=>(BaseElement, BaseElement) = default;
};

bool is_prime(std::uint64_t n) noexcept;

/// F_q = F_p[y]/(g). Arithmetic goes through precomputed q x q tables, so the
/// order is limited to kMaxOrder. Instances are immutable and shared by
/// pointer between towers, nets and reports.
class BaseField {
 public:
  static constexpr std::uint32_t kMaxOrder = 256;

  /// `modulus` holds the coefficients of g over F_p, constant term first and
  /// including the leading 1; leave it empty for the prime field.
  BaseField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  static std::shared_ptr<const BaseField> prime(std::uint32_t p);
  /// F_{p^e} over the lex-smallest monic irreducible g of degree e.
  static std::shared_ptr<const BaseField> extension(std::uint32_t p, unsigned e);
  /// Factors q = p^e; uses `modulus` for g when given, otherwise the default.
  static std::shared_ptr<const BaseField> of_order(std::uint32_t q,
                                                   std::vector<std::uint32_t> modulus = {});

  std::uint32_t p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return e_ == 1; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  BaseElement zero() const noexcept { return {0}; }
  BaseElement one() const noexcept { return {1}; }
  /// Validated construction from an integer encoding.
  BaseElement element(std::uint64_t code) const;

  BaseElement add(BaseElement a, BaseElement b) const noexcept { return {add_[idx(a, b)]}; }
  BaseElement sub(BaseElement a, BaseElement b) const noexcept { return add(a, neg(b)); }
  BaseElement neg(BaseElement a) const noexcept { return {neg_[a.code]}; }
  BaseElement mul(BaseElement a, BaseElement b) const noexcept { return {mul_[idx(a, b)]}; }
  BaseElement inv(BaseElement a) const;
  BaseElement div(BaseElement a, BaseElement b) const { return mul(a, inv(b)); }
  BaseElement pow(BaseElement a, std::uint64_t exp) const noexcept;

  std::vector<std::uint32_t> coeffs(BaseElement a) const;
  BaseElement from_coeffs(std::span<const std::uint32_t> coeffs) const;

  friend bool operator==(const BaseField& a, const BaseField& b) noexcept {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  std::size_t idx(BaseElement a, BaseElement b) const noexcept {
    return static_cast<std::size_t>(a.code) * q_ + b.code;
  }

  std::uint32_t p_;
  unsigned e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
};

}  // namespace vnet
