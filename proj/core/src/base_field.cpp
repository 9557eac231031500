#include "vnet/base_field.hpp"

#include <string>

#include "vnet/error.hpp"
#include "vnet/poly.hpp"

namespace vnet {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::vector<std::uint32_t> digits(std::uint32_t code, std::uint32_t p, unsigned e) {
  std::vector<std::uint32_t> out(e);
  for (unsigned k = 0; k < e; ++k) {
    out[k] = code % p;
    code /= p;
  }
  return out;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) code = code * p + *it;
  return code;
}

// Product of two residues in F_p[y]/(g), g monic of degree e.
std::vector<std::uint32_t> mul_mod_g(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b,
                                     const std::vector<std::uint32_t>& g, std::uint32_t p) {
  const std::size_t e = g.size() - 1;
  std::vector<std::uint64_t> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j < e; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
  }
  for (std::size_t k = 2 * e - 1; k >= e; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= e; ++j) {
      const std::uint64_t sub = c * g[j] % p;
      prod[k - e + j] = (prod[k - e + j] + p - sub) % p;
    }
  }
  std::vector<std::uint32_t> out(e);
  for (std::size_t i = 0; i < e; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

}  // namespace

BaseField::BaseField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), e_(1), q_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (!modulus_.empty()) {
    if (modulus_.size() < 3 || modulus_.back() != 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "base modulus must be monic of degree >= 2 over F_p");
    }
    for (auto c : modulus_) {
      if (c >= p) throw Error(ErrorKind::InvalidArgument, "base modulus coefficient out of range");
    }
    e_ = static_cast<unsigned>(modulus_.size() - 1);
    q_ = static_cast<std::uint32_t>(checked_pow(p, e_));
  }
  if (q_ > kMaxOrder) {
    throw Error(ErrorKind::SizeCap, "field order " + std::to_string(q_) + " exceeds " +
                                        std::to_string(kMaxOrder));
  }
  if (!modulus_.empty()) {
    const auto fp = prime(p);
    std::vector<BaseElement> g;
    for (auto c : modulus_) g.push_back({c});
    if (!is_irreducible(*fp, BasePoly(std::move(g)))) {
      throw Error(ErrorKind::NotIrreducible, "base modulus is reducible over F_p");
    }
  }

  const std::size_t qq = std::size_t{q_} * q_;
  add_.resize(qq);
  mul_.resize(qq);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  std::vector<std::vector<std::uint32_t>> dig(q_);
  for (std::uint32_t a = 0; a < q_; ++a) dig[a] = digits(a, p_, e_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::vector<std::uint32_t> n(e_);
    for (unsigned k = 0; k < e_; ++k) n[k] = (p_ - dig[a][k]) % p_;
    neg_[a] = static_cast<std::uint16_t>(undigits(n, p_));
    for (std::uint32_t b = 0; b < q_; ++b) {
      std::vector<std::uint32_t> s(e_);
      for (unsigned k = 0; k < e_; ++k) s[k] = (dig[a][k] + dig[b][k]) % p_;
      add_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(undigits(s, p_));
      const std::uint32_t prod =
          e_ == 1 ? static_cast<std::uint32_t>(std::uint64_t{a} * b % p_)
                  : undigits(mul_mod_g(dig[a], dig[b], modulus_, p_), p_);
      mul_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(prod);
      if (prod == 1) inv_[a] = static_cast<std::uint16_t>(b);
    }
  }
}

std::shared_ptr<const BaseField> BaseField::prime(std::uint32_t p) {
  return std::make_shared<const BaseField>(p, std::vector<std::uint32_t>{});
}

std::shared_ptr<const BaseField> BaseField::extension(std::uint32_t p, unsigned e) {
  if (e == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  if (e == 1) return prime(p);
  const auto fp = prime(p);
  const BasePoly g = find_irreducible(*fp, e);
  std::vector<std::uint32_t> coeffs;
  for (auto c : g.coeffs()) coeffs.push_back(c.code);
  return std::make_shared<const BaseField>(p, std::move(coeffs));
}

std::shared_ptr<const BaseField> BaseField::of_order(std::uint32_t q,
                                                     std::vector<std::uint32_t> modulus) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "field order must be >= 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) {
    throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  }
  if (!modulus.empty()) {
    if (modulus.size() != e + 1) {
      throw Error(ErrorKind::DegreeViolation, "base modulus degree must equal log_p q");
    }
    return std::make_shared<const BaseField>(p, std::move(modulus));
  }
  return extension(p, e);
}

BaseElement BaseField::element(std::uint64_t code) const {
  if (code >= q_) {
    throw Error(ErrorKind::InvalidArgument,
                "element code " + std::to_string(code) + " out of range for F_" + std::to_string(q_));
  }
  return {static_cast<std::uint32_t>(code)};
}

BaseElement BaseField::inv(BaseElement a) const {
  if (a.code == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_q");
  return {inv_[a.code]};
}

BaseElement BaseField::pow(BaseElement a, std::uint64_t exp) const noexcept {
  BaseElement result = one();
  while (exp > 0) {
    if (exp & 1U) result = mul(result, a);
    a = mul(a, a);
    exp >>= 1U;
  }
  return result;
}

std::vector<std::uint32_t> BaseField::coeffs(BaseElement a) const { return digits(a.code, p_, e_); }

BaseElement BaseField::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != e_) throw Error(ErrorKind::MixedFieldLevels, "coefficient vector length != e");
  std::uint32_t code = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (*it >= p_) throw Error(ErrorKind::InvalidArgument, "coefficient out of range");
    code = code * p_ + *it;
  }
  return {code};
}

}  // namespace vnet
