#include "vnet/field_tower.hpp"

#include <string>

#include "vnet/error.hpp"

namespace vnet {

FieldTower::FieldTower(std::shared_ptr<const BaseField> base, BasePoly modulus)
    : base_(std::move(base)), modulus_(std::move(modulus)), m_(0) {
  if (!base_) throw Error(ErrorKind::InvalidArgument, "null base field");
  if (modulus_.degree_star() < 1 || !modulus_.is_monic()) {
    throw Error(ErrorKind::DegreeViolation, "extension modulus must be monic of degree >= 1");
  }
  if (!is_irreducible(*base_, modulus_)) {
    throw Error(ErrorKind::NotIrreducible, "extension modulus " + format_poly(modulus_) +
                                               " is reducible over F_" + std::to_string(base_->q()));
  }
  m_ = static_cast<unsigned>(modulus_.degree());
  order_ = checked_pow(base_->q(), m_);
}

FieldTower FieldTower::standard(std::uint32_t q, unsigned m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "m must be >= 1");
  auto base = BaseField::of_order(q);
  BasePoly f = find_irreducible(*base, m);
  return FieldTower(std::move(base), std::move(f));
}

ExtElement FieldTower::one() const {
  ExtElement a = zero();
  a.coeffs[0] = base_->one();
  return a;
}

ExtElement FieldTower::generator() const { return from_poly(BasePoly::x()); }

ExtElement FieldTower::from_base(BaseElement c) const {
  ExtElement a = zero();
  a.coeffs[0] = c;
  return a;
}

ExtElement FieldTower::from_poly(const BasePoly& h) const {
  const BasePoly r = mod(*base_, h, modulus_);
  ExtElement a = zero();
  for (std::size_t k = 0; k < r.coeffs().size(); ++k) a.coeffs[k] = r.coeffs()[k];
  return a;
}

BasePoly FieldTower::to_poly(const ExtElement& a) const {
  check(a);
  return BasePoly(a.coeffs);
}

void FieldTower::check(const ExtElement& a) const {
  if (a.coeffs.size() != m_) {
    throw Error(ErrorKind::MixedFieldLevels, "element has " + std::to_string(a.coeffs.size()) +
                                                 " coordinates, field degree is " + std::to_string(m_));
  }
  for (auto c : a.coeffs) {
    if (c.code >= base_->q()) throw Error(ErrorKind::MixedFieldLevels, "coordinate outside F_q");
  }
}

ExtElement FieldTower::add(const ExtElement& a, const ExtElement& b) const {
  check(a);
  check(b);
  ExtElement out = zero();
  for (unsigned k = 0; k < m_; ++k) out.coeffs[k] = base_->add(a.coeffs[k], b.coeffs[k]);
  return out;
}

ExtElement FieldTower::sub(const ExtElement& a, const ExtElement& b) const {
  check(a);
  check(b);
  ExtElement out = zero();
  for (unsigned k = 0; k < m_; ++k) out.coeffs[k] = base_->sub(a.coeffs[k], b.coeffs[k]);
  return out;
}

ExtElement FieldTower::neg(const ExtElement& a) const {
  check(a);
  ExtElement out = zero();
  for (unsigned k = 0; k < m_; ++k) out.coeffs[k] = base_->neg(a.coeffs[k]);
  return out;
}

ExtElement FieldTower::scale(const ExtElement& a, BaseElement c) const {
  check(a);
  ExtElement out = zero();
  for (unsigned k = 0; k < m_; ++k) out.coeffs[k] = base_->mul(a.coeffs[k], c);
  return out;
}

ExtElement FieldTower::mul(const ExtElement& a, const ExtElement& b) const {
  check(a);
  check(b);
  const BaseField& f = *base_;
  std::vector<BaseElement> prod(2 * m_ - 1);
  for (unsigned i = 0; i < m_; ++i) {
    if (a.coeffs[i].code == 0) continue;
    for (unsigned j = 0; j < m_; ++j) {
      prod[i + j] = f.add(prod[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  const auto fc = modulus_.coeffs();
  for (std::size_t k = prod.size(); k-- > m_;) {
    const BaseElement c = prod[k];
    if (c.code == 0) continue;
    for (unsigned j = 0; j <= m_; ++j) {
      prod[k - m_ + j] = f.sub(prod[k - m_ + j], f.mul(c, fc[j]));
    }
  }
  prod.resize(m_);
  return {std::move(prod)};
}

ExtElement FieldTower::pow(ExtElement a, std::uint64_t exp) const {
  ExtElement result = one();
  while (exp > 0) {
    if (exp & 1U) result = mul(result, a);
    exp >>= 1U;
    if (exp > 0) a = mul(a, a);
  }
  return result;
}

ExtElement FieldTower::inv(const ExtElement& a) const {
  check(a);
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_{q^m}");
  return pow(a, order_ - 2);
}

std::uint64_t FieldTower::encode(const ExtElement& a) const {
  check(a);
  std::uint64_t code = 0;
  for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) code = code * base_->q() + it->code;
  return code;
}

ExtElement FieldTower::decode(std::uint64_t code) const {
  if (code >= order_) {
    throw Error(ErrorKind::InvalidArgument, "element code " + std::to_string(code) +
                                                " out of range for F_{q^m} of order " + std::to_string(order_));
  }
  ExtElement a = zero();
  for (unsigned k = 0; k < m_; ++k) {
    a.coeffs[k] = {static_cast<std::uint32_t>(code % base_->q())};
    code /= base_->q();
  }
  return a;
}

ExtElement eval_poly(const FieldTower& tower, const BasePoly& h, const ExtElement& alpha) {
  tower.check(alpha);
  ExtElement acc = tower.zero();
  const auto c = h.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = tower.add(tower.mul(acc, alpha), tower.from_base(*it));
  }
  return acc;
}

std::uint64_t psi_numerator(const BaseField& f, std::span<const BaseElement> v) {
  std::uint64_t num = 0;
  for (auto c : v) num = num * f.q() + c.code;
  return num;
}

}  // namespace vnet
