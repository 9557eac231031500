#include "vnet/poly.hpp"

#include <charconv>

#include "vnet/error.hpp"

namespace vnet {

namespace {

void trim(std::vector<BaseElement>& c) {
  while (!c.empty() && c.back().code == 0) c.pop_back();
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

BasePoly::BasePoly(std::vector<BaseElement> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

BasePoly BasePoly::monomial(BaseElement c, std::size_t k) {
  std::vector<BaseElement> v(k + 1);
  v[k] = c;
  return BasePoly(std::move(v));
}

BasePoly add(const BaseField& f, const BasePoly& a, const BasePoly& b) {
  std::vector<BaseElement> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.add(a.coeff(k), b.coeff(k));
  return BasePoly(std::move(out));
}

BasePoly sub(const BaseField& f, const BasePoly& a, const BasePoly& b) {
  std::vector<BaseElement> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.sub(a.coeff(k), b.coeff(k));
  return BasePoly(std::move(out));
}

BasePoly scale(const BaseField& f, const BasePoly& a, BaseElement c) {
  std::vector<BaseElement> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x = f.mul(x, c);
  return BasePoly(std::move(out));
}

BasePoly mul(const BaseField& f, const BasePoly& a, const BasePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<BaseElement> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].code == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(ac[i], bc[j]));
    }
  }
  return BasePoly(std::move(out));
}

std::pair<BasePoly, BasePoly> divmod(const BaseField& f, const BasePoly& a, const BasePoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<BaseElement> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) return {BasePoly{}, a};
  std::vector<BaseElement> quot(rem.size() - db);
  const BaseElement lead_inv = f.inv(b.leading());
  for (std::size_t k = rem.size(); k-- > db;) {
    const BaseElement c = f.mul(rem[k], lead_inv);
    quot[k - db] = c;
    if (c.code == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[k - db + j] = f.sub(rem[k - db + j], f.mul(c, bc[j]));
    }
  }
  rem.resize(db);
  return {BasePoly(std::move(quot)), BasePoly(std::move(rem))};
}

BasePoly mod(const BaseField& f, const BasePoly& a, const BasePoly& b) { return divmod(f, a, b).second; }

BasePoly gcd(const BaseField& f, BasePoly a, BasePoly b) {
  while (!b.is_zero()) {
    BasePoly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return scale(f, a, f.inv(a.leading()));
}

BasePoly powmod(const BaseField& f, BasePoly base, std::uint64_t exp, const BasePoly& modulus) {
  BasePoly result = mod(f, BasePoly::constant(f.one()), modulus);
  base = mod(f, base, modulus);
  while (exp > 0) {
    if (exp & 1U) result = mod(f, mul(f, result, base), modulus);
    exp >>= 1U;
    if (exp > 0) base = mod(f, mul(f, base, base), modulus);
  }
  return result;
}

bool is_irreducible(const BaseField& f, const BasePoly& h) {
  if (h.degree_star() < 1) {
    throw Error(ErrorKind::InvalidArgument, "irreducibility test needs degree >= 1");
  }
  const unsigned d = static_cast<unsigned>(h.degree());
  if (d == 1) return true;
  const BasePoly x = mod(f, BasePoly::x(), h);
  // frob[k] = x^{q^k} mod h
  std::vector<BasePoly> frob{x};
  for (unsigned k = 1; k <= d; ++k) frob.push_back(powmod(f, frob.back(), f.q(), h));
  if (frob[d] != x) return false;
  for (unsigned l : prime_divisors(d)) {
    const BasePoly g = gcd(f, sub(f, frob[d / l], x), h);
    if (g.degree() != 0) return false;
  }
  return true;
}

BasePoly find_irreducible(const BaseField& f, unsigned degree) {
  if (degree == 0) throw Error(ErrorKind::InvalidArgument, "degree must be >= 1");
  const std::uint64_t count = checked_pow(f.q(), degree);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<BaseElement> c(degree + 1);
    std::uint64_t rest = code;
    for (unsigned k = 0; k < degree; ++k) {
      c[k] = {static_cast<std::uint32_t>(rest % f.q())};
      rest /= f.q();
    }
    c[degree] = f.one();
    BasePoly h(std::move(c));
    if (is_irreducible(f, h)) return h;
  }
  throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");  // unreachable
}

std::uint64_t encode(const BaseField& f, const BasePoly& h) {
  std::uint64_t code = 0;
  const auto c = h.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) code = code * f.q() + it->code;
  return code;
}

BasePoly parse_poly(const BaseField& f, std::string_view text) {
  std::vector<BaseElement> coeffs;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
      throw Error(ErrorKind::InvalidArgument, "malformed polynomial coefficient '" +
                                                  std::string(tok) + "'");
    }
    coeffs.push_back(f.element(v));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return BasePoly(std::move(coeffs));
}

std::string format_poly(const BasePoly& h) {
  if (h.is_zero()) return "0";
  std::string out;
  for (auto c : h.coeffs()) {
    if (!out.empty()) out += ',';
    out += std::to_string(c.code);
  }
  return out;
}

}  // namespace vnet
