#include "steiner/finite_field.hpp"

#include <stdexcept>

#include "steiner/exactmath.hpp"

namespace steiner {

namespace {

using Poly = std::vector<std::uint32_t>; // low-order coefficient first

void trim(Poly &f)
{
  while (!f.empty() && f.back() == 0)
    f.pop_back();
}

std::uint32_t inverse_mod_p(std::uint32_t a, std::uint32_t p)
{
  for (std::uint32_t x = 1; x < p; ++x)
    if ((a * x) % p == 1)
      return x;
  throw std::logic_error("no inverse mod p");
}

// Remainder of f modulo a monic-or-not nonzero g over F_p.
Poly poly_mod(Poly f, const Poly &g, std::uint32_t p)
{
  trim(f);
  const std::uint32_t lead_inv = inverse_mod_p(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint32_t c = (f.back() * lead_inv) % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = (f[shift + i] + p - (c * g[i]) % p) % p;
    trim(f);
  }
  return f;
}

Poly decode(std::uint32_t code, std::uint32_t p, unsigned len)
{
  Poly f(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    f[i] = code % p;
    code /= p;
  }
  return f;
}

bool irreducible(const Poly &f, std::uint32_t p)
{
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= deg / 2; ++d) {
    std::uint32_t count = 1;
    for (unsigned i = 0; i < d; ++i)
      count *= p;
    for (std::uint32_t code = 0; code < count; ++code) {
      Poly g = decode(code, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty())
        return false;
    }
  }
  return true;
}

} // namespace

FiniteField::FiniteField(std::uint32_t q) : q_(q)
{
  if (q < 2 || q > 1024)
    throw std::invalid_argument("FiniteField: q must lie in [2, 1024]");
  auto pp = prime_power(q);
  if (!pp)
    throw std::invalid_argument("FiniteField: q must be a prime power");
  p_ = static_cast<std::uint32_t>(pp->prime);
  e_ = pp->exponent;

  const std::uint32_t count = q_; // p^e monic candidates of degree e
  for (std::uint32_t code = 0; code < count; ++code) {
    Poly f = decode(code, p_, e_);
    f.push_back(1);
    if (irreducible(f, p_)) {
      modulus_ = f;
      break;
    }
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  auto encode = [&](const Poly &f) {
    std::uint32_t code = 0;
    for (std::size_t i = f.size(); i-- > 0;)
      code = code * p_ + f[i];
    return code;
  };
  for (std::uint32_t a = 0; a < q_; ++a) {
    const Poly fa = decode(a, p_, e_);
    Poly na(e_);
    for (unsigned i = 0; i < e_; ++i)
      na[i] = (p_ - fa[i]) % p_;
    neg_[a] = encode(na);
    for (std::uint32_t b = 0; b < q_; ++b) {
      const Poly fb = decode(b, p_, e_);
      Poly sum(e_);
      for (unsigned i = 0; i < e_; ++i)
        sum[i] = (fa[i] + fb[i]) % p_;
      add_[a * q_ + b] = encode(sum);
      Poly prod(2 * e_, 0);
      for (unsigned i = 0; i < e_; ++i)
        for (unsigned j = 0; j < e_; ++j)
          prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
      mul_[a * q_ + b] = encode(poly_mod(prod, modulus_, p_));
    }
  }

  inv_.assign(q_, 0);
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul(a, b) == 1) {
        inv_[a] = b;
        break;
      }

  for (Elem g = 1; g < q_; ++g) {
    Elem x = g;
    std::uint32_t ord = 1;
    while (x != 1) {
      x = mul(x, g);
      ++ord;
    }
    if (ord == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
}

FiniteField::Elem FiniteField::inv(Elem a) const
{
  if (a == 0)
    throw std::domain_error("FiniteField: zero has no inverse");
  return inv_[a];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t n) const
{
  Elem acc = 1;
  while (n > 0) {
    if (n & 1)
      acc = mul(acc, a);
    a = mul(a, a);
    n >>= 1;
  }
  return acc;
}

FiniteField::Elem FiniteField::frobenius(Elem a) const
{
  return pow(a, p_);
}

} // namespace steiner
