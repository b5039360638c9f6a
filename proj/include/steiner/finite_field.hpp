#ifndef STEINER_FINITE_FIELD_HPP
#define STEINER_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

namespace steiner {

/// Table-driven GF(p^e) for desk-scale q (at most 1024 elements).
///
/// An element is stored as the integer sum c_i p^i of its coefficient vector
/// in the polynomial basis modulo a fixed monic irreducible polynomial, which
/// is the lexicographically smallest one of degree e. For GF(8) and GF(32) that
/// is x^3 + x + 1 and x^5 + x^2 + 1, so generator sets built on top of the
/// field are reproducible.
class FiniteField {
public:
  using Elem = std::uint32_t;

  explicit FiniteField(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }

  /// Coefficients c_0..c_e of the modulus, c_e = 1.
  const std::vector<std::uint32_t> &modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const;
  Elem frobenius(Elem a) const;
  Elem pow(Elem a, std::uint64_t n) const;

  /// Smallest generator of the multiplicative group.
  Elem primitive() const { return primitive_; }

private:
  std::uint32_t q_, p_;
  unsigned e_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
  Elem primitive_ = 1;
};

} // namespace steiner

#endif // STEINER_FINITE_FIELD_HPP
