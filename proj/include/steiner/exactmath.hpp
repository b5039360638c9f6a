#ifndef STEINER_EXACTMATH_HPP
#define STEINER_EXACTMATH_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

/// Exact integer and rational arithmetic shared by every other module.
///
/// Nothing in the engine touches floating point: every bound of the form
/// floor(sqrt(x) + c) is decided by integer comparisons, so an emitted
/// elimination is a statement about integers and can be replayed verbatim.
namespace steiner {

using Int = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, r); zero when r > n.
Int binom(const Int &n, const Int &r);
Int binom(std::uint64_t n, std::uint64_t r);

/// Falling factorial n (n-1) ... (n-m+1). Requires m <= n + 1; m = 0 gives 1.
Int falling(const Int &n, std::uint64_t m);

/// Positive divisors of n in increasing order. Throws for n = 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower &, const PrimePower &) = default;
};

/// (p, e) with p^e = n when n is a prime power. Throws for n < 2.
std::optional<PrimePower> prime_power(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// 2-adic valuation. Throws for n = 0.
unsigned val2(const Int &n);

/// Largest s with s*s <= n. Throws for negative n.
Int isqrt(const Int &n);

Int factorial(std::uint64_t n);

std::string to_decimal(const Int &n);

/// Strict decimal parse of a non-negative integer (digits only, no sign,
/// no whitespace). Throws std::invalid_argument otherwise.
Int parse_nat(std::string_view text);

/// Narrowing conversion that throws std::out_of_range instead of wrapping.
std::uint64_t to_u64(const Int &n);

/// Exact rational number kept in lowest terms with a positive denominator.
class Ratio {
public:
  Ratio() = default;
  Ratio(Int num, Int den = 1);

  const Int &num() const { return num_; }
  const Int &den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend Ratio operator+(const Ratio &a, const Ratio &b);
  friend Ratio operator-(const Ratio &a, const Ratio &b);
  friend Ratio operator*(const Ratio &a, const Ratio &b);
  friend Ratio operator/(const Ratio &a, const Ratio &b);
  friend bool operator==(const Ratio &a, const Ratio &b) = default;
  friend std::strong_ordering operator<=>(const Ratio &a, const Ratio &b);

  std::string to_string() const;

private:
  Int num_ = 0;
  Int den_ = 1;
};

std::ostream &operator<<(std::ostream &os, const Ratio &r);

} // namespace steiner

#endif // STEINER_EXACTMATH_HPP
