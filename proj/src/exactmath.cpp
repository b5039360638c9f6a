#include "steiner/exactmath.hpp"

#include <limits>
#include <stdexcept>

#include <boost/integer/common_factor.hpp>

namespace steiner {

Int binom(const Int &n, const Int &r)
{
  if (n < 0 || r < 0)
    throw std::invalid_argument("binom: negative argument");
  if (r > n)
    return 0;
  Int m = r;
  if (n - r < m)
    m = n - r;
  // C(n, i) for i = 1..m; every prefix product is itself a binomial, so the
  // division is exact at each step.
  Int acc = 1;
  for (Int i = 1; i <= m; ++i)
    acc = acc * (n - m + i) / i;
  return acc;
}

Int binom(std::uint64_t n, std::uint64_t r)
{
  return binom(Int(n), Int(r));
}

Int falling(const Int &n, std::uint64_t m)
{
  if (n < 0)
    throw std::invalid_argument("falling: negative base");
  if (Int(m) > n + 1)
    throw std::invalid_argument("falling: length exceeds n + 1");
  Int acc = 1;
  for (std::uint64_t i = 0; i < m; ++i)
    acc *= n - i;
  return acc;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
  if (n == 0)
    throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0)
      continue;
    low.push_back(d);
    if (d != n / d)
      high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d <= n / d; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::optional<PrimePower> prime_power(std::uint64_t n)
{
  if (n < 2)
    throw std::invalid_argument("prime_power: n must be at least 2");
  std::uint64_t p = n;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1)
    return std::nullopt;
  return PrimePower{p, e};
}

unsigned val2(const Int &n)
{
  if (n == 0)
    throw std::invalid_argument("val2: n must be nonzero");
  return static_cast<unsigned>(boost::multiprecision::lsb(abs(n)));
}

Int isqrt(const Int &n)
{
  if (n < 0)
    throw std::invalid_argument("isqrt: negative argument");
  return boost::multiprecision::sqrt(n);
}

Int factorial(std::uint64_t n)
{
  Int acc = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    acc *= i;
  return acc;
}

std::string to_decimal(const Int &n)
{
  return n.str();
}

Int parse_nat(std::string_view text)
{
  if (text.empty())
    throw std::invalid_argument("expected a decimal integer, got an empty string");
  for (char c : text)
    if (c < '0' || c > '9')
      throw std::invalid_argument("expected a decimal integer, got '" + std::string(text) + "'");
  return Int(std::string(text));
}

std::uint64_t to_u64(const Int &n)
{
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max())
    throw std::out_of_range("integer " + n.str() + " does not fit in 64 bits");
  return n.convert_to<std::uint64_t>();
}

Ratio::Ratio(Int num, Int den) : num_(std::move(num)), den_(std::move(den))
{
  if (den_ == 0)
    throw std::domain_error("Ratio: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = boost::integer::gcd(abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Ratio operator+(const Ratio &a, const Ratio &b)
{
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Ratio operator-(const Ratio &a, const Ratio &b)
{
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

Ratio operator*(const Ratio &a, const Ratio &b)
{
  return {a.num_ * b.num_, a.den_ * b.den_};
}

Ratio operator/(const Ratio &a, const Ratio &b)
{
  if (b.num_ == 0)
    throw std::domain_error("Ratio: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(const Ratio &a, const Ratio &b)
{
  Int lhs = a.num_ * b.den_;
  Int rhs = b.num_ * a.den_;
  if (lhs < rhs)
    return std::strong_ordering::less;
  if (lhs > rhs)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Ratio::to_string() const
{
  if (is_integer())
    return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream &operator<<(std::ostream &os, const Ratio &r)
{
  return os << r.to_string();
}

} // namespace steiner
