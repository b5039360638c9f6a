#include "steiner/group_catalog.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace steiner {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 9> family_tags{{
  {Family::Alternating, "Alternating"},
  {Family::AGL1_8, "AGL1_8"},
  {Family::AGammaL1_8, "AGammaL1_8"},
  {Family::AGammaL1_32, "AGammaL1_32"},
  {Family::AffineSL, "Affine_SL"},
  {Family::AffineA7, "Affine_A7"},
  {Family::PSL2, "PSL2"},
  {Family::Mathieu, "Mathieu"},
  {Family::M11On12, "M11_on_12"},
}};

// The product formulas for the sharply/multiply transitive Mathieu actions.
static_assert(order_m11 == 11ull * 10 * 9 * 8);
static_assert(order_m12 == 12ull * 11 * 10 * 9 * 8);
static_assert(order_m22 == 22ull * 21 * 20 * 48);
static_assert(order_m23 == 23ull * 22 * 21 * 20 * 48);
static_assert(order_m24 == 24ull * 23 * 22 * 21 * 20 * 48);

constexpr std::uint64_t order_a7 = 2520;

Int order_sl_d2(unsigned d)
{
  Int acc = 1;
  const Int q_d = Int(1) << d;
  for (unsigned i = 0; i < d; ++i)
    acc *= q_d - (Int(1) << i);
  return acc;
}

GroupSpec fixed_affine(Family f, std::uint64_t degree)
{
  GroupSpec g;
  g.family = f;
  g.degree = degree;
  g.parameter = degree;
  g.prime = 2;
  g.exponent = degree == 8 ? 3 : 5;
  return g;
}

} // namespace

std::string_view family_tag(Family f)
{
  for (const auto &[fam, tag] : family_tags)
    if (fam == f)
      return tag;
  return "?";
}

std::optional<Family> family_from_tag(std::string_view tag)
{
  for (const auto &[fam, t] : family_tags)
    if (t == tag)
      return fam;
  return std::nullopt;
}

std::string GroupSpec::name() const
{
  std::string tag(family_tag(family));
  switch (family) {
  case Family::Alternating:
  case Family::AffineSL:
  case Family::PSL2:
  case Family::Mathieu:
    return tag + "(" + std::to_string(parameter) + ")";
  default:
    return tag;
  }
}

GroupSpec make_agl1_8() { return fixed_affine(Family::AGL1_8, 8); }
GroupSpec make_agammal1_8() { return fixed_affine(Family::AGammaL1_8, 8); }
GroupSpec make_agammal1_32() { return fixed_affine(Family::AGammaL1_32, 32); }

GroupSpec make_affine_sl(unsigned d)
{
  if (d < 2 || d > 62)
    throw std::invalid_argument("Affine_SL(d): need 2 <= d <= 62");
  GroupSpec g;
  g.family = Family::AffineSL;
  g.degree = std::uint64_t{1} << d;
  g.parameter = d;
  g.prime = 2;
  g.exponent = d;
  return g;
}

GroupSpec make_affine_a7()
{
  GroupSpec g;
  g.family = Family::AffineA7;
  g.degree = 16;
  g.parameter = 16;
  g.prime = 2;
  g.exponent = 4;
  return g;
}

GroupSpec make_alternating(std::uint64_t v)
{
  if (v < 5)
    throw std::invalid_argument("Alternating(v): need v >= 5");
  GroupSpec g;
  g.family = Family::Alternating;
  g.degree = v;
  g.parameter = v;
  return g;
}

GroupSpec make_psl2(std::uint64_t q)
{
  if (q <= 3)
    throw std::invalid_argument("PSL2(q): need q > 3");
  auto pp = prime_power(q);
  if (!pp)
    throw std::invalid_argument("PSL2(q): q = " + std::to_string(q) + " is not a prime power");
  GroupSpec g;
  g.family = Family::PSL2;
  g.degree = q + 1;
  g.parameter = q;
  g.prime = pp->prime;
  g.exponent = pp->exponent;
  g.socle_3homog = psl2_is_3homog(q);
  return g;
}

GroupSpec make_mathieu(std::uint64_t v)
{
  if (v != 11 && v != 12 && v != 22 && v != 23 && v != 24)
    throw std::invalid_argument("Mathieu(v): v must be 11, 12, 22, 23 or 24");
  GroupSpec g;
  g.family = Family::Mathieu;
  g.degree = v;
  g.parameter = v;
  return g;
}

GroupSpec make_m11_on_12()
{
  GroupSpec g;
  g.family = Family::M11On12;
  g.degree = 12;
  g.parameter = 12;
  return g;
}

GroupSpec make_group(Family family, std::uint64_t parameter)
{
  switch (family) {
  case Family::Alternating:
    return make_alternating(parameter);
  case Family::AGL1_8:
    return make_agl1_8();
  case Family::AGammaL1_8:
    return make_agammal1_8();
  case Family::AGammaL1_32:
    return make_agammal1_32();
  case Family::AffineSL:
    return make_affine_sl(static_cast<unsigned>(parameter));
  case Family::AffineA7:
    return make_affine_a7();
  case Family::PSL2:
    return make_psl2(parameter);
  case Family::Mathieu:
    return make_mathieu(parameter);
  case Family::M11On12:
    return make_m11_on_12();
  }
  throw std::invalid_argument("unknown family");
}

bool psl2_is_3homog(std::uint64_t q)
{
  if (q <= 3 || !prime_power(q))
    throw std::invalid_argument("psl2_is_3homog: q must be a prime power > 3");
  return q % 2 == 0 || q % 4 == 3;
}

std::uint64_t psl2_n(const GroupSpec &g)
{
  return g.parameter % 2 == 0 ? 1 : 2;
}

std::vector<std::uint64_t> psl2_extension_divisors(const GroupSpec &g)
{
  if (g.family != Family::PSL2)
    throw std::invalid_argument("psl2_extension_divisors: not a PSL2 group");
  return divisors(psl2_n(g) * g.exponent);
}

Int psl2_order_with_extension(const GroupSpec &g, std::uint64_t a)
{
  if (g.family != Family::PSL2)
    throw std::invalid_argument("psl2_order_with_extension: not a PSL2 group");
  const std::uint64_t n = psl2_n(g);
  if ((n * g.exponent) % a != 0)
    throw std::invalid_argument("psl2_order_with_extension: a must divide n*e");
  const Int q = g.parameter;
  return (q + 1) * q * (q - 1) / n * a;
}

Int order_of(const GroupSpec &g)
{
  switch (g.family) {
  case Family::AGL1_8:
    return 8 * 7;
  case Family::AGammaL1_8:
    return 8 * 7 * 3;
  case Family::AGammaL1_32:
    return 32 * 31 * 5;
  case Family::AffineSL:
    return Int(g.degree) * order_sl_d2(static_cast<unsigned>(g.parameter));
  case Family::AffineA7:
    return Int(16) * order_a7;
  case Family::Alternating:
    return factorial(g.degree);
  case Family::PSL2:
    return psl2_order_with_extension(g, psl2_n(g) * g.exponent);
  case Family::Mathieu:
    switch (g.degree) {
    case 11:
      return order_m11;
    case 12:
      return order_m12;
    case 22:
      return Int(order_m22) * 2;
    case 23:
      return order_m23;
    default:
      return order_m24;
    }
  case Family::M11On12:
    return order_m11;
  }
  throw std::logic_error("order_of: unhandled family");
}

Int socle_order(const GroupSpec &g)
{
  switch (g.family) {
  case Family::AGL1_8:
  case Family::AGammaL1_8:
  case Family::AGammaL1_32:
  case Family::AffineSL:
  case Family::AffineA7:
    return g.degree;
  case Family::Alternating:
    return factorial(g.degree) / 2;
  case Family::PSL2:
    return psl2_order_with_extension(g, 1);
  case Family::Mathieu:
    return g.degree == 22 ? Int(order_m22) : order_of(g);
  case Family::M11On12:
    return order_m11;
  }
  throw std::logic_error("socle_order: unhandled family");
}

std::vector<GroupSpec> candidates_for_degree(std::uint64_t v)
{
  if (v < 9)
    throw std::invalid_argument("candidates_for_degree: v must be at least 9");
  std::vector<GroupSpec> out;
  out.push_back(make_alternating(v));
  if (v == 32)
    out.push_back(make_agammal1_32());
  if ((v & (v - 1)) == 0) {
    unsigned d = 0;
    while ((std::uint64_t{1} << d) < v)
      ++d;
    out.push_back(make_affine_sl(d));
  }
  if (v == 16)
    out.push_back(make_affine_a7());
  if (v - 1 > 3 && prime_power(v - 1))
    out.push_back(make_psl2(v - 1));
  if (v == 11 || v == 12 || v == 22 || v == 23 || v == 24)
    out.push_back(make_mathieu(v));
  if (v == 12)
    out.push_back(make_m11_on_12());
  std::stable_sort(out.begin(), out.end(),
                   [](const GroupSpec &a, const GroupSpec &b) { return a.family < b.family; });
  return out;
}

} // namespace steiner
