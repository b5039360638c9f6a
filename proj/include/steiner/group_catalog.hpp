#ifndef STEINER_GROUP_CATALOG_HPP
#define STEINER_GROUP_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steiner/exactmath.hpp"

/// The finite 3-homogeneous permutation groups of degree at least 4, as
/// queryable data.
///
/// Affine type: a regular elementary abelian normal subgroup of order 2^d,
/// with G isomorphic to AGL(1,8), AGammaL(1,8), AGammaL(1,32), or with point
/// stabilizer SL(d,2), or A_7 at degree 16.
///
/// Almost simple type: N <= G <= Aut(N) for N one of A_v, PSL(2,q) on the
/// q+1 points of the projective line, M_v (v = 11, 12, 22, 23, 24), and M_11
/// acting on 12 points.
///
/// The catalog mirrors that list as printed. The published source notes that
/// an earlier version of the list was slightly incomplete without naming the
/// omission, so completeness of the list is an external premise here.
namespace steiner {

/// Declaration order is the stable sort key used by candidates_for_degree.
enum class Family {
  Alternating,
  AGL1_8,
  AGammaL1_8,
  AGammaL1_32,
  AffineSL,
  AffineA7,
  PSL2,
  Mathieu,
  M11On12,
};

std::string_view family_tag(Family f);
std::optional<Family> family_from_tag(std::string_view tag);

struct GroupSpec {
  Family family = Family::Alternating;
  std::uint64_t degree = 0;
  /// d for AffineSL, q for PSL2, the degree for Alternating and Mathieu;
  /// unused (equal to the degree) for the fixed affine groups.
  std::uint64_t parameter = 0;
  /// Characteristic and exponent of q for PSL2; p = 2, e = d for AffineSL.
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  /// For PSL2: whether the socle PSL(2,q) alone is 3-homogeneous. When it is
  /// not (q = 1 mod 4), the 3-homogeneous groups with this socle are the
  /// overgroups containing PGL(2,q).
  bool socle_3homog = true;
  bool two_transitive = true;

  std::string name() const;

  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

/// Factory functions; each throws std::invalid_argument on bad parameters.
GroupSpec make_agl1_8();
GroupSpec make_agammal1_8();
GroupSpec make_agammal1_32();
GroupSpec make_affine_sl(unsigned d);
GroupSpec make_affine_a7();
GroupSpec make_alternating(std::uint64_t v);
GroupSpec make_psl2(std::uint64_t q);
GroupSpec make_mathieu(std::uint64_t v);
GroupSpec make_m11_on_12();

/// Builds a GroupSpec from a family tag and its parameter (d, q or v as above).
GroupSpec make_group(Family family, std::uint64_t parameter);

/// True iff PSL(2,q) is 3-homogeneous on the projective line: q even or
/// q = 3 (mod 4). Throws unless q is a prime power greater than 3.
bool psl2_is_3homog(std::uint64_t q);

/// gcd(2, q-1) for PSL2 specs.
std::uint64_t psl2_n(const GroupSpec &g);

/// Divisors of n*e: the possible indices a = |G : PSL(2,q)| inside PGammaL(2,q).
std::vector<std::uint64_t> psl2_extension_divisors(const GroupSpec &g);

/// |G| = (q+1) q (q-1) a / n for the overgroup of index a.
Int psl2_order_with_extension(const GroupSpec &g, std::uint64_t a);

/// Largest order over the family's admissible extensions: PGammaL(2,q) for
/// PSL2, S_v for Alternating, Aut(M_22) for Mathieu(22).
Int order_of(const GroupSpec &g);

/// Order of the socle: the translation group for affine families, the
/// simple normal subgroup otherwise.
Int socle_order(const GroupSpec &g);

/// Every catalog family instance of degree v, sorted by family tag. Throws
/// for v < 9.
std::vector<GroupSpec> candidates_for_degree(std::uint64_t v);

/// Standard orders of the simple Mathieu groups.
inline constexpr std::uint64_t order_m11 = 7920;
inline constexpr std::uint64_t order_m12 = 95040;
inline constexpr std::uint64_t order_m22 = 443520;
inline constexpr std::uint64_t order_m23 = 10200960;
inline constexpr std::uint64_t order_m24 = 244823040;

} // namespace steiner

#endif // STEINER_GROUP_CATALOG_HPP
