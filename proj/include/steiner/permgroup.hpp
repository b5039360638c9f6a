#ifndef STEINER_PERMGROUP_HPP
#define STEINER_PERMGROUP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "steiner/exactmath.hpp"
#include "steiner/group_catalog.hpp"

/// Desk-scale permutation groups: enough machinery to check catalog orders,
/// 3-homogeneity and the transitivity premises used by the eliminations.
///
/// Points are 0-based. A product a * b means "apply a, then b".
namespace steiner {

using Point = std::uint32_t;

/// Sorted list of distinct points.
using PointSet = std::vector<Point>;

/// Raised when an enumeration would exceed its documented cap.
class SizeCapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Permutation {
public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a bijection of 0..n-1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Cycles given as 0-based point lists.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>> &cycles);
  /// One-line image list: space-separated 0-based images.
  static Permutation parse(std::string_view line);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point> &images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::string to_string() const;

  friend Permutation operator*(const Permutation &a, const Permutation &b);
  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

struct PointSetHash {
  std::size_t operator()(const PointSet &s) const noexcept;
};

PointSet image(const Permutation &p, const PointSet &s);

class GeneratorSet {
public:
  /// Throws unless gens is non-empty and every generator has this degree.
  GeneratorSet(std::size_t degree, std::vector<Permutation> gens);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation> &gens() const { return gens_; }

private:
  std::size_t degree_;
  std::vector<Permutation> gens_;
};

/// Orbit of a point, sorted ascending.
std::vector<Point> orbit(const GeneratorSet &gs, Point seed);

/// Orbit of a point set under the induced action, in breadth-first order
/// starting from the (sorted) seed. Throws SizeCapExceeded beyond cap sets.
std::vector<PointSet> orbit(const GeneratorSet &gs, const PointSet &seed,
                            std::size_t cap = 10'000'000);

/// Base and strong generating set built by deterministic Schreier-Sims.
class StabilizerChain {
public:
  explicit StabilizerChain(const GeneratorSet &gs);

  Int order() const;
  bool contains(const Permutation &p) const;
  std::vector<Point> base() const;
  /// Orbit lengths of the successive point stabilizers along the base.
  std::vector<std::size_t> basic_orbit_lengths() const;

private:
  struct Level {
    Point base;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::optional<Permutation>> transversal; // indexed by point
    std::vector<std::size_t> tested;                      // per orbit index
  };

  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;
  void add_generator(std::size_t level, const Permutation &g);
  void extend_orbit(Level &lvl, std::size_t first_new_gen);
  void complete(std::size_t level);

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// Exact order of the generated group.
Int enumerated_order(const GeneratorSet &gs);

/// Number of orbits on s-subsets; 1 means s-homogeneous. Throws
/// SizeCapExceeded when C(degree, s) exceeds cap.
std::uint64_t homogeneity_orbits(const GeneratorSet &gs, unsigned s,
                                 std::uint64_t cap = 1'000'000);

/// Generators of the setwise stabilizer, from Schreier's lemma over the
/// orbit of the set. The result may list redundant generators.
GeneratorSet setwise_stabilizer(const GeneratorSet &gs, const PointSet &set,
                                std::size_t cap = 10'000'000);

/// |G| / |orbit of the set|.
Int setwise_stabilizer_order(const GeneratorSet &gs, const PointSet &set,
                             std::size_t cap = 10'000'000);

/// Action induced on points 0..new_degree-1, which every generator must
/// leave invariant.
GeneratorSet restrict_degree(const GeneratorSet &gs, std::size_t new_degree);

// Standard generators for catalog families.

enum class Psl2Extension { Socle, PGL, PGammaL };

/// PSL(2,q), PGL(2,q) or PGammaL(2,q) on the projective line for q <= 128.
/// The line is ordered infinity, 0, 1, ..., q-1 as points 0..q, field elements
/// encoded as in FiniteField.
GeneratorSet psl2_generators(std::uint64_t q, Psl2Extension ext = Psl2Extension::Socle);

/// Generators of the named group in its natural action. For PSL2 this is the
/// socle PSL(2,q); for Mathieu(22) it is M22. Supported: the fixed affine
/// groups, PSL2(q) for q <= 128, Affine_SL(d) for 2 <= d <= 5, Affine_A7,
/// Alternating(v) for v <= 16, and the Mathieu groups on 11..24 points.
/// Throws std::invalid_argument for anything else.
GeneratorSet standard_generators(const GroupSpec &g);

/// Generators of the largest group the catalog entry stands for, so that
/// enumerated_order matches order_of: PGammaL(2,q) for PSL2, Aut(M22) for
/// Mathieu(22), S_v for Alternating; otherwise as standard_generators.
GeneratorSet full_generators(const GroupSpec &g);

/// SL(d,2) acting linearly on the 2^d vectors of V(d,2); a vector is the
/// bitmask of its coordinates, e_i = 1 << (i-1).
GeneratorSet linear_sl_d2_generators(unsigned d);

} // namespace steiner

#endif // STEINER_PERMGROUP_HPP
