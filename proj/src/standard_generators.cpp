#include <array>
#include <stdexcept>

#include "steiner/finite_field.hpp"
#include "steiner/permgroup.hpp"

namespace steiner {

namespace {

using Elem = FiniteField::Elem;

constexpr Point infinity_point = 0;

Point line_point(Elem x) { return x + 1; }

// z -> (a z + b) / (c z + d) on infinity, 0, 1, ..., q-1.
Permutation mobius(const FiniteField &f, Elem a, Elem b, Elem c, Elem d)
{
  const std::uint32_t q = f.order();
  std::vector<Point> img(q + 1);
  img[infinity_point] = c == 0 ? infinity_point : line_point(f.mul(a, f.inv(c)));
  for (Elem z = 0; z < q; ++z) {
    Elem den = f.add(f.mul(c, z), d);
    Elem num = f.add(f.mul(a, z), b);
    img[line_point(z)] = den == 0 ? infinity_point : line_point(f.mul(num, f.inv(den)));
  }
  return Permutation(std::move(img));
}

Permutation line_frobenius(const FiniteField &f)
{
  std::vector<Point> img(f.order() + 1);
  img[infinity_point] = infinity_point;
  for (Elem z = 0; z < f.order(); ++z)
    img[line_point(z)] = line_point(f.frobenius(z));
  return Permutation(std::move(img));
}

// Semilinear maps of GF(2^e) acting on its own elements.
GeneratorSet affine_line(std::uint32_t q, bool with_frobenius)
{
  FiniteField f(q);
  std::vector<Point> shift(q), scale(q), frob(q);
  for (Elem z = 0; z < q; ++z) {
    shift[z] = f.add(z, 1);
    scale[z] = f.mul(z, f.primitive());
    frob[z] = f.frobenius(z);
  }
  std::vector<Permutation> gens{Permutation(shift), Permutation(scale)};
  if (with_frobenius)
    gens.emplace_back(frob);
  return GeneratorSet(q, std::move(gens));
}

// A 4x4 matrix over GF(2) given by the images of e1..e4 as bitmasks.
using Matrix4 = std::array<std::uint32_t, 4>;

Permutation linear_map(const std::vector<std::uint32_t> &columns)
{
  const std::uint32_t size = 1u << columns.size();
  std::vector<Point> img(size);
  for (std::uint32_t x = 0; x < size; ++x) {
    std::uint32_t y = 0;
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (x >> i & 1u)
        y ^= columns[i];
    img[x] = y;
  }
  return Permutation(std::move(img));
}

Permutation translation(unsigned d, std::uint32_t u)
{
  std::vector<Point> img(1u << d);
  for (std::uint32_t x = 0; x < img.size(); ++x)
    img[x] = x ^ u;
  return Permutation(std::move(img));
}

// Two matrices generating a copy of A_7 inside GL(4,2) = A_8. Each acts on
// V(4,2) with orbit lengths 1 and 15, so together with the translations they
// generate the affine 3-transitive group of degree 16.
constexpr Matrix4 a7_gen_a{0b0001, 0b0100, 0b1000, 0b0110}; // order 7
constexpr Matrix4 a7_gen_b{0b0010, 0b0011, 0b0100, 0b1000}; // order 3

Permutation cycle_perm(std::size_t degree, std::vector<Point> cycle)
{
  return Permutation::from_cycles(degree, {std::move(cycle)});
}

// Mathieu generators in one-based cycle notation.
using Cycles = std::vector<std::vector<Point>>;

Permutation one_based(std::size_t degree, Cycles cycles)
{
  for (auto &c : cycles)
    for (auto &x : c)
      --x;
  return Permutation::from_cycles(degree, cycles);
}

GeneratorSet m24()
{
  Cycles c1(1);
  for (Point i = 1; i <= 23; ++i)
    c1[0].push_back(i);
  return GeneratorSet(
    24, {one_based(24, c1),
         one_based(24, {{3, 17, 10, 7, 9}, {4, 13, 14, 19, 5}, {8, 18, 11, 12, 23}, {15, 20, 22, 21, 16}}),
         one_based(24, {{1, 24}, {2, 23}, {3, 12}, {4, 16}, {5, 18}, {6, 10}, {7, 20}, {8, 14}, {9, 21},
                        {11, 17}, {13, 22}, {15, 19}})});
}

GeneratorSet m12()
{
  return GeneratorSet(12, {one_based(12, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}),
                           one_based(12, {{3, 7, 11, 8}, {4, 10, 5, 6}}),
                           one_based(12, {{1, 12}, {2, 11}, {3, 6}, {4, 8}, {5, 9}, {7, 10}})});
}

GeneratorSet m11()
{
  return GeneratorSet(11, {one_based(11, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}),
                           one_based(11, {{3, 7, 11, 8}, {4, 10, 5, 6}})});
}

GeneratorSet mathieu_generators(std::uint64_t v, bool full)
{
  switch (v) {
  case 11:
    return m11();
  case 12:
    return m12();
  case 24:
    return m24();
  case 23:
    return restrict_degree(setwise_stabilizer(m24(), {23}), 23);
  case 22:
    if (full)
      return restrict_degree(setwise_stabilizer(m24(), {22, 23}), 22);
    return restrict_degree(setwise_stabilizer(mathieu_generators(23, false), {22}), 22);
  default:
    throw std::invalid_argument("no Mathieu group of degree " + std::to_string(v));
  }
}

GeneratorSet alternating_generators(std::uint64_t v, bool symmetric)
{
  if (v < 3 || v > 16)
    throw std::invalid_argument("Alternating(v) generators are provided for v <= 16 only");
  const auto n = static_cast<Point>(v);
  std::vector<Point> cycle;
  if (symmetric) {
    for (Point i = 0; i < n; ++i)
      cycle.push_back(i);
    return GeneratorSet(v, {cycle_perm(v, {0, 1}), cycle_perm(v, cycle)});
  }
  for (Point i = (n % 2 == 0 ? 1 : 0); i < n; ++i)
    cycle.push_back(i);
  return GeneratorSet(v, {cycle_perm(v, {0, 1, 2}), cycle_perm(v, cycle)});
}

GeneratorSet affine_sl_generators(unsigned d)
{
  if (d < 2 || d > 5)
    throw std::invalid_argument("Affine_SL(d) generators are provided for 2 <= d <= 5 only");
  auto gens = linear_sl_d2_generators(d).gens();
  gens.push_back(translation(d, 1));
  return GeneratorSet(std::size_t{1} << d, std::move(gens));
}

GeneratorSet affine_a7_generators()
{
  std::vector<std::uint32_t> a(a7_gen_a.begin(), a7_gen_a.end());
  std::vector<std::uint32_t> b(a7_gen_b.begin(), a7_gen_b.end());
  return GeneratorSet(16, {linear_map(a), linear_map(b), translation(4, 1)});
}

} // namespace

GeneratorSet linear_sl_d2_generators(unsigned d)
{
  if (d < 2 || d > 20)
    throw std::invalid_argument("linear_sl_d2_generators: need 2 <= d <= 20");
  // Transvection e2 -> e1 + e2 and the cyclic shift e_i -> e_{i+1}; over GF(2)
  // these generate GL(d,2) = SL(d,2).
  std::vector<std::uint32_t> transvection(d), shift(d);
  for (unsigned i = 0; i < d; ++i) {
    transvection[i] = 1u << i;
    shift[i] = 1u << ((i + 1) % d);
  }
  transvection[1] = 0b11;
  return GeneratorSet(std::size_t{1} << d, {linear_map(transvection), linear_map(shift)});
}

GeneratorSet psl2_generators(std::uint64_t q, Psl2Extension ext)
{
  if (q <= 3 || q > 128 || !prime_power(q))
    throw std::invalid_argument("PSL2(q) generators are provided for prime powers 3 < q <= 128 only");
  FiniteField f(static_cast<std::uint32_t>(q));
  const Elem w = f.primitive();
  const Elem square_gen = q % 2 == 0 ? w : f.mul(w, w);
  std::vector<Permutation> gens{
    mobius(f, 1, 1, 0, 1),          // z + 1
    mobius(f, square_gen, 0, 0, 1), // w^2 z (w z in characteristic 2)
    mobius(f, 0, f.neg(1), 1, 0),   // -1/z
  };
  if (ext != Psl2Extension::Socle && q % 2 == 1)
    gens.push_back(mobius(f, w, 0, 0, 1));
  if (ext == Psl2Extension::PGammaL && f.degree() > 1)
    gens.push_back(line_frobenius(f));
  return GeneratorSet(q + 1, std::move(gens));
}

GeneratorSet standard_generators(const GroupSpec &g)
{
  switch (g.family) {
  case Family::AGL1_8:
    return affine_line(8, false);
  case Family::AGammaL1_8:
    return affine_line(8, true);
  case Family::AGammaL1_32:
    return affine_line(32, true);
  case Family::AffineSL:
    return affine_sl_generators(static_cast<unsigned>(g.parameter));
  case Family::AffineA7:
    return affine_a7_generators();
  case Family::Alternating:
    return alternating_generators(g.degree, false);
  case Family::PSL2:
    return psl2_generators(g.parameter, Psl2Extension::Socle);
  case Family::Mathieu:
    return mathieu_generators(g.degree, false);
  case Family::M11On12:
    break;
  }
  throw std::invalid_argument("no standard generators implemented for " + g.name());
}

GeneratorSet full_generators(const GroupSpec &g)
{
  switch (g.family) {
  case Family::Alternating:
    return alternating_generators(g.degree, true);
  case Family::PSL2:
    return psl2_generators(g.parameter, Psl2Extension::PGammaL);
  case Family::Mathieu:
    return mathieu_generators(g.degree, true);
  default:
    return standard_generators(g);
  }
}

} // namespace steiner
