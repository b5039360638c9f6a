#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "steiner/designs.hpp"

using namespace steiner;

namespace {

// Translation x -> x ^ c on GF(2)^n.
Permutation translation(unsigned n, Point c)
{
  std::vector<Point> im(std::size_t{1} << n);
  for (Point x = 0; x < im.size(); ++x)
    im[x] = x ^ c;
  return Permutation(im);
}

GeneratorSet translations(unsigned n)
{
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < n; ++i)
    gens.push_back(translation(n, Point{1} << i));
  return GeneratorSet(std::size_t{1} << n, gens);
}

IncidenceStructure relabel(const IncidenceStructure &s, const Permutation &p)
{
  std::vector<Block> blocks;
  for (const auto &b : s.blocks())
    blocks.push_back(image(p, b));
  return IncidenceStructure(s.v(), s.k(), blocks);
}

std::string round_trip(const IncidenceStructure &s)
{
  std::ostringstream os;
  write_design(os, s);
  return os.str();
}

IncidenceStructure parse(const std::string &text)
{
  std::istringstream is(text);
  return read_design(is);
}

} // namespace

TEST_CASE("boolean quadruple systems")
{
  const std::size_t blocks[] = {0, 0, 0, 14, 140, 1240};
  for (unsigned n = 3; n <= 5; ++n) {
    auto s = boolean_sqs(n);
    CHECK(s.v() == (1u << n));
    CHECK(s.k() == 4);
    CHECK(s.b() == blocks[n]);
    // b = C(v,3) / C(4,3)
    CHECK(s.b() * 4 == binom(s.v(), 3));
    CHECK(verify_design(s, 3) == 1);
    CHECK(verify_design(s, 2) == (s.v() - 2) / 2);
    CHECK(verify_design(s, 1) == s.b() * 4 / s.v());
    CHECK_FALSE(verify_design(s, 4));
  }
  CHECK_THROWS(boolean_sqs(2));
  CHECK_THROWS(boolean_sqs(8));
}

TEST_CASE("design verification")
{
  auto s = boolean_sqs(3);
  auto blocks = s.blocks();
  blocks.erase(blocks.begin() + 3);
  IncidenceStructure damaged(8, 4, blocks);
  CHECK_FALSE(verify_design(damaged, 3));
  CHECK_FALSE(verify_design(damaged, 1));

  // All 4-subsets of a 5-set: a 3-(5,4,2) design.
  std::vector<Block> all;
  for (Point skip = 0; skip < 5; ++skip) {
    Block b;
    for (Point x = 0; x < 5; ++x)
      if (x != skip)
        b.push_back(x);
    all.push_back(b);
  }
  IncidenceStructure complete(5, 4, all);
  CHECK(verify_design(complete, 3) == 2);
  CHECK(verify_design(complete, 4) == 1);

  CHECK_THROWS_AS(verify_design(boolean_sqs(5), 3, 100), SizeCapExceeded);

  CHECK_THROWS(IncidenceStructure(8, 4, {{0, 1, 2}}));
  CHECK_THROWS(IncidenceStructure(8, 4, {{0, 1, 2, 8}}));
  CHECK_THROWS(IncidenceStructure(8, 4, {{0, 1, 1, 2}}));
  CHECK_THROWS(IncidenceStructure(8, 4, {{0, 1, 2, 3}, {3, 2, 1, 0}}));
  IncidenceStructure unsorted(8, 4, {{7, 1, 2, 3}, {0, 1, 2, 3}});
  CHECK(unsorted.blocks().front() == Block{0, 1, 2, 3});
  CHECK(unsorted.has_block({1, 2, 3, 7}));
}

TEST_CASE("automorphisms and transitivity")
{
  for (unsigned n = 3; n <= 5; ++n) {
    auto s = boolean_sqs(n);
    for (Point c = 0; c < s.v(); ++c)
      REQUIRE(is_automorphism(translation(n, c), s));
    CHECK_FALSE(is_automorphism(Permutation::from_cycles(s.v(), {{0, 1}}), s));

    auto tr = translations(n);
    CHECK(point_transitive(tr, s));
    CHECK_FALSE(block_transitive(tr, s));

    auto asl = standard_generators(make_affine_sl(n));
    CHECK(block_transitive(asl, s));
    CHECK(point_transitive(asl, s));

    GeneratorSet id(s.v(), {Permutation::identity(s.v())});
    CHECK_FALSE(block_transitive(id, s));
    CHECK_FALSE(point_transitive(id, s));
  }
  GeneratorSet bad(8, {Permutation::from_cycles(8, {{0, 1}})});
  CHECK_THROWS(block_transitive(bad, boolean_sqs(3)));
  CHECK_FALSE(point_transitive(GeneratorSet(8, {Permutation::from_cycles(8, {{1, 2, 3, 4, 5, 6, 7}})}),
                               boolean_sqs(3)));
  CHECK_THROWS(point_transitive(translations(3), boolean_sqs(4)));
}

TEST_CASE("verification is invariant under relabeling")
{
  std::mt19937_64 rng(9);
  for (unsigned n = 3; n <= 4; ++n) {
    auto s = boolean_sqs(n);
    for (int i = 0; i < 10; ++i) {
      std::vector<Point> im(s.v());
      std::iota(im.begin(), im.end(), 0);
      std::shuffle(im.begin(), im.end(), rng);
      Permutation p(im);
      auto r = relabel(s, p);
      REQUIRE(verify_design(r, 3) == 1);
      REQUIRE(verify_design(r, 2) == verify_design(s, 2));
      // Conjugated translations act on the relabeled design.
      std::vector<Permutation> conj;
      const auto tr = translations(n);
      for (const auto &g : tr.gens())
        conj.push_back(p.inverse() * g * p);
      GeneratorSet gs(s.v(), conj);
      REQUIRE(point_transitive(gs, r));
      REQUIRE_FALSE(block_transitive(gs, r));
    }
  }
}

TEST_CASE("file format")
{
  auto s = boolean_sqs(3);
  auto text = round_trip(s);
  CHECK(text.rfind("STEINER 8 4 14\n", 0) == 0);
  CHECK(text.find("\n0 1 2 3\n") != std::string::npos);
  auto back = parse(text);
  CHECK(back.blocks() == s.blocks());
  CHECK(round_trip(back) == text);
  CHECK(round_trip(parse(round_trip(boolean_sqs(5)))) == round_trip(boolean_sqs(5)));

  CHECK_NOTHROW(parse("STEINER 5 4 1\n0 1 2 3\n"));
  for (const char *bad : {
           "",
           "STEINR 5 4 1\n0 1 2 3\n",
           "STEINER 5 4 2\n0 1 2 3\n",
           "STEINER 5 4 1\n0 1 2\n",
           "STEINER 5 4 1\n0 1 2 3 4\n",
           "STEINER 5 4 1\n0 1 2 5\n",
           "STEINER 5 4 1\n1 0 2 3\n",
           "STEINER 5 4 2\n0 1 2 4\n0 1 2 3\n",
           "STEINER 5 4 2\n0 1 2 3\n0 1 2 3\n",
           "STEINER 5 4 1\n0 1 2 x\n",
           "STEINER 5 4 1\n0 1 2 -3\n",
           "STEINER 5 4 1\n0 1 2 3\n0 1 2 4\n",
       }) {
    CAPTURE(bad);
    CHECK_THROWS(parse(bad));
  }
}
