#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steiner/admissibility.hpp"

using namespace steiner;

namespace {

DesignParams steiner_params(unsigned t, std::uint64_t v, std::uint64_t k) { return DesignParams{t, v, k}; }

bool contains(const std::vector<unsigned> &xs, unsigned x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

// Largest k with (2k - 11)^2 <= 4v, i.e. k <= sqrt(v) + 11/2, found by search.
std::uint64_t kmax7_oracle(std::uint64_t v)
{
  std::uint64_t k = 6;
  while ((2 * (k + 1) - 11) * (2 * (k + 1) - 11) <= 4 * v)
    ++k;
  return k;
}

} // namespace

TEST_CASE("design parameters validate")
{
  CHECK_NOTHROW(steiner_params(7, 16, 8).validate());
  CHECK_THROWS(steiner_params(0, 16, 8).validate());
  CHECK_THROWS(steiner_params(9, 16, 8).validate());
  CHECK_THROWS(steiner_params(3, 8, 9).validate());
  CHECK_THROWS((DesignParams{3, 8, 4, 0}).validate());
  CHECK(steiner_params(7, 16, 8).nontrivial());
  CHECK_FALSE(steiner_params(7, 16, 16).nontrivial());
  CHECK_FALSE(steiner_params(7, 16, 7).nontrivial());
  CHECK(steiner_params(7, 16, 8).to_string() == "7-(16,8,1)");
}

TEST_CASE("lambda_s examples")
{
  CHECK(lambda_s(steiner_params(5, 24, 8), 2) == Ratio(77));
  CHECK(lambda_s(steiner_params(7, 16, 8), 2) == Ratio(2002, 6));
  CHECK(lambda_s(DesignParams{4, 30, 9, 7}, 4) == Ratio(7));
  CHECK_THROWS(lambda_s(steiner_params(5, 24, 8), 6));

  auto term = divisibility_term(steiner_params(7, 16, 8), 2);
  CHECK(term.numerator == 2002);
  CHECK(term.denominator == 6);
  CHECK_FALSE(term.holds());
}

TEST_CASE("basic counts")
{
  auto c = basic_counts(steiner_params(5, 24, 8));
  CHECK(c.b == Ratio(759));
  CHECK(c.r == Ratio(253));
  CHECK(basic_counts(steiner_params(7, 24, 8)).b == Ratio(43263));
  CHECK(basic_counts(steiner_params(4, 11, 11)).b == Ratio(1));
  CHECK(basic_counts(steiner_params(3, 8, 4)).b == Ratio(14));
}

TEST_CASE("divisibility examples")
{
  CHECK(contains(divisibility_check(steiner_params(7, 16, 8)), 2));
  CHECK(divisibility_check(steiner_params(5, 24, 8)).empty());
  CHECK(contains(divisibility_check(steiner_params(7, 22, 8)), 5));
  // Known Steiner systems pass every condition.
  for (auto p : {steiner_params(5, 12, 6), steiner_params(4, 11, 5), steiner_params(4, 23, 7),
                 steiner_params(3, 22, 6), steiner_params(2, 7, 3), steiner_params(3, 16, 4)})
    CHECK(divisibility_check(p).empty());
}

TEST_CASE("counting identities hold whenever divisibility does")
{
  for (unsigned t = 2; t <= 7; ++t)
    for (std::uint64_t v = t + 2; v <= 60; ++v)
      for (std::uint64_t k = t + 1; k < v; ++k) {
        for (Int lambda : {Int(1), Int(2), Int(6)}) {
          DesignParams p{t, v, k, lambda};
          for (unsigned s = 0; s + 1 <= t; ++s) {
            // lambda_s / lambda_{s+1} = (v - s) / (k - s)
            REQUIRE(lambda_s(p, s) / lambda_s(p, s + 1) == Ratio(Int(v - s), Int(k - s)));
          }
          if (!divisibility_check(p).empty())
            continue;
          const Int b = lambda_s(p, 0).num(), r = lambda_s(p, 1).num(), l2 = lambda_s(p, 2).num();
          REQUIRE(b * binom(k, t) == lambda * binom(v, t));
          REQUIRE(b * k == Int(v) * r);
          REQUIRE(r * (k - 1) == l2 * (v - 1));
        }
      }
}

TEST_CASE("lambda_s counts blocks through an s-set of an actual design")
{
  // The Fano plane 2-(7,3,1) and its complement design 2-(7,4,2), counted by hand.
  std::vector<std::vector<int>> fano{{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};
  auto count_through = [&](const std::vector<int> &pts, bool complement) {
    int n = 0;
    for (const auto &blk : fano) {
      bool all = true;
      for (int p : pts) {
        bool in = std::find(blk.begin(), blk.end(), p) != blk.end();
        all = all && (complement ? !in : in);
      }
      n += all;
    }
    return n;
  };
  CHECK(lambda_s(steiner_params(2, 7, 3), 1) == Ratio(count_through({0}, false)));
  CHECK(lambda_s(steiner_params(2, 7, 3), 0) == Ratio(7));
  DesignParams comp{2, 7, 4, 2};
  CHECK(lambda_s(comp, 1) == Ratio(count_through({0}, true)));
  CHECK(lambda_s(comp, 2) == Ratio(count_through({0, 1}, true)));
}

TEST_CASE("bounds")
{
  CHECK(bounds_check(steiner_params(7, 12, 8)).cameron == CameronVerdict::equality_unlisted);
  CHECK(bounds_check(steiner_params(5, 24, 8)).cameron == CameronVerdict::equality_listed);
  CHECK(bounds_check(steiner_params(7, 11, 8)).cameron == CameronVerdict::violated);
  CHECK(bounds_check(steiner_params(7, 33, 10)).cameron == CameronVerdict::ok);
  CHECK_FALSE(bounds_check(steiner_params(7, 23, 9)).tits_ok);
  CHECK(bounds_check(steiner_params(7, 24, 9)).tits_ok);
  for (auto [t, k, v] : {std::tuple{3u, 4ull, 8ull}, {3u, 6ull, 22ull}, {3u, 12ull, 112ull}, {4u, 7ull, 23ull},
                         {5u, 8ull, 24ull}}) {
    CHECK(cameron_equality_listed(t, k, v));
    CHECK(bounds_check(steiner_params(t, v, k)).cameron == CameronVerdict::equality_listed);
  }
  CHECK_FALSE(cameron_equality_listed(7, 8, 12));
  // 2-designs are outside Cameron's theorem.
  CHECK(bounds_check(steiner_params(2, 7, 3)).cameron == CameronVerdict::ok);
}

TEST_CASE("kmax7")
{
  CHECK(kmax7(16) == 9);
  CHECK(kmax7(32) == 11);
  CHECK(kmax7(33) == 11);
  CHECK(kmax7(9) == 8);
  CHECK(kmax7(1u << 20) == 1029);
  CHECK_THROWS(kmax7(8));

  SUBCASE("agrees with an independent search and with Cameron's inequality")
  {
    for (std::uint64_t v = 9; v <= 200'000; ++v) {
      const auto k = kmax7(v);
      REQUIRE(k == kmax7_oracle(v));
      // Cameron pass at t = 7 implies k <= kmax7.
      REQUIRE((Int(k + 1) - 5) * (Int(k + 1) - 6) > Int(v) - 6);
    }
  }

  SUBCASE("below the span bound for every 2^d, d >= 4")
  {
    for (unsigned d = 4; d <= 62; ++d) {
      const std::uint64_t v = std::uint64_t{1} << d;
      CHECK(kmax7(v) < v - 1);
    }
  }
}

TEST_CASE("cameron_kmax is the largest k satisfying Cameron's inequality")
{
  for (unsigned t = 3; t <= 8; ++t)
    for (std::uint64_t v = t + 2; v <= 3000; ++v) {
      std::uint64_t best = 0;
      for (std::uint64_t k = t; k <= v; ++k)
        if ((Int(k) - t + 2) * (Int(k) - t + 1) <= Int(v) - t + 1)
          best = k;
      REQUIRE(cameron_kmax(t, v) == best);
    }
}

TEST_CASE("Tits and Cameron at t = 7")
{
  // Cameron's bound is the stronger one for large k, Tits' for small k;
  // compare both on the whole window.
  std::uint64_t tits_only = 0, cameron_only = 0;
  for (std::uint64_t v = 9; v <= 10'000; ++v)
    for (std::uint64_t k = 8; k <= kmax7(v) && k < v; ++k) {
      auto b = bounds_check(steiner_params(7, v, k));
      const bool cam = b.cameron != CameronVerdict::violated;
      if (cam && !b.tits_ok) {
        ++cameron_only;
        REQUIRE(k <= 12);
      }
      if (!cam && b.tits_ok)
        ++tits_only;
    }
  CHECK(cameron_only > 0);
  CHECK(tits_only > 0);
}

TEST_CASE("admissibility reports")
{
  CHECK(admissible_report(steiner_params(7, 24, 8)).admissible);
  CHECK_FALSE(admissible_report(steiner_params(7, 16, 8)).admissible);
  CHECK(admissible_report(steiner_params(3, 8, 4)).admissible);
  CHECK(admissible_report(steiner_params(7, 16, 8)).verdict_line() == "inadmissible: lambda_2 = 2002/6");
  CHECK(admissible_report(steiner_params(3, 8, 4)).verdict_line() == "admissible: 3-(8,4,1)");
  CHECK(admissible_report(steiner_params(7, 12, 8)).verdict_line().find("inadmissible") == 0);
  auto text = admissible_report(steiner_params(7, 16, 8)).to_string();
  CHECK(text.find("lambda_2 = 1001/3") != std::string::npos);
  CHECK(text.find("divisibility failures: s=2 s=5") != std::string::npos);
}
