#include "steiner/designs.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "steiner/subsets.hpp"

namespace steiner {

IncidenceStructure::IncidenceStructure(std::uint32_t v, std::uint32_t k, std::vector<Block> blocks)
    : v_(v), k_(k), blocks_(std::move(blocks))
{
  if (k_ > v_)
    throw std::invalid_argument("incidence structure: block size exceeds point count");
  for (auto &blk : blocks_) {
    if (blk.size() != k_)
      throw std::invalid_argument("incidence structure: block of size " + std::to_string(blk.size()) +
                                  ", expected " + std::to_string(k_));
    std::sort(blk.begin(), blk.end());
    if (std::adjacent_find(blk.begin(), blk.end()) != blk.end())
      throw std::invalid_argument("incidence structure: block repeats a point");
    if (!blk.empty() && blk.back() >= v_)
      throw std::invalid_argument("incidence structure: point out of range");
  }
  std::sort(blocks_.begin(), blocks_.end());
  if (std::adjacent_find(blocks_.begin(), blocks_.end()) != blocks_.end())
    throw std::invalid_argument("incidence structure: duplicate block");
}

bool IncidenceStructure::has_block(const Block &sorted) const
{
  return std::binary_search(blocks_.begin(), blocks_.end(), sorted);
}

IncidenceStructure boolean_sqs(unsigned n)
{
  if (n < 3 || n > 7)
    throw std::invalid_argument("boolean_sqs: need 3 <= n <= 7");
  const std::uint32_t v = 1u << n;
  std::vector<Block> blocks;
  for (Point a = 0; a < v; ++a)
    for (Point b = a + 1; b < v; ++b)
      for (Point c = b + 1; c < v; ++c) {
        Point d = a ^ b ^ c;
        if (d > c)
          blocks.push_back({a, b, c, d});
      }
  return IncidenceStructure(v, 4, std::move(blocks));
}

std::optional<std::uint64_t> verify_design(const IncidenceStructure &s, unsigned t, std::uint64_t cap)
{
  if (t > s.k())
    return std::nullopt;
  if (binom(Int(s.v()), Int(t)) > cap)
    throw SizeCapExceeded("C(" + std::to_string(s.v()) + "," + std::to_string(t) + ") exceeds the cap of " +
                          std::to_string(cap) + " subsets");
  SubsetRanker global(s.v(), t);
  SubsetRanker local(s.k(), t);
  std::vector<std::uint32_t> hits(global.count(), 0);
  std::vector<Point> sub(t);
  for (const auto &blk : s.blocks())
    for (std::uint64_t r = 0; r < local.count(); ++r) {
      auto idx = local.unrank(r);
      for (unsigned i = 0; i < t; ++i)
        sub[i] = blk[idx[i]];
      ++hits[global.rank(sub)];
    }
  if (hits.empty())
    return std::nullopt;
  const std::uint32_t lambda = hits.front();
  if (std::any_of(hits.begin(), hits.end(), [&](std::uint32_t h) { return h != lambda; }))
    return std::nullopt;
  return lambda;
}

bool is_automorphism(const Permutation &p, const IncidenceStructure &s)
{
  if (p.degree() != s.v())
    throw std::invalid_argument("is_automorphism: degree does not match the point count");
  for (const auto &blk : s.blocks())
    if (!s.has_block(image(p, blk)))
      return false;
  return true;
}

bool block_transitive(const GeneratorSet &gs, const IncidenceStructure &s)
{
  for (const auto &g : gs.gens())
    if (!is_automorphism(g, s))
      throw std::invalid_argument("block_transitive: generator is not an automorphism");
  if (s.b() == 0)
    return true;
  return orbit(gs, s.blocks().front()).size() == s.b();
}

bool point_transitive(const GeneratorSet &gs, const IncidenceStructure &s)
{
  if (gs.degree() != s.v())
    throw std::invalid_argument("point_transitive: degree does not match the point count");
  return s.v() == 0 || orbit(gs, Point{0}).size() == s.v();
}

void write_design(std::ostream &os, const IncidenceStructure &s)
{
  os << "STEINER " << s.v() << ' ' << s.k() << ' ' << s.b() << '\n';
  for (const auto &blk : s.blocks()) {
    for (std::size_t i = 0; i < blk.size(); ++i)
      os << (i ? " " : "") << blk[i];
    os << '\n';
  }
}

namespace {

std::uint32_t parse_u32(const std::string &tok, const char *what)
{
  Int n = parse_nat(tok);
  if (n > 0xffffffffu)
    throw std::invalid_argument(std::string("design file: ") + what + " out of range");
  return n.convert_to<std::uint32_t>();
}

} // namespace

IncidenceStructure read_design(std::istream &is)
{
  std::string line;
  if (!std::getline(is, line))
    throw std::invalid_argument("design file: missing header");
  std::istringstream header(line);
  std::string magic, vt, kt, bt, extra;
  if (!(header >> magic >> vt >> kt >> bt) || magic != "STEINER" || (header >> extra))
    throw std::invalid_argument("design file: header must be 'STEINER v k b'");
  const std::uint32_t v = parse_u32(vt, "v");
  const std::uint32_t k = parse_u32(kt, "k");
  const std::uint32_t b = parse_u32(bt, "b");

  std::vector<Block> blocks;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    std::istringstream row(line);
    Block blk;
    std::string tok;
    while (row >> tok) {
      std::uint32_t x = parse_u32(tok, "point");
      if (x >= v)
        throw std::invalid_argument("design file: point " + tok + " out of range");
      blk.push_back(x);
    }
    if (blk.size() != k)
      throw std::invalid_argument("design file: block line " + std::to_string(blocks.size() + 1) + " has " +
                                  std::to_string(blk.size()) + " points, expected " + std::to_string(k));
    if (!std::is_sorted(blk.begin(), blk.end()) || std::adjacent_find(blk.begin(), blk.end()) != blk.end())
      throw std::invalid_argument("design file: block line " + std::to_string(blocks.size() + 1) +
                                  " is not strictly ascending");
    if (!blocks.empty() && !(blocks.back() < blk))
      throw std::invalid_argument("design file: blocks not in strict lexicographic order (duplicate or unsorted)");
    blocks.push_back(std::move(blk));
  }
  if (blocks.size() != b)
    throw std::invalid_argument("design file: header announces " + std::to_string(b) + " blocks, found " +
                                std::to_string(blocks.size()));
  return IncidenceStructure(v, k, std::move(blocks));
}

} // namespace steiner
