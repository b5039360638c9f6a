#include "steiner/permgroup.hpp"
#include "steiner/subsets.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace steiner {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("Permutation: image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<Point> id(degree);
  for (std::size_t i = 0; i < degree; ++i)
    id[i] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(id);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>> &cycles)
{
  std::vector<Point> img = identity(degree).images_;
  for (const auto &cycle : cycles)
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree)
        throw std::invalid_argument("Permutation::from_cycles: point out of range");
      img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  return Permutation(std::move(img));
}

Permutation Permutation::parse(std::string_view line)
{
  std::istringstream is{std::string(line)};
  std::vector<Point> img;
  std::string tok;
  while (is >> tok)
    img.push_back(static_cast<Point>(to_u64(parse_nat(tok))));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::string Permutation::to_string() const
{
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(images_[i]);
  }
  return out;
}

Permutation operator*(const Permutation &a, const Permutation &b)
{
  if (a.degree() != b.degree())
    throw std::invalid_argument("Permutation product: degree mismatch");
  Permutation p;
  p.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i)
    p.images_[i] = b.images_[a.images_[i]];
  return p;
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept
{
  return PointSetHash{}(p.images());
}

std::size_t PointSetHash::operator()(const PointSet &s) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (Point x : s) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

PointSet image(const Permutation &p, const PointSet &s)
{
  PointSet out;
  out.reserve(s.size());
  for (Point x : s)
    out.push_back(p(x));
  std::sort(out.begin(), out.end());
  return out;
}

GeneratorSet::GeneratorSet(std::size_t degree, std::vector<Permutation> gens)
    : degree_(degree), gens_(std::move(gens))
{
  if (gens_.empty())
    throw std::invalid_argument("GeneratorSet: need at least one generator");
  for (const auto &g : gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("GeneratorSet: generator degree mismatch");
}

std::vector<Point> orbit(const GeneratorSet &gs, Point seed)
{
  if (seed >= gs.degree())
    throw std::invalid_argument("orbit: seed out of range");
  std::vector<bool> seen(gs.degree(), false);
  std::vector<Point> out{seed};
  seen[seed] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto &g : gs.gens()) {
      Point y = g(out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointSet> orbit(const GeneratorSet &gs, const PointSet &seed, std::size_t cap)
{
  PointSet start = seed;
  std::sort(start.begin(), start.end());
  if (std::adjacent_find(start.begin(), start.end()) != start.end())
    throw std::invalid_argument("orbit: seed set has repeated points");
  for (Point x : start)
    if (x >= gs.degree())
      throw std::invalid_argument("orbit: seed set out of range");
  std::unordered_set<PointSet, PointSetHash> seen{start};
  std::vector<PointSet> out{start};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto &g : gs.gens()) {
      PointSet img = image(g, out[i]);
      if (seen.insert(img).second) {
        if (out.size() >= cap)
          throw SizeCapExceeded("set orbit exceeds " + std::to_string(cap) + " elements");
        out.push_back(std::move(img));
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Schreier-Sims

StabilizerChain::StabilizerChain(const GeneratorSet &gs) : degree_(gs.degree())
{
  for (const auto &g : gs.gens()) {
    if (g.is_identity() || contains(g))
      continue;
    auto [residue, level] = sift(g, 0);
    for (std::size_t l = 0; l <= level; ++l)
      add_generator(l, residue);
    for (std::size_t l = level + 1; l-- > 0;)
      complete(l);
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g, std::size_t from) const
{
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const auto &lvl = levels_[l];
    Point b = g(lvl.base);
    if (!lvl.transversal[b])
      return {std::move(g), l};
    g = g * lvl.transversal[b]->inverse();
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation &p) const
{
  if (p.degree() != degree_)
    return false;
  auto [residue, level] = sift(p, 0);
  return level == levels_.size() && residue.is_identity();
}

void StabilizerChain::add_generator(std::size_t level, const Permutation &g)
{
  if (level == levels_.size()) {
    Level lvl;
    lvl.base = 0;
    while (g(lvl.base) == lvl.base)
      ++lvl.base;
    lvl.transversal.assign(degree_, std::nullopt);
    lvl.transversal[lvl.base] = Permutation::identity(degree_);
    lvl.orbit.push_back(lvl.base);
    lvl.tested.push_back(0);
    levels_.push_back(std::move(lvl));
  }
  auto &lvl = levels_[level];
  lvl.gens.push_back(g);
  extend_orbit(lvl, lvl.gens.size() - 1);
}

void StabilizerChain::extend_orbit(Level &lvl, std::size_t first_new_gen)
{
  const std::size_t old_size = lvl.orbit.size();
  for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
    const std::size_t first = i < old_size ? first_new_gen : 0;
    for (std::size_t s = first; s < lvl.gens.size(); ++s) {
      Point b = lvl.orbit[i];
      Point c = lvl.gens[s](b);
      if (!lvl.transversal[c]) {
        lvl.transversal[c] = *lvl.transversal[b] * lvl.gens[s];
        lvl.orbit.push_back(c);
        lvl.tested.push_back(0);
      }
    }
  }
}

void StabilizerChain::complete(std::size_t i)
{
  for (std::size_t idx = 0; idx < levels_[i].orbit.size(); ++idx) {
    while (levels_[i].tested[idx] < levels_[i].gens.size()) {
      const std::size_t s = levels_[i].tested[idx]++;
      const auto &lvl = levels_[i];
      Point b = lvl.orbit[idx];
      const Permutation &x = lvl.gens[s];
      Point c = x(b);
      Permutation h = *lvl.transversal[b] * x * lvl.transversal[c]->inverse();
      auto [residue, j] = sift(std::move(h), i + 1);
      if (residue.is_identity())
        continue;
      for (std::size_t l = i + 1; l <= j; ++l)
        add_generator(l, residue);
      for (std::size_t l = j + 1; l-- > i + 1;)
        complete(l);
    }
  }
}

Int StabilizerChain::order() const
{
  Int acc = 1;
  for (const auto &lvl : levels_)
    acc *= lvl.orbit.size();
  return acc;
}

std::vector<Point> StabilizerChain::base() const
{
  std::vector<Point> out;
  for (const auto &lvl : levels_)
    out.push_back(lvl.base);
  return out;
}

std::vector<std::size_t> StabilizerChain::basic_orbit_lengths() const
{
  std::vector<std::size_t> out;
  for (const auto &lvl : levels_)
    out.push_back(lvl.orbit.size());
  return out;
}

Int enumerated_order(const GeneratorSet &gs)
{
  return StabilizerChain(gs).order();
}

// ---------------------------------------------------------------------------
// Orbits on s-subsets


std::uint64_t homogeneity_orbits(const GeneratorSet &gs, unsigned s, std::uint64_t cap)
{
  const std::size_t n = gs.degree();
  if (s > n)
    return 0;
  if (binom(Int(n), Int(s)) > cap)
    throw SizeCapExceeded("C(" + std::to_string(n) + "," + std::to_string(s) + ") exceeds the cap of " +
                          std::to_string(cap) + " subsets");
  if (s == 0)
    return 1;
  SubsetRanker ranker(n, s);
  const std::uint64_t total = ranker.count();
  std::vector<bool> seen(total, false);
  std::uint64_t orbits = 0;
  std::vector<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (seen[start])
      continue;
    ++orbits;
    seen[start] = true;
    queue.assign(1, start);
    while (!queue.empty()) {
      PointSet cur = ranker.unrank(queue.back());
      queue.pop_back();
      for (const auto &g : gs.gens()) {
        std::uint64_t r = ranker.rank(image(g, cur));
        if (!seen[r]) {
          seen[r] = true;
          queue.push_back(r);
        }
      }
    }
  }
  return orbits;
}

GeneratorSet setwise_stabilizer(const GeneratorSet &gs, const PointSet &set, std::size_t cap)
{
  const auto orb = orbit(gs, set, cap);
  std::unordered_map<PointSet, std::size_t, PointSetHash> index;
  for (std::size_t i = 0; i < orb.size(); ++i)
    index.emplace(orb[i], i);

  // Transversal u_i maps orb[0] to orb[i]; rebuilt in breadth-first order so
  // each element is a parent's transversal times one generator.
  std::vector<std::optional<Permutation>> u(orb.size());
  u[0] = Permutation::identity(gs.degree());
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (const auto &g : gs.gens()) {
      std::size_t j = index.at(image(g, orb[i]));
      if (!u[j]) {
        u[j] = *u[i] * g;
        queue.push_back(j);
      }
    }
  }

  std::set<Permutation> schreier;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (const auto &g : gs.gens()) {
      std::size_t j = index.at(image(g, orb[i]));
      Permutation h = *u[i] * g * u[j]->inverse();
      if (!h.is_identity())
        schreier.insert(std::move(h));
    }
  std::vector<Permutation> gens(schreier.begin(), schreier.end());
  if (gens.empty())
    gens.push_back(Permutation::identity(gs.degree()));
  return GeneratorSet(gs.degree(), std::move(gens));
}

Int setwise_stabilizer_order(const GeneratorSet &gs, const PointSet &set, std::size_t cap)
{
  const auto orb = orbit(gs, set, cap);
  Int total = enumerated_order(gs);
  if (total % orb.size() != 0)
    throw std::logic_error("setwise_stabilizer_order: orbit length does not divide group order");
  return total / orb.size();
}

GeneratorSet restrict_degree(const GeneratorSet &gs, std::size_t new_degree)
{
  std::vector<Permutation> gens;
  for (const auto &g : gs.gens()) {
    for (std::size_t x = 0; x < new_degree; ++x)
      if (g(static_cast<Point>(x)) >= new_degree)
        throw std::invalid_argument("restrict_degree: points below the new degree are not invariant");
    std::vector<Point> img(g.images().begin(), g.images().begin() + new_degree);
    gens.emplace_back(std::move(img));
  }
  return GeneratorSet(new_degree, std::move(gens));
}

} // namespace steiner
