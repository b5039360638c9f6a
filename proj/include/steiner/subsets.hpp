#ifndef STEINER_SUBSETS_HPP
#define STEINER_SUBSETS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace steiner {

/// Colexicographic ranking of s-subsets of {0, ..., n-1}: a sorted subset
/// c_1 < ... < c_s has rank sum C(c_i, i). Callers keep C(n, s) within 64 bits.
class SubsetRanker {
public:
  SubsetRanker(std::size_t n, unsigned s) : n_(n), s_(s), table_((n + 1) * (s + 1), 0)
  {
    for (std::size_t m = 0; m <= n; ++m) {
      at(m, 0) = 1;
      for (unsigned r = 1; r <= s && r <= m; ++r)
        at(m, r) = at(m - 1, r - 1) + (r <= m - 1 ? at(m - 1, r) : 0);
    }
  }

  std::uint64_t count() const { return get(n_, s_); }

  template <class Sorted>
  std::uint64_t rank(const Sorted &sorted) const
  {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < s_; ++i)
      r += get(sorted[i], i + 1);
    return r;
  }

  std::vector<std::uint32_t> unrank(std::uint64_t r) const
  {
    std::vector<std::uint32_t> out(s_);
    std::size_t c = n_;
    for (unsigned i = s_; i >= 1; --i) {
      while (get(c, i) > r)
        --c;
      out[i - 1] = static_cast<std::uint32_t>(c);
      r -= get(c, i);
    }
    return out;
  }

private:
  std::uint64_t &at(std::size_t m, unsigned r) { return table_[m * (s_ + 1) + r]; }
  std::uint64_t get(std::size_t m, unsigned r) const
  {
    return r > m ? 0 : table_[m * (s_ + 1) + r];
  }

  std::size_t n_;
  unsigned s_;
  std::vector<std::uint64_t> table_;
};

} // namespace steiner

#endif // STEINER_SUBSETS_HPP
