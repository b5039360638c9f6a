#ifndef STEINER_DESIGNS_HPP
#define STEINER_DESIGNS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "steiner/permgroup.hpp"

namespace steiner {

using Block = std::vector<Point>;

/// Points 0..v-1 with a list of k-subsets as blocks. Blocks are kept sorted
/// and the block list is kept in lexicographic order, which is the canonical
/// form used for files and for orbit comparisons.
class IncidenceStructure {
public:
  /// Throws std::invalid_argument for wrong block sizes, out-of-range or
  /// repeated points, or duplicate blocks.
  IncidenceStructure(std::uint32_t v, std::uint32_t k, std::vector<Block> blocks);

  std::uint32_t v() const { return v_; }
  std::uint32_t k() const { return k_; }
  std::size_t b() const { return blocks_.size(); }
  const std::vector<Block> &blocks() const { return blocks_; }
  bool has_block(const Block &sorted) const;

private:
  std::uint32_t v_, k_;
  std::vector<Block> blocks_;
};

/// The boolean Steiner quadruple system on GF(2)^n: every 4-subset with zero
/// XOR sum. Requires 3 <= n <= 7.
IncidenceStructure boolean_sqs(unsigned n);

/// lambda if every t-subset lies in exactly lambda blocks. Throws
/// SizeCapExceeded when C(v, t) exceeds cap.
std::optional<std::uint64_t> verify_design(const IncidenceStructure &s, unsigned t,
                                           std::uint64_t cap = 10'000'000);

bool is_automorphism(const Permutation &p, const IncidenceStructure &s);

/// Whether the group generated by gs has a single orbit on blocks. Throws
/// std::invalid_argument if some generator is not an automorphism.
bool block_transitive(const GeneratorSet &gs, const IncidenceStructure &s);

bool point_transitive(const GeneratorSet &gs, const IncidenceStructure &s);

/// Canonical text form: "STEINER v k b" followed by one sorted block per line
/// in lexicographic order, points 0-based and space-separated.
void write_design(std::ostream &os, const IncidenceStructure &s);

/// Parses the canonical text form. Rejects a bad header, wrong block counts
/// or sizes, out-of-range points, duplicates, and non-canonical ordering.
IncidenceStructure read_design(std::istream &is);

} // namespace steiner

#endif // STEINER_DESIGNS_HPP
