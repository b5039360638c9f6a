#ifndef STEINER_ELIMINATION_HPP
#define STEINER_ELIMINATION_HPP

#include <cstdint>
#include <vector>

#include "steiner/admissibility.hpp"
#include "steiner/certificate.hpp"
#include "steiner/group_catalog.hpp"

/// Case-by-case elimination of block-transitive Steiner t-designs over the
/// 3-homogeneous groups. Every eliminated (group, k) case yields a
/// Certificate whose witnesses let replay.hpp recheck it from scratch.
///
/// Supported t: 6 and 7. The affine and parity arguments are specific to
/// t = 7; for t = 6 those groups go through the generic arithmetic route and
/// survivors are reported rather than argued away.
namespace steiner {

/// Smallest k with a range certificate instead of per-k certificates for
/// PSL2. Below it every k carries its own stabilizer equation table.
inline constexpr std::uint64_t psl2_range_threshold = 27;

/// Largest k to examine at degree v: kmax7(v) for t = 7, the largest k
/// satisfying Cameron's inequality otherwise. Never exceeds v - 1.
std::uint64_t block_size_cap(unsigned t, std::uint64_t v);

struct StabilizerOrder {
  std::uint64_t a; ///< extension index; 1 for groups of fixed order
  Int order;       ///< |G_B| = |G| / b
};

/// Candidate block stabilizer orders |G_B| = |G| / b, one per extension index
/// a | ne for PSL2 and a single entry otherwise. Entries where |G| / b is not
/// a positive integer are dropped, so an empty result eliminates the case.
/// Throws std::invalid_argument unless b is integral.
std::vector<StabilizerOrder> stab_order(const GroupSpec &g, const DesignParams &p);

/// v = 8: one K_EXCEEDS_DEGREE certificate. v = 32: one certificate per
/// k in 8..11 for AGammaL(1,32). Throws for other v.
std::vector<Certificate> eliminate_affine_small(std::uint64_t v);

/// SPAN_ARGUMENT for the affine group with point stabilizer SL(d,2), d >= 4.
/// For d <= 5 the transitivity premise is checked by orbit computation and
/// the orbit length is stored as a witness; beyond that it is cited.
Certificate eliminate_sl_d2(unsigned d);

/// DIVISIBILITY_FAIL(2) for k = 8 and 9 at degree 16.
std::vector<Certificate> eliminate_a7_16();

struct CaseResult {
  std::vector<Certificate> certificates;
  std::vector<Survivor> survivors;
};

/// PSL2(q) for every k in [t+1, block_size_cap(t, q+1)]. Per-k certificates
/// below psl2_range_threshold; above it, ranges where |G_B| n < 2 with parity
/// (q even) or |G_B| < 1 (q odd), with per-k fallback. Throws unless q is a
/// prime power >= 8.
CaseResult eliminate_psl2(std::uint64_t q, unsigned t = 7);

/// Every catalog candidate of degree v, including the CAMERON_BOUND range
/// above the cap for non-alternating groups. Throws for v < 9 or
/// unsupported t.
SweepResult eliminate_degree(std::uint64_t v, unsigned t = 7);

/// All degrees 9..v_max with a non-alternating candidate, merged and sorted
/// by (v, family, k). The output does not depend on jobs.
SweepResult sweep(unsigned t, std::uint64_t v_max, unsigned jobs = 1);

} // namespace steiner

#endif // STEINER_ELIMINATION_HPP
