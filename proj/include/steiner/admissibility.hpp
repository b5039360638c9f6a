#ifndef STEINER_ADMISSIBILITY_HPP
#define STEINER_ADMISSIBILITY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "steiner/exactmath.hpp"

namespace steiner {

/// Parameters of a t-(v, k, lambda) design. Steiner iff lambda = 1.
struct DesignParams {
  unsigned t = 0;
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  Int lambda = 1;

  /// Throws std::invalid_argument unless 1 <= t <= k <= v and lambda >= 1.
  void validate() const;
  bool nontrivial() const { return t < k && k < v; }
  bool steiner() const { return lambda == 1; }
  std::string to_string() const;
};

/// lambda * C(v-s, t-s) over C(k-s, t-s), unreduced; the s-th divisibility
/// condition asks that the denominator divide the numerator.
struct DivisibilityTerm {
  unsigned s;
  Int numerator;
  Int denominator;

  bool holds() const { return numerator % denominator == 0; }
};

DivisibilityTerm divisibility_term(const DesignParams &p, unsigned s);

/// Number of blocks through a fixed s-subset. Throws for s > t.
Ratio lambda_s(const DesignParams &p, unsigned s);

struct BasicCounts {
  Ratio b;
  Ratio r;
};

BasicCounts basic_counts(const DesignParams &p);

/// Every s in {0, ..., t} whose divisibility condition fails, ascending.
/// s = 0 is the integrality of b.
std::vector<unsigned> divisibility_check(const DesignParams &p);

enum class CameronVerdict { ok, equality_listed, equality_unlisted, violated };

std::string to_string(CameronVerdict verdict);

struct BoundsReport {
  bool tits_ok = true;
  CameronVerdict cameron = CameronVerdict::ok;
  bool rw_ok = true;
};

/// Tits: v >= (t+1)(k-t+1). Cameron (t > 2): v-t+1 >= (k-t+2)(k-t+1), with
/// equality possible only for the five listed (t, k, v). Ray-Chaudhuri and
/// Wilson lower bound on b, applied when its degree hypothesis holds.
BoundsReport bounds_check(const DesignParams &p);

/// True when (t, k, v) is one of the parameter sets attaining Cameron's bound.
bool cameron_equality_listed(unsigned t, std::uint64_t k, std::uint64_t v);

/// floor(sqrt(v) + 11/2), the block-size cap for non-trivial Steiner
/// 7-designs. Throws for v < 9.
std::uint64_t kmax7(std::uint64_t v);

/// Largest k satisfying Cameron's inequality (k-t+2)(k-t+1) <= v-t+1 for
/// t >= 3; used as the block-size cap for t other than 7.
std::uint64_t cameron_kmax(unsigned t, std::uint64_t v);

struct AdmissibilityReport {
  DesignParams params;
  std::vector<std::pair<unsigned, Ratio>> lambdas;
  Ratio b;
  Ratio r;
  std::vector<unsigned> failed_divisibility;
  bool tits_ok = true;
  CameronVerdict cameron_verdict = CameronVerdict::ok;
  bool rw_ok = true;
  bool admissible = false;

  /// Multi-line human-readable rendering used by the CLI.
  std::string to_string() const;
  /// One-line verdict, e.g. "inadmissible: lambda_2 = 2002/6".
  std::string verdict_line() const;
};

AdmissibilityReport admissible_report(const DesignParams &p);

} // namespace steiner

#endif // STEINER_ADMISSIBILITY_HPP
