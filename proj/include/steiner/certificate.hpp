#ifndef STEINER_CERTIFICATE_HPP
#define STEINER_CERTIFICATE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "steiner/exactmath.hpp"
#include "steiner/group_catalog.hpp"

namespace steiner {

enum class Reason {
  KExceedsDegree,
  CameronBound,
  CameronEqualityUnlisted,
  TitsBound,
  DivisibilityFail,
  BExceedsGroupOrder,
  StabilizerNotIntegral,
  StabilizerNotDivisor,
  EqAFail,
  Eq0NoSolution,
  Parity16,
  SpanArgument,
  ExternalCitation,
};

std::string_view reason_tag(Reason r);
std::optional<Reason> reason_from_tag(std::string_view tag);

struct Witness {
  std::string name;
  Int value;

  friend bool operator==(const Witness &, const Witness &) = default;
};

/// One eliminated (group, k) case, or a k-range for which the failing
/// condition is monotone in k. The witnesses are the exact integers needed
/// to recheck the failure without rerunning the elimination.
struct Certificate {
  unsigned t = 7;
  GroupSpec group;
  std::uint64_t k_min = 0;
  std::uint64_t k_max = 0;
  Reason reason = Reason::ExternalCitation;
  std::vector<Witness> witnesses;
  /// Literature pointer or cited premise; empty for purely arithmetic claims.
  std::string citation;

  bool single_k() const { return k_min == k_max; }
  /// Throws std::out_of_range if absent.
  const Int &witness(std::string_view name) const;
  void add(std::string name, Int value) { witnesses.push_back({std::move(name), std::move(value)}); }

  friend bool operator==(const Certificate &, const Certificate &) = default;
};

struct Survivor {
  unsigned t = 7;
  GroupSpec group;
  std::uint64_t k = 0;
  std::string detail;
};

struct SweepResult {
  unsigned t = 7;
  std::uint64_t v_max = 0;
  std::vector<Certificate> certificates;
  std::vector<Survivor> survivors;
  std::vector<Certificate> externally_cited;
};

using OrderedJson = nlohmann::ordered_json;

/// Family parameters as decimal strings: {"q","p","e"} for PSL2, {"d"} for
/// Affine_SL, {"v"} for Alternating and Mathieu, {} for fixed groups.
OrderedJson group_params_json(const GroupSpec &g);
/// Inverse of group_params_json; validates through the catalog factories.
GroupSpec group_from_json(std::string_view family, const OrderedJson &params);

/// {family, params, v, k, reason, witnesses[, citation]}; k is a decimal string
/// for a single value and a two-element array for a range.
OrderedJson certificate_to_json(const Certificate &c);
Certificate certificate_from_json(const OrderedJson &j, unsigned t);

OrderedJson survivor_to_json(const Survivor &s);

/// Canonical serialization: top-level keys spec_version, t, v_max,
/// certificates, survivors, external in that order, one record per line.
void write_sweep_json(std::ostream &os, const SweepResult &result);

/// Human-readable one-liner used by the CLI.
std::string describe(const Certificate &c);

} // namespace steiner

#endif // STEINER_CERTIFICATE_HPP
