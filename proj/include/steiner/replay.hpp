#ifndef STEINER_REPLAY_HPP
#define STEINER_REPLAY_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "steiner/certificate.hpp"

/// Independent checker for elimination certificates. Nothing here calls into
/// elimination.cpp: group orders, bounds and the stabilizer equation table are recomputed
/// from the family parameters, and each stored witness must match its
/// recomputed value exactly before the failure condition is evaluated.
namespace steiner {

/// Empty when the certificate's failure condition is reproduced; otherwise a
/// description of the first mismatch.
std::optional<std::string> replay_certificate(const Certificate &c);

struct ReplayReport {
  unsigned t = 0;
  std::uint64_t v_max = 0;
  std::size_t certificates = 0;
  std::size_t external = 0;
  std::size_t survivors = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Replays a certificate file as written by write_sweep_json, one record at a
/// time. Besides each certificate it checks coverage: for every degree
/// 9..v_max with a non-alternating candidate, each candidate's k-values
/// t+1..v-1 are covered exactly once by certificates, survivors and external
/// citations, and nothing else is listed.
ReplayReport replay_stream(std::istream &is);

} // namespace steiner

#endif // STEINER_REPLAY_HPP
