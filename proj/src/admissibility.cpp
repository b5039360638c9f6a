#include "steiner/admissibility.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace steiner {

void DesignParams::validate() const
{
  if (t < 1)
    throw std::invalid_argument("design parameters: t must be at least 1");
  if (t > k)
    throw std::invalid_argument("design parameters: need t <= k");
  if (k > v)
    throw std::invalid_argument("design parameters: need k <= v");
  if (lambda < 1)
    throw std::invalid_argument("design parameters: lambda must be at least 1");
}

std::string DesignParams::to_string() const
{
  std::ostringstream os;
  os << t << "-(" << v << "," << k << "," << lambda << ")";
  return os.str();
}

DivisibilityTerm divisibility_term(const DesignParams &p, unsigned s)
{
  if (s > p.t)
    throw std::invalid_argument("divisibility_term: s exceeds t");
  return {s, p.lambda * binom(p.v - s, p.t - s), binom(p.k - s, p.t - s)};
}

Ratio lambda_s(const DesignParams &p, unsigned s)
{
  if (s > p.t)
    throw std::invalid_argument("lambda_s: s exceeds t");
  auto term = divisibility_term(p, s);
  return {term.numerator, term.denominator};
}

BasicCounts basic_counts(const DesignParams &p)
{
  p.validate();
  return {lambda_s(p, 0), lambda_s(p, p.t >= 1 ? 1 : 0)};
}

std::vector<unsigned> divisibility_check(const DesignParams &p)
{
  p.validate();
  std::vector<unsigned> failed;
  for (unsigned s = 0; s <= p.t; ++s)
    if (!divisibility_term(p, s).holds())
      failed.push_back(s);
  return failed;
}

std::string to_string(CameronVerdict verdict)
{
  switch (verdict) {
  case CameronVerdict::ok:
    return "ok";
  case CameronVerdict::equality_listed:
    return "equality_listed";
  case CameronVerdict::equality_unlisted:
    return "equality_unlisted";
  case CameronVerdict::violated:
    return "violated";
  }
  return "?";
}

bool cameron_equality_listed(unsigned t, std::uint64_t k, std::uint64_t v)
{
  static constexpr std::array<std::tuple<unsigned, std::uint64_t, std::uint64_t>, 5> listed{{
    {3, 4, 8}, {3, 6, 22}, {3, 12, 112}, {4, 7, 23}, {5, 8, 24},
  }};
  for (const auto &[lt, lk, lv] : listed)
    if (lt == t && lk == k && lv == v)
      return true;
  return false;
}

BoundsReport bounds_check(const DesignParams &p)
{
  p.validate();
  BoundsReport out;
  const Int t = p.t, v = p.v, k = p.k;

  out.tits_ok = v >= (t + 1) * (k - t + 1);

  if (p.t > 2) {
    Int lhs = v - t + 1;
    Int rhs = (k - t + 2) * (k - t + 1);
    if (lhs > rhs)
      out.cameron = CameronVerdict::ok;
    else if (lhs < rhs)
      out.cameron = CameronVerdict::violated;
    else if (cameron_equality_listed(p.t, p.k, p.v))
      out.cameron = CameronVerdict::equality_listed;
    else
      out.cameron = CameronVerdict::equality_unlisted;
  }

  const unsigned s = p.t / 2;
  const Ratio b = lambda_s(p, 0);
  if (p.t % 2 == 0) {
    if (v >= k + s)
      out.rw_ok = b >= Ratio(binom(v, Int(s)));
  } else {
    if (v - 1 >= k + s)
      out.rw_ok = b >= Ratio(2 * binom(v - 1, Int(s)));
  }
  return out;
}

std::uint64_t kmax7(std::uint64_t v)
{
  if (v < 9)
    throw std::invalid_argument("kmax7: v must be at least 9");
  // floor(sqrt(v) + 11/2) is s + 5 when the fractional part of sqrt(v) is
  // below 1/2, i.e. when 4v < (2s+1)^2, and s + 6 otherwise.
  const Int vv = v;
  const Int s = isqrt(vv);
  const Int half_up = (2 * s + 1) * (2 * s + 1);
  return to_u64(4 * vv < half_up ? s + 5 : s + 6);
}

std::uint64_t cameron_kmax(unsigned t, std::uint64_t v)
{
  if (t < 3)
    throw std::invalid_argument("cameron_kmax: Cameron's bound needs t >= 3");
  if (v + 1 < t)
    throw std::invalid_argument("cameron_kmax: v too small for t");
  // m = k - t + 1 satisfies m (m + 1) <= v - t + 1 =: w, so
  // m = floor((isqrt(4w + 1) - 1) / 2).
  const Int w = Int(v) - t + 1;
  Int m = (isqrt(4 * w + 1) - 1) / 2;
  return to_u64(m + t - 1);
}

AdmissibilityReport admissible_report(const DesignParams &p)
{
  p.validate();
  AdmissibilityReport rep;
  rep.params = p;
  for (unsigned s = 0; s <= p.t; ++s)
    rep.lambdas.emplace_back(s, lambda_s(p, s));
  auto counts = basic_counts(p);
  rep.b = counts.b;
  rep.r = counts.r;
  rep.failed_divisibility = divisibility_check(p);
  auto bounds = bounds_check(p);
  rep.tits_ok = bounds.tits_ok;
  rep.cameron_verdict = bounds.cameron;
  rep.rw_ok = bounds.rw_ok;
  rep.admissible = rep.failed_divisibility.empty() && rep.tits_ok &&
                   (rep.cameron_verdict == CameronVerdict::ok ||
                    rep.cameron_verdict == CameronVerdict::equality_listed) &&
                   rep.rw_ok;
  return rep;
}

std::string AdmissibilityReport::verdict_line() const
{
  if (admissible)
    return "admissible: " + params.to_string();
  if (!failed_divisibility.empty()) {
    auto term = divisibility_term(params, failed_divisibility.front());
    return "inadmissible: lambda_" + std::to_string(term.s) + " = " + term.numerator.str() + "/" +
           term.denominator.str();
  }
  if (cameron_verdict == CameronVerdict::violated)
    return "inadmissible: Cameron bound v-t+1 >= (k-t+2)(k-t+1) violated";
  if (cameron_verdict == CameronVerdict::equality_unlisted)
    return "inadmissible: Cameron bound attained at an unlisted (t,k,v)";
  if (!tits_ok)
    return "inadmissible: Tits bound v >= (t+1)(k-t+1) violated";
  return "inadmissible: Ray-Chaudhuri-Wilson bound on b violated";
}

std::string AdmissibilityReport::to_string() const
{
  std::ostringstream os;
  os << "design " << params.to_string() << (params.nontrivial() ? "" : " (trivial)") << "\n";
  for (const auto &[s, value] : lambdas)
    os << "  lambda_" << s << " = " << value << "\n";
  os << "  b = " << b << "\n";
  os << "  r = " << r << "\n";
  os << "  divisibility failures:";
  if (failed_divisibility.empty())
    os << " none";
  for (unsigned s : failed_divisibility)
    os << " s=" << s;
  os << "\n";
  os << "  tits: " << (tits_ok ? "ok" : "violated") << "\n";
  os << "  cameron: " << steiner::to_string(cameron_verdict) << "\n";
  os << "  ray-chaudhuri-wilson: " << (rw_ok ? "ok" : "violated") << "\n";
  os << verdict_line() << "\n";
  return os.str();
}

} // namespace steiner
