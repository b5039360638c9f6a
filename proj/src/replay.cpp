#include "steiner/replay.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "steiner/permgroup.hpp"

namespace steiner {

namespace {

// Witness bookkeeping: each expected name is looked up once and compared with
// its recomputed value; unlisted extra names are an error.
class Checker {
public:
  explicit Checker(const Certificate &c) : c_(c) {}

  const Int *get(const std::string &name)
  {
    for (const auto &w : c_.witnesses)
      if (w.name == name) {
        used_.insert(name);
        return &w.value;
      }
    fail("missing witness '" + name + "'");
    return nullptr;
  }

  // The stored value, after confirming it equals the recomputed one.
  bool expect(const std::string &name, const Int &recomputed)
  {
    const Int *w = get(name);
    if (!w)
      return false;
    if (*w != recomputed) {
      fail("witness '" + name + "' = " + to_decimal(*w) + ", recomputed " + to_decimal(recomputed));
      return false;
    }
    return true;
  }

  bool has(const std::string &name) const
  {
    return std::any_of(c_.witnesses.begin(), c_.witnesses.end(), [&](const Witness &w) { return w.name == name; });
  }

  void require(bool cond, const std::string &what)
  {
    if (!cond)
      fail(what);
  }

  void fail(std::string msg)
  {
    if (!error_)
      error_ = std::move(msg);
  }

  std::optional<std::string> finish()
  {
    if (!error_ && used_.size() != c_.witnesses.size())
      for (const auto &w : c_.witnesses)
        if (!used_.count(w.name)) {
          fail("unexpected witness '" + w.name + "'");
          break;
        }
    return error_;
  }

private:
  const Certificate &c_;
  std::set<std::string> used_;
  std::optional<std::string> error_;
};

Int pow2(unsigned d) { return Int(1) << d; }

// Group orders from their textbook formulas, kept separate from the catalog.
Int gl_d2_order(unsigned d)
{
  Int order = 1;
  for (unsigned i = 0; i < d; ++i)
    order *= pow2(d) - pow2(i);
  return order;
}

Int psl2_order(std::uint64_t q, std::uint64_t n, std::uint64_t a) { return Int(q + 1) * q * (q - 1) * a / n; }

Int full_order(const GroupSpec &g)
{
  switch (g.family) {
  case Family::AGL1_8:
    return 8 * 7;
  case Family::AGammaL1_8:
    return 8 * 7 * 3;
  case Family::AGammaL1_32:
    return 32 * 31 * 5;
  case Family::AffineSL:
    return pow2(static_cast<unsigned>(g.parameter)) * gl_d2_order(static_cast<unsigned>(g.parameter));
  case Family::AffineA7:
    return 16 * 2520;
  case Family::Alternating: {
    Int f = 1;
    for (std::uint64_t i = 2; i <= g.degree; ++i)
      f *= i;
    return f;
  }
  case Family::PSL2:
    return psl2_order(g.parameter, g.parameter % 2 ? 2 : 1, (g.parameter % 2 ? 2 : 1) * g.exponent);
  case Family::Mathieu:
    switch (g.degree) {
    case 11:
      return Int(11) * 10 * 9 * 8;
    case 12:
      return Int(12) * 11 * 10 * 9 * 8;
    case 22:
      return Int(2) * 22 * 21 * 20 * 48;
    case 23:
      return Int(23) * 22 * 21 * 20 * 48;
    case 24:
      return Int(24) * 23 * 22 * 21 * 20 * 48;
    }
    break;
  case Family::M11On12:
    return Int(11) * 10 * 9 * 8;
  }
  throw std::invalid_argument("replay: no order formula for " + g.name());
}

Int choose(std::uint64_t n, std::uint64_t r)
{
  if (r > n)
    return 0;
  Int c = 1;
  for (std::uint64_t i = 1; i <= r; ++i)
    c = c * (n - r + i) / i;
  return c;
}

Int fall(std::uint64_t n, unsigned m)
{
  Int f = 1;
  for (unsigned i = 0; i < m; ++i)
    f *= Int(n) - i;
  return f;
}

unsigned two_adic(Int n)
{
  unsigned e = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++e;
  }
  return e;
}

std::uint64_t kmax7_replay(std::uint64_t v)
{
  // Largest k with 2k - 11 <= 2 sqrt(v), i.e. (2k - 11)^2 <= 4v.
  std::uint64_t k = 6;
  while (Int(2 * (k + 1) - 11) * (2 * (k + 1) - 11) <= 4 * Int(v))
    ++k;
  return k;
}

bool cameron_listed(unsigned t, std::uint64_t k, std::uint64_t v)
{
  static const std::set<std::tuple<unsigned, std::uint64_t, std::uint64_t>> listed{
    {3, 4, 8}, {3, 6, 22}, {3, 12, 112}, {4, 7, 23}, {5, 8, 24}};
  return listed.count({t, k, v}) > 0;
}

void check_cameron(Checker &ck, const Certificate &c, bool strict)
{
  const std::uint64_t v = c.group.degree;
  const Int lhs = Int(v) - c.t + 1;
  const Int rhs = (Int(c.k_min) - c.t + 2) * (Int(c.k_min) - c.t + 1);
  if (!ck.expect("cameron_lhs", lhs) || !ck.expect("cameron_rhs", rhs))
    return;
  if (strict) {
    // (k-t+2)(k-t+1) increases with k, so k_min is the binding case.
    ck.require(lhs < rhs, "Cameron's inequality holds at k = " + std::to_string(c.k_min));
  } else {
    ck.require(c.single_k(), "equality certificate must name a single k");
    ck.require(lhs == rhs, "Cameron's inequality is not an equality");
    ck.require(!cameron_listed(c.t, c.k_min, v), "equality case is one of the listed designs");
  }
}

void check_divisibility(Checker &ck, const Certificate &c)
{
  ck.require(c.single_k(), "DIVISIBILITY_FAIL must name a single k");
  const Int *s = ck.get("s");
  if (!s)
    return;
  if (*s > c.t) {
    ck.fail("s exceeds t");
    return;
  }
  const unsigned si = s->convert_to<unsigned>();
  const Int num = choose(c.group.degree - si, c.t - si);
  const Int den = choose(c.k_min - si, c.t - si);
  if (ck.expect("numerator", num) && ck.expect("denominator", den))
    ck.require(num % den != 0, "lambda_" + std::to_string(si) + " is integral");
}

std::optional<Int> block_count(Checker &ck, const Certificate &c)
{
  const Int num = choose(c.group.degree, c.t), den = choose(c.k_min, c.t);
  if (num % den != 0) {
    ck.fail("b is not integral, so this reason does not apply");
    return std::nullopt;
  }
  if (!ck.expect("b", num / den))
    return std::nullopt;
  return num / den;
}

void check_order_reason(Checker &ck, const Certificate &c)
{
  ck.require(c.single_k(), "order certificates must name a single k");
  auto b = block_count(ck, c);
  const Int order = full_order(c.group);
  if (!b || !ck.expect("group_order", order))
    return;
  if (c.reason == Reason::BExceedsGroupOrder) {
    ck.require(*b > order, "b does not exceed |G|");
  } else if (ck.expect("remainder", order % *b)) {
    ck.require(order % *b != 0, "b divides |G|");
  }
}

struct Psl2Data {
  std::uint64_t q, n, e;
  Int P;
};

std::optional<Psl2Data> psl2_common(Checker &ck, const Certificate &c)
{
  if (c.group.family != Family::PSL2) {
    ck.fail("reason applies to PSL2 only");
    return std::nullopt;
  }
  Psl2Data d{c.group.parameter, c.group.parameter % 2 ? 2u : 1u, c.group.exponent, 0};
  d.P = fall(d.q - 2, c.t - 3);
  if (!ck.expect("q", d.q) || !ck.expect("n", d.n) || !ck.expect("P", d.P))
    return std::nullopt;
  return d;
}

void check_eq0_table(Checker &ck, const Certificate &c)
{
  auto d = psl2_common(ck, c);
  if (!d)
    return;
  const Int lhs = d->P * d->n;
  const Int fk = fall(c.k_min, c.t);
  if (!ck.expect("lhs", lhs) || !ck.expect("falling_k", fk))
    return;
  std::vector<std::uint64_t> as;
  for (std::uint64_t a = 1; a <= d->n * d->e; ++a)
    if (d->n * d->e % a == 0)
      as.push_back(a);
  for (std::size_t i = 0; i < as.size(); ++i) {
    const std::string idx = std::to_string(i);
    const Int rhs = fk * as[i];
    if (!ck.expect("a_" + idx, as[i]) || !ck.expect("rhs_" + idx, rhs) || !ck.expect("rem_" + idx, rhs % lhs))
      return;
    if (rhs % lhs != 0)
      continue;
    const Int stab = rhs / lhs;
    const Int order = psl2_order(d->q, d->n, as[i]);
    if (!ck.expect("stab_" + idx, stab) || !ck.expect("order_" + idx, order) ||
        !ck.expect("order_rem_" + idx, order % stab))
      return;
    ck.require(order % stab != 0, "branch a = " + std::to_string(as[i]) + " admits |G_B| = " + to_decimal(stab));
  }
}

void check_eq0_range(Checker &ck, const Certificate &c)
{
  auto d = psl2_common(ck, c);
  if (!d)
    return;
  const Int lhs = d->P * d->n;
  const std::uint64_t a_max = d->n * d->e;
  const Int rhs = fall(c.k_max, c.t) * a_max;
  if (ck.expect("a_max", a_max) && ck.expect("lhs", lhs) && ck.expect("rhs_at_k_hi", rhs))
    ck.require(rhs < lhs, "|G_B| may reach 1 at k_hi");
}

void check_parity(Checker &ck, const Certificate &c)
{
  auto d = psl2_common(ck, c);
  if (!d)
    return;
  if (d->q % 2 != 0) {
    ck.fail("parity argument needs q even");
    return;
  }
  const std::uint64_t a_max = d->e;
  unsigned min_v2 = two_adic(fall(c.k_min, c.t));
  for (std::uint64_t k = c.k_min + 1; k <= c.k_max; ++k)
    min_v2 = std::min(min_v2, two_adic(fall(k, c.t)));
  const unsigned v2p = two_adic(d->P);
  const Int rhs = fall(c.k_max, c.t) * a_max;
  const Int twice = 2 * d->P * d->n;
  if (!ck.expect("a_max", a_max) || !ck.expect("val2_P", v2p) || !ck.expect("min_val2_falling", min_v2) ||
      !ck.expect("rhs_at_k_hi", rhs) || !ck.expect("twice_lhs", twice))
    return;
  // |G_B| n < 2 forces falling(k, t) a = P n = P, impossible when the
  // 2-adic valuations differ.
  ck.require(rhs < twice, "|G_B| n may reach 2 at k_hi");
  ck.require(min_v2 > v2p, "2-adic valuations do not separate the two sides");
}

void check_span(Checker &ck, const Certificate &c)
{
  if (c.group.family != Family::AffineSL || c.t != 7) {
    ck.fail("SPAN_ARGUMENT applies to Affine_SL at t = 7 only");
    return;
  }
  const auto d = static_cast<unsigned>(c.group.parameter);
  const std::uint64_t v = c.group.degree;
  const std::uint64_t k7 = kmax7_replay(v);
  if (!ck.expect("d", d) || !ck.expect("span_lower_bound", v - 1) || !ck.expect("kmax7", k7))
    return;
  ck.require(d >= 4, "span argument needs d >= 4");
  ck.require(v - 1 > k7, "2^d - 1 does not exceed kmax7");
  ck.require(c.k_max <= k7, "k-range exceeds kmax7");
  if (d <= 5) {
    PointSet e{0, 1, 2, 3, 4, 5, 6, 7};
    auto outside = orbit(setwise_stabilizer(linear_sl_d2_generators(d), e), Point{8});
    if (ck.expect("premise_orbit_length", outside.size()))
      ck.require(outside.size() == v - 8, "subspace stabilizer is not transitive outside E");
  } else {
    ck.require(!c.citation.empty(), "premise for d > 5 must be cited");
  }
}

} // namespace

std::optional<std::string> replay_certificate(const Certificate &c)
{
  Checker ck(c);
  const std::uint64_t v = c.group.degree;
  if (c.k_min > c.k_max)
    return "empty k-range";
  if (c.reason != Reason::KExceedsDegree && (c.k_min < c.t + 1 || c.k_max >= v))
    return "k-range outside the non-trivial window";

  switch (c.reason) {
  case Reason::KExceedsDegree:
    if (ck.expect("v", v) && ck.expect("k_min", c.t + 1)) {
      ck.require(c.k_min == c.t + 1, "k_min must be t + 1");
      ck.require(Int(c.t + 1) >= v, "a block size above t fits inside the point set");
    }
    break;
  case Reason::CameronBound:
  case Reason::EqAFail:
    if (c.reason == Reason::EqAFail && (c.group.family != Family::PSL2 || !c.single_k()))
      ck.fail("EQ_A_FAIL names a single k for PSL2");
    check_cameron(ck, c, true);
    break;
  case Reason::CameronEqualityUnlisted:
    check_cameron(ck, c, false);
    break;
  case Reason::TitsBound: {
    ck.require(c.single_k(), "TITS_BOUND must name a single k");
    const Int rhs = Int(c.t + 1) * (Int(c.k_min) - c.t + 1);
    if (ck.expect("v", v) && ck.expect("tits_rhs", rhs))
      ck.require(Int(v) < rhs, "Tits' bound holds");
    break;
  }
  case Reason::DivisibilityFail:
    check_divisibility(ck, c);
    break;
  case Reason::BExceedsGroupOrder:
  case Reason::StabilizerNotDivisor:
    check_order_reason(ck, c);
    break;
  case Reason::StabilizerNotIntegral:
    ck.fail("STABILIZER_NOT_INTEGRAL is a table verdict, not a certificate reason");
    break;
  case Reason::Eq0NoSolution:
    if (c.single_k() && ck.has("falling_k"))
      check_eq0_table(ck, c);
    else
      check_eq0_range(ck, c);
    break;
  case Reason::Parity16:
    check_parity(ck, c);
    break;
  case Reason::SpanArgument:
    check_span(ck, c);
    break;
  case Reason::ExternalCitation:
    ck.require(c.group.family == Family::Alternating, "only the alternating family is cited externally");
    ck.require(!c.citation.empty(), "external citation without a reference");
    break;
  }
  return ck.finish();
}

namespace {

using CaseKey = std::tuple<std::uint64_t, Family, std::uint64_t>; // v, family, parameter

struct Coverage {
  std::map<CaseKey, std::vector<std::pair<std::uint64_t, std::uint64_t>>> ranges;

  void add(const GroupSpec &g, std::uint64_t lo, std::uint64_t hi)
  {
    ranges[{g.degree, g.family, g.parameter}].emplace_back(lo, hi);
  }

  void check(unsigned t, std::uint64_t v_max, std::vector<std::string> &failures)
  {
    std::set<CaseKey> expected;
    for (std::uint64_t v = 9; v <= v_max; ++v) {
      auto cands = candidates_for_degree(v);
      if (std::none_of(cands.begin(), cands.end(),
                       [](const GroupSpec &g) { return g.family != Family::Alternating; }))
        continue;
      for (const auto &g : cands)
        expected.insert({g.degree, g.family, g.parameter});
    }
    for (const auto &key : expected) {
      const auto [v, family, param] = key;
      const std::string name = std::string(family_tag(family)) + " at v = " + std::to_string(v);
      auto it = ranges.find(key);
      if (it == ranges.end()) {
        failures.push_back("coverage: no entry for " + name);
        continue;
      }
      auto &r = it->second;
      std::sort(r.begin(), r.end());
      std::uint64_t next = t + 1;
      bool tiled = true;
      for (const auto &[lo, hi] : r) {
        if (lo != next) {
          failures.push_back("coverage: " + name + " has a gap or overlap at k = " + std::to_string(lo));
          tiled = false;
          break;
        }
        next = hi + 1;
      }
      if (tiled && next != v)
        failures.push_back("coverage: " + name + " ends at k = " + std::to_string(next - 1));
    }
    for (const auto &[key, r] : ranges)
      if (!expected.count(key))
        failures.push_back("coverage: unexpected entry for " + std::string(family_tag(std::get<1>(key))) +
                           " at v = " + std::to_string(std::get<0>(key)));
  }
};

} // namespace

ReplayReport replay_stream(std::istream &is)
{
  ReplayReport rep;
  Coverage cov;
  std::string section;
  std::optional<unsigned> t;
  std::optional<std::uint64_t> v_max;
  bool version_ok = false;
  std::size_t index = 0;

  auto on_record = [&](const OrderedJson &rec) {
    const std::string where = section + "[" + std::to_string(index++) + "]";
    if (!t || !v_max) {
      rep.failures.push_back(where + ": t and v_max must precede the records");
      return;
    }
    try {
      if (section == "survivors") {
        ++rep.survivors;
        auto g = group_from_json(rec.at("family").get<std::string>(), rec.at("params"));
        const auto k = to_u64(parse_nat(rec.at("k").get<std::string>()));
        cov.add(g, k, k);
        return;
      }
      auto c = certificate_from_json(rec, *t);
      if (section == "external") {
        ++rep.external;
        if (c.reason != Reason::ExternalCitation)
          throw std::invalid_argument("external list holds a non-citation record");
      } else if (section == "certificates") {
        ++rep.certificates;
        if (c.reason == Reason::ExternalCitation)
          throw std::invalid_argument("external citation listed as a certificate");
      } else {
        throw std::invalid_argument("unknown section");
      }
      if (auto err = replay_certificate(c))
        rep.failures.push_back(where + " (" + describe(c) + "): " + *err);
      cov.add(c.group, c.k_min, c.k_max);
    } catch (const std::exception &e) {
      rep.failures.push_back(where + ": " + e.what());
    }
  };

  OrderedJson::parser_callback_t cb = [&](int depth, OrderedJson::parse_event_t ev, OrderedJson &parsed) {
    using E = OrderedJson::parse_event_t;
    if (depth == 1 && ev == E::key) {
      section = parsed.get<std::string>();
      index = 0;
    } else if (depth == 1 && ev == E::value && parsed.is_string()) {
      const auto &s = parsed.get_ref<const std::string &>();
      if (section == "spec_version")
        version_ok = s == "1";
      else if (section == "t")
        t = static_cast<unsigned>(to_u64(parse_nat(s)));
      else if (section == "v_max")
        v_max = to_u64(parse_nat(s));
    } else if (depth == 2 && ev == E::object_end) {
      on_record(parsed);
      return false;
    }
    return true;
  };

  OrderedJson top;
  try {
    top = OrderedJson::parse(is, cb);
  } catch (const std::exception &e) {
    rep.failures.push_back(std::string("parse error: ") + e.what());
    return rep;
  }
  if (!version_ok)
    rep.failures.push_back("spec_version must be \"1\"");
  if (!t || !v_max) {
    rep.failures.push_back("missing t or v_max");
    return rep;
  }
  for (const char *key : {"certificates", "survivors", "external"})
    if (!top.contains(key) || !top[key].is_array())
      rep.failures.push_back(std::string("missing list '") + key + "'");
  rep.t = *t;
  rep.v_max = *v_max;
  if (rep.failures.empty())
    cov.check(*t, *v_max, rep.failures);
  return rep;
}

} // namespace steiner
