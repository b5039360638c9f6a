#include "steiner/elimination.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <stdexcept>
#include <thread>
#include <variant>

#include "steiner/permgroup.hpp"

namespace steiner {

namespace {

constexpr const char *alternating_citation =
  "Cameron and Praeger (1993), Sect. 2, Prop. 2.4: A_v <= G <= S_v is not block-transitive "
  "on a non-trivial Steiner 7-design";
constexpr const char *span_premise =
  "cited premise: the stabilizer in SL(d,2) of a 3-dimensional subspace E is transitive on V \\ E";

using Outcome = std::variant<Certificate, Survivor>;

void check_t(unsigned t)
{
  if (t != 6 && t != 7)
    throw std::invalid_argument("elimination: supported t are 6 and 7, got " + std::to_string(t));
}

Certificate start(unsigned t, const GroupSpec &g, std::uint64_t k_lo, std::uint64_t k_hi, Reason r)
{
  Certificate c;
  c.t = t;
  c.group = g;
  c.k_min = k_lo;
  c.k_max = k_hi;
  c.reason = r;
  return c;
}

Int cameron_lhs(unsigned t, std::uint64_t v) { return Int(v) - t + 1; }
Int cameron_rhs(unsigned t, std::uint64_t k) { return (Int(k) - t + 2) * (Int(k) - t + 1); }

// Cameron's inequality, strict violation first. PSL2 reports the strict case
// as EQ_A_FAIL since there it reads q - 5 >= (k-5)(k-6).
std::optional<Certificate> bound_case(unsigned t, const GroupSpec &g, std::uint64_t k, Reason strict)
{
  const Int lhs = cameron_lhs(t, g.degree), rhs = cameron_rhs(t, k);
  std::optional<Reason> r;
  if (lhs < rhs)
    r = strict;
  else if (lhs == rhs && !cameron_equality_listed(t, k, g.degree))
    r = Reason::CameronEqualityUnlisted;
  if (!r)
    return std::nullopt;
  auto c = start(t, g, k, k, *r);
  c.add("cameron_lhs", lhs);
  c.add("cameron_rhs", rhs);
  return c;
}

Certificate divisibility_cert(unsigned t, const GroupSpec &g, std::uint64_t k, unsigned s)
{
  auto term = divisibility_term(DesignParams{t, g.degree, k}, s);
  auto c = start(t, g, k, k, Reason::DivisibilityFail);
  c.add("s", s);
  c.add("numerator", term.numerator);
  c.add("denominator", term.denominator);
  return c;
}

// Largest failing s.
std::optional<Certificate> divisibility_case(unsigned t, const GroupSpec &g, std::uint64_t k)
{
  auto failed = divisibility_check(DesignParams{t, g.degree, k});
  if (failed.empty())
    return std::nullopt;
  return divisibility_cert(t, g, k, failed.back());
}

std::optional<Certificate> tits_case(unsigned t, const GroupSpec &g, std::uint64_t k)
{
  const Int rhs = Int(t + 1) * (Int(k) - t + 1);
  if (Int(g.degree) >= rhs)
    return std::nullopt;
  auto c = start(t, g, k, k, Reason::TitsBound);
  c.add("v", g.degree);
  c.add("tits_rhs", rhs);
  return c;
}

// Requires b integral.
std::optional<Certificate> order_case(unsigned t, const GroupSpec &g, std::uint64_t k)
{
  const Int b = binom(g.degree, t) / binom(k, t);
  const Int order = order_of(g);
  if (b > order) {
    auto c = start(t, g, k, k, Reason::BExceedsGroupOrder);
    c.add("b", b);
    c.add("group_order", order);
    return c;
  }
  if (order % b != 0) {
    auto c = start(t, g, k, k, Reason::StabilizerNotDivisor);
    c.add("b", b);
    c.add("group_order", order);
    c.add("remainder", order % b);
    return c;
  }
  return std::nullopt;
}

// Unlisted Cameron equality, then admissibility, then the strict bounds,
// then the block-count comparison with |G|.
Outcome generic_case(unsigned t, const GroupSpec &g, std::uint64_t k)
{
  auto bound = bound_case(t, g, k, Reason::CameronBound);
  if (bound && bound->reason == Reason::CameronEqualityUnlisted)
    return *bound;
  if (auto c = divisibility_case(t, g, k))
    return *c;
  if (bound)
    return *bound;
  if (auto c = tits_case(t, g, k))
    return *c;
  if (auto c = order_case(t, g, k))
    return *c;
  const Int b = binom(g.degree, t) / binom(k, t);
  return Survivor{t, g, k, "|G_B| = " + to_decimal(order_of(g) / b)};
}

void push(CaseResult &out, Outcome o)
{
  if (auto *c = std::get_if<Certificate>(&o))
    out.certificates.push_back(std::move(*c));
  else
    out.survivors.push_back(std::get<Survivor>(std::move(o)));
}

// Every k above the cap violates Cameron's inequality strictly, and the
// violation only grows with k, so one certificate at k_min covers the range.
void cameron_tail(unsigned t, const GroupSpec &g, std::uint64_t cap, std::vector<Certificate> &out)
{
  const std::uint64_t lo = cap + 1, hi = g.degree - 1;
  if (lo > hi)
    return;
  auto c = start(t, g, lo, hi, Reason::CameronBound);
  c.add("cameron_lhs", cameron_lhs(t, g.degree));
  c.add("cameron_rhs", cameron_rhs(t, lo));
  out.push_back(std::move(c));
}

struct Psl2Context {
  unsigned t;
  GroupSpec g;
  std::uint64_t q, n, cap;
  std::vector<std::uint64_t> extensions;
  Int P;   // falling(q-2, t-3)
  Int lhs; // P * n
};

Outcome psl2_case(const Psl2Context &ctx, std::uint64_t k)
{
  const unsigned t = ctx.t;
  if (auto c = bound_case(t, ctx.g, k, Reason::EqAFail))
    return *c;

  const Int fk = falling(Int(k), t);
  auto table = start(t, ctx.g, k, k, Reason::Eq0NoSolution);
  table.add("q", ctx.q);
  table.add("n", ctx.n);
  table.add("P", ctx.P);
  table.add("lhs", ctx.lhs);
  table.add("falling_k", fk);
  std::optional<std::pair<std::uint64_t, Int>> open;
  for (std::size_t i = 0; i < ctx.extensions.size(); ++i) {
    const std::uint64_t a = ctx.extensions[i];
    const std::string idx = std::to_string(i);
    const Int rhs = fk * a;
    const Int rem = rhs % ctx.lhs;
    table.add("a_" + idx, a);
    table.add("rhs_" + idx, rhs);
    table.add("rem_" + idx, rem);
    if (rem != 0)
      continue;
    const Int stab = rhs / ctx.lhs;
    const Int order = psl2_order_with_extension(ctx.g, a);
    table.add("stab_" + idx, stab);
    table.add("order_" + idx, order);
    table.add("order_rem_" + idx, order % stab);
    if (order % stab == 0 && !open)
      open.emplace(a, stab);
  }
  if (!open)
    return table;

  if (auto c = divisibility_case(t, ctx.g, k))
    return *c;
  if (auto c = tits_case(t, ctx.g, k))
    return *c;
  return Survivor{t, ctx.g, k, "a = " + std::to_string(open->first) + ", |G_B| = " + to_decimal(open->second)};
}

// Largest k_hi >= k_lo such that every k in [k_lo, k_hi] satisfies Cameron's
// inequality and falling(k, t) * a_max < bound. Returns k_lo - 1 if none.
std::uint64_t magnitude_range_end(const Psl2Context &ctx, std::uint64_t k_lo, const Int &bound)
{
  const Int lhs = cameron_lhs(ctx.t, ctx.g.degree);
  const std::uint64_t a_max = ctx.extensions.back();
  std::uint64_t hi = k_lo - 1;
  for (std::uint64_t k = k_lo; k <= ctx.cap; ++k) {
    if (lhs < cameron_rhs(ctx.t, k) || falling(Int(k), ctx.t) * a_max >= bound)
      break;
    hi = k;
  }
  return hi;
}

std::optional<Certificate> psl2_range(const Psl2Context &ctx, std::uint64_t k_lo)
{
  const std::uint64_t a_max = ctx.extensions.back();
  if (ctx.q % 2 == 0) {
    // |G_B| n < 2 forces |G_B| n = 1, i.e. falling(k, t) a = P, which the
    // 2-adic valuations rule out.
    const Int twice = 2 * ctx.lhs;
    std::uint64_t hi = magnitude_range_end(ctx, k_lo, twice);
    if (hi >= k_lo) {
      unsigned min_v2 = val2(falling(Int(k_lo), ctx.t));
      for (std::uint64_t k = k_lo + 1; k <= hi; ++k)
        min_v2 = std::min(min_v2, val2(falling(Int(k), ctx.t)));
      const unsigned v2p = val2(ctx.P);
      if (min_v2 > v2p) {
        auto c = start(ctx.t, ctx.g, k_lo, hi, Reason::Parity16);
        c.add("q", ctx.q);
        c.add("n", ctx.n);
        c.add("a_max", a_max);
        c.add("P", ctx.P);
        c.add("val2_P", v2p);
        c.add("min_val2_falling", min_v2);
        c.add("rhs_at_k_hi", falling(Int(hi), ctx.t) * a_max);
        c.add("twice_lhs", twice);
        return c;
      }
    }
  }
  std::uint64_t hi = magnitude_range_end(ctx, k_lo, ctx.lhs);
  if (hi < k_lo)
    return std::nullopt;
  auto c = start(ctx.t, ctx.g, k_lo, hi, Reason::Eq0NoSolution);
  c.add("q", ctx.q);
  c.add("n", ctx.n);
  c.add("a_max", a_max);
  c.add("P", ctx.P);
  c.add("lhs", ctx.lhs);
  c.add("rhs_at_k_hi", falling(Int(hi), ctx.t) * a_max);
  return c;
}

} // namespace

std::uint64_t block_size_cap(unsigned t, std::uint64_t v)
{
  const std::uint64_t k = t == 7 ? kmax7(v) : cameron_kmax(t, v);
  return std::min(k, v - 1);
}

std::vector<StabilizerOrder> stab_order(const GroupSpec &g, const DesignParams &p)
{
  p.validate();
  if (p.v != g.degree)
    throw std::invalid_argument("stab_order: design has " + std::to_string(p.v) + " points, group degree is " +
                                std::to_string(g.degree));
  const Ratio b = basic_counts(p).b;
  if (!b.is_integer())
    throw std::invalid_argument("stab_order: b = " + b.to_string() + " is not integral");
  std::vector<StabilizerOrder> out;
  auto consider = [&](std::uint64_t a, const Int &order) {
    if (order % b.num() == 0)
      out.push_back({a, order / b.num()});
  };
  if (g.family == Family::PSL2) {
    for (auto a : psl2_extension_divisors(g))
      consider(a, psl2_order_with_extension(g, a));
  } else {
    consider(1, order_of(g));
  }
  return out;
}

std::vector<Certificate> eliminate_affine_small(std::uint64_t v)
{
  constexpr unsigned t = 7;
  std::vector<Certificate> out;
  if (v == 8) {
    auto c = start(t, make_agammal1_8(), t + 1, t + 1, Reason::KExceedsDegree);
    c.add("v", v);
    c.add("k_min", t + 1);
    out.push_back(std::move(c));
    return out;
  }
  if (v != 32)
    throw std::invalid_argument("eliminate_affine_small: v must be 8 or 32");
  const auto g = make_agammal1_32();
  for (std::uint64_t k = t + 1; k <= block_size_cap(t, v); ++k) {
    if (!divisibility_term(DesignParams{t, v, k}, 0).holds()) {
      out.push_back(divisibility_cert(t, g, k, 0));
      continue;
    }
    if (auto c = order_case(t, g, k)) {
      out.push_back(std::move(*c));
      continue;
    }
    auto o = generic_case(t, g, k);
    if (auto *c = std::get_if<Certificate>(&o))
      out.push_back(std::move(*c));
    else
      throw std::logic_error("eliminate_affine_small: k = " + std::to_string(k) + " survives");
  }
  return out;
}

Certificate eliminate_sl_d2(unsigned d)
{
  if (d < 4)
    throw std::invalid_argument("eliminate_sl_d2: need d >= 4");
  constexpr unsigned t = 7;
  const auto g = make_affine_sl(d);
  const std::uint64_t v = g.degree;
  const std::uint64_t k7 = kmax7(v);
  if (v - 1 <= k7)
    throw std::logic_error("eliminate_sl_d2: span bound does not exceed kmax7");
  auto c = start(t, g, t + 1, block_size_cap(t, v), Reason::SpanArgument);
  c.add("d", d);
  c.add("span_lower_bound", v - 1);
  c.add("kmax7", k7);
  if (d <= 5) {
    PointSet e(8);
    for (Point x = 0; x < 8; ++x)
      e[x] = x;
    auto stab = setwise_stabilizer(linear_sl_d2_generators(d), e);
    const auto outside = orbit(stab, Point{8});
    if (outside.size() != v - 8)
      throw std::logic_error("eliminate_sl_d2: subspace stabilizer is not transitive outside E");
    c.add("premise_orbit_length", outside.size());
  } else {
    c.citation = span_premise;
  }
  return c;
}

std::vector<Certificate> eliminate_a7_16()
{
  const auto g = make_affine_a7();
  std::vector<Certificate> out;
  for (std::uint64_t k : {8, 9}) {
    if (divisibility_term(DesignParams{7, 16, k}, 2).holds())
      throw std::logic_error("eliminate_a7_16: lambda_2 unexpectedly integral");
    out.push_back(divisibility_cert(7, g, k, 2));
  }
  return out;
}

CaseResult eliminate_psl2(std::uint64_t q, unsigned t)
{
  check_t(t);
  if (q < 8)
    throw std::invalid_argument("eliminate_psl2: need q >= 8");
  Psl2Context ctx{t, make_psl2(q), q, 0, 0, {}, 0, 0};
  ctx.n = psl2_n(ctx.g);
  ctx.cap = block_size_cap(t, q + 1);
  ctx.extensions = psl2_extension_divisors(ctx.g);
  ctx.P = falling(Int(q - 2), t - 3);
  ctx.lhs = ctx.P * ctx.n;

  CaseResult out;
  std::uint64_t k = t + 1;
  while (k <= ctx.cap) {
    if (k >= psl2_range_threshold) {
      if (auto c = psl2_range(ctx, k)) {
        k = c->k_max + 1;
        out.certificates.push_back(std::move(*c));
        continue;
      }
    }
    push(out, psl2_case(ctx, k));
    ++k;
  }
  return out;
}

SweepResult eliminate_degree(std::uint64_t v, unsigned t)
{
  check_t(t);
  if (v < 9)
    throw std::invalid_argument("eliminate_degree: need v >= 9");
  SweepResult res;
  res.t = t;
  res.v_max = v;
  const std::uint64_t cap = block_size_cap(t, v);
  for (const auto &g : candidates_for_degree(v)) {
    if (g.family == Family::Alternating) {
      auto c = start(t, g, t + 1, v - 1, Reason::ExternalCitation);
      c.citation = alternating_citation;
      res.externally_cited.push_back(std::move(c));
      continue;
    }
    CaseResult cr;
    if (t == 7 && g.family == Family::AGammaL1_32) {
      cr.certificates = eliminate_affine_small(v);
    } else if (t == 7 && g.family == Family::AffineSL) {
      cr.certificates.push_back(eliminate_sl_d2(static_cast<unsigned>(g.parameter)));
    } else if (t == 7 && g.family == Family::AffineA7) {
      cr.certificates = eliminate_a7_16();
    } else if (g.family == Family::PSL2) {
      cr = eliminate_psl2(g.parameter, t);
    } else {
      for (std::uint64_t k = t + 1; k <= cap; ++k)
        push(cr, generic_case(t, g, k));
    }
    cameron_tail(t, g, cap, cr.certificates);
    for (auto &c : cr.certificates)
      res.certificates.push_back(std::move(c));
    for (auto &s : cr.survivors)
      res.survivors.push_back(std::move(s));
  }
  return res;
}

SweepResult sweep(unsigned t, std::uint64_t v_max, unsigned jobs)
{
  check_t(t);
  if (v_max < 9)
    throw std::invalid_argument("sweep: need v_max >= 9");
  std::vector<std::uint64_t> degrees;
  for (std::uint64_t v = 9; v <= v_max; ++v) {
    auto cands = candidates_for_degree(v);
    if (std::any_of(cands.begin(), cands.end(), [](const GroupSpec &g) { return g.family != Family::Alternating; }))
      degrees.push_back(v);
  }

  std::vector<SweepResult> parts(degrees.size());
  jobs = std::clamp<unsigned>(jobs, 1, std::max<std::size_t>(degrees.size(), 1));
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned id) {
    try {
      for (std::size_t i = id; i < degrees.size(); i += jobs)
        parts[i] = eliminate_degree(degrees[i], t);
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < jobs; ++id)
      pool.emplace_back(work, id);
    for (auto &th : pool)
      th.join();
  }
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);

  SweepResult res;
  res.t = t;
  res.v_max = v_max;
  for (auto &p : parts) {
    std::move(p.certificates.begin(), p.certificates.end(), std::back_inserter(res.certificates));
    std::move(p.survivors.begin(), p.survivors.end(), std::back_inserter(res.survivors));
    std::move(p.externally_cited.begin(), p.externally_cited.end(), std::back_inserter(res.externally_cited));
  }
  auto key = [](const Certificate &c) { return std::tuple(c.group.degree, c.group.family, c.k_min); };
  std::stable_sort(res.certificates.begin(), res.certificates.end(),
                   [&](const Certificate &a, const Certificate &b) { return key(a) < key(b); });
  return res;
}

} // namespace steiner
