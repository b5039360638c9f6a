// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "steiner/designs.hpp"
#include "steiner/elimination.hpp"
#include "steiner/permgroup.hpp"
#include "steiner/replay.hpp"

using namespace steiner;

namespace {

constexpr std::uint64_t full_v_max = 100'000;

struct Check {
  bool ok = true;
  std::string notes;

  void expect(bool cond, const std::string &what)
  {
    if (!cond) {
      ok = false;
      notes += (notes.empty() ? "" : "; ") + what;
    }
  }
};

std::string serialized(const SweepResult &r)
{
  std::ostringstream os;
  write_sweep_json(os, r);
  return os.str();
}

ReplayReport replay_text(const std::string &text)
{
  std::istringstream is(text);
  return replay_stream(is);
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Shared between criteria 1 and 8.
std::string full_output;

Check main_sweep(std::string &summary)
{
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  auto r = sweep(7, full_v_max, 1);
  const double secs = seconds_since(t0);
  full_output = serialized(r);

  c.expect(r.survivors.empty(), std::to_string(r.survivors.size()) + " survivors");
  c.expect(secs < 300, "single-threaded sweep took " + std::to_string(secs) + " s");
  for (const auto &cert : r.certificates)
    if (cert.group.family == Family::Alternating) {
      c.expect(false, "alternating group eliminated arithmetically");
      break;
    }
  for (const auto &cert : r.externally_cited)
    if (cert.group.family != Family::Alternating || cert.reason != Reason::ExternalCitation) {
      c.expect(false, "non-alternating external record");
      break;
    }

  auto t1 = std::chrono::steady_clock::now();
  auto rep = replay_text(full_output);
  const double replay_secs = seconds_since(t1);
  c.expect(rep.ok(), "replay: " + (rep.failures.empty() ? std::string() : rep.failures.front()));
  c.expect(rep.certificates == r.certificates.size(), "replay count mismatch");

  c.expect(serialized(sweep(7, full_v_max, 4)) == full_output, "jobs=4 output differs from jobs=1");

  std::ostringstream os;
  os.precision(2);
  os << std::fixed << r.certificates.size() << " certificates, " << r.externally_cited.size() << " external, "
     << r.survivors.size() << " survivors; sweep " << secs << " s, replay " << replay_secs << " s";
  summary = os.str();
  return c;
}

Check worked_cases(std::string &summary)
{
  Check c;
  c.expect(kmax7(32) == 11, "kmax7(32)");
  for (const auto &cert : eliminate_affine_small(32))
    c.expect(cert.k_max <= 11 || cert.reason == Reason::CameronBound, "AGammaL1_32 per-k range");
  c.expect(eliminate_sl_d2(5).k_max == 11, "Affine_SL(5) range");

  c.expect(kmax7(16) == 9, "kmax7(16)");
  auto a7 = eliminate_a7_16();
  c.expect(a7.size() == 2, "A7 certificate count");
  const Ratio l8 = lambda_s(DesignParams{7, 16, 8}, 2), l9 = lambda_s(DesignParams{7, 16, 9}, 2);
  c.expect(l8 == Ratio(2002, 6) && !l8.is_integer(), "lambda_2(16,8)");
  c.expect(l9 == Ratio(2002, 21) && !l9.is_integer(), "lambda_2(16,9)");
  if (a7.size() == 2) {
    c.expect(a7[0].witness("numerator") == 2002 && a7[0].witness("denominator") == 6, "k=8 witnesses");
    c.expect(a7[1].witness("numerator") == 2002 && a7[1].witness("denominator") == 21, "k=9 witnesses");
  }

  auto v8 = eliminate_affine_small(8);
  c.expect(v8.size() == 1 && v8[0].reason == Reason::KExceedsDegree && v8[0].k_min == 8, "v=8");
  for (const auto &cert : v8)
    c.expect(!replay_certificate(cert), "v=8 replay");
  summary = "kmax7(32) = 11, kmax7(16) = 9, lambda_2 = 2002/6 and 2002/21, v = 8 has k > 7";
  return c;
}

Check psl2_32(std::string &summary)
{
  Check c;
  auto r = eliminate_psl2(32);
  c.expect(r.survivors.empty(), "survivors");
  c.expect(r.certificates.size() == 4, "certificate count");
  if (r.certificates.size() != 4)
    return c;
  const Int fk[] = {40320, 181440, 604800};
  for (int i = 0; i < 3; ++i) {
    const auto &cert = r.certificates[i];
    c.expect(cert.reason == Reason::Eq0NoSolution, "k=" + std::to_string(8 + i) + " reason");
    c.expect(cert.witness("P") == 657720, "P");
    c.expect(cert.witness("falling_k") == fk[i], "falling_k");
    c.expect(cert.witness("a_0") == 1 && cert.witness("a_1") == 5, "a in {1,5}");
    c.expect(cert.witness("rem_0") != 0 && cert.witness("rem_1") != 0, "integrality");
    c.expect(!replay_certificate(cert), "replay");
  }
  const auto &k11 = r.certificates[3];
  c.expect(k11.reason == Reason::EqAFail && k11.k_min == 11, "k=11 reason");
  c.expect(k11.witness("cameron_lhs") == 27 && k11.witness("cameron_rhs") == 30, "27 < 30");
  summary = "k = 8, 9, 10 fail integrality for a = 1, 5 against P = 657720; k = 11 has 27 < 30";
  return c;
}

Check lemmas(std::string &summary)
{
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  for (std::uint64_t k = 27; k <= 10'000; ++k) {
    const Int m = Int(k - 5) * (k - 6);
    if (!(Int(k) * (k - 1) * (k - 2) * (k - 3) < 2 * m * m)) {
      c.expect(false, "magnitude at k=" + std::to_string(k));
      break;
    }
  }
  for (std::uint64_t k = 8; k <= 10'000; ++k)
    if (val2(falling(Int(k), 7)) < 4) {
      c.expect(false, "val2 falling at k=" + std::to_string(k));
      break;
    }
  for (unsigned e = 3; e <= 60; ++e) {
    const Int q = Int(1) << e;
    if (val2((q - 2) * (q - 3) * (q - 4) * (q - 5)) != 3)
      c.expect(false, "val2 P at e=" + std::to_string(e));
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 1, "took " + std::to_string(secs) + " s");
  summary = "magnitude k in [27, 10^4], val2(falling(k,7)) >= 4 for k in [8, 10^4], val2(P) = 3 for e in [3, 60]";
  return c;
}

Check catalog_orders(std::string &summary)
{
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  auto both = [&](const GroupSpec &g, const GeneratorSet &gs, Int expected) {
    const Int n = enumerated_order(gs);
    c.expect(n == expected, g.name() + " enumerated " + to_decimal(n));
  };
  both(make_agl1_8(), full_generators(make_agl1_8()), 56);
  both(make_agammal1_8(), full_generators(make_agammal1_8()), 168);
  both(make_agammal1_32(), full_generators(make_agammal1_32()), 4960);
  both(make_psl2(7), standard_generators(make_psl2(7)), 168);
  both(make_psl2(8), standard_generators(make_psl2(8)), 504);
  both(make_affine_sl(4), full_generators(make_affine_sl(4)), 322560);
  for (auto g : {make_agl1_8(), make_agammal1_8(), make_agammal1_32(), make_affine_sl(4)})
    c.expect(order_of(g) == enumerated_order(full_generators(g)), g.name() + " formula");
  c.expect(socle_order(make_psl2(7)) == 168 && socle_order(make_psl2(8)) == 504, "PSL2 formula");
  c.expect(homogeneity_orbits(standard_generators(make_psl2(5)), 3) == 2, "PSL2(5) orbits");
  c.expect(homogeneity_orbits(standard_generators(make_psl2(7)), 3) == 1, "PSL2(7) orbits");
  c.expect(!psl2_is_3homog(5) && psl2_is_3homog(7), "psl2_is_3homog");
  const double secs = seconds_since(t0);
  c.expect(secs < 30, "took " + std::to_string(secs) + " s");
  summary = "56, 168, 4960, 168, 504, 322560; PSL2(5) has 2 orbits on 3-sets, PSL2(7) has 1";
  return c;
}

Check design_fixtures(std::string &summary)
{
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  const std::size_t blocks[] = {14, 140};
  for (unsigned n = 3; n <= 4; ++n) {
    auto s = boolean_sqs(n);
    const std::string tag = "n=" + std::to_string(n);
    c.expect(s.b() == blocks[n - 3], tag + " block count");
    c.expect(verify_design(s, 3) == 1, tag + " not a 3-(v,4,1)");
    auto gs = standard_generators(make_affine_sl(n));
    c.expect(block_transitive(gs, s), tag + " block-transitive");
    c.expect(point_transitive(gs, s), tag + " point-transitive");
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 30, "took " + std::to_string(secs) + " s");
  summary = "3-(8,4,1) with 14 blocks, 3-(16,4,1) with 140 blocks, affine group block- and point-transitive";
  return c;
}

Check span_premise(std::string &summary)
{
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  const PointSet e{0, 1, 2, 3, 4, 5, 6, 7};
  for (unsigned d = 4; d <= 5; ++d) {
    auto h = setwise_stabilizer(linear_sl_d2_generators(d), e);
    const std::size_t outside = (std::size_t{1} << d) - 8;
    // One orbit on V \ E: the orbit of any outside point is all of it.
    auto orb = orbit(h, Point{8});
    c.expect(orb.size() == outside, "d=" + std::to_string(d) + " orbit " + std::to_string(orb.size()));
    c.expect(orb.front() == 8 && orb.back() == (1u << d) - 1, "d=" + std::to_string(d) + " orbit span");
    c.expect(orbit(h, Point{0}).size() == 1, "zero vector moved");
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 120, "took " + std::to_string(secs) + " s");
  summary = "stabilizer of a 3-space has one orbit of size 8 (d = 4) and 24 (d = 5) outside it";
  return c;
}

// Perturb one witness of one certificate record in the sweep file by +-1 and
// replay the whole file.
Check mutations(std::string &summary)
{
  Check c;
  if (full_output.empty()) {
    c.expect(false, "no sweep output");
    return c;
  }
  std::vector<std::pair<std::size_t, std::size_t>> lines; // certificate records: offset, length
  {
    bool in_certs = false;
    std::size_t pos = 0;
    while (pos < full_output.size()) {
      auto end = full_output.find('\n', pos);
      if (end == std::string::npos)
        end = full_output.size();
      std::string_view line(full_output.data() + pos, end - pos);
      if (line.find("\"certificates\":") != std::string_view::npos)
        in_certs = true;
      else if (line.find("\"survivors\":") != std::string_view::npos)
        in_certs = false;
      else if (in_certs && line.find("\"witnesses\":{\"") != std::string_view::npos)
        lines.emplace_back(pos, end - pos);
      pos = end + 1;
    }
  }
  c.expect(!lines.empty(), "no certificate lines found");
  std::mt19937_64 rng(20240607);
  int rejected = 0, trials = 0;
  while (trials < 100 && !lines.empty()) {
    auto [off, len] = lines[rng() % lines.size()];
    std::string line = full_output.substr(off, len);
    const bool comma = !line.empty() && line.back() == ',';
    auto j = OrderedJson::parse(comma ? line.substr(0, line.size() - 1) : line);
    auto &w = j["witnesses"];
    auto it = w.begin();
    std::advance(it, rng() % w.size());
    Int value = parse_nat(it.value().get<std::string>());
    value += (rng() % 2 || value == 0) ? 1 : -1;
    it.value() = to_decimal(value);
    std::string mutated = full_output.substr(0, off) + j.dump() + (comma ? "," : "") + full_output.substr(off + len);
    ++trials;
    if (!replay_text(mutated).ok())
      ++rejected;
    else
      c.expect(false, "accepted mutation of " + it.key() + " in " + line.substr(0, 80));
  }
  summary = std::to_string(rejected) + "/" + std::to_string(trials) + " single-witness mutations rejected; unmodified file accepted";
  return c;
}

} // namespace

int main()
{
  struct Criterion {
    const char *title;
    std::function<Check(std::string &)> run;
  };
  const Criterion criteria[] = {
      {"bounded sweep, t = 7, v <= 100000", main_sweep},
      {"worked cases at v = 32, 16, 8", worked_cases},
      {"PSL(2,32) eliminated", psl2_32},
      {"universal lemmas", lemmas},
      {"catalog orders and 3-homogeneity", catalog_orders},
      {"Steiner quadruple system fixtures", design_fixtures},
      {"SL(d,2) subspace stabilizer premise, d = 4, 5", span_premise},
      {"certificate integrity under mutation", mutations},
  };
  int failed = 0, n = 0;
  for (const auto &cr : criteria) {
    ++n;
    std::string summary;
    Check c;
    try {
      c = cr.run(summary);
    } catch (const std::exception &e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << cr.title;
    if (!summary.empty())
      std::cout << " -- " << summary;
    if (!c.ok)
      std::cout << " [" << c.notes << "]";
    std::cout << std::endl;
    failed += !c.ok;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : "acceptance: all criteria pass")
            << std::endl;
  return failed ? 1 : 0;
}
