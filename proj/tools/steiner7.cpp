// steiner7: command-line front end for the admissibility checker, the group
// catalog, the elimination sweep and the certificate replayer.
//
// Exit status: 0 success, 1 invalid input, 2 size cap exceeded, 3 replay
// failure, 4 survivor found under `scan --expect-none`.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "steiner/admissibility.hpp"
#include "steiner/certificate.hpp"
#include "steiner/designs.hpp"
#include "steiner/elimination.hpp"
#include "steiner/group_catalog.hpp"
#include "steiner/permgroup.hpp"
#include "steiner/replay.hpp"

namespace {

using namespace steiner;

enum Exit { ok = 0, usage = 1, size_cap = 2, replay_failed = 3, survivor_found = 4 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::uint64_t nat(const std::string &text, const char *what)
{
  try {
    return to_u64(parse_nat(text));
  } catch (const std::exception &) {
    throw UsageError(std::string(what) + " must be a non-negative decimal integer, got '" + text + "'");
  }
}

GroupSpec parse_group(const std::string &family, const std::string &param)
{
  auto f = family_from_tag(family);
  if (!f)
    throw UsageError("unknown family '" + family + "'");
  return make_group(*f, param.empty() ? 0 : nat(param, "--param"));
}

void print_result(const SweepResult &r)
{
  for (const auto &c : r.certificates)
    std::cout << describe(c) << "\n";
  for (const auto &c : r.externally_cited)
    std::cout << describe(c) << "\n";
  for (const auto &s : r.survivors)
    std::cout << "survivor " << s.group.name() << " v=" << s.group.degree << " k=" << s.k << " (" << s.detail
              << ")\n";
  std::cout << "survivors: " << r.survivors.size() << "\n";
}

const char *yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Exact admissibility checks and elimination certificates for block-transitive Steiner designs"};
  app.require_subcommand(1);

  std::string t_text = "7", v_text, k_text, lambda_text = "1", q_text, vmax_text, jobs_text = "1", s_text = "3";
  std::string out_path, design_path, family, param, replay_path;
  bool expect_none = false, json = false, full = false, enumerate = false;

  auto *admissible = app.add_subcommand("admissible", "Divisibility conditions and bounds for t-(v,k,lambda)");
  admissible->add_option("--t", t_text, "Strength t")->capture_default_str();
  admissible->add_option("--v", v_text, "Number of points")->required();
  admissible->add_option("--k", k_text, "Block size")->required();
  admissible->add_option("--lambda", lambda_text, "Index lambda")->capture_default_str();

  auto *scan = app.add_subcommand("scan", "Sweep every candidate degree up to v_max");
  scan->add_option("--t", t_text, "Strength t (6 or 7)")->capture_default_str();
  scan->add_option("--v-max", vmax_text, "Largest degree")->required();
  scan->add_option("--jobs", jobs_text, "Worker threads")->capture_default_str();
  scan->add_option("--out", out_path, "Write the certificate file here");
  scan->add_flag("--expect-none", expect_none, "Exit with status 4 if any case survives");

  auto *eliminate = app.add_subcommand("eliminate", "Eliminate a single degree v or a single PSL2(q)");
  eliminate->add_option("--t", t_text, "Strength t (6 or 7)")->capture_default_str();
  auto *ev = eliminate->add_option("--v", v_text, "Degree");
  auto *eq = eliminate->add_option("--q", q_text, "Field size for PSL2(q)");
  ev->excludes(eq);
  eliminate->add_flag("--json", json, "Print certificates as JSON records");

  auto *group = app.add_subcommand("group", "Query the 3-homogeneous group catalog");
  group->require_subcommand(1);
  auto *glist = group->add_subcommand("list", "Candidates of a given degree, or all families");
  glist->add_option("--v", v_text, "Degree");
  auto *gorder = group->add_subcommand("order", "Order of a catalog group");
  gorder->add_option("--family", family, "Family tag, e.g. PSL2 or Affine_SL")->required();
  gorder->add_option("--param", param, "d, q or v as the family requires");
  gorder->add_flag("--enumerate", enumerate, "Also compute the order by Schreier-Sims from generators");

  auto *verify = app.add_subcommand("verify", "Check a design file, optionally against a group");
  verify->add_option("--design", design_path, "STEINER design file")->required()->check(CLI::ExistingFile);
  verify->add_option("--t", t_text, "Strength to check (default: largest that holds)");
  verify->add_option("--family", family, "Family tag of a group acting on the points");
  verify->add_option("--param", param, "Family parameter");

  auto *homog = app.add_subcommand("homogeneity", "Number of orbits on s-subsets");
  homog->add_option("--family", family, "Family tag")->required();
  homog->add_option("--param", param, "Family parameter");
  homog->add_option("--s", s_text, "Subset size")->capture_default_str();
  homog->add_flag("--full", full, "Use the largest group of the family instead of the socle");

  auto *replay = app.add_subcommand("replay", "Independently recheck a certificate file");
  replay->add_option("file", replay_path, "Certificate file written by scan")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? Exit::ok : Exit::usage;
  }

  try {
    const auto t = static_cast<unsigned>(nat(t_text, "--t"));

    if (*admissible) {
      DesignParams p{t, nat(v_text, "--v"), nat(k_text, "--k"), parse_nat(lambda_text)};
      std::cout << admissible_report(p).to_string();
      return Exit::ok;
    }

    if (*scan) {
      const auto jobs = static_cast<unsigned>(nat(jobs_text, "--jobs"));
      auto r = sweep(t, nat(vmax_text, "--v-max"), jobs);
      if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
          throw UsageError("cannot open '" + out_path + "' for writing");
        write_sweep_json(out, r);
      }
      std::cout << "certificates: " << r.certificates.size() << "\n";
      std::cout << "external: " << r.externally_cited.size() << "\n";
      for (const auto &s : r.survivors)
        std::cout << "survivor " << s.group.name() << " k=" << s.k << " (" << s.detail << ")\n";
      std::cout << "survivors: " << r.survivors.size() << "\n";
      return expect_none && !r.survivors.empty() ? Exit::survivor_found : Exit::ok;
    }

    if (*eliminate) {
      SweepResult r;
      if (!q_text.empty()) {
        auto cr = eliminate_psl2(nat(q_text, "--q"), t);
        r.t = t;
        r.certificates = std::move(cr.certificates);
        r.survivors = std::move(cr.survivors);
      } else if (!v_text.empty()) {
        r = eliminate_degree(nat(v_text, "--v"), t);
      } else {
        throw UsageError("eliminate needs --v or --q");
      }
      if (json) {
        for (const auto &c : r.certificates)
          std::cout << certificate_to_json(c).dump() << "\n";
        for (const auto &c : r.externally_cited)
          std::cout << certificate_to_json(c).dump() << "\n";
        for (const auto &s : r.survivors)
          std::cout << survivor_to_json(s).dump() << "\n";
      } else {
        print_result(r);
      }
      return Exit::ok;
    }

    if (*glist) {
      if (v_text.empty()) {
        for (auto f : {Family::Alternating, Family::AGL1_8, Family::AGammaL1_8, Family::AGammaL1_32,
                       Family::AffineSL, Family::AffineA7, Family::PSL2, Family::Mathieu, Family::M11On12})
          std::cout << family_tag(f) << "\n";
        return Exit::ok;
      }
      for (const auto &g : candidates_for_degree(nat(v_text, "--v"))) {
        std::cout << g.name() << " degree=" << g.degree << " order=" << order_of(g);
        if (g.family == Family::PSL2)
          std::cout << " socle_3homogeneous=" << yes_no(g.socle_3homog);
        std::cout << "\n";
      }
      return Exit::ok;
    }

    if (*gorder) {
      auto g = parse_group(family, param);
      std::cout << g.name() << " order " << order_of(g) << " socle " << socle_order(g) << "\n";
      if (enumerate) {
        auto n = enumerated_order(full_generators(g));
        std::cout << "enumerated " << n << (n == order_of(g) ? " (matches)" : " (MISMATCH)") << "\n";
        if (n != order_of(g))
          return Exit::usage;
      }
      return Exit::ok;
    }

    if (*verify) {
      std::ifstream in(design_path);
      auto s = read_design(in);
      std::optional<unsigned> strength;
      std::optional<std::uint64_t> lambda;
      if (verify->count("--t")) {
        strength = t;
        lambda = verify_design(s, t);
      } else {
        // A t-design is also an s-design for s < t, so stop at the first failure.
        for (unsigned tt = 1; tt <= s.k(); ++tt) {
          auto l = verify_design(s, tt);
          if (!l)
            break;
          strength = tt;
          lambda = l;
        }
      }
      if (!lambda) {
        std::cout << "not a design" << (strength ? " for t = " + std::to_string(*strength) : "") << "\n";
        return Exit::usage;
      }
      std::cout << *strength << "-(" << s.v() << "," << s.k() << "," << *lambda << ") verified\n";
      std::cout << "blocks: " << s.b() << "\n";
      if (!family.empty()) {
        auto g = parse_group(family, param);
        auto gs = standard_generators(g);
        bool autos = true;
        for (const auto &p : gs.gens())
          autos = autos && is_automorphism(p, s);
        std::cout << g.name() << " automorphisms: " << yes_no(autos) << "\n";
        if (autos) {
          std::cout << "block-transitive: " << yes_no(block_transitive(gs, s)) << "\n";
          std::cout << "point-transitive: " << yes_no(point_transitive(gs, s)) << "\n";
        }
      }
      return Exit::ok;
    }

    if (*homog) {
      auto g = parse_group(family, param);
      const auto s = static_cast<unsigned>(nat(s_text, "--s"));
      auto gs = full ? full_generators(g) : standard_generators(g);
      auto n = homogeneity_orbits(gs, s);
      std::cout << g.name() << (full ? " (full)" : "") << " orbits on " << s << "-subsets: " << n << "\n";
      std::cout << s << "-homogeneous: " << yes_no(n == 1) << "\n";
      return Exit::ok;
    }

    if (*replay) {
      std::ifstream in(replay_path, std::ios::binary);
      auto rep = replay_stream(in);
      for (const auto &f : rep.failures)
        std::cout << "FAIL " << f << "\n";
      std::cout << "replayed " << rep.certificates << " certificates, " << rep.external << " external, "
                << rep.survivors << " survivors: " << (rep.ok() ? "ok" : "rejected") << "\n";
      return rep.ok() ? Exit::ok : Exit::replay_failed;
    }
  } catch (const SizeCapExceeded &e) {
    std::cerr << "size cap exceeded: " << e.what() << "\n";
    return Exit::size_cap;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::usage;
  }
  return Exit::usage;
}
