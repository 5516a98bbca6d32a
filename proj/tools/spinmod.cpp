// spinmod: enumerate, verify and tropicalize spin graphs from the command line.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "spinmod/canonical.hpp"
#include "spinmod/error.hpp"
#include "spinmod/io.hpp"
#include "spinmod/moduli.hpp"
#include "spinmod/tropical.hpp"
#include "spinmod/verify.hpp"

namespace {

using namespace spinmod;
using nlohmann::json;

enum Exit { kOk = 0, kFailed = 1, kInput = 2, kBudget = 3 };

struct Common {
  int g = 0;
  int n = 0;
  std::string out;
  int budget_edges = -1;
  int jobs = 1;
};

Budget make_budget(const Common& c) {
  if (2 * c.g - 2 + c.n <= 0) {
    throw DomainError("need 2g - 2 + n > 0, got g=" + std::to_string(c.g) +
                      ", n=" + std::to_string(c.n));
  }
  Budget b = Budget::from_env();
  if (c.budget_edges >= 0) b.max_edges = c.budget_edges;
  b.jobs = c.jobs;
  return b;
}

void write_file(const std::string& dir, const std::string& name, const std::string& body) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path.string());
  f << body;
  std::cout << "wrote " << path.string() << "\n";
}

int run_enumerate(const Common& c, const std::string& kind_name, const std::string& format) {
  const PosetKind kind = parse_poset_kind(kind_name);
  const Budget budget = make_budget(c);
  const Poset p = build_poset(kind, c.g, c.n, budget);
  const PosetStats st = poset_stats(p);

  std::cout << kind_name << " (g=" << c.g << ", n=" << c.n << "): " << p.nodes.size()
            << " nodes, " << p.covers.size() << " covers, " << st.components
            << " components\n";
  if (!p.note.empty()) std::cout << "note: " << p.note << "\n";
  std::cout << "ranks:";
  for (auto [r, count] : st.rank_histogram) std::cout << " " << r << ":" << count;
  std::cout << "\n";
  if (kind == PosetKind::spin) {
    int even = 0;
    for (const auto& node : p.nodes) even += node.parity == 0;
    std::cout << "parity: " << even << " even, " << p.nodes.size() - even << " odd\n";
  }

  if (!c.out.empty()) {
    const std::string stem =
        kind_name + "_g" + std::to_string(c.g) + "_n" + std::to_string(c.n);
    if (format == "json") {
      write_file(c.out, stem + ".json", io::to_json(p, st).dump(2) + "\n");
    } else if (format == "dot") {
      write_file(c.out, stem + ".dot", io::to_dot(p));
    } else if (format == "csv") {
      if (kind == PosetKind::spin) {
        write_file(c.out, stem + "_cells.csv",
                   io::cells_csv(build_cone_complex(c.g, c.n, budget)));
      } else {
        write_file(c.out, stem + ".csv", io::poset_csv(p));
      }
    } else {
      throw InputError("unknown format '" + format + "'");
    }
  }
  return kOk;
}

int run_verify_cmd(const Common& c, const std::string& suite, int fuzz,
                   std::uint64_t seed, const std::string& format) {
  VerifyOptions opt;
  opt.g = c.g;
  opt.n = c.n;
  opt.suite = parse_suite(suite);
  opt.budget = make_budget(c);
  opt.seed = seed;
  if (fuzz >= 0) {
    opt.chains = fuzz;
    opt.families = std::max(1, fuzz / 10);
  }
  const RunReport report = run_verify(opt);
  const json j = report.to_json();
  if (format == "text") {
    for (const auto& chk : report.checks) {
      std::cout << (chk.passed ? "PASS " : "FAIL ") << chk.name << " (" << chk.cases
                << " cases, " << chk.seconds << " s)\n";
      for (const auto& w : chk.witnesses) std::cout << "    " << w << "\n";
    }
    std::cout << (report.passed() ? "all checks passed" : "verification failed") << " in "
              << report.seconds << " s\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  if (!c.out.empty()) {
    write_file(c.out,
               "verify_g" + std::to_string(c.g) + "_n" + std::to_string(c.n) + "_" + suite +
                   ".json",
               j.dump(2) + "\n");
  }
  return report.passed() ? kOk : kFailed;
}

int run_trop(const std::string& file, const std::string& out) {
  const FamilyDescriptor fam = io::family_from_json(io::read_json_file(file));
  const SpinTropicalCurve psi = trop_family(fam);
  const TropicalCurve stable = family_stable_model(fam);
  const TropicalCurve image = pi_trop(psi);
  const GenericFiber fiber = family_generic_fiber(fam);
  const bool commutes = image == stable;

  json j;
  j["trop"] = io::to_json(psi);
  j["stable_model"] = io::lengths_to_json(stable.lengths);
  j["pi_trop_of_trop"] = io::lengths_to_json(image.lengths);
  j["diagram_commutes"] = commutes;
  j["generic_fiber"] = {{"graph", io::to_json(fiber.fiber.graph)},
                        {"spin", io::to_json(fiber.fiber.graph, fiber.fiber.spin)},
                        {"key", canonical_key(fiber.fiber)}};
  j["special_key"] = canonical_key(fam.special);
  j["witness"] = io::to_json(fiber.witness.contraction);
  std::cout << j.dump(2) << "\n";
  if (!out.empty()) write_file(out, "trop.json", j.dump(2) + "\n");
  return commutes ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin graphs, their moduli posets and tropicalization"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--g", common.g, "genus")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--n", common.n, "number of legs")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", common.out, "output directory");
    sub->add_option("--budget-edges", common.budget_edges,
                    "largest 3g-3+n accepted (SPINMOD_BUDGET sets the default)");
    sub->add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  std::string kind = "graphs";
  std::string format = "json";
  auto* enumerate = app.add_subcommand("enumerate", "enumerate a moduli poset");
  add_common(enumerate);
  enumerate->add_option("--kind", kind, "graphs | cyclic | spin");
  enumerate->add_option("--format", format, "json | dot | csv");

  std::string suite = "all";
  int fuzz = -1;
  std::uint64_t seed = 20261019;
  std::string vformat = "json";
  auto* verify = app.add_subcommand("verify", "run invariant suites");
  add_common(verify);
  verify->add_option("--suite", suite, "counts | posets | functoriality | refine | all");
  verify->add_option("--fuzz", fuzz, "random contraction chains (families = N/10)");
  verify->add_option("--seed", seed, "fuzz seed");
  verify->add_option("--format", vformat, "json | text");

  std::string file;
  std::string trop_out;
  auto* trop = app.add_subcommand("trop", "tropicalize a family descriptor");
  trop->add_option("file", file, "family descriptor JSON")->required();
  trop->add_option("--out", trop_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*enumerate) return run_enumerate(common, kind, format);
    if (*verify) return run_verify_cmd(common, suite, fuzz, seed, vformat);
    if (*trop) return run_trop(file, trop_out);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kFailed;
  } catch (const ResourceError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}
