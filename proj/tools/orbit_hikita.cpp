// orbit-hikita: exact verification toolkit for nilpotent-orbit ideal
// families.  Subcommands:
//
//   check <NAME> [--param k=v ...] [--json]   run one catalog check
//   suite <SUITE> [--out report.json ...]     run a named suite
//   ideal gb|dim|nf|equal <FILE> ...          Groebner utilities on ideal files
//
// Exit status: 0 when nothing FAILed; DISCREPANCY and SKIP results do not
// fail the run unless --strict is given.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orbita/checks.hpp"

namespace {

orbita::GbLimits make_limits(double time_limit_s) {
  orbita::GbLimits lim;
  if (time_limit_s > 0) lim.time_budget_ms = (long)(time_limit_s * 1000.0);
  return lim;
}

std::vector<std::pair<std::string, std::string>> parse_params(
    const std::vector<std::string>& kvs) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& kv : kvs) {
    const size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("--param expects k=v, got '" + kv + "'");
    out.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

orbita::MonomialOrder parse_order(const std::string& name) {
  if (name == "grevlex") return orbita::MonomialOrder::GrevLex;
  if (name == "lex") return orbita::MonomialOrder::Lex;
  if (name == "deglex") return orbita::MonomialOrder::DegLex;
  throw std::invalid_argument("unknown order '" + name + "' (grevlex, lex, deglex)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbit-hikita: exact checks for nilpotent-orbit ideal families"};
  app.set_version_flag("--version", std::string("orbit-hikita ") + orbita::kToolVersion);
  app.require_subcommand(1);

  // ---- check ----
  auto* check = app.add_subcommand("check", "run a single catalog check");
  std::string check_name;
  std::vector<std::string> check_params;
  bool check_json_out = false, check_strict = false, check_timings = false;
  double check_time_limit = 0;
  unsigned long long check_seed = 42;
  check->add_option("name", check_name, "catalog check name")->required();
  check->add_option("--param", check_params, "check parameter k=v (repeatable)");
  check->add_flag("--json", check_json_out, "emit the result as JSON");
  check->add_flag("--strict", check_strict, "DISCREPANCY and SKIP also fail");
  check->add_flag("--timings", check_timings, "include measured wall times");
  check->add_option("--time-limit", check_time_limit, "Groebner time budget in seconds");
  check->add_option("--seed", check_seed, "seed for randomized sampling");

  // ---- suite ----
  auto* suite = app.add_subcommand("suite", "run a named check suite");
  std::string suite_name, suite_out;
  int suite_workers = 1;
  bool suite_strict = false, suite_timings = false;
  double suite_time_limit = 0;
  unsigned long long suite_seed = 42;
  suite->add_option("name", suite_name,
                    "suite: paper-core, properties, conjecture-instances, appendix-a, all")
      ->required();
  suite->add_option("--out", suite_out, "write the JSON report to this file");
  suite->add_option("--workers", suite_workers, "worker threads")->check(CLI::PositiveNumber);
  suite->add_option("--time-limit", suite_time_limit, "Groebner time budget per check, seconds");
  suite->add_option("--seed", suite_seed, "seed recorded in the report");
  suite->add_flag("--strict", suite_strict, "DISCREPANCY and SKIP also fail");
  suite->add_flag("--timings", suite_timings, "include measured wall times");

  // ---- ideal ----
  auto* ideal = app.add_subcommand("ideal", "Groebner utilities on ideal files");
  ideal->require_subcommand(1);
  std::string ideal_file, ideal_file2, ideal_poly, ideal_order = "grevlex";
  double ideal_time_limit = 0;

  auto* gb = ideal->add_subcommand("gb", "print the reduced Groebner basis");
  gb->add_option("file", ideal_file, "ideal file")->required();
  gb->add_option("--order", ideal_order, "grevlex (default), lex, deglex");
  gb->add_option("--time-limit", ideal_time_limit, "time budget in seconds");

  auto* dim = ideal->add_subcommand("dim", "print the quotient dimension");
  dim->add_option("file", ideal_file, "ideal file")->required();
  dim->add_option("--order", ideal_order, "grevlex (default), lex, deglex");
  dim->add_option("--time-limit", ideal_time_limit, "time budget in seconds");

  auto* nf = ideal->add_subcommand("nf", "print the normal form of a polynomial");
  nf->add_option("file", ideal_file, "ideal file")->required();
  nf->add_option("--poly", ideal_poly, "polynomial to reduce")->required();
  nf->add_option("--order", ideal_order, "grevlex (default), lex, deglex");
  nf->add_option("--time-limit", ideal_time_limit, "time budget in seconds");

  auto* eq = ideal->add_subcommand("equal", "decide whether two ideal files agree");
  eq->add_option("file", ideal_file, "first ideal file")->required();
  eq->add_option("file2", ideal_file2, "second ideal file")->required();
  eq->add_option("--time-limit", ideal_time_limit, "time budget in seconds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      orbita::CheckRequest req;
      req.name = orbita::canonical_check_name(check_name);
      req.params = parse_params(check_params);
      req.lim = make_limits(check_time_limit);
      req.seed = check_seed;
      orbita::ReportEntry entry{req, orbita::run_check(req)};
      if (check_json_out) {
        std::cout << orbita::check_json(entry, check_timings).dump(2) << "\n";
      } else {
        orbita::Report one;
        one.seed = req.seed;
        one.limits = req.lim;
        one.timings = check_timings;
        one.entries.push_back(entry);
        std::cout << orbita::report_text(one);
      }
      const auto st = entry.outcome.status;
      if (st == orbita::CheckStatus::Fail) return 1;
      if (check_strict && (st == orbita::CheckStatus::Discrepancy ||
                           st == orbita::CheckStatus::Skip))
        return 1;
      return 0;
    }

    if (suite->parsed()) {
      orbita::GbLimits lim = make_limits(suite_time_limit);
      orbita::Report rep =
          orbita::run_suite(suite_name, lim, suite_seed, suite_workers, suite_timings);
      const std::string js = orbita::report_json_text(rep);
      if (!suite_out.empty()) {
        std::ofstream outf(suite_out);
        if (!outf) throw std::runtime_error("cannot write '" + suite_out + "'");
        outf << js;
        std::cout << "suite " << suite_name << ": " << rep.entries.size() << " checks, "
                  << rep.count(orbita::CheckStatus::Pass) << " pass, "
                  << rep.count(orbita::CheckStatus::Fail) << " fail, "
                  << rep.count(orbita::CheckStatus::Discrepancy) << " discrepancy, "
                  << rep.count(orbita::CheckStatus::Skip) << " skip -> " << suite_out
                  << "\n";
      } else {
        std::cout << js;
      }
      return orbita::report_exit_code(rep, suite_strict);
    }

    if (ideal->parsed()) {
      const orbita::GbLimits lim = make_limits(ideal_time_limit);
      const orbita::MonomialOrder order = parse_order(ideal_order);
      if (gb->parsed()) {
        orbita::GeneratorFamily fam = orbita::parse_ideal_file(read_file(ideal_file));
        orbita::Ideal I = fam.as_ideal(order, lim);
        std::cout << "vars:";
        for (int i = 0; i < I.ring().size(); ++i) std::cout << " " << I.ring().name(i);
        std::cout << "\n";
        for (const auto& g : I.basis()) std::cout << g.str() << "\n";
        return 0;
      }
      if (dim->parsed()) {
        orbita::GeneratorFamily fam = orbita::parse_ideal_file(read_file(ideal_file));
        const auto d = orbita::quotient_dimension(fam.as_ideal(order, lim));
        if (d)
          std::cout << *d << "\n";
        else
          std::cout << "infinite\n";
        return 0;
      }
      if (nf->parsed()) {
        orbita::GeneratorFamily fam = orbita::parse_ideal_file(read_file(ideal_file));
        orbita::Polynomial f = orbita::Polynomial::parse(fam.ring(), ideal_poly);
        std::cout << orbita::normal_form(f, fam.as_ideal(order, lim)).str() << "\n";
        return 0;
      }
      if (eq->parsed()) {
        orbita::GeneratorFamily a = orbita::parse_ideal_file(read_file(ideal_file));
        orbita::GeneratorFamily b = orbita::parse_ideal_file(read_file(ideal_file2));
        if (a.ring() != b.ring()) {
          std::cout << "not equal (different variable sets)\n";
          return 1;
        }
        const bool same = orbita::ideal_equal(a.as_ideal(orbita::MonomialOrder::GrevLex, lim),
                                              b.as_ideal(orbita::MonomialOrder::GrevLex, lim));
        std::cout << (same ? "equal" : "not equal") << "\n";
        return same ? 0 : 1;
      }
    }
  } catch (const orbita::GbLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
