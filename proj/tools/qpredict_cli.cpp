// qpredict: state analysis, parameter sweeps and oracle cross-checks.
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qpredict/app/oracle.hpp"
#include "qpredict/app/report.hpp"
#include "qpredict/app/state_io.hpp"
#include "qpredict/app/sweep.hpp"
#include "qpredict/errors.hpp"

namespace {

enum Exit { kOk = 0, kOracleFail = 1, kParse = 2, kNonPhysical = 3, kIo = 4 };

}  // namespace

int main(int argc, char** argv) {
  namespace app = qpredict::app;

  CLI::App cli{"Predictability of local measurements on two-qubit states"};
  cli.require_subcommand(1);

  std::string state_path;
  int quad_n = qpredict::kDefaultQuadratureN;
  auto* state_cmd = cli.add_subcommand("state", "analyze one state given as JSON");
  state_cmd->add_option("path", state_path, "state file {t_a, t_b, c}")->required();
  state_cmd->add_option("--quad-n", quad_n, "quadrature points for the mixed Bayes regime");

  std::string family, grid, quantities, out, spec_path;
  std::uint64_t seed = 0;
  int sweep_quad_n = qpredict::kDefaultQuadratureN;
  unsigned threads = 0;
  auto* sweep_cmd = cli.add_subcommand("sweep", "evaluate quantities on a parameter grid, write CSV");
  sweep_cmd->add_option("--family", family, "bell-diagonal | adc | ttbar | integrated");
  sweep_cmd->add_option("--grid", grid, "e.g. beta=0:0.99:40,theta=0.05:3.09:40,w_gg=0");
  sweep_cmd->add_option("--quantities", quantities, "comma list, e.g. bayes-avg,f-haar");
  sweep_cmd->add_option("--out", out, "output CSV path");
  sweep_cmd->add_option("--quad-n", sweep_quad_n, "quadrature points");
  sweep_cmd->add_option("--seed", seed, "seed (recorded; sweeps are deterministic)");
  sweep_cmd->add_option("--spec", spec_path, "sweep spec as JSON instead of flags");
  sweep_cmd->add_option("--threads", threads, "worker threads, 0 = all cores");

  std::string suite;
  int n = 0;
  std::uint64_t oracle_seed = 1;
  int oracle_quad_n = qpredict::kDefaultQuadratureN;
  auto* oracle_cmd = cli.add_subcommand("oracle", "cross-check closed forms on random states");
  oracle_cmd->add_option("suite", suite, "results12 | averages | qkd")->required();
  oracle_cmd->add_option("-n,--n", n, "number of random states")->default_val(100);
  oracle_cmd->add_option("--seed", oracle_seed, "first seed")->default_val(1);
  oracle_cmd->add_option("--quad-n", oracle_quad_n, "quadrature points (averages suite)");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = cli.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*state_cmd) {
      const auto s = app::read_state_file(state_path);
      std::cout << app::state_report(s, quad_n).dump(2) << "\n";
      return kOk;
    }
    if (*sweep_cmd) {
      app::SweepSpec spec;
      if (!spec_path.empty()) {
        spec = app::sweep_spec_from_json(app::read_json_file(spec_path));
        if (!out.empty()) spec.out = out;
      } else {
        if (family.empty() || grid.empty() || quantities.empty())
          throw app::ParseError("sweep needs --family, --grid and --quantities (or --spec)");
        spec.family = app::parse_family(family);
        spec.axes = app::parse_grid(spec.family, grid);
        spec.quantities = app::parse_quantities(quantities);
        spec.out = out;
        spec.quad_n = sweep_quad_n;
        spec.seed = seed;
        app::check_spec(spec);
      }
      if (spec.out.empty() || spec.out == "-") {
        std::cout << app::run_sweep(spec, threads);
      } else {
        app::write_sweep(spec, threads);
      }
      return kOk;
    }
    if (*oracle_cmd) {
      const auto summary = app::run_oracle(app::parse_suite(suite), n, oracle_seed, oracle_quad_n);
      std::cout << summary.suite << ": n=" << summary.n << " max_deviation="
                << summary.max_deviation << " tolerance=" << summary.tolerance
                << " failures=" << summary.failures << (summary.passed ? " PASS" : " FAIL")
                << "\n";
      return summary.passed ? kOk : kOracleFail;
    }
  } catch (const app::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const app::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const qpredict::NonPhysical& e) {
    std::cerr << "nonphysical: " << e.what() << "\n";
    return kNonPhysical;
  } catch (const qpredict::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  return kOk;
}
