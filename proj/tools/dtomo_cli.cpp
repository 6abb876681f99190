#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "dtomo/errors.hpp"
#include "dtomo/runner/commands.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kNumericError = 3;

struct Args {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  int threads = 1;
};

void add_common(CLI::App* sub, Args& a) {
  sub->add_option("--config", a.config, "JSON run configuration")->required();
  sub->add_option("--out", a.out, "CSV output path (default: config \"output\", else stdout)");
  sub->add_option("--seed", a.seed, "RNG seed (overrides the config)");
  sub->add_option("--threads", a.threads, "worker threads (0 = hardware concurrency)")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pointer-based amplitude reconstruction and phase-estimation sweeps"};
  app.require_subcommand(1);
  Args args;
  using Command = void (*)(const dtomo::RunConfig&, const dtomo::RunOptions&, std::ostream&, std::ostream&);
  struct Entry {
    const char* name;
    const char* help;
    Command run;
  };
  const Entry entries[] = {
      {"reconstruct", "single-qubit reconstruction of every amplitude", dtomo::cmd_reconstruct},
      {"scan", "inverse-variance sweep over a phase grid", dtomo::cmd_scan},
      {"fisher", "NOON Fisher information and Cramer-Rao bound versus N", dtomo::cmd_fisher},
      {"mc", "Monte Carlo estimator variance against the analytic prediction", dtomo::cmd_mc},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub, args);
    subs.emplace_back(sub, e.run);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }

  try {
    const dtomo::RunConfig cfg = dtomo::load_config(args.config);
    dtomo::RunOptions opt;
    opt.seed = dtomo::effective_seed(cfg, args.seed);
    opt.threads = args.threads == 0 ? int(std::max(1u, std::thread::hardware_concurrency())) : args.threads;
    const std::string out_path = !args.out.empty() ? args.out : cfg.output;

    for (const auto& [sub, run] : subs) {
      if (!sub->parsed()) continue;
      // Buffer so a failure midway leaves no partial CSV behind.
      std::ostringstream buf;
      run(cfg, opt, buf, std::cerr);
      if (out_path.empty()) {
        std::cout << buf.str();
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
          std::cerr << "error: cannot write '" << out_path << "'\n";
          return kConfigError;
        }
        f << buf.str();
      }
    }
  } catch (const dtomo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool config = e.is_config() || e.kind() == dtomo::ErrorKind::InvalidArgument;
    return config ? kConfigError : kNumericError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericError;
  }
  return 0;
}
