// vknot: virtual knot invariants from the command line.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vknot/cli.hpp"

namespace cli = vknot::cli;

int main(int argc, char** argv) {
  CLI::App app{"Affine Index, Sawollek and ASawollek polynomials of virtual knots"};
  app.require_subcommand(1);

  std::string format_name = "human";
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"human", "kv"}));

  // compute
  auto* compute = app.add_subcommand("compute", "Compute invariants of a knot file");
  std::string compute_file;
  std::string which_name = "all";
  compute->add_option("file", compute_file, "Knot file")->required();
  compute->add_option("--which", which_name, "Invariant to print")
      ->check(CLI::IsMember({"affine", "sawollek", "asawollek", "delta", "gamma", "all"}));
  compute->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"human", "kv"}));

  // check-mellor
  auto* mellor = app.add_subcommand("check-mellor", "Check Delta(1/t,t) against P up to units");
  std::string mellor_file;
  std::vector<std::uint64_t> random_args;
  mellor->add_option("file", mellor_file, "Knot file");
  mellor->add_option("--random", random_args, "MAX_CROSSINGS COUNT SEED")->expected(3);

  // fuzz
  auto* fuzz = app.add_subcommand("fuzz", "Random Reidemeister-move invariance campaign");
  cli::FuzzOptions fuzz_opt;
  std::string reproducer_dir;
  fuzz->add_option("--knots", fuzz_opt.knots, "Number of random knots")->capture_default_str();
  fuzz->add_option("--moves", fuzz_opt.moves, "Moves per knot")->capture_default_str();
  fuzz->add_option("--max-crossings", fuzz_opt.max_crossings, "Crossings of the starting knots")->capture_default_str();
  fuzz->add_option("--seed", fuzz_opt.seed, "Master seed")->capture_default_str();
  fuzz->add_option("--reproducer-dir", reproducer_dir, "Write failing diagrams here");
  bool no_gamma = false;
  fuzz->add_flag("--no-gamma", no_gamma, "Skip the Gamma(1/t,t) comparison");
  fuzz->add_flag("--inject-fault", fuzz_opt.inject_fault, "Self-test: use a deliberately wrong P")->group("");

  // transform
  auto* transform = app.add_subcommand("transform", "Write the mirror image or reverse of a knot");
  std::string transform_in;
  std::string transform_op;
  std::string transform_out;
  transform->add_option("file", transform_in, "Input knot file")->required();
  transform->add_option("operation", transform_op, "mirror or reverse")
      ->required()
      ->check(CLI::IsMember({"mirror", "reverse"}));
  transform->add_option("out", transform_out, "Output knot file")->required();

  // search-gamma-pair
  auto* search = app.add_subcommand("search-gamma-pair", "Find knots with equal P but distinct Sawollek or Gamma");
  cli::SearchOptions search_opt;
  search->add_option("--max-crossings", search_opt.max_crossings)->capture_default_str();
  search->add_option("--trials", search_opt.trials)->capture_default_str();
  search->add_option("--seed", search_opt.seed)->capture_default_str();
  search->add_option("--out-dir", search_opt.out_dir)->capture_default_str();
  search->add_flag("--allow-zero-p", search_opt.allow_zero_p, "Also accept pairs with P = 0");
  search->add_flag("--accept-gamma-only", search_opt.accept_gamma_only,
                   "Accept pairs that differ only in Gamma(1/t,t)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInputError;
  }

  const auto format = format_name == "kv" ? cli::Format::KeyValue : cli::Format::Human;
  try {
    if (*compute) return cli::cmd_compute(compute_file, *cli::parse_which(which_name), format, std::cout, std::cerr);
    if (*mellor) {
      std::optional<std::string> file;
      if (!mellor_file.empty()) file = mellor_file;
      std::optional<cli::RandomBatch> batch;
      if (!random_args.empty())
        batch = cli::RandomBatch{static_cast<int>(random_args[0]), static_cast<int>(random_args[1]), random_args[2]};
      if (!file && !batch) {
        std::cerr << "error: check-mellor needs a file or --random\n";
        return cli::kInputError;
      }
      return cli::cmd_check_mellor(file, batch, std::cout, std::cerr);
    }
    if (*fuzz) {
      if (!reproducer_dir.empty()) fuzz_opt.reproducer_dir = reproducer_dir;
      fuzz_opt.check_gamma = !no_gamma;
      return cli::cmd_fuzz(fuzz_opt, std::cout, std::cerr);
    }
    if (*transform) {
      const auto op = transform_op == "mirror" ? cli::Transform::Mirror : cli::Transform::Reverse;
      return cli::cmd_transform(transform_in, op, transform_out, std::cerr);
    }
    if (*search) return cli::cmd_search_gamma_pair(search_opt, std::cout, std::cerr);
  } catch (const vknot::InternalInvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return cli::kViolation;
  } catch (const vknot::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kInputError;
  }
  return cli::kInputError;
}
