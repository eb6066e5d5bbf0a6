// Copyright 2026 The RadonKit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success or verification pass,
// 1 verification failure or operational error, 2 usage or parse error,
// 3 degenerate input (the violating point labels go to stderr).

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "radon/radon.hpp"

namespace {

struct GenArgs {
  int dim = 2;
  std::uint64_t seed = 0;
  long long bound = radon::kDefaultBound;
  std::string out;
};

struct ComputeArgs {
  std::string algo = "recursive";
  std::string file;
  std::string out;
};

struct VerifyArgs {
  std::string file;
};

struct FuzzArgs {
  std::string dims = "2..4";
  int instances = 100;
  std::uint64_t seed = 0;
  long long bound = radon::kDefaultBound;
  std::string replay_dir = ".";
};

void write_or_print(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
  } else {
    radon::write_file(out, text);
  }
}

int run_gen(const GenArgs& args) {
  const radon::InstanceFile file = radon::generate_instance(args.dim, args.seed, args.bound);
  write_or_print(args.out, radon::emit_instance(file));
  return 0;
}

int run_compute(const ComputeArgs& args) {
  const radon::InstanceFile file = radon::load_instance(args.file);
  radon::require_general_position(file.instance);
  radon::RadonCertificate cert = args.algo == "algebraic"
                                     ? radon::radon_algebraic(file.instance)
                                     : radon::radon_recursive(file.instance);
  write_or_print(args.out, radon::emit_certificate(cert));
  return 0;
}

int run_verify(const VerifyArgs& args) {
  const radon::InstanceFile file = radon::load_instance(args.file);
  const radon::VerifyReport report = radon::verify_instance(file.instance);
  std::cout << radon::emit_verify_report(report);
  return report.pass ? 0 : 1;
}

// "A..B" or a single "D".
std::pair<int, int> parse_dims(const std::string& spec) {
  const auto dots = spec.find("..");
  try {
    if (dots == std::string::npos) {
      const int d = std::stoi(spec);
      return {d, d};
    }
    const int lo = std::stoi(spec.substr(0, dots));
    const int hi = std::stoi(spec.substr(dots + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw radon::InvalidInputError("cannot parse dimension range: " + spec);
  }
}

int run_fuzz(const FuzzArgs& args) {
  radon::FuzzOptions options;
  const auto [lo, hi] = parse_dims(args.dims);
  options.dim_lo = lo;
  options.dim_hi = hi;
  options.instances = args.instances;
  options.seed = args.seed;
  options.bound = args.bound;
  options.replay_dir = args.replay_dir;
  const radon::FuzzSummary summary = radon::run_fuzz(options, &std::cout);
  std::cout << "fuzz: " << summary.passed << "/" << (summary.passed + summary.failed)
            << " instances passed in " << summary.seconds << " s\n";
  return summary.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Radon partition toolkit"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a random general-position instance");
  gen->add_option("--dim", gen_args.dim, "ambient dimension")->required();
  gen->add_option("--seed", gen_args.seed, "PRNG seed");
  gen->add_option("--bound", gen_args.bound, "coordinate magnitude bound");
  gen->add_option("--out", gen_args.out, "output file (default stdout)");

  ComputeArgs compute_args;
  CLI::App* compute = app.add_subcommand("compute", "compute the Radon certificate");
  compute->add_option("--algo", compute_args.algo, "construction to run")
      ->check(CLI::IsMember({"recursive", "algebraic"}));
  compute->add_option("file", compute_args.file, "instance file")->required();
  compute->add_option("--out", compute_args.out, "output file (default stdout)");

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "cross-check both constructions against the oracle");
  verify->add_option("file", verify_args.file, "instance file")->required();

  FuzzArgs fuzz_args;
  const char* replay_env = std::getenv("RADON_REPLAY_DIR");
  if (replay_env != nullptr) fuzz_args.replay_dir = replay_env;
  CLI::App* fuzz = app.add_subcommand("fuzz", "randomized cross-check sweep");
  fuzz->add_option("--dims", fuzz_args.dims, "dimension range A..B");
  fuzz->add_option("--instances", fuzz_args.instances, "instances per dimension");
  fuzz->add_option("--seed", fuzz_args.seed, "sweep seed");
  fuzz->add_option("--bound", fuzz_args.bound, "coordinate magnitude bound");
  fuzz->add_option("--replay-dir", fuzz_args.replay_dir,
                   "directory for failing-instance dumps (default $RADON_REPLAY_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (compute->parsed()) return run_compute(compute_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (fuzz->parsed()) return run_fuzz(fuzz_args);
  } catch (const radon::DegenerateInputError& e) {
    std::cerr << "error: degenerate input: " << e.what() << "\n";
    if (!e.violating_subset.empty()) {
      std::cerr << "violating_subset: " << radon::labels_to_string(e.violating_subset)
                << "\n";
    }
    return 3;
  } catch (const radon::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const radon::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const radon::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
