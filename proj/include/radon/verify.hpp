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

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "radon/algebraic.hpp"
#include "radon/error.hpp"
#include "radon/generate.hpp"
#include "radon/instance_io.hpp"
#include "radon/oracle.hpp"
#include "radon/partition.hpp"
#include "radon/point.hpp"
#include "radon/predicates.hpp"
#include "radon/prng.hpp"
#include "radon/recursive.hpp"

namespace radon {

struct VerifyChecks {
  bool algebraic_certificate = false;
  bool recursive_certificate = false;
  bool oracle_unique = false;
  bool algebraic_matches_oracle = false;
  bool recursive_matches_oracle = false;

  bool all() const {
    return algebraic_certificate && recursive_certificate && oracle_unique &&
           algebraic_matches_oracle && recursive_matches_oracle;
  }
};

struct VerifyReport {
  std::string digest;
  int dim = 0;
  bool degenerate = false;
  std::vector<int> violating_subset;  // 1-based labels when degenerate
  std::optional<RadonCertificate> algebraic;
  std::optional<RadonCertificate> recursive;
  std::optional<OracleReport> oracle;
  VerifyChecks checks;
  bool pass = false;
  std::string first_discrepancy;  // empty iff pass
};

/// Cross-checks the two constructions against the enumeration oracle on
/// one instance. Every failure mode, including an exception escaping a
/// construction, is folded into the report; callers decide how loudly to
/// fail. The report is ordered: first_discrepancy names the earliest
/// failed check, later checks may be vacuously false.
inline VerifyReport verify_instance(const PointSet& ps) {
  VerifyReport report;
  report.digest = instance_digest(ps);
  report.dim = ps.dim;
  if (static_cast<int>(ps.points.size()) != ps.dim + 2) {
    throw InvalidInputError("expected " + std::to_string(ps.dim + 2) + " points, got " +
                            std::to_string(ps.points.size()));
  }
  const GeneralPositionReport gp = check_general_position(ps);
  if (!gp.ok) {
    report.degenerate = true;
    report.violating_subset = gp.violating_subset;
    report.first_discrepancy = "degenerate input: affinely dependent subset " +
                               labels_to_string(gp.violating_subset);
    return report;
  }

  try {
    report.algebraic = radon_algebraic(ps);
  } catch (const Error& e) {
    report.first_discrepancy = std::string("algebraic construction failed: ") + e.what();
    return report;
  }
  try {
    report.recursive = radon_recursive(ps);
  } catch (const Error& e) {
    report.first_discrepancy = std::string("recursive construction failed: ") + e.what();
    return report;
  }
  try {
    report.oracle = brute_force_radon(ps);
  } catch (const Error& e) {
    report.first_discrepancy = std::string("oracle enumeration failed: ") + e.what();
    return report;
  }
  const RadonCertificate& algebraic = *report.algebraic;
  const RadonCertificate& recursive = *report.recursive;
  const OracleReport& oracle = *report.oracle;

  const auto note = [&report](std::string message) {
    if (report.first_discrepancy.empty()) report.first_discrepancy = std::move(message);
  };

  const std::string bad_algebraic = certificate_violation(ps, algebraic);
  report.checks.algebraic_certificate = bad_algebraic.empty();
  if (!bad_algebraic.empty()) note("algebraic certificate invalid: " + bad_algebraic);

  const std::string bad_recursive = certificate_violation(ps, recursive);
  report.checks.recursive_certificate = bad_recursive.empty();
  if (!bad_recursive.empty()) note("recursive certificate invalid: " + bad_recursive);

  report.checks.oracle_unique = oracle.radon_partitions.size() == 1;
  if (!report.checks.oracle_unique) {
    note("oracle found " + std::to_string(oracle.radon_partitions.size()) +
         " radon partitions, expected exactly 1");
  }

  if (report.checks.oracle_unique) {
    const Partition& truth = oracle.radon_partitions.front().first;
    const Point& truth_witness = oracle.radon_partitions.front().second;
    report.checks.algebraic_matches_oracle =
        algebraic.partition == truth && algebraic.witness == truth_witness;
    if (!report.checks.algebraic_matches_oracle) {
      note("algebraic result " + to_string(algebraic.partition) + " at " +
           to_string(algebraic.witness) + " disagrees with oracle " + to_string(truth) +
           " at " + to_string(truth_witness));
    }
    report.checks.recursive_matches_oracle =
        recursive.partition == truth && recursive.witness == truth_witness;
    if (!report.checks.recursive_matches_oracle) {
      note("recursive result " + to_string(recursive.partition) + " at " +
           to_string(recursive.witness) + " disagrees with oracle " + to_string(truth) +
           " at " + to_string(truth_witness));
    }
  }

  report.pass = report.checks.all();
  return report;
}

inline std::string emit_verify_report(const VerifyReport& report) {
  nlohmann::ordered_json root;
  root["digest"] = report.digest;
  root["dim"] = report.dim;
  root["verdict"] = report.pass ? "pass" : "fail";
  if (!report.pass) root["first_discrepancy"] = report.first_discrepancy;
  if (report.degenerate) {
    root["violating_subset"] = detail::labels_json(report.violating_subset);
  }
  if (report.algebraic) root["algebraic"] = detail::certificate_json(*report.algebraic);
  if (report.recursive) root["recursive"] = detail::certificate_json(*report.recursive);
  if (report.oracle) {
    nlohmann::ordered_json oracle;
    nlohmann::ordered_json found = nlohmann::ordered_json::array();
    for (const auto& [partition, witness] : report.oracle->radon_partitions) {
      nlohmann::ordered_json entry;
      entry["partition"] = detail::partition_json(partition);
      entry["witness"] = detail::rationals_json(witness.coords);
      found.push_back(entry);
    }
    oracle["radon_partitions"] = found;
    oracle["intersecting_partitions"] = report.oracle->intersecting_partitions;
    root["oracle"] = oracle;
    nlohmann::ordered_json checks;
    checks["algebraic_certificate"] = report.checks.algebraic_certificate;
    checks["recursive_certificate"] = report.checks.recursive_certificate;
    checks["oracle_unique"] = report.checks.oracle_unique;
    checks["algebraic_matches_oracle"] = report.checks.algebraic_matches_oracle;
    checks["recursive_matches_oracle"] = report.checks.recursive_matches_oracle;
    root["checks"] = checks;
  }
  return root.dump(2) + "\n";
}

struct FuzzOptions {
  int dim_lo = 2;
  int dim_hi = 4;
  int instances = 100;
  std::uint64_t seed = 0;
  long long bound = kDefaultBound;
  std::string replay_dir = ".";  // empty disables replay dumps
};

struct FuzzDimStats {
  int dim = 0;
  int passed = 0;
  int failed = 0;
  double seconds = 0.0;
};

struct FuzzSummary {
  std::vector<FuzzDimStats> per_dim;
  int passed = 0;
  int failed = 0;
  double seconds = 0.0;
  std::vector<std::string> replay_paths;

  bool ok() const { return failed == 0; }
};

/// Randomized cross-check sweep. Instance (d, i) draws from the stream
/// derive(derive(seed, d), i), so any failure replays from three numbers
/// even if the sweep shape changes. Failing instances are additionally
/// dumped as ready-to-verify files under replay_dir.
inline FuzzSummary run_fuzz(const FuzzOptions& options, std::ostream* log = nullptr) {
  if (options.dim_lo > options.dim_hi) {
    throw InvalidInputError("fuzz dimension range is empty: lo exceeds hi");
  }
  if (options.dim_lo < 1 || options.dim_hi > 8) {
    throw InvalidInputError("fuzz dimension range must lie within [1, 8]");
  }
  if (options.instances < 1) throw InvalidInputError("fuzz needs at least one instance");
  FuzzSummary summary;
  const auto sweep_start = std::chrono::steady_clock::now();
  for (int dim = options.dim_lo; dim <= options.dim_hi; ++dim) {
    FuzzDimStats stats;
    stats.dim = dim;
    const auto dim_start = std::chrono::steady_clock::now();
    const std::uint64_t dim_seed =
        SplitMix64::derive(options.seed, static_cast<std::uint64_t>(dim));
    for (int index = 0; index < options.instances; ++index) {
      const std::uint64_t instance_seed =
          SplitMix64::derive(dim_seed, static_cast<std::uint64_t>(index));
      std::optional<InstanceFile> file;
      std::string failure;
      try {
        file = generate_instance(dim, instance_seed, options.bound);
        const VerifyReport report = verify_instance(file->instance);
        if (!report.pass) failure = report.first_discrepancy;
      } catch (const Error& e) {
        failure = e.what();
      }
      if (failure.empty()) {
        ++stats.passed;
        continue;
      }
      ++stats.failed;
      std::string where;
      if (file && !options.replay_dir.empty()) {
        where = options.replay_dir + "/radon-replay-d" + std::to_string(dim) + "-i" +
                std::to_string(index) + ".json";
        write_file(where, emit_instance(*file));
        summary.replay_paths.push_back(where);
      }
      if (log) {
        *log << "FAIL dim " << dim << " instance " << index << " seed " << instance_seed
             << ": " << failure;
        if (!where.empty()) *log << " (replay: " << where << ")";
        *log << "\n";
      }
    }
    stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                  dim_start)
                        .count();
    if (log) {
      *log << "dim " << dim << ": " << stats.passed << "/" << options.instances
           << " passed in " << stats.seconds << " s\n";
    }
    summary.passed += stats.passed;
    summary.failed += stats.failed;
    summary.per_dim.push_back(stats);
  }
  summary.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - sweep_start).count();
  return summary;
}

}  // namespace radon
