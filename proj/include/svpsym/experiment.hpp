// Copyright 2026 The svpsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded multi-lattice experiments: kernel-membership statistics of the
// brute-force shortest vector, and full versus reduced VQE comparisons.
//
// Lattice i of an experiment uses generator sample_generator(mix_seed(seed, i), N).
// Results are merged in lattice order, so outputs do not depend on the
// worker count (environment variable SVPSYM_WORKERS, default 1).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "svpsym/lattice.hpp"
#include "svpsym/vqe.hpp"

namespace svpsym {

inline constexpr int kSchemaVersion = 1;

struct ExperimentConfig {
  SymmetryKind kind = SymmetryKind::NegaCyclic;
  int dim = 6;
  int bits_per_register = 3;
  int lattice_count = 1;
  std::uint64_t seed = 0;
  OptimizerOptions optimizer;
  std::string output_path;  // CSV path; the JSON summary goes next to it. Empty: no files.
};

void validate(const ExperimentConfig& cfg, bool runs_vqe);

std::uint64_t lattice_seed(const ExperimentConfig& cfg, int index);

// One row per lattice. Fields that an experiment does not compute stay empty.
struct ExperimentRecord {
  int index = 0;
  std::uint64_t seed = 0;
  int principal = 0;
  int kernel_columns = 0;  // M of the matrix used (compare) or 0
  double oracle_length_sq = 0.0;
  std::optional<bool> in_kernel;
  std::optional<double> gamma;
  std::optional<double> energy_full;
  std::optional<double> energy_reduced;
  std::optional<double> lambda;
  int qubits_full = 0;
  int qubits_reduced = 0;
  bool skipped = false;  // undefined statistic: empty kernel or empty box intersection
};

struct Table1Summary {
  int lattices = 0;
  int gamma_defined = 0;
  double fraction_in_kernel = 0.0;
  double fraction_gamma_1 = 0.0;
  std::optional<double> p90_gamma;
  std::vector<ExperimentRecord> records;
};

struct CompareSummary {
  int lattices = 0;
  int skipped = 0;
  std::optional<double> median_lambda;
  double fraction_lambda_lt_1 = 0.0;
  double mean_qubit_ratio = 0.0;
  std::vector<double> histogram_edges;
  std::vector<int> histogram_counts;
  std::vector<ExperimentRecord> records;
};

// Smallest value v of the sample with at least a fraction p of entries <= v.
double percentile(std::vector<double> values, double p);

double median(std::vector<double> values);

ExperimentRecord table1_record(const ExperimentConfig& cfg, int index);
Table1Summary table1_experiment(const ExperimentConfig& cfg);

ExperimentRecord compare_record(const ExperimentConfig& cfg, int index);
CompareSummary compare_experiment(const ExperimentConfig& cfg);

std::string records_csv(const std::vector<ExperimentRecord>& records, const ExperimentConfig& cfg);
nlohmann::json to_json(const Table1Summary& summary, const ExperimentConfig& cfg);
nlohmann::json to_json(const CompareSummary& summary, const ExperimentConfig& cfg);

// Writes the CSV to cfg.output_path and the summary to the same path with a
// .json extension. No-op when output_path is empty.
void write_outputs(const ExperimentConfig& cfg, const std::vector<ExperimentRecord>& records,
                   const nlohmann::json& summary);

}  // namespace svpsym
