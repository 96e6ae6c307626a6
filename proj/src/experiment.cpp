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

#include "svpsym/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "svpsym/errors.hpp"
#include "svpsym/hamiltonian.hpp"
#include "svpsym/kernel_analytic.hpp"
#include "svpsym/oracle.hpp"
#include "svpsym/spectral.hpp"

namespace svpsym {

namespace {

constexpr std::uint64_t kFullVqeStream = 0x100;
constexpr std::uint64_t kReducedVqeStream = 0x200;

int worker_count() {
  const char* env = std::getenv("SVPSYM_WORKERS");
  if (env == nullptr) return 1;
  const int n = std::atoi(env);
  return std::max(1, n);
}

// Evaluates make(i) for i in [0, count) on a small worker pool and returns the
// results in index order.
template <typename Make>
std::vector<ExperimentRecord> run_indexed(int count, Make make) {
  std::vector<ExperimentRecord> out(static_cast<std::size_t>(count));
  const int workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = make(i);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = next++; i < count; i = next++) out[static_cast<std::size_t>(i)] = make(i);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json config_json(const ExperimentConfig& cfg) {
  return {{"kind", std::string(to_string(cfg.kind))},
          {"N", cfg.dim},
          {"K", cfg.bits_per_register},
          {"lattices", cfg.lattice_count},
          {"seed", cfg.seed},
          {"budget", cfg.optimizer.budget}};
}

GramMatrix lattice_gram(const ExperimentConfig& cfg, std::uint64_t seed) {
  return gram(build_basis(cfg.kind, sample_generator(seed, cfg.dim)));
}

}  // namespace

void validate(const ExperimentConfig& cfg, bool runs_vqe) {
  if (cfg.dim < 2) throw InvalidArgument("experiment: N must be at least 2");
  if (cfg.lattice_count < 1) throw InvalidArgument("experiment: lattice count must be at least 1");
  if (cfg.bits_per_register < 1 || cfg.bits_per_register > kMaxBitsPerRegister) {
    throw InvalidArgument("experiment: K must lie in [1, 8]");
  }
  if (runs_vqe && cfg.optimizer.budget < 1) throw InvalidArgument("experiment: budget must be at least 1");
  if (cfg.dim * cfg.bits_per_register > kMaxQubits) {
    throw ResourceLimit("experiment: N * K = " + std::to_string(cfg.dim * cfg.bits_per_register) +
                        " exceeds the limit of " + std::to_string(kMaxQubits));
  }
}

std::uint64_t lattice_seed(const ExperimentConfig& cfg, int index) {
  return mix_seed(cfg.seed, static_cast<std::uint64_t>(index));
}

double percentile(std::vector<double> values, double p) {
  if (values.empty()) throw InvalidArgument("percentile of an empty sample");
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("percentile: p must lie in (0, 1]");
  std::sort(values.begin(), values.end());
  const auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(values.size()) - 1e-12));
  return values[std::max<std::size_t>(rank, 1) - 1];
}

double median(std::vector<double> values) {
  if (values.empty()) throw InvalidArgument("median of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

ExperimentRecord table1_record(const ExperimentConfig& cfg, int index) {
  ExperimentRecord r;
  r.index = index;
  r.seed = lattice_seed(cfg, index);
  const GramMatrix g = lattice_gram(cfg, r.seed);
  const FourierBasis u = fourier_basis(cfg.kind, cfg.dim);
  const SpectralData spectrum = eigenvalues(g, u);
  const KernelStats stats = kernel_stats(g, u, spectrum, cfg.bits_per_register);
  r.principal = stats.principal;
  r.oracle_length_sq = stats.oracle.length_sq;
  r.in_kernel = stats.in_kernel;
  r.gamma = stats.gamma;
  r.skipped = !stats.gamma.has_value();
  return r;
}

Table1Summary table1_experiment(const ExperimentConfig& cfg) {
  validate(cfg, false);
  Table1Summary s;
  s.records = run_indexed(cfg.lattice_count, [&](int i) { return table1_record(cfg, i); });
  s.lattices = cfg.lattice_count;
  int in_kernel = 0;
  int gamma_one = 0;
  std::vector<double> gammas;
  for (const auto& r : s.records) {
    if (r.in_kernel.value_or(false)) ++in_kernel;
    if (r.gamma) {
      gammas.push_back(*r.gamma);
      if (*r.gamma == 1.0) ++gamma_one;
    }
  }
  s.gamma_defined = static_cast<int>(gammas.size());
  s.fraction_in_kernel = static_cast<double>(in_kernel) / s.lattices;
  s.fraction_gamma_1 = static_cast<double>(gamma_one) / s.lattices;
  if (!gammas.empty()) s.p90_gamma = percentile(gammas, 0.9);
  return s;
}

ExperimentRecord compare_record(const ExperimentConfig& cfg, int index) {
  ExperimentRecord r;
  r.index = index;
  r.seed = lattice_seed(cfg, index);
  const GramMatrix g = lattice_gram(cfg, r.seed);
  const SpectralData spectrum = eigenvalues(g, fourier_basis(cfg.kind, cfg.dim));
  r.principal = spectrum.principal;
  r.oracle_length_sq = std::nan("");
  r.qubits_full = cfg.dim * cfg.bits_per_register;

  const std::vector<ConstraintsMatrix> matrices = constraints_for(cfg.kind, cfg.dim, r.principal);
  if (matrices.empty()) {
    r.skipped = true;
    return r;
  }

  const VqeResult full = run_vqe(g, nullptr, cfg.bits_per_register, mix_seed(r.seed, kFullVqeStream), cfg.optimizer);
  r.energy_full = full.energy;

  for (std::size_t j = 0; j < matrices.size(); ++j) {
    const ConstraintsMatrix& a = matrices[j];
    if (a.cols() * cfg.bits_per_register > kMaxQubits) continue;
    const VqeResult reduced = run_vqe(g, &a, cfg.bits_per_register, mix_seed(r.seed, kReducedVqeStream + j),
                                      cfg.optimizer);
    if (!r.energy_reduced || reduced.energy < *r.energy_reduced) {
      r.energy_reduced = reduced.energy;
      r.kernel_columns = a.cols();
      r.qubits_reduced = reduced.qubits_used;
    }
  }
  if (!r.energy_reduced) {
    r.skipped = true;
    return r;
  }
  r.lambda = *r.energy_reduced / *r.energy_full;
  return r;
}

CompareSummary compare_experiment(const ExperimentConfig& cfg) {
  validate(cfg, true);
  CompareSummary s;
  s.records = run_indexed(cfg.lattice_count, [&](int i) { return compare_record(cfg, i); });
  s.lattices = cfg.lattice_count;

  constexpr int kBins = 30;
  constexpr double kBinWidth = 0.1;
  for (int b = 0; b <= kBins; ++b) s.histogram_edges.push_back(b * kBinWidth);
  s.histogram_counts.assign(kBins + 1, 0);  // last bin collects lambda >= 3

  std::vector<double> lambdas;
  double ratio_sum = 0.0;
  int below_one = 0;
  for (const auto& r : s.records) {
    if (r.skipped || !r.lambda) {
      ++s.skipped;
      continue;
    }
    lambdas.push_back(*r.lambda);
    if (*r.lambda < 1.0) ++below_one;
    ratio_sum += static_cast<double>(r.qubits_full) / r.qubits_reduced;
    const int bin = std::min(kBins, static_cast<int>(std::floor(*r.lambda / kBinWidth)));
    ++s.histogram_counts[static_cast<std::size_t>(std::max(bin, 0))];
  }
  if (!lambdas.empty()) {
    s.median_lambda = median(lambdas);
    s.fraction_lambda_lt_1 = static_cast<double>(below_one) / static_cast<double>(lambdas.size());
    s.mean_qubit_ratio = ratio_sum / static_cast<double>(lambdas.size());
  }
  return s;
}

std::string records_csv(const std::vector<ExperimentRecord>& records, const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "schema_version,index,seed,N,K,q_star,M,gamma,in_kernel,lambda,oracle_length_sq,"
         "energy_full,energy_reduced,qubits_full,qubits_reduced,skipped\n";
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  for (const auto& r : records) {
    out << kSchemaVersion << ',' << r.index << ',' << r.seed << ',' << cfg.dim << ',' << cfg.bits_per_register << ','
        << r.principal << ',' << r.kernel_columns << ',' << opt(r.gamma) << ','
        << (r.in_kernel ? (*r.in_kernel ? "1" : "0") : "") << ',' << opt(r.lambda) << ','
        << (std::isnan(r.oracle_length_sq) ? std::string() : format_double(r.oracle_length_sq)) << ','
        << opt(r.energy_full) << ',' << opt(r.energy_reduced) << ',' << r.qubits_full << ',' << r.qubits_reduced
        << ',' << (r.skipped ? 1 : 0) << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const Table1Summary& s, const ExperimentConfig& cfg) {
  return {{"schema_version", kSchemaVersion},
          {"experiment", "table1"},
          {"config", config_json(cfg)},
          {"lattices", s.lattices},
          {"gamma_defined", s.gamma_defined},
          {"skipped", s.lattices - s.gamma_defined},
          {"fraction_in_kernel", s.fraction_in_kernel},
          {"fraction_gamma_1", s.fraction_gamma_1},
          {"p90_gamma", optional_json(s.p90_gamma)}};
}

nlohmann::json to_json(const CompareSummary& s, const ExperimentConfig& cfg) {
  return {{"schema_version", kSchemaVersion},
          {"experiment", "compare"},
          {"config", config_json(cfg)},
          {"lattices", s.lattices},
          {"skipped", s.skipped},
          {"median_lambda", optional_json(s.median_lambda)},
          {"fraction_lambda_lt_1", s.fraction_lambda_lt_1},
          {"mean_qubit_ratio", s.mean_qubit_ratio},
          {"histogram", {{"edges", s.histogram_edges}, {"counts", s.histogram_counts}}}};
}

void write_outputs(const ExperimentConfig& cfg, const std::vector<ExperimentRecord>& records,
                   const nlohmann::json& summary) {
  if (cfg.output_path.empty()) return;
  const std::filesystem::path csv_path(cfg.output_path);
  std::filesystem::path json_path = csv_path;
  json_path.replace_extension(".json");
  if (json_path == csv_path) json_path += ".json";
  std::ofstream csv(csv_path, std::ios::binary);
  std::ofstream js(json_path, std::ios::binary);
  if (!csv || !js) throw InvalidArgument("cannot open output path " + cfg.output_path);
  csv << records_csv(records, cfg);
  js << summary.dump(2) << '\n';
}

}  // namespace svpsym
