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

#include "svpsym/cli.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "svpsym/errors.hpp"
#include "svpsym/experiment.hpp"
#include "svpsym/hamiltonian.hpp"
#include "svpsym/kernel_analytic.hpp"
#include "svpsym/kernel_hnf.hpp"
#include "svpsym/lattice.hpp"
#include "svpsym/oracle.hpp"
#include "svpsym/spectral.hpp"
#include "svpsym/vqe.hpp"

namespace svpsym {

namespace {

using nlohmann::json;

struct Options {
  std::string kind = "nega";
  int dim = 6;
  int q = 0;
  int bits = 3;
  std::uint64_t seed = 0;
  int count = 1;
  int budget = 500;
  std::string out;
  std::string generator;
  std::string method;  // default: both for kernel/reduce, analytic for vqe
  std::string readout = "argmax";
  int shots = 1000;
  bool reduced = false;
  std::optional<int> matrix_index;
};

json matrix_json(const RealMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json constraints_json(const ConstraintsMatrix& a) {
  return {{"origin", a.origin},
          {"q", a.operator_index},
          {"prime", a.prime ? json(*a.prime) : json(nullptr)},
          {"rows", a.rows()},
          {"cols", a.cols()},
          {"entries", matrix_json(a.entries)}};
}

RealVector parse_generator(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("--generator: cannot parse '" + item + "'");
    }
  }
  if (values.size() < 2) throw InvalidArgument("--generator needs at least two comma-separated values");
  return Eigen::Map<RealVector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

struct Lattice {
  SymmetryKind kind;
  RealVector generator;
  GramMatrix gram;
};

Lattice make_lattice(Options& o) {
  const SymmetryKind kind = parse_symmetry_kind(o.kind);
  RealVector generator;
  if (!o.generator.empty()) {
    generator = parse_generator(o.generator);
    o.dim = static_cast<int>(generator.size());
  } else {
    if (o.dim < 2) throw InvalidArgument("--n must be at least 2");
    generator = sample_generator(o.seed, o.dim);
  }
  const StructuredBasis basis = build_basis(kind, generator);
  return Lattice{kind, generator, gram(basis)};
}

std::vector<double> to_vector(const RealVector& v) { return {v.data(), v.data() + v.size()}; }

OptimizerOptions optimizer_options(const Options& o) {
  OptimizerOptions opt;
  opt.budget = o.budget;
  opt.shots = o.shots;
  if (o.readout == "argmax") {
    opt.readout = Readout::Argmax;
  } else if (o.readout == "sampled") {
    opt.readout = Readout::Sampled;
  } else {
    throw InvalidArgument("--readout must be argmax or sampled");
  }
  return opt;
}

std::vector<ConstraintsMatrix> matrices_for(const Options& o, SymmetryKind kind, int dim, int q) {
  std::vector<ConstraintsMatrix> out;
  if (o.method == "analytic" || o.method == "both") {
    for (auto& a : constraints_for(kind, dim, q)) out.push_back(std::move(a));
  }
  if (o.method == "hnf" || o.method == "both") out.push_back(kernel_basis(kind, dim, q));
  if (o.method != "analytic" && o.method != "hnf" && o.method != "both") {
    throw InvalidArgument("--method must be analytic, hnf or both");
  }
  return out;
}

json cmd_gen(Options& o) {
  const Lattice l = make_lattice(o);
  const FourierBasis u = fourier_basis(l.kind, o.dim);
  const SpectralData s = eigenvalues(l.gram, u);
  return {{"kind", std::string(to_string(l.kind))},
          {"N", o.dim},
          {"seed", o.generator.empty() ? json(o.seed) : json(nullptr)},
          {"generator", to_vector(l.generator)},
          {"basis", matrix_json(build_basis(l.kind, l.generator).rows())},
          {"gram", matrix_json(l.gram.entries())},
          {"eigenvalues", to_vector(s.eigenvalues)},
          {"principal", s.principal}};
}

json cmd_kernel(Options& o) {
  const SymmetryKind kind = parse_symmetry_kind(o.kind);
  const CaseLabel label = classify(kind, o.dim, o.q);
  json matrices = json::array();
  for (const auto& a : matrices_for(o, kind, o.dim, o.q)) matrices.push_back(constraints_json(a));
  return {{"kind", std::string(to_string(kind))},
          {"N", o.dim},
          {"q", o.q},
          {"case", std::string(to_string(label.tag))},
          {"gcd", label.gcd_value},
          {"matrices", matrices}};
}

json cmd_reduce(Options& o) {
  const Lattice l = make_lattice(o);
  const SpectralData s = eigenvalues(l.gram, fourier_basis(l.kind, o.dim));
  const int q = o.q >= 0 ? o.q : s.principal;
  json forms = json::array();
  for (const auto& a : matrices_for(o, l.kind, o.dim, q)) {
    json entry = constraints_json(a);
    entry["reduced_gram"] = a.cols() > 0 ? matrix_json(reduce_gram(l.gram, a).entries) : json::array();
    forms.push_back(entry);
  }
  return {{"kind", std::string(to_string(l.kind))}, {"N", o.dim}, {"q", q}, {"principal", s.principal},
          {"forms", forms}};
}

json cmd_oracle(Options& o) {
  const Lattice l = make_lattice(o);
  const FourierBasis u = fourier_basis(l.kind, o.dim);
  const SpectralData s = eigenvalues(l.gram, u);
  const KernelStats k = kernel_stats(l.gram, u, s, o.bits);
  return {{"kind", std::string(to_string(l.kind))},
          {"N", o.dim},
          {"K", o.bits},
          {"principal", k.principal},
          {"shortest", k.oracle.shortest},
          {"length_sq", k.oracle.length_sq},
          {"enumerated", k.oracle.enumerated},
          {"in_kernel", k.in_kernel},
          {"gamma", k.gamma ? json(*k.gamma) : json(nullptr)},
          {"best_kernel_vector", k.best_kernel_vector}};
}

json cmd_vqe(Options& o) {
  const Lattice l = make_lattice(o);
  const SpectralData s = eigenvalues(l.gram, fourier_basis(l.kind, o.dim));
  const OptimizerOptions opt = optimizer_options(o);
  json result;
  if (o.reduced) {
    const int q = o.q >= 0 ? o.q : s.principal;
    const auto matrices = matrices_for(o, l.kind, o.dim, q);
    const std::size_t index = static_cast<std::size_t>(o.matrix_index.value_or(0));
    if (index >= matrices.size()) throw InvalidArgument("--matrix index out of range for this kernel");
    const ConstraintsMatrix& a = matrices[index];
    result = to_json(run_vqe(l.gram, &a, o.bits, o.seed, opt));
    result["constraints"] = constraints_json(a);
  } else {
    result = to_json(run_vqe(l.gram, nullptr, o.bits, o.seed, opt));
  }
  result["principal"] = s.principal;
  return result;
}

ExperimentConfig experiment_config(const Options& o) {
  ExperimentConfig cfg;
  cfg.kind = parse_symmetry_kind(o.kind);
  cfg.dim = o.dim;
  cfg.bits_per_register = o.bits;
  cfg.lattice_count = o.count;
  cfg.seed = o.seed;
  cfg.optimizer = optimizer_options(o);
  cfg.output_path = o.out;
  return cfg;
}

json cmd_table1(Options& o) {
  const ExperimentConfig cfg = experiment_config(o);
  const Table1Summary s = table1_experiment(cfg);
  json summary = to_json(s, cfg);
  write_outputs(cfg, s.records, summary);
  return summary;
}

json cmd_compare(Options& o) {
  const ExperimentConfig cfg = experiment_config(o);
  const CompareSummary s = compare_experiment(cfg);
  json summary = to_json(s, cfg);
  write_outputs(cfg, s.records, summary);
  return summary;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  o.q = -1;
  CLI::App app{"Symmetry-reduced shortest-vector search for cyclic and nega-cyclic lattices"};
  app.require_subcommand(1, 1);

  auto kind_opt = [&](CLI::App* c) { c->add_option("--kind", o.kind, "cyclic or nega")->capture_default_str(); };
  auto dim_opt = [&](CLI::App* c) { c->add_option("--n", o.dim, "lattice dimension N")->capture_default_str(); };
  auto seed_opt = [&](CLI::App* c) { c->add_option("--seed", o.seed, "RNG seed")->capture_default_str(); };
  auto gen_opt = [&](CLI::App* c) {
    c->add_option("--generator", o.generator, "comma-separated generator; overrides --n and --seed");
  };
  auto bits_opt = [&](CLI::App* c) {
    c->add_option("--k", o.bits, "qubits per register K")->capture_default_str();
  };
  auto method_opt = [&](CLI::App* c) {
    c->add_option("--method", o.method, "analytic, hnf or both");
  };
  auto vqe_opts = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "optimizer iterations")->capture_default_str();
    c->add_option("--readout", o.readout, "argmax or sampled")->capture_default_str();
    c->add_option("--shots", o.shots, "shots for sampled readout")->capture_default_str();
  };
  auto out_opt = [&](CLI::App* c) { c->add_option("--out", o.out, "CSV output path (summary JSON alongside)"); };

  CLI::App* gen = app.add_subcommand("gen", "emit a sampled lattice as JSON");
  kind_opt(gen), dim_opt(gen), seed_opt(gen), gen_opt(gen);

  CLI::App* kernel = app.add_subcommand("kernel", "emit constraints matrices of S_q");
  kind_opt(kernel), dim_opt(kernel), method_opt(kernel);
  kernel->add_option("--q", o.q, "operator index")->required();

  CLI::App* reduce = app.add_subcommand("reduce", "emit reduced Gram matrices A^T G A");
  kind_opt(reduce), dim_opt(reduce), seed_opt(reduce), gen_opt(reduce), method_opt(reduce);
  reduce->add_option("--q", o.q, "operator index (default: principal)");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force shortest vector and kernel statistics");
  kind_opt(oracle), dim_opt(oracle), seed_opt(oracle), gen_opt(oracle), bits_opt(oracle);

  CLI::App* vqe = app.add_subcommand("vqe", "single VQE run, full or reduced");
  kind_opt(vqe), dim_opt(vqe), seed_opt(vqe), gen_opt(vqe), bits_opt(vqe), vqe_opts(vqe);
  vqe->add_flag("--reduced", o.reduced, "run on a constraints matrix of the operator");
  vqe->add_option("--q", o.q, "operator index for --reduced (default: principal)");
  vqe->add_option("--matrix", o.matrix_index, "which constraints matrix for --reduced (default 0)");
  method_opt(vqe);

  CLI::App* table1 = app.add_subcommand("table1", "kernel-membership statistics over seeded lattices");
  kind_opt(table1), dim_opt(table1), seed_opt(table1), bits_opt(table1), out_opt(table1);
  table1->add_option("--count", o.count, "number of lattices")->capture_default_str();

  CLI::App* compare = app.add_subcommand("compare", "full versus reduced VQE over seeded lattices");
  kind_opt(compare), dim_opt(compare), seed_opt(compare), bits_opt(compare), vqe_opts(compare), out_opt(compare);
  compare->add_option("--count", o.count, "number of lattices")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  if (o.method.empty()) o.method = vqe->parsed() ? "analytic" : "both";

  try {
    json result;
    if (gen->parsed()) result = cmd_gen(o);
    if (kernel->parsed()) result = cmd_kernel(o);
    if (reduce->parsed()) result = cmd_reduce(o);
    if (oracle->parsed()) result = cmd_oracle(o);
    if (vqe->parsed()) result = cmd_vqe(o);
    if (table1->parsed()) result = cmd_table1(o);
    if (compare->parsed()) result = cmd_compare(o);
    out << result.dump(2) << '\n';
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace svpsym
