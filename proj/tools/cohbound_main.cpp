// Copyright 2026 The cohbound Authors
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


#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

bool parse_dims(const std::string& text, std::size_t& dim_a, std::size_t& dim_b) {
  std::istringstream in(text);
  char sep = 0;
  if (!(in >> dim_a >> sep >> dim_b) || (sep != 'x' && sep != 'X') || dim_a == 0 || dim_b == 0) {
    return false;
  }
  return (in >> std::ws).eof();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cohbound;
  CLI::App app{"cohbound: measurement-induced average coherence and its classical-correlation bound"};
  app.require_subcommand(0, 1);

  std::string emit_name;
  std::string emit_out;
  app.add_option("--emit-state", emit_name, "Write a built-in state: ex1|ex2|ex3|block|product|bell:c1,c2,c3");
  app.add_option("--emit-out", emit_out, "File for --emit-state (default: standard output)");

  auto* examples = app.add_subcommand("examples", "Reproduce the worked examples");

  SweepConfig sweep;
  std::string sweep_out;
  auto* figure2 = app.add_subcommand("figure2", "Bell-diagonal c1 sweep as CSV");
  figure2->add_option("--out", sweep_out, "CSV output path")->required();
  figure2->add_option("--c1-min", sweep.c1_min, "Lower end of the c1 range");
  figure2->add_option("--c1-max", sweep.c1_max, "Upper end of the c1 range");
  figure2->add_option("--steps", sweep.steps, "Number of rows")->check(CLI::PositiveNumber);

  cli::ComputeArgs compute_args;
  auto* compute = app.add_subcommand("compute", "Bound report for a state file");
  compute->add_option("--state", compute_args.state_path, "State file (JSON)")->required();
  auto* theta = compute->add_option("--theta", compute_args.theta, "Bloch polar angle on A");
  auto* phi = compute->add_option("--phi", compute_args.phi, "Bloch azimuth on A");
  auto* maximize =
      compute->add_flag("--maximize", compute_args.maximize, "Maximize the extra coherence");
  maximize->excludes(theta)->excludes(phi);
  theta->needs(phi);
  phi->needs(theta);

  cli::AuditArgs audit_args;
  std::string dims = "2x2";
  unsigned threads = 0;
  auto* audit = app.add_subcommand("audit", "Randomized audit of the bound chain");
  audit->add_option("--n-states", audit_args.theorems.n_states, "Random mixed states");
  audit->add_option("--n-measurements", audit_args.theorems.n_measurements,
                    "Random measurements per state");
  audit->add_option("--n-pure", audit_args.theorems.n_pure, "Pure states per pure batch");
  audit->add_option("--n-null", audit_args.null.n_per_class, "States per null-condition class");
  audit->add_option("--seed", audit_args.theorems.seed, "RNG seed");
  audit->add_option("--dims", dims, "Local dimensions as AxB");
  audit->add_option("--tolerance", audit_args.theorems.tolerance, "Bound-chain tolerance");
  audit->add_option("--threads", threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kUsageError;
  }

  try {
    if (!emit_name.empty()) {
      if (app.get_subcommands().size() != 0) {
        std::cerr << "--emit-state cannot be combined with a subcommand\n";
        return cli::kUsageError;
      }
      return cli::cmd_emit_state(emit_name, emit_out, std::cout, std::cerr);
    }
    if (examples->parsed()) return cli::cmd_examples(std::cout);
    if (figure2->parsed()) return cli::cmd_figure2(sweep_out, sweep, std::cerr);
    if (compute->parsed()) {
      if (!compute_args.maximize && theta->count() == 0) {
        std::cerr << "compute: give --theta and --phi, or --maximize\n";
        return cli::kUsageError;
      }
      return cli::cmd_compute(compute_args, std::cout, std::cerr);
    }
    if (audit->parsed()) {
      auto& t = audit_args.theorems;
      if (!parse_dims(dims, t.dim_a, t.dim_b)) {
        std::cerr << "audit: --dims must look like 2x2\n";
        return cli::kUsageError;
      }
      t.n_incoherent = std::min<std::size_t>(t.n_incoherent, t.n_states);
      t.threads = threads;
      auto& n = audit_args.null;
      n.dim_a = t.dim_a;
      n.dim_b = t.dim_b;
      n.seed = t.seed;
      n.threads = threads;
      if (t.tolerance < n.tolerance) n.tolerance = t.tolerance;
      return cli::cmd_audit(audit_args, std::cout);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return cli::kNumericFailure;
  }
  std::cout << app.help();
  return cli::kUsageError;
}
