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

// Command implementations behind the cohbound CLI. Each returns a process exit
// code: 0 success, 1 numeric/acceptance failure, 2 usage or file error.

#ifndef COHBOUND_TOOLS_COMMANDS_HPP
#define COHBOUND_TOOLS_COMMANDS_HPP

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cohbound/cohbound.hpp"

namespace cohbound::cli {

enum ExitCode : int { kOk = 0, kNumericFailure = 1, kUsageError = 2 };

inline std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

inline int cmd_examples(std::ostream& out, const SearchConfig& search = {}) {
  const auto rows = reproduce_examples(search);
  out << std::left << std::setw(4) << "ex" << std::setw(32) << "quantity" << std::setw(18)
      << "reference" << std::setw(18) << "computed" << std::setw(20) << "gap" << std::setw(10)
      << "tol" << "status\n";
  bool all_ok = true;
  for (const auto& r : rows) {
    all_ok = all_ok && r.ok();
    out << std::setw(4) << r.example << std::setw(32) << r.quantity << std::setw(18)
        << fmt(r.reference) << std::setw(18) << fmt(r.computed) << std::setw(20) << fmt(r.gap())
        << std::setw(10) << fmt(r.tolerance) << (r.ok() ? "ok" : "FAIL") << '\n';
  }
  return all_ok ? kOk : kNumericFailure;
}

inline int cmd_figure2(const std::string& out_path, const SweepConfig& cfg, std::ostream& log) {
  std::vector<SweepRow> rows;
  try {
    rows = bell_sweep(cfg);
  } catch (const std::invalid_argument& e) {
    log << "figure2: " << e.what() << '\n';
    return kUsageError;
  }
  std::ofstream file(out_path);
  if (!file) {
    log << "figure2: cannot open '" << out_path << "' for writing\n";
    return kUsageError;
  }
  write_sweep_csv(file, rows);
  std::size_t bad = 0;
  for (const auto& r : rows) {
    if (r.j_closed < r.extra_miatc - 1e-9 || r.extra_miatc < r.extra_miac - 1e-9) ++bad;
  }
  log << "wrote " << rows.size() << " rows to " << out_path << '\n';
  if (bad != 0) {
    log << "figure2: " << bad << " rows break J >= extra MIATC >= extra MIAC\n";
    return kNumericFailure;
  }
  return kOk;
}

inline void print_report(std::ostream& out, const BoundReport& r) {
  auto row = [&](const char* label, double v) {
    out << std::left << std::setw(22) << label << shortest_repr(v) << '\n';
  };
  if (r.measurement.angles()) {
    row("theta", r.measurement.angles()->theta);
    row("phi", r.measurement.angles()->phi);
  }
  row("C(rho_B)", r.c_b);
  row("C_T(rho_B)", r.ct_b);
  row("miac", r.miac);
  row("miatc", r.miatc);
  row("extra_miac", r.extra_miac);
  row("extra_miatc", r.extra_miatc);
  row("J", r.j_classical);
  row("mutual_information", r.mutual_information);
  row("discord", r.discord);
}

struct ComputeArgs {
  std::string state_path;
  double theta = 0.0;
  double phi = 0.0;
  bool maximize = false;
};

inline int cmd_compute(const ComputeArgs& args, std::ostream& out, std::ostream& log,
                       const SearchConfig& search = {}) {
  std::optional<BipartiteState> state;
  try {
    state = read_state_file(args.state_path);
  } catch (const StateFileError& e) {
    log << "compute: " << e.what() << '\n';
    return kUsageError;
  }
  if (!args.maximize) {
    if (state->dim_a() != 2) {
      log << "compute: --theta/--phi need a qubit subsystem A (dim_a = " << state->dim_a()
          << ")\n";
      return kUsageError;
    }
    print_report(out, bound_report(*state, qubit_projector_pair(args.theta, args.phi), search));
    return kOk;
  }
  out << "# maximal extra MIAC\n";
  print_report(out, max_extra_miac(*state, search));
  out << "# maximal extra MIATC\n";
  print_report(out, max_extra_miatc(*state, search));
  return kOk;
}

struct AuditArgs {
  AuditConfig theorems;
  NullConditionConfig null;
  std::size_t max_listed = 20;
};

inline int cmd_audit(const AuditArgs& args, std::ostream& out) {
  const AuditResult thm = audit_theorems(args.theorems);
  const NullConditionResult null = audit_null_condition(args.null);
  out << "rng: " << thm.rng_algorithm << ", seed " << thm.rng_seed << '\n';
  out << "bound-chain audit: " << thm.trials << " state/measurement pairs, tolerance "
      << fmt(thm.tolerance) << ", max gap " << fmt(thm.max_gap) << ", violations "
      << thm.violations.size() << '\n';
  for (const auto& [check, gap] : thm.check_max_gap) {
    out << "  " << std::left << std::setw(32) << check << "n=" << std::setw(8)
        << thm.check_count.at(check) << "max gap " << fmt(gap) << '\n';
  }
  out << "null-condition audit: tolerance " << fmt(null.sufficiency.tolerance) << ", max gap "
      << fmt(null.sufficiency.max_gap) << ", violations " << null.sufficiency.violations.size()
      << '\n';
  for (const auto& [check, gap] : null.sufficiency.check_max_gap) {
    out << "  " << std::left << std::setw(32) << check << "n=" << std::setw(8)
        << null.sufficiency.check_count.at(check) << "max gap " << fmt(gap) << '\n';
  }
  out << "  generic states with max extra MIAC > " << fmt(args.null.detection_threshold) << ": "
      << null.generic_detected << "/" << null.generic_trials << " (min "
      << fmt(null.generic_min_extra_miac) << ", need fraction " << fmt(null.required_fraction)
      << ")\n";
  std::size_t listed = 0;
  for (const auto* list : {&thm.violations, &null.sufficiency.violations}) {
    for (const auto& v : *list) {
      if (listed++ >= args.max_listed) break;
      out << "VIOLATION " << v.check << " state=" << v.state << " measurement=" << v.measurement
          << " gap=" << fmt(v.gap) << '\n';
    }
  }
  const bool ok = thm.passed() && null.passed();
  out << (ok ? "audit passed" : "audit FAILED") << '\n';
  return ok ? kOk : kNumericFailure;
}

/// ex1 | ex2 | ex3 | block | product | bell:c1,c2,c3
inline BipartiteState named_state(const std::string& name) {
  if (name == "ex1") return fixtures::example1();
  if (name == "ex2") return fixtures::example2();
  if (name == "ex3") return fixtures::example3();
  if (name == "block") return fixtures::block_diagonal_example();
  if (name == "product") {
    const DensityMatrix a(ComplexMatrix::diagonal({0.7, 0.3}));
    const DensityMatrix b(0.6 * fixtures::ket_plus() + 0.4 * fixtures::ket0());
    return product_state(a, b);
  }
  if (name.rfind("bell:", 0) == 0) {
    std::istringstream in(name.substr(5));
    BellDiagonalParams p;
    char comma1 = 0;
    char comma2 = 0;
    if (!(in >> p.c1 >> comma1 >> p.c2 >> comma2 >> p.c3) || comma1 != ',' || comma2 != ',' ||
        !(in >> std::ws).eof()) {
      throw std::invalid_argument("expected bell:c1,c2,c3, got '" + name + "'");
    }
    return bell_diagonal_state(p);
  }
  throw std::invalid_argument("unknown state '" + name + "' (ex1|ex2|ex3|block|product|bell:c1,c2,c3)");
}

inline int cmd_emit_state(const std::string& name, const std::string& out_path, std::ostream& out,
                          std::ostream& log) {
  try {
    const BipartiteState s = named_state(name);
    if (out_path.empty()) {
      out << serialize_state(s) << '\n';
    } else {
      write_state_file(out_path, s);
    }
  } catch (const std::exception& e) {
    log << "emit-state: " << e.what() << '\n';
    return kUsageError;
  }
  return kOk;
}

}  // namespace cohbound::cli

#endif  // COHBOUND_TOOLS_COMMANDS_HPP
