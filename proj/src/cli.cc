// Copyright 2026 The qudit-ramsey Authors
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

#include "qudit_ramsey/cli.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qudit_ramsey/csv.h"
#include "qudit_ramsey/metrics.h"
#include "qudit_ramsey/svg.h"
#include "qudit_ramsey/sweep.h"

namespace qudit_ramsey::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kProgram = "qudit-ramsey";

/// Bad arguments detected after parsing (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string csv_path;  // empty: CSV to stdout
  std::string svg_path;  // empty: no plot
  bool force = false;
};

struct SweepArgs {
  std::string protocol = "wm";
  int dim = 2;
  double tau = defaults::kTau;
  double pulse = defaults::kPulseDuration;
  std::optional<double> rabi;
  double from = defaults::kDeltaMin;
  double to = defaults::kDeltaMax;
  int points = kDefaultSweepPoints;
  bool metrics = false;
  unsigned threads = 0;
  OutputOptions output;
};

struct TableArgs {
  int points = kDefaultSweepPoints;
  unsigned threads = 0;
  OutputOptions output;
};

struct QfiArgs {
  std::vector<std::string> series{"wm:2", "wm:3", "wm:4", "wm:5"};
  bool qutrit_protocols = false;
  double tau = defaults::kTau;
  double pulse = defaults::kPulseDuration;
  std::optional<double> rabi;
  double from = -5.0;
  double to = 5.0;
  int points = 1001;
  double step = kQfiStep;
  OutputOptions output;
};

void add_output_options(CLI::App* cmd, OutputOptions& o, bool with_svg) {
  cmd->add_option("-o,--output", o.csv_path, "CSV output file (default: stdout)");
  if (with_svg) cmd->add_option("--svg", o.svg_path, "Also write an SVG line plot");
  cmd->add_flag("-f,--force", o.force, "Overwrite existing output files");
}

// Refuses to clobber unless forced; creates missing parent directories.
void prepare_path(const std::string& path, bool force) {
  const fs::path p(path);
  if (fs::exists(p) && !force) {
    throw UsageError("refusing to overwrite '" + path + "' (use --force)");
  }
  if (p.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
    if (ec) {
      throw UsageError("cannot create directory '" + p.parent_path().string() +
                       "': " + ec.message());
    }
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file << content;
  if (!file) throw std::runtime_error("failed to write '" + path + "'");
}

// Checks every output target before any computation runs.
void check_outputs(const OutputOptions& o) {
  if (!o.csv_path.empty()) prepare_path(o.csv_path, o.force);
  if (!o.svg_path.empty()) prepare_path(o.svg_path, o.force);
  if (!o.csv_path.empty() && o.csv_path == o.svg_path) {
    throw UsageError("CSV and SVG outputs must differ");
  }
}

void emit_csv(const OutputOptions& o, const csv::Table& table, std::ostream& out) {
  std::ostringstream buf;
  csv::write(buf, table);
  if (o.csv_path.empty()) {
    out << buf.str();
  } else {
    write_file(o.csv_path, buf.str());
  }
}

// Canonical re-runnable command: every value that shapes the numbers, with
// round-trip exact doubles.
std::string sweep_command(const SweepArgs& a) {
  std::ostringstream cmd;
  cmd << kProgram << " sweep --protocol " << a.protocol << " --dim " << a.dim
      << " --tau " << csv::exact(a.tau) << " --pulse " << csv::exact(a.pulse);
  if (a.rabi) cmd << " --rabi " << csv::exact(*a.rabi);
  cmd << " --from " << csv::exact(a.from) << " --to " << csv::exact(a.to)
      << " --points " << a.points;
  if (a.metrics) cmd << " --metrics";
  return cmd.str();
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  try {
    spec.protocol = {parse_protocol_kind(a.protocol), a.dim};
    spec.tau = a.tau;
    spec.pulse_duration = a.pulse;
    spec.rabi = a.rabi;
    spec.delta_min = a.from;
    spec.delta_max = a.to;
    spec.points = a.points;
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  check_outputs(a.output);

  const FringeSignal sig = run_sweep(spec, Execution{a.threads});

  csv::Table table;
  table.header = {
      {"command", sweep_command(a)},
      {"protocol", std::string(to_string(spec.protocol.kind))},
      {"dim", std::to_string(spec.protocol.dim)},
      {"tau", csv::exact(spec.tau)},
      {"rabi", csv::exact(spec.effective_rabi())},
      {"pulse_duration", csv::exact(spec.pulse_duration)},
      {"delta_min", csv::exact(spec.delta_min)},
      {"delta_max", csv::exact(spec.delta_max)},
      {"points", std::to_string(spec.points)},
  };
  if (a.metrics) {
    const FringeMetrics m = fringe_metrics(sig);
    table.header.emplace_back("resolution", csv::significant(m.resolution));
    table.header.emplace_back("contrast", csv::significant(m.contrast));
    table.header.emplace_back("rci", csv::significant(m.rci));
    err << spec.protocol.label() << ": resolution=" << csv::significant(m.resolution)
        << " contrast=" << csv::significant(m.contrast)
        << " rci=" << csv::significant(m.rci) << '\n';
  }
  table.columns = {"delta", "probability"};
  table.rows.reserve(sig.deltas.size());
  for (size_t i = 0; i < sig.deltas.size(); ++i) {
    table.rows.push_back({csv::fixed(sig.deltas[i]), csv::fixed(sig.probs[i])});
  }
  emit_csv(a.output, table, out);

  if (!a.output.svg_path.empty()) {
    svg::PlotOptions opts;
    opts.title = "Ramsey signal, protocol " + spec.protocol.label();
    opts.legend = {"tau=" + csv::significant(spec.tau, 6),
                   "Omega=" + csv::significant(spec.effective_rabi(), 6),
                   "T=" + csv::significant(spec.pulse_duration, 6),
                   "points=" + std::to_string(spec.points)};
    write_file(a.output.svg_path,
               svg::render({{spec.protocol.label(), sig.deltas, sig.probs}}, opts));
  }
  return kExitOk;
}

double relative_deviation(double value, double reference) {
  return (value - reference) / reference;
}

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  if (a.points < 2001 || a.points % 2 == 0) {
    throw UsageError("--points must be odd and >= 2001");
  }
  check_outputs(a.output);

  const auto rows = table_one(a.points, Execution{a.threads});
  const auto& refs = table_one_reference();

  csv::Table table;
  table.header = {
      {"command", std::string(kProgram) + " table --points " + std::to_string(a.points)},
      {"tau", csv::exact(defaults::kTau)},
      {"rabi", csv::exact(defaults::kRabi)},
      {"pulse_duration", csv::exact(defaults::kPulseDuration)},
      {"delta_min", csv::exact(defaults::kDeltaMin)},
      {"delta_max", csv::exact(defaults::kDeltaMax)},
      {"points", std::to_string(a.points)},
  };
  table.columns = {"protocol", "resolution", "contrast", "rci",
                   "reference_resolution", "reference_contrast", "reference_rci",
                   "resolution_deviation", "contrast_deviation", "rci_deviation"};

  std::ostringstream text;
  text << std::left << std::setw(8) << "protocol" << std::right
       << std::setw(10) << "Re" << std::setw(8) << "Co" << std::setw(10) << "RCI"
       << "  |" << std::setw(9) << "ref Re" << std::setw(8) << "ref Co"
       << std::setw(9) << "ref RCI" << "  |" << std::setw(8) << "dRe" << std::setw(8)
       << "dCo" << std::setw(8) << "dRCI" << '\n';
  bool failed = false;
  for (size_t i = 0; i < rows.size(); ++i) {
    const MetricTableRow& row = rows[i];
    const ReferenceRow& ref = refs[i];
    const double d_re = relative_deviation(row.resolution, ref.resolution);
    const double d_co = relative_deviation(row.contrast, ref.contrast);
    const double d_rci = relative_deviation(row.rci, ref.rci);
    table.rows.push_back({row.label, csv::significant(row.resolution),
                          csv::significant(row.contrast), csv::significant(row.rci),
                          csv::significant(ref.resolution), csv::significant(ref.contrast),
                          csv::significant(ref.rci), csv::significant(d_re),
                          csv::significant(d_co), csv::significant(d_rci)});
    if (!row.ok()) {
      failed = true;
      table.header.emplace_back("error_" + row.label, row.error);
      err << "row " << row.label << ": " << row.error << '\n';
    }
    auto pct = [](double d) {
      std::ostringstream s;
      s << std::showpos << std::fixed << std::setprecision(1) << 100.0 * d << '%';
      return s.str();
    };
    text << std::left << std::setw(8) << row.label << std::right << std::fixed
         << std::setprecision(3) << std::setw(10) << row.resolution << std::setw(8)
         << row.contrast << std::setw(10) << row.rci << "  |" << std::setw(9)
         << ref.resolution << std::setw(8) << ref.contrast << std::setw(9) << ref.rci
         << "  |" << std::setw(8) << pct(d_re) << std::setw(8) << pct(d_co)
         << std::setw(8) << pct(d_rci) << '\n';
  }

  if (a.output.csv_path.empty()) {
    out << text.str() << '\n';
    emit_csv(a.output, table, out);
  } else {
    out << text.str();
    emit_csv(a.output, table, out);
  }
  return failed ? kExitComputation : kExitOk;
}

Protocol parse_series(const std::string& item) {
  const size_t colon = item.find(':');
  if (colon == std::string::npos) {
    throw UsageError("series '" + item + "' must look like kind:D, e.g. wm:3");
  }
  Protocol p;
  try {
    p.kind = parse_protocol_kind(item.substr(0, colon));
    p.dim = std::stoi(item.substr(colon + 1));
    signal_rule_for(p.dim, p.kind);
  } catch (const std::exception& e) {
    throw UsageError("series '" + item + "': " + e.what());
  }
  return p;
}

int cmd_qfi(const QfiArgs& a, std::ostream& out, std::ostream&) {
  std::vector<std::string> items = a.series;
  if (a.qutrit_protocols) items = {"wm:3", "qft:3", "sqrtx:3"};
  std::vector<Protocol> protocols;
  for (const auto& item : items) protocols.push_back(parse_series(item));
  if (protocols.empty()) throw UsageError("no QFI series requested");
  if (!(a.from < a.to) || a.points < 3 || a.points % 2 == 0) {
    throw UsageError("need --from < --to and an odd --points >= 3");
  }
  if (!(a.step > 0.0)) throw UsageError("--step must be > 0");
  if (!(a.tau >= 0.0)) throw UsageError("--tau must be >= 0");
  const double rabi = a.rabi.value_or(WmSystem::calibrated_rabi(a.pulse));
  try {
    WmSystem{2, rabi, a.pulse, 0.0}.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  check_outputs(a.output);

  const std::vector<double> grid = uniform_grid(a.from, a.to, a.points);
  std::vector<std::vector<double>> columns(protocols.size());
  for (size_t s = 0; s < protocols.size(); ++s) {
    const WmSystem sys{protocols[s].dim, rabi, a.pulse, 0.0};
    columns[s].reserve(grid.size());
    for (double d : grid) columns[s].push_back(qfi(protocols[s], sys, a.tau, d, a.step));
  }

  std::ostringstream cmd;
  cmd << kProgram << " qfi --series ";
  for (size_t i = 0; i < items.size(); ++i) cmd << (i ? "," : "") << items[i];
  cmd << " --tau " << csv::exact(a.tau) << " --pulse " << csv::exact(a.pulse);
  if (a.rabi) cmd << " --rabi " << csv::exact(*a.rabi);
  cmd << " --from " << csv::exact(a.from) << " --to " << csv::exact(a.to)
      << " --points " << a.points << " --step " << csv::exact(a.step);

  csv::Table table;
  table.header = {{"command", cmd.str()},
                  {"tau", csv::exact(a.tau)},
                  {"rabi", csv::exact(rabi)},
                  {"pulse_duration", csv::exact(a.pulse)},
                  {"delta_min", csv::exact(a.from)},
                  {"delta_max", csv::exact(a.to)},
                  {"points", std::to_string(a.points)},
                  {"step", csv::exact(a.step)}};
  table.columns = {"delta"};
  for (const Protocol& p : protocols) {
    table.columns.push_back(std::string(to_string(p.kind)) + std::to_string(p.dim));
  }
  for (size_t i = 0; i < grid.size(); ++i) {
    std::vector<std::string> row{csv::fixed(grid[i])};
    for (const auto& col : columns) row.push_back(csv::significant(col[i]));
    table.rows.push_back(std::move(row));
  }
  emit_csv(a.output, table, out);

  if (!a.output.svg_path.empty()) {
    std::vector<svg::Series> series;
    for (size_t s = 0; s < protocols.size(); ++s) {
      series.push_back({table.columns[s + 1], grid, columns[s]});
    }
    svg::PlotOptions opts;
    opts.title = "Quantum Fisher information";
    opts.y_label = "QFI";
    opts.legend = {"tau=" + csv::significant(a.tau, 6),
                   "Omega=" + csv::significant(rabi, 6),
                   "T=" + csv::significant(a.pulse, 6)};
    write_file(a.output.svg_path, svg::render(series, opts));
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qudit Ramsey interferometry: fringe sweeps, RCI table and QFI",
               kProgram};
  app.require_subcommand(1);

  SweepArgs sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Sample the Ramsey signal over a detuning window");
  sweep_cmd->add_option("--protocol", sweep.protocol, "wm, qft or sqrtx")
      ->capture_default_str()
      ->check(CLI::IsMember({"wm", "qft", "sqrtx", "sqrt-x"}));
  sweep_cmd->add_option("--dim", sweep.dim, "Qudit dimension D")->capture_default_str();
  sweep_cmd->add_option("--tau", sweep.tau, "Interrogation time")->capture_default_str();
  sweep_cmd->add_option("--pulse", sweep.pulse, "Pulse duration T")->capture_default_str();
  sweep_cmd->add_option("--rabi", sweep.rabi, "Rabi frequency (default pi/(2T))");
  sweep_cmd->add_option("--from", sweep.from, "Lowest detuning")->capture_default_str();
  sweep_cmd->add_option("--to", sweep.to, "Highest detuning")->capture_default_str();
  sweep_cmd->add_option("--points", sweep.points, "Grid points (odd)")->capture_default_str();
  sweep_cmd->add_flag("--metrics", sweep.metrics,
                      "Compute resolution/contrast/RCI; recorded in the CSV header");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0: all cores, 1: serial)")
      ->capture_default_str();
  add_output_options(sweep_cmd, sweep.output, true);

  TableArgs table;
  CLI::App* table_cmd =
      app.add_subcommand("table", "Resolution, contrast and RCI for every protocol");
  table_cmd->add_option("--points", table.points, "Grid points per sweep (odd, >= 2001)")
      ->capture_default_str();
  table_cmd->add_option("--threads", table.threads, "Worker threads (0: all cores, 1: serial)")
      ->capture_default_str();
  add_output_options(table_cmd, table.output, false);

  QfiArgs qfi_args;
  CLI::App* qfi_cmd =
      app.add_subcommand("qfi", "Quantum Fisher information versus detuning");
  qfi_cmd->add_option("--series", qfi_args.series, "Comma-separated kind:D list")
      ->delimiter(',')
      ->capture_default_str();
  qfi_cmd->add_flag("--qutrit-protocols", qfi_args.qutrit_protocols,
                    "Shorthand for --series wm:3,qft:3,sqrtx:3");
  qfi_cmd->add_option("--tau", qfi_args.tau, "Interrogation time")->capture_default_str();
  qfi_cmd->add_option("--pulse", qfi_args.pulse, "Pulse duration T")->capture_default_str();
  qfi_cmd->add_option("--rabi", qfi_args.rabi, "Rabi frequency (default pi/(2T))");
  qfi_cmd->add_option("--from", qfi_args.from, "Lowest detuning")->capture_default_str();
  qfi_cmd->add_option("--to", qfi_args.to, "Highest detuning")->capture_default_str();
  qfi_cmd->add_option("--points", qfi_args.points, "Grid points (odd)")->capture_default_str();
  qfi_cmd->add_option("--step", qfi_args.step, "Finite-difference step in detuning")
      ->capture_default_str();
  add_output_options(qfi_cmd, qfi_args.output, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    CLI::App* target = &app;
    for (CLI::App* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    CLI::App* target = &app;
    for (CLI::App* sub : app.get_subcommands()) target = sub;
    err << "error: " << e.what() << "\n\n" << target->help();
    return kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    if (active == sweep_cmd) return cmd_sweep(sweep, out, err);
    if (active == table_cmd) return cmd_table(table, out, err);
    return cmd_qfi(qfi_args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{kProgram};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qudit_ramsey::cli
