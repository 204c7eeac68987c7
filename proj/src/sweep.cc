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

#include "qudit_ramsey/sweep.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace qudit_ramsey {

double SweepSpec::effective_rabi() const {
  return rabi.value_or(WmSystem::calibrated_rabi(pulse_duration));
}

void SweepSpec::validate() const {
  if (!std::isfinite(delta_min) || !std::isfinite(delta_max) ||
      !(delta_min < delta_max)) {
    throw std::invalid_argument("sweep window needs finite delta_min < delta_max");
  }
  if (points < 3 || points % 2 == 0) {
    throw std::invalid_argument("sweep needs an odd number of points >= 3, got " +
                                std::to_string(points));
  }
  if (!std::isfinite(tau) || tau < 0.0) {
    throw std::invalid_argument("interrogation time tau must be finite and >= 0");
  }
  WmSystem{protocol.dim, effective_rabi(), pulse_duration, 0.0}.validate();
  // Rejects protocol/dimension pairs without a signal rule up front.
  signal_rule_for(protocol.dim, protocol.kind);
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
  std::vector<double> grid(static_cast<size_t>(points));
  const double last = static_cast<double>(points - 1);
  for (int i = 0; i < points; ++i) {
    grid[static_cast<size_t>(i)] = std::lerp(lo, hi, static_cast<double>(i) / last);
  }
  return grid;
}

FringeSignal run_sweep(const SweepSpec& spec, Execution exec) {
  spec.validate();
  FringeSignal out;
  out.deltas = uniform_grid(spec.delta_min, spec.delta_max, spec.points);
  out.probs.assign(out.deltas.size(), 0.0);
  out.meta = {spec.protocol, spec.tau, spec.effective_rabi(), spec.pulse_duration};

  const WmSystem base{spec.protocol.dim, spec.effective_rabi(),
                      spec.pulse_duration, 0.0};
  auto evaluate = [&](size_t i) {
    WmSystem sys = base;
    sys.detuning = out.deltas[i];
    out.probs[i] = signal(spec.protocol, sys, spec.tau);
  };

  const size_t n = out.deltas.size();
  unsigned threads = exec.threads == 0 ? std::thread::hardware_concurrency()
                                       : exec.threads;
  threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(n));
  if (threads == 1) {
    for (size_t i = 0; i < n; ++i) evaluate(i);
    return out;
  }

  // Static contiguous chunks; each point is written by exactly one worker.
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      const size_t begin = n * t / threads;
      const size_t end = n * (t + 1) / threads;
      workers.emplace_back([&, begin, end] {
        try {
          for (size_t i = begin; i < end; ++i) evaluate(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

const std::array<ReferenceRow, 8>& table_one_reference() {
  static const std::array<ReferenceRow, 8> rows{{
      {"2", 3.584, 0.999, 3.582},
      {"sqrtX3", 3.184, 0.623, 1.984},
      {"QFT3", 6.823, 0.583, 3.976},
      {"3", 7.165, 0.998, 7.151},
      {"4", 10.756, 0.706, 7.588},
      {"5", 14.330, 0.745, 10.681},
      {"6", 17.801, 0.613, 10.912},
      {"7", 21.390, 0.569, 12.171},
  }};
  return rows;
}

std::array<Protocol, 8> table_one_protocols() {
  return {{{ProtocolKind::kWmRamsey, 2},
           {ProtocolKind::kSqrtX, 3},
           {ProtocolKind::kQft, 3},
           {ProtocolKind::kWmRamsey, 3},
           {ProtocolKind::kWmRamsey, 4},
           {ProtocolKind::kWmRamsey, 5},
           {ProtocolKind::kWmRamsey, 6},
           {ProtocolKind::kWmRamsey, 7}}};
}

std::vector<MetricTableRow> table_one(int points, Execution exec) {
  if (points < 2001) {
    throw std::invalid_argument("table needs at least 2001 grid points, got " +
                                std::to_string(points));
  }
  std::vector<MetricTableRow> rows;
  for (const Protocol& protocol : table_one_protocols()) {
    SweepSpec spec;
    spec.protocol = protocol;
    spec.points = points;
    MetricTableRow row;
    row.label = protocol.label();
    row.protocol = protocol;
    try {
      const FringeMetrics m = fringe_metrics(run_sweep(spec, exec));
      row.resolution = m.resolution;
      row.contrast = m.contrast;
      row.rci = m.rci;
    } catch (const UndefinedResolution& e) {
      row.resolution = row.contrast = row.rci = std::nan("");
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qudit_ramsey
