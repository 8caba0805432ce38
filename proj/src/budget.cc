// Copyright 2026 The dtdp Authors
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

#include "dtdp/budget.h"

namespace dtdp {
namespace {

using Clock = std::chrono::steady_clock;

thread_local std::optional<std::chrono::milliseconds> g_limit;
thread_local std::optional<Clock::time_point> g_deadline;
thread_local unsigned g_ticks = 0;

}  // namespace

void set_solver_time_limit(std::optional<std::chrono::milliseconds> limit) {
  g_limit = limit;
}

SolverScope::SolverScope() : owner_(!g_deadline.has_value()) {
  if (owner_ && g_limit) g_deadline = Clock::now() + *g_limit;
}

SolverScope::~SolverScope() {
  if (owner_) g_deadline.reset();
}

void check_budget() {
  if (!g_deadline) return;
  if ((++g_ticks & 1023u) != 0) return;
  if (Clock::now() > *g_deadline) throw TimeoutError();
}

}  // namespace dtdp
