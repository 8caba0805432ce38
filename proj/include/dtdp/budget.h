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

#ifndef DTDP_BUDGET_H_
#define DTDP_BUDGET_H_

#include <chrono>
#include <optional>
#include <stdexcept>

namespace dtdp {

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("timeout") {}
};

// Per-thread wall-clock limit applied to each solver call. Solvers poll
// check_budget() from their search loops; it throws TimeoutError once the
// limit is exceeded.
void set_solver_time_limit(std::optional<std::chrono::milliseconds> limit);

// Starts the clock for one solver call. Nested scopes share the outer clock.
class SolverScope {
 public:
  SolverScope();
  ~SolverScope();
  SolverScope(const SolverScope&) = delete;
  SolverScope& operator=(const SolverScope&) = delete;

 private:
  bool owner_;
};

void check_budget();

}  // namespace dtdp

#endif  // DTDP_BUDGET_H_
