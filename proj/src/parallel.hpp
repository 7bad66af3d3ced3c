//
// Copyright 2026 The stegosec Authors
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
//

#pragma once

// OpenMP loop helpers shared by the game kernels. Iterations must be
// independent; the first exception thrown by any iteration is rethrown on the
// calling thread once the loop has drained.

#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stegosec::detail {

inline int resolve_workers(int workers) {
#ifdef _OPENMP
  return workers > 0 ? workers : omp_get_max_threads();
#else
  (void)workers;
  return 1;
#endif
}

// Counts the indices in [0, n) for which body(state, index) is true. Each
// thread builds its own state with make_state().
template <class MakeState, class Body>
std::uint64_t parallel_count(std::uint64_t n, int workers, MakeState make_state,
                             Body body) {
  std::uint64_t hits = 0;
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  const auto count = static_cast<std::int64_t>(n);

#pragma omp parallel num_threads(resolve_workers(workers)) reduction(+ : hits)
  {
    std::optional<decltype(make_state())> state;
    try {
      state.emplace(make_state());
    } catch (...) {
#pragma omp critical(stegosec_parallel_error)
      if (!error) error = std::current_exception();
      failed = true;
    }
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < count; ++idx) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        if (body(*state, static_cast<std::uint64_t>(idx))) ++hits;
      } catch (...) {
#pragma omp critical(stegosec_parallel_error)
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return hits;
}

// Runs body(state, index) for every index in [0, n).
template <class MakeState, class Body>
void parallel_for(std::uint64_t n, int workers, MakeState make_state,
                  Body body) {
  parallel_count(n, workers, make_state,
                 [&body](auto& state, std::uint64_t idx) {
                   body(state, idx);
                   return false;
                 });
}

}  // namespace stegosec::detail
