#pragma once

// Case sweeps: an OpenMP kernel and the serial loop it must agree with.
// Results are written to a slot per case index, so output order never
// depends on scheduling.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <vector>

namespace klimm {

enum class Execution { serial, parallel };

/// out[i] = f(i) for i in [0, count). f must be safe to call concurrently
/// when exec is parallel. The first exception (by case index) is rethrown.
template <class Result, class F>
std::vector<Result> map_cases(std::size_t count, F &&f, Execution exec) {
  std::vector<Result> out(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long>(count);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) {
      try {
        out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (long i = 0; i < n; ++i) {
      try {
        out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
  return out;
}

/// Mixes a base seed with a case index (splitmix64 finalizer).
inline std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace klimm
