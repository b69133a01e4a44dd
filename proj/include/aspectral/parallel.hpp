#pragma once

// Index-parallel loop used by the trial and grid kernels. The serial path is
// the reference implementation: every kernel writes its result into slot i, so
// both paths produce identical output regardless of scheduling.

#include <cstddef>
#include <exception>
#include <string_view>
#include <vector>

namespace aspectral {

enum class Execution { serial, parallel };

std::string_view to_string(Execution e);

template <class Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline std::string_view to_string(Execution e) {
  return e == Execution::serial ? "serial" : "parallel";
}

}  // namespace aspectral
