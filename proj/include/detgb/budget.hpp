#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace detgb {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("time budget exceeded") {}
};

/// Installs a wall-clock deadline for long computations on the current
/// thread. Buchberger runs poll it and throw BudgetExceeded once it passes.
class ScopedDeadline {
 public:
  using Clock = std::chrono::steady_clock;

  explicit ScopedDeadline(std::optional<Clock::time_point> deadline);
  ~ScopedDeadline();
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

  static std::optional<Clock::time_point> current();

 private:
  std::optional<Clock::time_point> previous_;
};

/// Throws BudgetExceeded if the current thread's deadline has passed.
void check_deadline();

}  // namespace detgb
