#include "detgb/budget.hpp"

namespace detgb {

namespace {
thread_local std::optional<ScopedDeadline::Clock::time_point> tls_deadline;
}

ScopedDeadline::ScopedDeadline(std::optional<Clock::time_point> deadline) : previous_(tls_deadline) {
  if (deadline && (!tls_deadline || *deadline < *tls_deadline)) tls_deadline = deadline;
}

ScopedDeadline::~ScopedDeadline() { tls_deadline = previous_; }

std::optional<ScopedDeadline::Clock::time_point> ScopedDeadline::current() { return tls_deadline; }

void check_deadline() {
  if (tls_deadline && ScopedDeadline::Clock::now() > *tls_deadline) throw BudgetExceeded();
}

}  // namespace detgb
