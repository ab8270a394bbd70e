#include "twl/budget.hpp"

#include <cstdlib>

#include "twl/errors.hpp"

namespace twl {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("TWL_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw Error(ErrorKind::InvalidArgument, std::string("TWL_BUDGET is not a positive integer: ") + env);
    b.max_ops = v;
  }
  return b;
}

void Budget::require(u64 ops, const std::string& what) const {
  if (ops > max_ops)
    throw Error(ErrorKind::BudgetExceeded,
                what + " needs " + std::to_string(ops) + " ops, budget is " + std::to_string(max_ops));
}

}  // namespace twl
