#pragma once

#include <string>

#include "twl/arith.hpp"

namespace twl {

/// Explicit compute cap, counted in basic field operations. Exceeding it is an
/// error (BudgetExceeded), never a silent truncation.
struct Budget {
  u64 max_ops = 1'000'000'000;

  /// Default budget, overridden by the TWL_BUDGET environment variable when set.
  static Budget from_env();

  void require(u64 ops, const std::string& what) const;
};

}  // namespace twl
