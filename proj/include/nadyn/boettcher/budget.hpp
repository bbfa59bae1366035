#pragma once

namespace nadyn {

/// Resource limits. Environment overrides: NADYN_MAX_ORDER (series
/// truncation order), NADYN_MAX_DEGREE (largest d^n expanded exactly),
/// NADYN_MAX_GROUP (largest subgroup enumerated).
struct Budget {
  int max_order = 4096;
  long max_tree_degree = 64;
  long max_group_elements = 1L << 22;

  static Budget from_env();
};

}  // namespace nadyn
