#include "nadyn/boettcher/budget.hpp"

#include <cstdlib>
#include <string>

#include "nadyn/errors.hpp"

namespace nadyn {

namespace {

template <class T>
void read_env(const char* name, T& slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  long long v = 0;
  try {
    v = std::stoll(raw);
  } catch (const std::logic_error&) {
    throw UsageError(std::string("bad value for ") + name + ": '" + raw + "'");
  }
  if (v < 1) throw UsageError(std::string(name) + " must be positive");
  slot = static_cast<T>(v);
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  read_env("NADYN_MAX_ORDER", b.max_order);
  read_env("NADYN_MAX_DEGREE", b.max_tree_degree);
  read_env("NADYN_MAX_GROUP", b.max_group_elements);
  return b;
}

}  // namespace nadyn
