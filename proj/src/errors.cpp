#include "pgt/errors.hpp"

#include <cstdlib>
#include <string>

namespace pgt {

namespace {
Limits g_limits = limits_from_environment();
}  // namespace

const Limits& limits() { return g_limits; }

void set_limits(const Limits& l) { g_limits = l; }

Limits limits_from_environment(Limits base) {
  if (const char* env = std::getenv("PGT_ELEMENT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) base.element_cap = static_cast<std::size_t>(v);
  }
  return base;
}

void require_within_cap(std::size_t count, std::size_t cap, const char* what) {
  if (count > cap) {
    throw ResourceCapExceeded(std::string(what) + ": " + std::to_string(count) +
                              " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace pgt
