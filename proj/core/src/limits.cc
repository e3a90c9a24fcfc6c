#include "fairdiv/limits.h"

#include <cstdlib>
#include <limits>
#include <string>

namespace fairdiv {
namespace {

Limits LoadLimits() {
  Limits limits;
  if (const char* env = std::getenv("FAIRDIV_CAP"); env != nullptr) {
    char* end = nullptr;
    unsigned long long cap = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) limits.max_assignments = cap;
  }
  return limits;
}

}  // namespace

Limits& GlobalLimits() {
  static Limits limits = LoadLimits();
  return limits;
}

std::uint64_t SaturatingPow(std::uint64_t base, int exp) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (int k = 0; k < exp; ++k) {
    if (base != 0 && result > kMax / base) return kMax;
    result *= base;
  }
  return result;
}

}  // namespace fairdiv
