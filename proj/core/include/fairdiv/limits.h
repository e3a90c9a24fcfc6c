#ifndef FAIRDIV_LIMITS_H_
#define FAIRDIV_LIMITS_H_

#include <cstdint>

namespace fairdiv {

// Caps for the exponential searches. Exceeding a cap raises CapacityError.
struct Limits {
  // Leaves of an n^m or (n+1)^m enumeration, and labelings of an MMS pool.
  std::uint64_t max_assignments = 20'000'000;
  // Largest m for which Explicit (table) valuations are accepted.
  int max_explicit_items = 16;
  // GMMS enumerates all 2^n agent groups.
  int max_gmms_agents = 6;
};

// Process-wide limits. The first call reads FAIRDIV_CAP (a positive integer)
// to override max_assignments.
Limits& GlobalLimits();

// Returns base^exp, saturating at UINT64_MAX.
std::uint64_t SaturatingPow(std::uint64_t base, int exp);

}  // namespace fairdiv

#endif  // FAIRDIV_LIMITS_H_
