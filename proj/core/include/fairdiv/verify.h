#ifndef FAIRDIV_VERIFY_H_
#define FAIRDIV_VERIFY_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fairdiv/allocation.h"
#include "fairdiv/bundle.h"
#include "fairdiv/instance.h"
#include "fairdiv/ratio.h"

namespace fairdiv {

enum class Property {
  kAlphaEfx,
  kEf1,
  kBetaMnw,
  kGammaSeparation,
  kAlphaMms,
  kAlphaPmms,
  kAlphaGmms,
};

std::string_view PropertyName(Property p);

// A violated instance of the defining inequality lhs >= rhs.
struct Witness {
  int i = -1;
  int j = -1;
  // g for EFX, x for separation; -1 when unused.
  int item = -1;
  // The agent group for GMMS and MMS.
  std::vector<int> group;
  Ratio lhs;
  Ratio rhs;
};

struct GuaranteeReport {
  Property property = Property::kAlphaEfx;
  // alpha, beta or gamma; unused for EF1. For kBetaMnw with power_form set,
  // this holds beta^n instead of beta.
  Ratio parameter;
  bool power_form = false;
  // Reference Nash product for kBetaMnw.
  Ratio reference;
  bool pass = true;
  std::optional<Witness> witness;

  std::string Describe() const;
};

nlohmann::json ReportToJson(const GuaranteeReport& report);

// v_i(X_i) >= alpha * v_i(X_j - g) for all i != j and g in X_j.
GuaranteeReport IsAlphaEfx(const Instance& instance,
                           const Allocation& allocation, const Ratio& alpha);

// For all i != j with X_j nonempty, some g in X_j has
// v_i(X_i) >= v_i(X_j - g).
GuaranteeReport IsEf1(const Instance& instance, const Allocation& allocation);

// gamma * v_i(Z_i) >= v_i(x) for every agent i and unallocated item x.
// Requires 0 <= gamma <= 1.
GuaranteeReport IsGammaSeparated(const Instance& instance,
                                 const Allocation& allocation,
                                 const Ratio& gamma);

// NashProduct(allocation) >= beta^n * reference_product. beta must be > 0.
GuaranteeReport IsBetaMnw(const Instance& instance,
                          const Allocation& allocation, const Ratio& beta,
                          const Ratio& reference_product);
// Same check with beta^n supplied directly, for ratios whose n-th root is
// irrational.
GuaranteeReport IsBetaMnwPower(const Instance& instance,
                               const Allocation& allocation,
                               const Ratio& beta_power,
                               const Ratio& reference_product);

// mu_i(k, pool): the best over partitions of pool into k parts of the
// least valuable part. Throws CapacityError above the enumeration cap.
Ratio MmsShare(const Instance& instance, int agent, int k, Bundle pool);

// v_i(X_i) >= alpha * mu_i(n, [m]).
GuaranteeReport IsAlphaMms(const Instance& instance,
                           const Allocation& allocation, const Ratio& alpha);
// v_i(X_i) >= alpha * mu_i(2, X_i + X_j) for all i != j.
GuaranteeReport IsAlphaPmms(const Instance& instance,
                            const Allocation& allocation, const Ratio& alpha);
// v_i(X_i) >= alpha * mu_i(|I|, union of X_j over I) for every nonempty
// group I and i in I. Capped at GlobalLimits().max_gmms_agents agents.
GuaranteeReport IsAlphaGmms(const Instance& instance,
                            const Allocation& allocation, const Ratio& alpha);

// Recomputes both sides of a failed report's witness from the definitions
// and returns true iff they match and lhs < rhs.
bool ReplayWitness(const Instance& instance, const Allocation& allocation,
                   const GuaranteeReport& report);

}  // namespace fairdiv

#endif  // FAIRDIV_VERIFY_H_
