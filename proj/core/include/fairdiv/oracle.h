#ifndef FAIRDIV_ORACLE_H_
#define FAIRDIV_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "fairdiv/allocation.h"
#include "fairdiv/instance.h"
#include "fairdiv/ratio.h"

namespace fairdiv {

struct MnwResult {
  Allocation allocation;
  // NashProduct(allocation); zero unless every agent gets positive value.
  Ratio product;
  // Product of the positive values only.
  Ratio positive_product;
  int positive_agent_count = 0;
  bool nw_positive = false;
  // Number of complete allocations attaining the optimum.
  std::uint64_t ties = 0;
};

enum class SearchMode { kBranchAndBound, kPlain };

// Maximizes (number of agents with positive value, product of the positive
// values) lexicographically over all n^m complete allocations. The
// lexicographically smallest optimal assignment vector wins. Pruning uses
// v_i(own bundle + every unassigned item) per agent, which is an upper
// bound for any monotone valuation. Throws CapacityError when n^m exceeds
// GlobalLimits().max_assignments.
MnwResult ExactMnw(const Instance& instance,
                   SearchMode mode = SearchMode::kBranchAndBound);

nlohmann::json MnwResultToJson(const MnwResult& result);

struct BestEfxResult {
  Allocation allocation;
  Ratio product;
};

// Maximum Nash product over all (n+1)^m partial allocations that are
// alpha-EFX. Throws CapacityError above the cap.
BestEfxResult BestAlphaEfxProduct(const Instance& instance, const Ratio& alpha);

// A finite-parameter gap between the best alpha-EFX Nash product and the
// maximum Nash product on one of the impossibility families.
struct ImpossibilityCertificate {
  std::string family;
  Ratio alpha;
  Ratio mnw_product;
  Allocation mnw_allocation;
  Ratio best_efx_product;
  Allocation best_efx_allocation;
  // best_efx_product / mnw_product. No alpha-EFX allocation is beta-MNW
  // for any beta with beta^n > ratio.
  Ratio ratio;
  // Closed-form values the searches are compared against.
  Ratio expected_mnw_product;
  Ratio expected_best_efx_product;
  // Theorem-4 family: both searches equal the closed forms. Theorem-5
  // family: mnw equals N and the best product is at most sqrt(N).
  bool matches_closed_form = false;
};

// Items a_1..a_{n-1}, b_1..b_n; v_i(a_j) = 1/alpha + eps, v_i(b_i) = 1,
// v_i(b_j) = 0. Closed forms: mnw = (1 + 1/alpha + eps)^(n-1),
// best alpha-EFX = (1/alpha + eps)^(n-1).
ImpossibilityCertificate CertifyTheorem4(const Ratio& alpha, const Ratio& eps,
                                         int n);
// Two agents, five identical items, alpha = 2/sqrt(N). N must be a perfect
// square.
ImpossibilityCertificate CertifyTheorem5(std::int64_t big_n);

nlohmann::json CertificateToJson(const ImpossibilityCertificate& cert);

}  // namespace fairdiv

#endif  // FAIRDIV_ORACLE_H_
