#ifndef FAIRDIV_TOOLS_SWEEP_H_
#define FAIRDIV_TOOLS_SWEEP_H_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fairdiv/ratio.h"

namespace fairdiv::cli {

// One (instance, alpha, algorithm) outcome. Verdicts are "pass", "fail" or
// "NA"; ratio is the achieved Nash product over the optimum.
struct SweepRow {
  std::string instance_id;
  Ratio alpha;
  std::string algorithm;
  bool complete = false;
  std::optional<Ratio> product;
  std::optional<Ratio> mnw_product;
  std::optional<Ratio> ratio;
  Ratio bound;
  std::string alpha_efx = "NA";
  std::string ef1 = "NA";
  std::string mnw_bound = "NA";
  // Error class when the row could not run: "precondition", "capacity",
  // "malformed" or "internal".
  std::string error;
  std::optional<long long> time_ms;
};

// Algorithm tags.
inline constexpr const char* kAdditivePartial = "additive-partial";
inline constexpr const char* kAdditiveComplete = "additive-complete";
inline constexpr const char* kAdditiveRestart = "additive-restart";
inline constexpr const char* kSubadditiveComplete = "subadditive-complete";

// Spec format:
//   {"instances": [{<generator spec>, "count": 20}, ...],
//    "alphas": ["0", "1/4"],
//    "algorithms": ["additive-partial", ...]}          (optional)
// "count" expands to seeds seed, seed+1, ... Without "algorithms", additive
// instances run the three additive tags and all others run
// subadditive-complete. Rows are ordered by instance, alpha, then tag.
std::vector<SweepRow> RunSweep(const nlohmann::json& spec, bool timing);

std::string SweepCsvHeader();
std::string SweepCsvLine(const SweepRow& row);

}  // namespace fairdiv::cli

#endif  // FAIRDIV_TOOLS_SWEEP_H_
