#ifndef FAIRDIV_COMPLETION_H_
#define FAIRDIV_COMPLETION_H_

#include <vector>

#include <nlohmann/json.hpp>

#include "fairdiv/allocation.h"
#include "fairdiv/bundle.h"
#include "fairdiv/instance.h"
#include "fairdiv/oracle.h"
#include "fairdiv/ratio.h"
#include "fairdiv/verify.h"

namespace fairdiv {

// adjacency[i][j] iff v_i(Y_j) > v_i(Y_i).
std::vector<std::vector<bool>> EnvyGraph(const Instance& instance,
                                         const Allocation& y);

// First cycle found by depth-first search from the lowest node, as agents
// c_0 -> c_1 -> ... where each envies the next; empty when acyclic.
std::vector<int> FindEnvyCycle(const std::vector<std::vector<bool>>& graph);

struct EnvyCyclesResult {
  Allocation allocation;
  // Cycle rotations performed.
  int rotations = 0;
  // Allocation after each item placement.
  std::vector<Allocation> snapshots;
};

// For each x in u (increasing): eliminate envy cycles, then give x to the
// lowest-index agent nobody envies. u must be disjoint from z's items.
EnvyCyclesResult EnvyCycles(const Instance& instance, const Allocation& z,
                            Bundle u);

struct SingletonSwapsResult {
  Allocation allocation;
  Bundle unallocated;
  int swaps = 0;
};

// While some agent i has v_i(Z_i) < v_i(x) for an x in u, the lowest such
// agent swaps its bundle for its most valuable such x (lowest index on
// ties); the old bundle returns to u.
SingletonSwapsResult SingletonSwaps(const Instance& instance,
                                    const Allocation& z, Bundle u);

struct PipelineOptions {
  // Also certify the maximin-share family (additive pipeline only). Checks
  // that would exceed a cap are skipped.
  bool mms_family = true;
};

struct PipelineResult {
  MnwResult mnw;
  Allocation partial;
  Allocation allocation;
  std::vector<GuaranteeReport> reports;
  // Names of checks skipped for capacity reasons.
  std::vector<std::string> skipped;

  bool all_pass() const;
};

// exact MNW -> Algorithm1 -> EnvyCycles. Requires an additive instance and
// alpha^2 + alpha <= 1. Reports alpha-EFX, EF1, 1/(alpha+1)-MNW and, when
// enabled, alpha/(alpha^2+1)-GMMS, alpha/(alpha^2+1)-MMS and alpha-PMMS.
PipelineResult PipelineAdditive(const Instance& instance, const Ratio& alpha,
                                const PipelineOptions& options = {});

// exact MNW -> Algorithm2 -> SingletonSwaps (all unallocated items) ->
// EnvyCycles. Requires alpha <= 1/2. Reports alpha-EFX and
// 1/(alpha+1)-MNW.
PipelineResult PipelineSubadditive(const Instance& instance,
                                   const Ratio& alpha);

nlohmann::json PipelineResultToJson(const PipelineResult& result);

}  // namespace fairdiv

#endif  // FAIRDIV_COMPLETION_H_
