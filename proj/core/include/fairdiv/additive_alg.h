#ifndef FAIRDIV_ADDITIVE_ALG_H_
#define FAIRDIV_ADDITIVE_ALG_H_

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "fairdiv/allocation.h"
#include "fairdiv/bundle.h"
#include "fairdiv/instance.h"
#include "fairdiv/ratio.h"

namespace fairdiv {

inline constexpr int kUnmatched = -1;

enum class AdditiveBranch {
  // Z_{i*} is good enough: i* takes its own bundle.
  kSelfMatch,
  // i* takes Z_{j*} - g.
  kSteal,
  // Algorithm 6 only: Z_{j*} was unmatched; i* takes it whole.
  kTakeUnmatched,
  // Algorithm 6 only: the improving sequence closed a cycle; nothing removed.
  kCycle,
  // Algorithm 6 only: g removed and the threshold held.
  kRemove,
  // Algorithm 6 only: g removed, the threshold failed, X-hat returned.
  kImprove,
};

struct AdditiveStep {
  AdditiveBranch branch = AdditiveBranch::kSelfMatch;
  int i_star = -1;
  int j_star = -1;
  int g = -1;
  // Algorithm 6: the improving sequence j_1..j_l when one was built.
  std::vector<int> improving_sequence;
  // State at the end of the iteration.
  std::vector<Bundle> z;
  std::vector<int> match;
};

// The (X, Z, M) triple. match[i] is the owner j of the bundle Z_j that
// agent i holds, or kUnmatched; a shrinking Z_j stays matched.
struct MatchState {
  std::vector<Bundle> x;
  std::vector<Bundle> z;
  std::vector<int> match;
  std::vector<AdditiveStep> trace;

  // M_i = Z_{match[i]}, empty when unmatched.
  Allocation Matching(int m) const;
};

struct Algorithm1Result {
  Allocation allocation;
  MatchState state;
};

// Partial allocation from a complete allocation x (meant to be MNW).
// Ties: lowest unmatched agent first; j*, g maximize v_{i*}(Z_j - g),
// lowest j* then lowest g. Requires an additive instance, complete x and
// 0 <= alpha <= 1.
Algorithm1Result Algorithm1(const Instance& instance, const Allocation& x,
                            const Ratio& alpha);

struct Algorithm6Result {
  // True when the improved complete allocation X-hat was returned.
  bool improved = false;
  Allocation allocation;
  MatchState state;
};

// One run of the restartable variant. Requires n >= 2.
Algorithm6Result Algorithm6(const Instance& instance, const Allocation& x,
                            const Ratio& alpha);

struct Algorithm7Result {
  Allocation allocation;
  // Calls to Algorithm6 (loop iterations).
  int iterations = 0;
  // Nash products of the successive complete allocations, starting at x0.
  std::vector<Ratio> products;
};

// Re-runs Algorithm6 while the current allocation is not alpha-EFX.
// beta_power is beta^n for the input x0 being beta-MNW, 0 < beta <= 1.
// Throws InternalError if the loop exceeds n(n-1)(alpha+1)/beta iterations.
Algorithm7Result Algorithm7(const Instance& instance, const Allocation& x0,
                            const Ratio& alpha, const Ratio& beta_power);

// True iff iterations <= n(n-1)(alpha+1)/beta, compared as n-th powers.
bool WithinAlgorithm7Bound(int iterations, int n, const Ratio& alpha,
                           const Ratio& beta_power);

struct ImprovingSequence {
  std::vector<int> agents;
  // True when it ended on condition (i): Z_{j_l} is matched to j*.
  bool closes_cycle = false;
};

// j_1 = j*, j_{s+1} the agent matched to Z_{j_s}, until Z_{j_s} is matched
// to j* or unmatched.
ImprovingSequence BuildImprovingSequence(const std::vector<int>& match,
                                         int j_star);

// last[i] = i* of the last step that removed an item from Z_i, or -1 when
// Z_i was never touched.
std::vector<int> LastTouchers(const MatchState& state);

// k_1 = i, k_{s+1} = last toucher of k_s, until k_s is untouched or its
// last toucher is already in the sequence.
std::vector<int> TouchingSequence(const std::vector<int>& last_touchers,
                                  int agent);

nlohmann::json AdditiveTraceToJson(const MatchState& state);

}  // namespace fairdiv

#endif  // FAIRDIV_ADDITIVE_ALG_H_
