#ifndef FAIRDIV_SUBADDITIVE_ALG_H_
#define FAIRDIV_SUBADDITIVE_ALG_H_

#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fairdiv/allocation.h"
#include "fairdiv/bundle.h"
#include "fairdiv/instance.h"
#include "fairdiv/ratio.h"

namespace fairdiv {

// What an agent holds: nothing, the current white bundle Z_owner, or a
// detached blue bundle stored by value.
struct SubMatch {
  enum class Kind { kNone, kWhite, kBlue };

  Kind kind = Kind::kNone;
  int owner = -1;
  Bundle bundle;

  static SubMatch None() { return {}; }
  static SubMatch White(int owner) { return {Kind::kWhite, owner, Bundle()}; }
  static SubMatch Blue(Bundle b) { return {Kind::kBlue, -1, b}; }

  bool operator==(const SubMatch&) const = default;
};

enum class SubCase {
  kSelf,      // 1
  kSingle,    // 2.1
  kKeepJ,     // 2.2
  kTakeR,     // 2.3
  kJWithK,    // 2.4
  kTakeS,     // 2.5
  kRestWithK, // 2.6
  kRed,       // 3
  kBlue,      // 4
};

// "1", "2.1", ..., "4".
std::string_view SubCaseTag(SubCase c);

struct SubStep {
  SubCase tag = SubCase::kSelf;
  int i = -1;
  int j = -1;
  int k = -1;
  int g = -1;
  Bundle big_j;
  Bundle r;
  Bundle s;
  // State at the end of the iteration.
  std::vector<Bundle> x;
  std::vector<Bundle> z;
  std::vector<SubMatch> match;
};

struct SubState {
  std::vector<Bundle> x;
  std::vector<Bundle> z;
  std::vector<SubMatch> match;
  std::vector<SubStep> trace;
};

// The bundle an agent holds under `match`.
Bundle Resolve(const std::vector<Bundle>& z, const SubMatch& match);

enum class Colour { kWhite, kRed, kBlue };

struct Candidate {
  Colour colour = Colour::kWhite;
  // j for white and red, the holder for blue.
  int owner = -1;
  // The removed item g for white and blue, -1 for red.
  int g = -1;
  Bundle bundle;
};

// The available bundles B: {Z_j - g}, {X_j \ Z_j}, {M_j - g} for blue M_j,
// in tie-break order (white, red, blue; lowest owner; lowest g). White M_j
// contribute nothing new since M_j - g is then some Z_l - g.
std::vector<Candidate> AvailableBundles(const std::vector<Bundle>& x,
                                        const std::vector<Bundle>& z,
                                        const std::vector<SubMatch>& match);

struct Algorithm2Result {
  Allocation allocation;
  SubState state;
};

// Partial alpha-EFX allocation from an arbitrary complete allocation x.
// Requires a subadditive instance and 0 <= alpha <= 1/2. The lowest
// unmatched agent moves first; the minimal S is the first subset of R in
// order of size, then lexicographically; k is the lowest agent in K_S.
Algorithm2Result Algorithm2(const Instance& instance, const Allocation& x,
                            const Ratio& alpha);

nlohmann::json SubTraceToJson(const SubState& state);

}  // namespace fairdiv

#endif  // FAIRDIV_SUBADDITIVE_ALG_H_
