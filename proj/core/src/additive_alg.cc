#include "fairdiv/additive_alg.h"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "fairdiv/errors.h"
#include "fairdiv/verify.h"

namespace fairdiv {
namespace {

void RequireInputs(const Instance& instance, const Allocation& x,
                   const Ratio& alpha) {
  if (!instance.all_additive()) {
    throw PreconditionError("this algorithm needs additive valuations");
  }
  RequireCompatible(instance, x);
  if (!x.complete()) {
    throw PreconditionError("input allocation must be complete, unallocated: " +
                            x.Unallocated().ToString());
  }
  if (alpha.sign() < 0 || alpha > Ratio(1)) {
    throw PreconditionError("alpha = " + alpha.ToString() +
                            " must lie in [0, 1]");
  }
}

const char* BranchName(AdditiveBranch b) {
  switch (b) {
    case AdditiveBranch::kSelfMatch:
      return "self-match";
    case AdditiveBranch::kSteal:
      return "steal";
    case AdditiveBranch::kTakeUnmatched:
      return "take-unmatched";
    case AdditiveBranch::kCycle:
      return "cycle";
    case AdditiveBranch::kRemove:
      return "remove";
    case AdditiveBranch::kImprove:
      return "improve";
  }
  return "unknown";
}

// Shared loop of Algorithm 1 and its restartable variant.
class Matcher {
 public:
  Matcher(const Instance& instance, const Allocation& x, const Ratio& alpha,
          bool restartable)
      : instance_(instance), alpha_(alpha), restartable_(restartable) {
    state_.x = x.bundles();
    state_.z = x.bundles();
    state_.match.assign(instance.n(), kUnmatched);
  }

  // Returns X-hat when the restartable variant finds an improvement.
  std::optional<Allocation> Run() {
    const int n = instance_.n();
    const long long m1 = instance_.m() + 1;
    const long long cap =
        restartable_ ? m1 * (n + 1) * (n + 1) * (n + 1) : m1 * n;
    long long iterations = 0;
    while (true) {
      const auto it =
          std::find(state_.match.begin(), state_.match.end(), kUnmatched);
      if (it == state_.match.end()) return std::nullopt;
      if (++iterations > cap) {
        throw InternalError("matching loop exceeded its iteration bound of " +
                            std::to_string(cap));
      }
      std::optional<Allocation> improved =
          Step(static_cast<int>(it - state_.match.begin()));
      if (improved.has_value()) return improved;
    }
  }

  MatchState& state() { return state_; }

 private:
  void Unmatch(int owner) {
    for (int& j : state_.match) {
      if (j == owner) j = kUnmatched;
    }
  }

  bool IsMatched(int owner) const {
    return std::find(state_.match.begin(), state_.match.end(), owner) !=
           state_.match.end();
  }

  void Record(AdditiveStep step) {
    step.z = state_.z;
    step.match = state_.match;
    state_.trace.push_back(std::move(step));
  }

  std::optional<Allocation> Step(int i_star) {
    const int n = instance_.n();
    const auto& z = state_.z;
    // Favorite Z_j - g of i*.
    int j_star = -1;
    int g = -1;
    Ratio best;
    for (int j = 0; j < n; ++j) {
      for (int item : z[j]) {
        Ratio v = instance_.Value(i_star, z[j].Minus(item));
        if (j_star < 0 || v > best) {
          best = std::move(v);
          j_star = j;
          g = item;
        }
      }
    }
    const Ratio own = instance_.Value(i_star, z[i_star]);
    const bool good = j_star < 0 || (z[i_star] == state_.x[i_star]
                                         ? own >= alpha_ * best
                                         : own >= best);
    AdditiveStep step{.i_star = i_star};
    if (good) {
      Unmatch(i_star);
      state_.match[i_star] = i_star;
      step.branch = AdditiveBranch::kSelfMatch;
      Record(std::move(step));
      return std::nullopt;
    }
    step.j_star = j_star;
    step.g = g;
    if (!restartable_) {
      Unmatch(j_star);
      state_.z[j_star] = state_.z[j_star].Minus(g);
      state_.match[i_star] = j_star;
      step.branch = AdditiveBranch::kSteal;
      Record(std::move(step));
      return std::nullopt;
    }
    if (!IsMatched(j_star)) {
      state_.match[i_star] = j_star;
      step.branch = AdditiveBranch::kTakeUnmatched;
      Record(std::move(step));
      return std::nullopt;
    }
    Unmatch(j_star);
    state_.match[i_star] = j_star;
    ImprovingSequence seq = BuildImprovingSequence(state_.match, j_star);
    step.improving_sequence = seq.agents;
    if (seq.closes_cycle) {
      step.branch = AdditiveBranch::kCycle;
      Record(std::move(step));
      return std::nullopt;
    }
    state_.z[j_star] = state_.z[j_star].Minus(g);
    // v(Z) < (1/(alpha+1))^(n/(n-1)) v(X), raised to the (n-1)-th power.
    const Ratio vz = instance_.Value(j_star, state_.z[j_star]);
    const Ratio vx = instance_.Value(j_star, state_.x[j_star]);
    if (vz.Pow(n - 1) * (alpha_ + Ratio(1)).Pow(n) >= vx.Pow(n - 1)) {
      step.branch = AdditiveBranch::kRemove;
      Record(std::move(step));
      return std::nullopt;
    }
    step.branch = AdditiveBranch::kImprove;
    Record(std::move(step));
    return BuildImprovement(seq.agents);
  }

  Allocation BuildImprovement(const std::vector<int>& seq) const {
    const auto& x = state_.x;
    const auto& z = state_.z;
    std::vector<Bundle> hat = x;
    const int l = static_cast<int>(seq.size());
    hat[seq[0]] = x[seq[0]] - z[seq[0]];
    for (int s = 1; s + 1 < l; ++s) {
      hat[seq[s]] = (x[seq[s]] - z[seq[s]]) | z[seq[s - 1]];
    }
    hat[seq[l - 1]] = x[seq[l - 1]] | z[seq[l - 2]];
    try {
      return Allocation(instance_.m(), std::move(hat));
    } catch (const PreconditionError& e) {
      throw InternalError(std::string("improved allocation is invalid: ") +
                          e.what());
    }
  }

  const Instance& instance_;
  Ratio alpha_;
  bool restartable_;
  MatchState state_;
};

}  // namespace

Allocation MatchState::Matching(int m) const {
  std::vector<Bundle> bundles(match.size());
  for (std::size_t i = 0; i < match.size(); ++i) {
    if (match[i] != kUnmatched) bundles[i] = z[match[i]];
  }
  try {
    return Allocation(m, std::move(bundles));
  } catch (const PreconditionError& e) {
    throw InternalError(std::string("matched bundles overlap: ") + e.what());
  }
}

Algorithm1Result Algorithm1(const Instance& instance, const Allocation& x,
                            const Ratio& alpha) {
  RequireInputs(instance, x, alpha);
  Matcher matcher(instance, x, alpha, /*restartable=*/false);
  matcher.Run();
  MatchState& state = matcher.state();
  Allocation allocation = state.Matching(instance.m());
  return {std::move(allocation), std::move(state)};
}

Algorithm6Result Algorithm6(const Instance& instance, const Allocation& x,
                            const Ratio& alpha) {
  RequireInputs(instance, x, alpha);
  if (instance.n() < 2) {
    throw PreconditionError("the restartable variant needs n >= 2");
  }
  Matcher matcher(instance, x, alpha, /*restartable=*/true);
  std::optional<Allocation> improved = matcher.Run();
  MatchState& state = matcher.state();
  if (improved.has_value()) {
    return {true, std::move(*improved), std::move(state)};
  }
  Allocation allocation = state.Matching(instance.m());
  return {false, std::move(allocation), std::move(state)};
}

bool WithinAlgorithm7Bound(int iterations, int n, const Ratio& alpha,
                           const Ratio& beta_power) {
  const Ratio c = Ratio(n) * Ratio(n - 1) * (alpha + Ratio(1));
  return Ratio(iterations).Pow(n) * beta_power <= c.Pow(n);
}

Algorithm7Result Algorithm7(const Instance& instance, const Allocation& x0,
                            const Ratio& alpha, const Ratio& beta_power) {
  RequireInputs(instance, x0, alpha);
  if (beta_power.sign() <= 0 || beta_power > Ratio(1)) {
    throw PreconditionError("beta^n = " + beta_power.ToString() +
                            " must lie in (0, 1]");
  }
  Algorithm7Result result{.allocation = x0};
  result.products.push_back(NashProduct(instance, x0));
  while (!IsAlphaEfx(instance, result.allocation, alpha).pass) {
    if (!result.allocation.complete()) {
      throw InternalError("restartable pass returned a partial allocation "
                          "that is not alpha-EFX");
    }
    ++result.iterations;
    if (!WithinAlgorithm7Bound(result.iterations, instance.n(), alpha,
                               beta_power)) {
      throw InternalError("restart loop exceeded n(n-1)(alpha+1)/beta = " +
                          std::to_string(result.iterations - 1) +
                          " iterations");
    }
    Algorithm6Result step = Algorithm6(instance, result.allocation, alpha);
    result.allocation = std::move(step.allocation);
    if (step.improved) {
      result.products.push_back(NashProduct(instance, result.allocation));
    }
  }
  return result;
}

ImprovingSequence BuildImprovingSequence(const std::vector<int>& match,
                                         int j_star) {
  const int n = static_cast<int>(match.size());
  ImprovingSequence seq;
  seq.agents.push_back(j_star);
  while (static_cast<int>(seq.agents.size()) <= n) {
    const int last = seq.agents.back();
    if (match[j_star] == last) {
      seq.closes_cycle = true;
      return seq;
    }
    const auto it = std::find(match.begin(), match.end(), last);
    if (it == match.end()) return seq;
    seq.agents.push_back(static_cast<int>(it - match.begin()));
  }
  throw InternalError("improving sequence does not terminate");
}

std::vector<int> LastTouchers(const MatchState& state) {
  std::vector<int> last(state.x.size(), -1);
  for (const AdditiveStep& step : state.trace) {
    if (step.branch == AdditiveBranch::kSteal ||
        step.branch == AdditiveBranch::kRemove ||
        step.branch == AdditiveBranch::kImprove) {
      last[step.j_star] = step.i_star;
    }
  }
  return last;
}

std::vector<int> TouchingSequence(const std::vector<int>& last_touchers,
                                  int agent) {
  std::vector<int> seq = {agent};
  while (true) {
    const int toucher = last_touchers[seq.back()];
    if (toucher < 0) return seq;
    if (std::find(seq.begin(), seq.end(), toucher) != seq.end()) return seq;
    seq.push_back(toucher);
  }
}

nlohmann::json AdditiveTraceToJson(const MatchState& state) {
  nlohmann::json steps = nlohmann::json::array();
  for (const AdditiveStep& step : state.trace) {
    nlohmann::json j;
    j["branch"] = BranchName(step.branch);
    j["i_star"] = step.i_star;
    if (step.j_star >= 0) {
      j["j_star"] = step.j_star;
      j["g"] = step.g;
    }
    if (!step.improving_sequence.empty()) {
      j["improving_sequence"] = step.improving_sequence;
    }
    nlohmann::json z = nlohmann::json::array();
    for (const Bundle& b : step.z) z.push_back(b.Items());
    j["z"] = std::move(z);
    j["match"] = step.match;
    steps.push_back(std::move(j));
  }
  return steps;
}

}  // namespace fairdiv
