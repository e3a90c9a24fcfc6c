#include "fairdiv/completion.h"

#include <string>
#include <utility>

#include "fairdiv/additive_alg.h"
#include "fairdiv/errors.h"
#include "fairdiv/instance_json.h"
#include "fairdiv/limits.h"
#include "fairdiv/subadditive_alg.h"

namespace fairdiv {
namespace {

void RequireDisjoint(const Allocation& z, Bundle u) {
  if (u.Intersects(z.Allocated())) {
    throw PreconditionError("items " + (u & z.Allocated()).ToString() +
                            " are both allocated and in U");
  }
  if (!u.IsSubsetOf(Bundle::Full(z.m()))) {
    throw PreconditionError("U = " + u.ToString() + " exceeds m = " +
                            std::to_string(z.m()));
  }
}

bool FindCycleFrom(const std::vector<std::vector<bool>>& graph, int node,
                   std::vector<int>& colour, std::vector<int>& path,
                   std::vector<int>& cycle) {
  colour[node] = 1;
  path.push_back(node);
  const int n = static_cast<int>(graph.size());
  for (int next = 0; next < n; ++next) {
    if (!graph[node][next]) continue;
    if (colour[next] == 1) {
      auto it = path.begin();
      while (*it != next) ++it;
      cycle.assign(it, path.end());
      return true;
    }
    if (colour[next] == 0 && FindCycleFrom(graph, next, colour, path, cycle)) {
      return true;
    }
  }
  colour[node] = 2;
  path.pop_back();
  return false;
}

}  // namespace

std::vector<std::vector<bool>> EnvyGraph(const Instance& instance,
                                         const Allocation& y) {
  const int n = instance.n();
  std::vector<std::vector<bool>> graph(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    const Ratio own = instance.Value(i, y[i]);
    for (int j = 0; j < n; ++j) {
      if (i != j && instance.Value(i, y[j]) > own) graph[i][j] = true;
    }
  }
  return graph;
}

std::vector<int> FindEnvyCycle(const std::vector<std::vector<bool>>& graph) {
  const int n = static_cast<int>(graph.size());
  std::vector<int> colour(n, 0);
  std::vector<int> path;
  std::vector<int> cycle;
  for (int start = 0; start < n; ++start) {
    if (colour[start] == 0 && FindCycleFrom(graph, start, colour, path, cycle)) {
      return cycle;
    }
  }
  return {};
}

EnvyCyclesResult EnvyCycles(const Instance& instance, const Allocation& z,
                            Bundle u) {
  RequireCompatible(instance, z);
  RequireDisjoint(z, u);
  const int n = instance.n();
  std::vector<Bundle> y = z.bundles();
  EnvyCyclesResult result{.allocation = z};
  for (int item : u) {
    Allocation current(instance.m(), y);
    while (true) {
      const std::vector<int> cycle = FindEnvyCycle(EnvyGraph(instance, current));
      if (cycle.empty()) break;
      const Bundle first = y[cycle[0]];
      for (std::size_t t = 0; t + 1 < cycle.size(); ++t) {
        y[cycle[t]] = y[cycle[t + 1]];
      }
      y[cycle.back()] = first;
      ++result.rotations;
      current = Allocation(instance.m(), y);
    }
    const auto graph = EnvyGraph(instance, current);
    int target = -1;
    for (int j = 0; j < n && target < 0; ++j) {
      bool envied = false;
      for (int i = 0; i < n; ++i) envied = envied || graph[i][j];
      if (!envied) target = j;
    }
    if (target < 0) throw InternalError("acyclic envy graph has no source");
    y[target] = y[target].Plus(item);
    result.snapshots.push_back(Allocation(instance.m(), y));
  }
  result.allocation = Allocation(instance.m(), std::move(y));
  return result;
}

SingletonSwapsResult SingletonSwaps(const Instance& instance,
                                    const Allocation& z, Bundle u) {
  RequireCompatible(instance, z);
  RequireDisjoint(z, u);
  const int n = instance.n();
  std::vector<Bundle> y = z.bundles();
  SingletonSwapsResult result{.allocation = z, .unallocated = u};
  const long long cap = static_cast<long long>(n) * (instance.m() + 1);
  while (true) {
    int agent = -1;
    int best_item = -1;
    for (int i = 0; i < n && agent < 0; ++i) {
      const Ratio own = instance.Value(i, y[i]);
      Ratio best = own;
      for (int x : u) {
        Ratio v = instance.Value(i, x);
        if (v > best) {
          best = std::move(v);
          best_item = x;
        }
      }
      if (best_item >= 0) agent = i;
    }
    if (agent < 0) break;
    if (++result.swaps > cap) {
      throw InternalError("singleton swaps exceeded " + std::to_string(cap));
    }
    u = (u | y[agent]).Minus(best_item);
    y[agent] = Bundle::Single(best_item);
  }
  result.allocation = Allocation(instance.m(), std::move(y));
  result.unallocated = u;
  return result;
}

bool PipelineResult::all_pass() const {
  for (const GuaranteeReport& r : reports) {
    if (!r.pass) return false;
  }
  return true;
}

PipelineResult PipelineAdditive(const Instance& instance, const Ratio& alpha,
                                const PipelineOptions& options) {
  if (!instance.all_additive()) {
    throw PreconditionError("the additive pipeline needs additive valuations");
  }
  if (alpha.sign() < 0 || !AtMostGoldenRatioConjugate(alpha)) {
    throw PreconditionError("alpha = " + alpha.ToString() +
                            " violates 0 <= alpha and alpha^2 + alpha <= 1");
  }
  MnwResult mnw = ExactMnw(instance);
  Algorithm1Result partial = Algorithm1(instance, mnw.allocation, alpha);
  EnvyCyclesResult done = EnvyCycles(instance, partial.allocation,
                                     partial.allocation.Unallocated());
  PipelineResult result{.mnw = mnw,
                        .partial = partial.allocation,
                        .allocation = done.allocation};
  const Allocation& x = result.allocation;
  const Ratio one(1);
  result.reports.push_back(IsAlphaEfx(instance, x, alpha));
  result.reports.push_back(IsEf1(instance, x));
  result.reports.push_back(
      IsBetaMnw(instance, x, one / (alpha + one), mnw.product));
  if (options.mms_family) {
    const Ratio share = alpha / (alpha * alpha + one);
    try {
      result.reports.push_back(IsAlphaGmms(instance, x, share));
    } catch (const CapacityError&) {
      result.skipped.emplace_back(PropertyName(Property::kAlphaGmms));
    }
    try {
      result.reports.push_back(IsAlphaMms(instance, x, share));
    } catch (const CapacityError&) {
      result.skipped.emplace_back(PropertyName(Property::kAlphaMms));
    }
    try {
      result.reports.push_back(IsAlphaPmms(instance, x, alpha));
    } catch (const CapacityError&) {
      result.skipped.emplace_back(PropertyName(Property::kAlphaPmms));
    }
  }
  return result;
}

PipelineResult PipelineSubadditive(const Instance& instance,
                                   const Ratio& alpha) {
  MnwResult mnw = ExactMnw(instance);
  Algorithm2Result partial = Algorithm2(instance, mnw.allocation, alpha);
  SingletonSwapsResult swapped = SingletonSwaps(
      instance, partial.allocation, partial.allocation.Unallocated());
  EnvyCyclesResult done =
      EnvyCycles(instance, swapped.allocation, swapped.unallocated);
  PipelineResult result{.mnw = mnw,
                        .partial = partial.allocation,
                        .allocation = done.allocation};
  const Ratio one(1);
  result.reports.push_back(IsAlphaEfx(instance, result.allocation, alpha));
  result.reports.push_back(IsBetaMnw(instance, result.allocation,
                                     one / (alpha + one), mnw.product));
  return result;
}

nlohmann::json PipelineResultToJson(const PipelineResult& result) {
  nlohmann::json reports = nlohmann::json::array();
  for (const GuaranteeReport& r : result.reports) {
    reports.push_back(ReportToJson(r));
  }
  return {{"mnw", MnwResultToJson(result.mnw)},
          {"partial", AllocationToJson(result.partial)},
          {"allocation", AllocationToJson(result.allocation)},
          {"reports", std::move(reports)},
          {"skipped", result.skipped},
          {"all_pass", result.all_pass()}};
}

}  // namespace fairdiv
