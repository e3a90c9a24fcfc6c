#include "fairdiv/verify.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "fairdiv/errors.h"
#include "fairdiv/limits.h"

namespace fairdiv {
namespace {

void RequireUnitInterval(const Ratio& x, const char* name) {
  if (x.sign() < 0 || x > Ratio(1)) {
    throw PreconditionError(std::string(name) + " = " + x.ToString() +
                            " must lie in [0, 1]");
  }
}

GuaranteeReport Fail(GuaranteeReport report, Witness witness) {
  report.pass = false;
  report.witness = std::move(witness);
  return report;
}

Bundle GroupPool(const Allocation& allocation, const std::vector<int>& group) {
  Bundle pool;
  for (int j : group) pool |= allocation[j];
  return pool;
}

std::vector<int> AllAgents(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return all;
}

// Partitions of `items` into at most k labelled parts, each counted once
// (restricted growth strings).
class MmsSearch {
 public:
  MmsSearch(const Instance& instance, int agent, int k, Bundle pool)
      : instance_(instance), agent_(agent), k_(k), items_(pool.Items()),
        parts_(k) {}

  Ratio Run() {
    Recurse(0, 0);
    return best_.value_or(Ratio(0));
  }

 private:
  void Recurse(int idx, int used) {
    const int remaining = static_cast<int>(items_.size()) - idx;
    if (best_.has_value() && remaining < k_ - used) return;  // an empty part
    if (remaining == 0) {
      Ratio worst = instance_.Value(agent_, parts_[0]);
      for (int p = 1; p < k_; ++p) {
        worst = Min(worst, instance_.Value(agent_, parts_[p]));
      }
      if (!best_.has_value() || worst > *best_) best_ = std::move(worst);
      return;
    }
    const int g = items_[idx];
    const int top = std::min(used, k_ - 1);
    for (int label = 0; label <= top; ++label) {
      parts_[label] = parts_[label].Plus(g);
      Recurse(idx + 1, std::max(used, label + 1));
      parts_[label] = parts_[label].Minus(g);
    }
  }

  const Instance& instance_;
  int agent_;
  int k_;
  std::vector<int> items_;
  std::vector<Bundle> parts_;
  std::optional<Ratio> best_;
};

std::string JoinGroup(const std::vector<int>& group) {
  std::string out = "{";
  for (std::size_t t = 0; t < group.size(); ++t) {
    if (t > 0) out += ",";
    out += std::to_string(group[t]);
  }
  return out + "}";
}

}  // namespace

std::string_view PropertyName(Property p) {
  switch (p) {
    case Property::kAlphaEfx:
      return "alpha-efx";
    case Property::kEf1:
      return "ef1";
    case Property::kBetaMnw:
      return "beta-mnw";
    case Property::kGammaSeparation:
      return "gamma-separation";
    case Property::kAlphaMms:
      return "alpha-mms";
    case Property::kAlphaPmms:
      return "alpha-pmms";
    case Property::kAlphaGmms:
      return "alpha-gmms";
  }
  return "unknown";
}

std::string GuaranteeReport::Describe() const {
  std::string out(PropertyName(property));
  if (property != Property::kEf1) {
    out += "(" + std::string(power_form ? "^n " : "") + parameter.ToString() +
           ")";
  }
  out += pass ? ": pass" : ": FAIL";
  if (witness.has_value()) {
    const Witness& w = *witness;
    if (w.i >= 0) out += " i=" + std::to_string(w.i);
    if (w.j >= 0) out += " j=" + std::to_string(w.j);
    if (w.item >= 0) out += " item=" + std::to_string(w.item);
    if (!w.group.empty()) out += " group=" + JoinGroup(w.group);
    out += " (" + w.lhs.ToString() + " < " + w.rhs.ToString() + ")";
  }
  return out;
}

nlohmann::json ReportToJson(const GuaranteeReport& report) {
  nlohmann::json j;
  j["property"] = std::string(PropertyName(report.property));
  if (report.property != Property::kEf1) {
    j[report.power_form ? "parameter_power" : "parameter"] =
        report.parameter.ToString();
  }
  if (report.property == Property::kBetaMnw) {
    j["reference_product"] = report.reference.ToString();
  }
  j["pass"] = report.pass;
  if (report.witness.has_value()) {
    const Witness& w = *report.witness;
    nlohmann::json wj;
    if (w.i >= 0) wj["i"] = w.i;
    if (w.j >= 0) wj["j"] = w.j;
    if (w.item >= 0) wj["item"] = w.item;
    if (!w.group.empty()) wj["group"] = w.group;
    wj["lhs"] = w.lhs.ToString();
    wj["rhs"] = w.rhs.ToString();
    j["witness"] = std::move(wj);
  }
  return j;
}

GuaranteeReport IsAlphaEfx(const Instance& instance,
                           const Allocation& allocation, const Ratio& alpha) {
  RequireCompatible(instance, allocation);
  RequireUnitInterval(alpha, "alpha");
  GuaranteeReport report;
  report.property = Property::kAlphaEfx;
  report.parameter = alpha;
  for (int i = 0; i < instance.n(); ++i) {
    const Ratio own = instance.Value(i, allocation[i]);
    for (int j = 0; j < instance.n(); ++j) {
      if (j == i) continue;
      for (int g : allocation[j]) {
        Ratio rhs = alpha * instance.Value(i, allocation[j].Minus(g));
        if (own < rhs) {
          return Fail(report, {.i = i, .j = j, .item = g, .lhs = own,
                               .rhs = std::move(rhs)});
        }
      }
    }
  }
  return report;
}

GuaranteeReport IsEf1(const Instance& instance, const Allocation& allocation) {
  RequireCompatible(instance, allocation);
  GuaranteeReport report;
  report.property = Property::kEf1;
  for (int i = 0; i < instance.n(); ++i) {
    const Ratio own = instance.Value(i, allocation[i]);
    for (int j = 0; j < instance.n(); ++j) {
      if (j == i || allocation[j].empty()) continue;
      std::optional<Ratio> best;
      for (int g : allocation[j]) {
        Ratio rest = instance.Value(i, allocation[j].Minus(g));
        if (!best.has_value() || rest < *best) best = std::move(rest);
      }
      if (own < *best) {
        return Fail(report, {.i = i, .j = j, .lhs = own, .rhs = *best});
      }
    }
  }
  return report;
}

GuaranteeReport IsGammaSeparated(const Instance& instance,
                                 const Allocation& allocation,
                                 const Ratio& gamma) {
  RequireCompatible(instance, allocation);
  RequireUnitInterval(gamma, "gamma");
  GuaranteeReport report;
  report.property = Property::kGammaSeparation;
  report.parameter = gamma;
  const Bundle unallocated = allocation.Unallocated();
  for (int i = 0; i < instance.n(); ++i) {
    const Ratio lhs = gamma * instance.Value(i, allocation[i]);
    for (int x : unallocated) {
      Ratio rhs = instance.Value(i, x);
      if (lhs < rhs) {
        return Fail(report,
                    {.i = i, .item = x, .lhs = lhs, .rhs = std::move(rhs)});
      }
    }
  }
  return report;
}

GuaranteeReport IsBetaMnwPower(const Instance& instance,
                               const Allocation& allocation,
                               const Ratio& beta_power,
                               const Ratio& reference_product) {
  if (beta_power.sign() <= 0) {
    throw PreconditionError("beta must be positive, got beta^n = " +
                            beta_power.ToString());
  }
  GuaranteeReport report;
  report.property = Property::kBetaMnw;
  report.parameter = beta_power;
  report.power_form = true;
  report.reference = reference_product;
  Ratio lhs = NashProduct(instance, allocation);
  Ratio rhs = beta_power * reference_product;
  if (lhs < rhs) {
    return Fail(report, {.lhs = std::move(lhs), .rhs = std::move(rhs)});
  }
  return report;
}

GuaranteeReport IsBetaMnw(const Instance& instance,
                          const Allocation& allocation, const Ratio& beta,
                          const Ratio& reference_product) {
  if (beta.sign() <= 0) {
    throw PreconditionError("beta must be positive, got " + beta.ToString());
  }
  GuaranteeReport report =
      IsBetaMnwPower(instance, allocation, beta.Pow(instance.n()),
                     reference_product);
  report.parameter = beta;
  report.power_form = false;
  return report;
}

Ratio MmsShare(const Instance& instance, int agent, int k, Bundle pool) {
  if (k < 1) throw PreconditionError("mms share needs k >= 1");
  if (agent < 0 || agent >= instance.n()) {
    throw PreconditionError("agent index out of range");
  }
  if (!pool.IsSubsetOf(Bundle::Full(instance.m()))) {
    throw PreconditionError("pool holds items outside the instance");
  }
  if (k == 1) return instance.Value(agent, pool);
  const std::uint64_t states =
      SaturatingPow(static_cast<std::uint64_t>(k), std::max(0, pool.size() - 1));
  if (states > GlobalLimits().max_assignments) {
    throw CapacityError("mms share: " + std::to_string(k) + "^" +
                        std::to_string(pool.size() - 1) +
                        " labelings exceed the cap of " +
                        std::to_string(GlobalLimits().max_assignments));
  }
  return MmsSearch(instance, agent, k, pool).Run();
}

GuaranteeReport IsAlphaMms(const Instance& instance,
                           const Allocation& allocation, const Ratio& alpha) {
  RequireCompatible(instance, allocation);
  GuaranteeReport report;
  report.property = Property::kAlphaMms;
  report.parameter = alpha;
  const Bundle all = Bundle::Full(instance.m());
  for (int i = 0; i < instance.n(); ++i) {
    Ratio lhs = instance.Value(i, allocation[i]);
    Ratio rhs = alpha * MmsShare(instance, i, instance.n(), all);
    if (lhs < rhs) {
      return Fail(report, {.i = i, .group = AllAgents(instance.n()),
                           .lhs = std::move(lhs), .rhs = std::move(rhs)});
    }
  }
  return report;
}

GuaranteeReport IsAlphaPmms(const Instance& instance,
                            const Allocation& allocation, const Ratio& alpha) {
  RequireCompatible(instance, allocation);
  GuaranteeReport report;
  report.property = Property::kAlphaPmms;
  report.parameter = alpha;
  for (int i = 0; i < instance.n(); ++i) {
    const Ratio own = instance.Value(i, allocation[i]);
    for (int j = 0; j < instance.n(); ++j) {
      if (j == i) continue;
      Ratio rhs = alpha * MmsShare(instance, i, 2, allocation[i] | allocation[j]);
      if (own < rhs) {
        return Fail(report, {.i = i, .j = j, .lhs = own,
                             .rhs = std::move(rhs)});
      }
    }
  }
  return report;
}

GuaranteeReport IsAlphaGmms(const Instance& instance,
                            const Allocation& allocation, const Ratio& alpha) {
  RequireCompatible(instance, allocation);
  const int n = instance.n();
  if (n > GlobalLimits().max_gmms_agents) {
    throw CapacityError("gmms: n = " + std::to_string(n) +
                        " exceeds the group-enumeration cap of " +
                        std::to_string(GlobalLimits().max_gmms_agents));
  }
  GuaranteeReport report;
  report.property = Property::kAlphaGmms;
  report.parameter = alpha;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const std::vector<int> group = Bundle(mask).Items();
    const Bundle pool = GroupPool(allocation, group);
    const int k = static_cast<int>(group.size());
    for (int i : group) {
      Ratio lhs = instance.Value(i, allocation[i]);
      Ratio rhs = alpha * MmsShare(instance, i, k, pool);
      if (lhs < rhs) {
        return Fail(report, {.i = i, .group = group, .lhs = std::move(lhs),
                             .rhs = std::move(rhs)});
      }
    }
  }
  return report;
}

bool ReplayWitness(const Instance& instance, const Allocation& allocation,
                   const GuaranteeReport& report) {
  if (report.pass || !report.witness.has_value()) return false;
  const Witness& w = *report.witness;
  const int n = instance.n();
  auto agent_ok = [n](int a) { return a >= 0 && a < n; };
  Ratio lhs;
  Ratio rhs;
  switch (report.property) {
    case Property::kAlphaEfx:
      if (!agent_ok(w.i) || !agent_ok(w.j) || w.i == w.j ||
          w.item < 0 || !allocation[w.j].Contains(w.item)) {
        return false;
      }
      lhs = instance.Value(w.i, allocation[w.i]);
      rhs = report.parameter *
            instance.Value(w.i, allocation[w.j].Minus(w.item));
      break;
    case Property::kEf1: {
      if (!agent_ok(w.i) || !agent_ok(w.j) || w.i == w.j ||
          allocation[w.j].empty()) {
        return false;
      }
      lhs = instance.Value(w.i, allocation[w.i]);
      std::optional<Ratio> best;
      for (int g : allocation[w.j]) {
        Ratio rest = instance.Value(w.i, allocation[w.j].Minus(g));
        if (!best.has_value() || rest < *best) best = std::move(rest);
      }
      rhs = *best;
      break;
    }
    case Property::kBetaMnw: {
      const Ratio beta_power =
          report.power_form ? report.parameter : report.parameter.Pow(n);
      lhs = NashProduct(instance, allocation);
      rhs = beta_power * report.reference;
      break;
    }
    case Property::kGammaSeparation:
      if (!agent_ok(w.i) || w.item < 0 || w.item >= instance.m() ||
          allocation.Allocated().Contains(w.item)) {
        return false;
      }
      lhs = report.parameter * instance.Value(w.i, allocation[w.i]);
      rhs = instance.Value(w.i, w.item);
      break;
    case Property::kAlphaMms:
      if (!agent_ok(w.i)) return false;
      lhs = instance.Value(w.i, allocation[w.i]);
      rhs = report.parameter *
            MmsShare(instance, w.i, n, Bundle::Full(instance.m()));
      break;
    case Property::kAlphaPmms:
      if (!agent_ok(w.i) || !agent_ok(w.j) || w.i == w.j) return false;
      lhs = instance.Value(w.i, allocation[w.i]);
      rhs = report.parameter *
            MmsShare(instance, w.i, 2, allocation[w.i] | allocation[w.j]);
      break;
    case Property::kAlphaGmms:
      if (!agent_ok(w.i) ||
          std::find(w.group.begin(), w.group.end(), w.i) == w.group.end()) {
        return false;
      }
      lhs = instance.Value(w.i, allocation[w.i]);
      rhs = report.parameter *
            MmsShare(instance, w.i, static_cast<int>(w.group.size()),
                     GroupPool(allocation, w.group));
      break;
  }
  return lhs == w.lhs && rhs == w.rhs && lhs < rhs;
}

}  // namespace fairdiv
