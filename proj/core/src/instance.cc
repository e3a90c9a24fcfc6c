#include "fairdiv/instance.h"

#include <cstdint>
#include <string>
#include <utility>

#include "fairdiv/errors.h"
#include "fairdiv/limits.h"

namespace fairdiv {
namespace {

// Above this many items no dense value table is built.
constexpr int kDenseItems = 16;

std::string AgentPrefix(int agent) {
  return "agent " + std::to_string(agent) + ": ";
}

}  // namespace

std::string_view ClassName(ValuationClass c) {
  switch (c) {
    case ValuationClass::kAdditive:
      return "additive";
    case ValuationClass::kSubadditive:
      return "subadditive";
    case ValuationClass::kMonotone:
      return "monotone";
  }
  return "unknown";
}

ValuationClass ParseClassName(std::string_view name) {
  if (name == "additive") return ValuationClass::kAdditive;
  if (name == "subadditive") return ValuationClass::kSubadditive;
  if (name == "monotone") return ValuationClass::kMonotone;
  throw MalformedInstanceError("unknown valuation class '" + std::string(name) +
                               "'");
}

Valuation Valuation::Additive(std::vector<Ratio> item_values) {
  Valuation v;
  v.kind_ = Kind::kAdditive;
  v.m_ = static_cast<int>(item_values.size());
  v.item_values_ = std::move(item_values);
  return v;
}

Valuation Valuation::Explicit(int m, std::vector<Ratio> table) {
  if (m < 0 || m >= kMaxItems) {
    throw MalformedInstanceError("explicit valuation with m=" +
                                 std::to_string(m));
  }
  if (table.size() != (std::size_t{1} << m)) {
    throw MalformedInstanceError(
        "explicit valuation table needs 2^m = " +
        std::to_string(std::size_t{1} << m) + " entries, got " +
        std::to_string(table.size()));
  }
  Valuation v;
  v.kind_ = Kind::kExplicit;
  v.m_ = m;
  v.table_ = std::move(table);
  return v;
}

Ratio Valuation::Evaluate(Bundle bundle) const {
  if (kind_ == Kind::kExplicit) return table_[bundle.mask()];
  Ratio sum;
  for (int g : bundle) sum += item_values_[g];
  return sum;
}

Instance::Instance(int m, std::vector<Valuation> valuations,
                   ValuationClass declared,
                   std::vector<std::string> item_names)
    : m_(m),
      valuations_(std::move(valuations)),
      declared_(declared),
      item_names_(std::move(item_names)) {
  if (valuations_.empty()) {
    throw MalformedInstanceError("an instance needs at least one agent");
  }
  if (m_ < 0 || m_ > kMaxItems) {
    throw MalformedInstanceError("item count " + std::to_string(m_) +
                                 " outside [0, 64]");
  }
  if (!item_names_.empty() && static_cast<int>(item_names_.size()) != m_) {
    throw MalformedInstanceError("item name list has the wrong length");
  }
  for (int i = 0; i < n(); ++i) {
    const Valuation& v = valuations_[i];
    if (v.m() != m_) {
      throw MalformedInstanceError(AgentPrefix(i) + "valuation covers " +
                                   std::to_string(v.m()) + " items, expected " +
                                   std::to_string(m_));
    }
    if (v.kind() == Valuation::Kind::kExplicit) {
      all_additive_ = false;
      if (m_ > GlobalLimits().max_explicit_items) {
        throw MalformedInstanceError(
            AgentPrefix(i) + "explicit valuations are capped at m=" +
            std::to_string(GlobalLimits().max_explicit_items));
      }
    }
    const auto& values = v.kind() == Valuation::Kind::kAdditive
                             ? v.item_values()
                             : v.table();
    for (const Ratio& x : values) {
      if (x.sign() < 0) {
        throw MalformedInstanceError(AgentPrefix(i) + "negative value " +
                                     x.ToString());
      }
    }
  }
  if (declared_ == ValuationClass::kAdditive && !all_additive_) {
    throw MalformedInstanceError(
        "declared additive but holds an explicit valuation");
  }
  if (m_ <= kDenseItems) {
    const std::size_t size = std::size_t{1} << m_;
    dense_.resize(n());
    for (int i = 0; i < n(); ++i) {
      const Valuation& v = valuations_[i];
      if (v.kind() == Valuation::Kind::kExplicit) {
        dense_[i] = v.table();
        continue;
      }
      std::vector<Ratio>& t = dense_[i];
      t.resize(size);
      for (std::size_t s = 1; s < size; ++s) {
        const std::uint64_t low = s & (~s + 1);
        t[s] = t[s ^ low] + v.item_values()[Bundle(low).First()];
      }
    }
  }
}

std::string Instance::ItemName(int item) const {
  if (item_names_.empty()) return std::to_string(item);
  return item_names_[item];
}

Ratio Instance::Value(int agent, Bundle bundle) const {
  if (!dense_.empty()) return dense_[agent][bundle.mask()];
  return valuations_[agent].Evaluate(bundle);
}

ClassReport CheckClass(const Instance& instance, ValuationClass cls) {
  ClassReport report;
  const int m = instance.m();
  for (int i = 0; i < instance.n(); ++i) {
    const Valuation& v = instance.valuation(i);
    if (v.kind() == Valuation::Kind::kAdditive) continue;
    if (cls == ValuationClass::kAdditive) {
      report.verdict = ClassReport::Verdict::kMalformed;
      report.agent = i;
      report.message = AgentPrefix(i) + "explicit valuation in an additive "
                                        "instance";
      return report;
    }
    if (!instance.Value(i, Bundle()).is_zero()) {
      report.verdict = ClassReport::Verdict::kMalformed;
      report.agent = i;
      report.message = AgentPrefix(i) + "v(empty) = " +
                       instance.Value(i, Bundle()).ToString() + ", must be 0";
      return report;
    }
    const std::uint64_t size = std::uint64_t{1} << m;
    for (std::uint64_t s = 0; s < size; ++s) {
      const Bundle bs(s);
      const Ratio vs = instance.Value(i, bs);
      for (int g = 0; g < m; ++g) {
        if (bs.Contains(g)) continue;
        if (vs > instance.Value(i, bs.Plus(g))) {
          report.verdict = ClassReport::Verdict::kNotMonotone;
          report.agent = i;
          report.s = bs;
          report.t = Bundle::Single(g);
          report.message = AgentPrefix(i) + "not monotone: v(" +
                           bs.ToString() + ") > v(" +
                           bs.Plus(g).ToString() + ")";
          return report;
        }
      }
    }
    if (cls != ValuationClass::kSubadditive) continue;
    for (std::uint64_t s = 1; s < size; ++s) {
      const Bundle bs(s);
      const Ratio vs = instance.Value(i, bs);
      const std::uint64_t rest = (size - 1) & ~s;
      // Nonempty submasks t of rest with t > s, in increasing order.
      for (std::uint64_t t = rest & (~rest + 1); t != 0;
           t = (t - rest) & rest) {
        if (t < s) continue;
        const Bundle bt(t);
        if (instance.Value(i, bs | bt) > vs + instance.Value(i, bt)) {
          report.verdict = ClassReport::Verdict::kNotSubadditive;
          report.agent = i;
          report.s = bs;
          report.t = bt;
          report.message = AgentPrefix(i) + "not subadditive: v(" +
                           (bs | bt).ToString() + ") > v(" + bs.ToString() +
                           ") + v(" + bt.ToString() + ")";
          return report;
        }
      }
    }
  }
  return report;
}

void RequireClass(const Instance& instance, ValuationClass cls) {
  ClassReport report = CheckClass(instance, cls);
  if (!report.ok()) throw MalformedInstanceError(report.message);
}

}  // namespace fairdiv
