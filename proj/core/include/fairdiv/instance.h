#ifndef FAIRDIV_INSTANCE_H_
#define FAIRDIV_INSTANCE_H_

#include <string>
#include <string_view>
#include <vector>

#include "fairdiv/bundle.h"
#include "fairdiv/ratio.h"

namespace fairdiv {

enum class ValuationClass { kAdditive, kSubadditive, kMonotone };

std::string_view ClassName(ValuationClass c);
// Throws MalformedInstanceError on an unknown name.
ValuationClass ParseClassName(std::string_view name);

class Valuation {
 public:
  enum class Kind { kAdditive, kExplicit };

  // v(S) = sum of item_values[g] over g in S.
  static Valuation Additive(std::vector<Ratio> item_values);
  // table[S.mask()] = v(S); table.size() must be 2^m.
  static Valuation Explicit(int m, std::vector<Ratio> table);

  Kind kind() const { return kind_; }
  int m() const { return m_; }
  const std::vector<Ratio>& item_values() const { return item_values_; }
  const std::vector<Ratio>& table() const { return table_; }

  Ratio Evaluate(Bundle bundle) const;

 private:
  Valuation() = default;

  Kind kind_ = Kind::kAdditive;
  int m_ = 0;
  std::vector<Ratio> item_values_;
  std::vector<Ratio> table_;
};

// n agents with valuations over m items. Immutable after construction.
class Instance {
 public:
  // Checks sizes, nonnegativity, the Explicit item cap, and that a declared
  // additive instance only holds Additive valuations. Class membership
  // itself is checked by CheckClass. Throws MalformedInstanceError.
  Instance(int m, std::vector<Valuation> valuations, ValuationClass declared,
           std::vector<std::string> item_names = {});

  int n() const { return static_cast<int>(valuations_.size()); }
  int m() const { return m_; }
  ValuationClass declared_class() const { return declared_; }
  const Valuation& valuation(int agent) const { return valuations_[agent]; }
  bool all_additive() const { return all_additive_; }
  const std::vector<std::string>& item_names() const { return item_names_; }
  // item_names()[g] if present, otherwise the decimal index.
  std::string ItemName(int item) const;

  Ratio Value(int agent, Bundle bundle) const;
  Ratio Value(int agent, int item) const {
    return Value(agent, Bundle::Single(item));
  }

 private:
  int m_;
  std::vector<Valuation> valuations_;
  ValuationClass declared_;
  std::vector<std::string> item_names_;
  bool all_additive_ = true;
  // dense_[i][S] = v_i(S) when m is small enough to tabulate.
  std::vector<std::vector<Ratio>> dense_;
};

struct ClassReport {
  enum class Verdict { kPass, kMalformed, kNotMonotone, kNotSubadditive };

  Verdict verdict = Verdict::kPass;
  // Witness. kMalformed: s = t = {}. kNotMonotone: v(s) > v(s + t) with
  // t a single item. kNotSubadditive: v(s | t) > v(s) + v(t), s and t
  // disjoint.
  int agent = -1;
  Bundle s;
  Bundle t;
  std::string message;

  bool ok() const { return verdict == Verdict::kPass; }
};

// Validates every valuation against `cls`: v(empty) = 0, monotone, and
// subadditive when cls is kSubadditive (checked over disjoint pairs, which
// suffices under monotonicity). Reports the first violation found.
ClassReport CheckClass(const Instance& instance, ValuationClass cls);
inline ClassReport CheckClass(const Instance& instance) {
  return CheckClass(instance, instance.declared_class());
}

// Throws MalformedInstanceError with the report message on failure.
void RequireClass(const Instance& instance, ValuationClass cls);

}  // namespace fairdiv

#endif  // FAIRDIV_INSTANCE_H_
