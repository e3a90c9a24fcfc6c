#ifndef FAIRDIV_ALLOCATION_H_
#define FAIRDIV_ALLOCATION_H_

#include <string>
#include <vector>

#include "fairdiv/bundle.h"
#include "fairdiv/instance.h"
#include "fairdiv/ratio.h"

namespace fairdiv {

// n pairwise disjoint bundles over m items; possibly partial.
class Allocation {
 public:
  // Throws PreconditionError if bundles overlap or hold items >= m.
  Allocation(int m, std::vector<Bundle> bundles);
  // n empty bundles.
  static Allocation Empty(int n, int m);
  // assignment[g] is the owning agent of item g, or -1 for unallocated.
  static Allocation FromAssignment(int n, const std::vector<int>& assignment);

  int n() const { return static_cast<int>(bundles_.size()); }
  int m() const { return m_; }
  const Bundle& operator[](int agent) const { return bundles_[agent]; }
  const std::vector<Bundle>& bundles() const { return bundles_; }

  Bundle Allocated() const;
  Bundle Unallocated() const { return Bundle::Full(m_) - Allocated(); }
  bool complete() const { return Unallocated().empty(); }

  // Owner per item, -1 when unallocated.
  std::vector<int> Assignment() const;
  std::string ToString() const;

  bool operator==(const Allocation&) const = default;

 private:
  int m_;
  std::vector<Bundle> bundles_;
};

// Throws PreconditionError unless the allocation has instance.n() bundles
// over instance.m() items.
void RequireCompatible(const Instance& instance, const Allocation& allocation);

// Product of v_i(X_i) over all agents: the n-th power of Nash welfare.
Ratio NashProduct(const Instance& instance, const Allocation& allocation);

}  // namespace fairdiv

#endif  // FAIRDIV_ALLOCATION_H_
