#include "fairdiv/allocation.h"

#include <string>
#include <utility>

#include "fairdiv/errors.h"

namespace fairdiv {

Allocation::Allocation(int m, std::vector<Bundle> bundles)
    : m_(m), bundles_(std::move(bundles)) {
  if (m_ < 0 || m_ > kMaxItems) {
    throw PreconditionError("item count " + std::to_string(m_) +
                            " outside [0, 64]");
  }
  const Bundle all = Bundle::Full(m_);
  Bundle seen;
  for (std::size_t i = 0; i < bundles_.size(); ++i) {
    if (!bundles_[i].IsSubsetOf(all)) {
      throw PreconditionError("bundle " + std::to_string(i) +
                              " holds an item outside [0, " +
                              std::to_string(m_) + ")");
    }
    if (bundles_[i].Intersects(seen)) {
      throw PreconditionError("bundle " + std::to_string(i) +
                              " overlaps an earlier bundle");
    }
    seen |= bundles_[i];
  }
}

Allocation Allocation::Empty(int n, int m) {
  return Allocation(m, std::vector<Bundle>(n));
}

Allocation Allocation::FromAssignment(int n,
                                      const std::vector<int>& assignment) {
  std::vector<Bundle> bundles(n);
  for (std::size_t g = 0; g < assignment.size(); ++g) {
    const int owner = assignment[g];
    if (owner < -1 || owner >= n) {
      throw PreconditionError("item " + std::to_string(g) +
                              " assigned to unknown agent " +
                              std::to_string(owner));
    }
    if (owner >= 0) bundles[owner] = bundles[owner].Plus(static_cast<int>(g));
  }
  return Allocation(static_cast<int>(assignment.size()), std::move(bundles));
}

Bundle Allocation::Allocated() const {
  Bundle all;
  for (const Bundle& b : bundles_) all |= b;
  return all;
}

std::vector<int> Allocation::Assignment() const {
  std::vector<int> owner(m_, -1);
  for (int i = 0; i < n(); ++i) {
    for (int g : bundles_[i]) owner[g] = i;
  }
  return owner;
}

std::string Allocation::ToString() const {
  std::string out = "(";
  for (int i = 0; i < n(); ++i) {
    if (i > 0) out += ", ";
    out += bundles_[i].ToString();
  }
  return out + ")";
}

void RequireCompatible(const Instance& instance, const Allocation& allocation) {
  if (allocation.n() != instance.n() || allocation.m() != instance.m()) {
    throw PreconditionError(
        "allocation shape (n=" + std::to_string(allocation.n()) +
        ", m=" + std::to_string(allocation.m()) +
        ") does not match instance (n=" + std::to_string(instance.n()) +
        ", m=" + std::to_string(instance.m()) + ")");
  }
}

Ratio NashProduct(const Instance& instance, const Allocation& allocation) {
  RequireCompatible(instance, allocation);
  Ratio product(1);
  for (int i = 0; i < instance.n(); ++i) {
    product *= instance.Value(i, allocation[i]);
    if (product.is_zero()) break;
  }
  return product;
}

}  // namespace fairdiv
