#ifndef FAIRDIV_TESTS_TESTING_BRUTE_FORCE_H_
#define FAIRDIV_TESTS_TESTING_BRUTE_FORCE_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "fairdiv/allocation.h"
#include "fairdiv/bundle.h"
#include "fairdiv/instance.h"
#include "fairdiv/ratio.h"

// Reference implementations written directly from the definitions, with no
// pruning and no shared code beyond valuation lookup.
namespace fairdiv::testing {

// Calls visit(labels) for every vector in {0..base-1}^length, the last
// position varying fastest.
void ForEachLabeling(int length, int base,
                     const std::function<void(const std::vector<int>&)>& visit);

// labels[g] = agent or -1 (label n) for unallocated.
Allocation FromLabels(int n, int m, const std::vector<int>& labels);

struct BruteMnw {
  std::vector<int> assignment;
  int positive_count = 0;
  Ratio positive_product;
  Ratio product;
  std::uint64_t ties = 0;
};

// Maximizes (positive agents, product of positive values) over all n^m
// complete allocations; keeps the first optimum in labeling order.
BruteMnw BruteForceMnw(const Instance& instance);

// Largest Nash product among all (n+1)^m alpha-EFX partial allocations.
Ratio BruteForceBestEfxProduct(const Instance& instance, const Ratio& alpha);

// The complete allocation with the smallest positive Nash product, first in
// labeling order; nullopt-like empty assignment when none is positive.
std::vector<int> WorstPositiveAssignment(const Instance& instance);

bool BruteForceEfx(const Instance& instance, const Allocation& x,
                   const Ratio& alpha);
bool BruteForceEf1(const Instance& instance, const Allocation& x);

// max over all k^|pool| labelings of the pool of the least valuable part.
Ratio BruteForceMms(const Instance& instance, int agent, int k, Bundle pool);

bool BruteForceMmsCheck(const Instance& instance, const Allocation& x,
                        const Ratio& alpha);
bool BruteForcePmms(const Instance& instance, const Allocation& x,
                    const Ratio& alpha);
bool BruteForceGmms(const Instance& instance, const Allocation& x,
                    const Ratio& alpha);

}  // namespace fairdiv::testing

#endif  // FAIRDIV_TESTS_TESTING_BRUTE_FORCE_H_
