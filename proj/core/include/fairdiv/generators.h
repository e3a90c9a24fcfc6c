#ifndef FAIRDIV_GENERATORS_H_
#define FAIRDIV_GENERATORS_H_

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "fairdiv/instance.h"
#include "fairdiv/ratio.h"

namespace fairdiv {

// Two agents, items {a, b, c}, v(a) = v(b) = 1, v(c) = 2 for both.
Instance Example1();

// Items a_1..a_{n-1} then b_1..b_n. v_i(a_j) = 1/alpha + eps, v_i(b_i) = 1,
// v_i(b_j) = 0 for j != i. Requires 0 < alpha <= 1, eps >= 0, n >= 2.
Instance Theorem4(const Ratio& alpha, const Ratio& eps, int n);

// Two identical agents, five identical items, value by count
// (0, 1, 1, sqrt(N), N, N). Declared monotone; N must be a perfect square.
Instance Theorem5(std::int64_t big_n);

// Integer item values drawn uniformly from [0, max_value].
Instance RandomAdditive(int n, int m, int max_value, std::uint64_t seed);

// v_i(S) = max over `clauses` additive clauses with weights in
// [0, max_value]. Declared subadditive.
Instance RandomXos(int n, int m, int clauses, std::uint64_t seed,
                   int max_value = 10);

// v_i(S) = min(cap, sum of weights in [0, max_value]). Declared subadditive.
Instance RandomBudgetAdditive(int n, int m, int cap, std::uint64_t seed,
                              int max_value = 10);

// One generator family with its parameters, as read from JSON:
//   {"family": "example1"}
//   {"family": "theorem4", "alpha": "1/2", "eps": "1/100", "n": 2}
//   {"family": "theorem5", "N": 25}
//   {"family": "random_additive", "n": 2, "m": 6, "max_value": 10,
//    "seed": 1}
//   {"family": "xos", "n": 2, "m": 5, "clauses": 3, "seed": 1}
//   {"family": "budget_additive", "n": 2, "m": 4, "cap": 3, "seed": 1}
struct GeneratorSpec {
  std::string family = "example1";
  Ratio alpha = Ratio(1, 2);
  Ratio eps = Ratio(1, 100);
  int n = 2;
  int m = 4;
  std::int64_t big_n = 16;
  int max_value = 10;
  int clauses = 3;
  int cap = 15;
  std::uint64_t seed = 0;
};

// Throws MalformedInstanceError on unknown families or bad fields.
GeneratorSpec GeneratorSpecFromJson(const nlohmann::json& j);
Instance Generate(const GeneratorSpec& spec);
// "random_additive(n=2,m=6,max_value=10,seed=3)".
std::string SpecId(const GeneratorSpec& spec);

}  // namespace fairdiv

#endif  // FAIRDIV_GENERATORS_H_
