#include "fairdiv/generators.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fairdiv/errors.h"
#include "fairdiv/instance_json.h"
#include "fairdiv/limits.h"

namespace fairdiv {
namespace {

// Uniform integer in [lo, hi] by rejection, so the stream is identical on
// every standard library (std::uniform_int_distribution is not).
std::int64_t UniformInt(std::mt19937_64& rng, std::int64_t lo,
                        std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % range + 1) % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return lo + static_cast<std::int64_t>(x % range);
}

void RequireShape(int n, int m) {
  if (n < 1) throw PreconditionError("need n >= 1");
  if (m < 0 || m > kMaxItems) throw PreconditionError("need 0 <= m <= 64");
}

void RequireExplicitShape(int n, int m) {
  RequireShape(n, m);
  if (m > GlobalLimits().max_explicit_items) {
    throw CapacityError("table valuations are capped at m = " +
                        std::to_string(GlobalLimits().max_explicit_items));
  }
}

std::int64_t IntOr(const nlohmann::json& j, const char* key,
                   std::int64_t fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number_integer()) {
    throw MalformedInstanceError(std::string("field '") + key +
                                 "' must be an integer");
  }
  return it->get<std::int64_t>();
}

}  // namespace

Instance Example1() {
  std::vector<Valuation> valuations;
  for (int i = 0; i < 2; ++i) {
    valuations.push_back(Valuation::Additive({Ratio(1), Ratio(1), Ratio(2)}));
  }
  return Instance(3, std::move(valuations), ValuationClass::kAdditive,
                  {"a", "b", "c"});
}

Instance Theorem4(const Ratio& alpha, const Ratio& eps, int n) {
  if (alpha.sign() <= 0 || alpha > Ratio(1)) {
    throw PreconditionError("theorem4 needs 0 < alpha <= 1");
  }
  if (eps.sign() < 0) throw PreconditionError("theorem4 needs eps >= 0");
  if (n < 2) throw PreconditionError("theorem4 needs n >= 2");
  const int m = 2 * n - 1;
  RequireShape(n, m);
  const Ratio big = Ratio(1) / alpha + eps;
  std::vector<std::string> names;
  for (int j = 1; j < n; ++j) names.push_back("a_" + std::to_string(j));
  for (int j = 1; j <= n; ++j) names.push_back("b_" + std::to_string(j));
  std::vector<Valuation> valuations;
  for (int i = 0; i < n; ++i) {
    std::vector<Ratio> values(m);
    for (int j = 0; j < n - 1; ++j) values[j] = big;
    values[n - 1 + i] = Ratio(1);
    valuations.push_back(Valuation::Additive(std::move(values)));
  }
  return Instance(m, std::move(valuations), ValuationClass::kAdditive,
                  std::move(names));
}

Instance Theorem5(std::int64_t big_n) {
  mpz_class z(std::to_string(big_n));
  if (big_n < 1 || !mpz_perfect_square_p(z.get_mpz_t())) {
    throw PreconditionError("theorem5 needs a positive perfect square N, got " +
                            std::to_string(big_n));
  }
  const Ratio root(mpq_class(mpz_class(sqrt(z))));
  const Ratio by_count[6] = {Ratio(0), Ratio(1), Ratio(1), root, Ratio(big_n),
                             Ratio(big_n)};
  constexpr int kItems = 5;
  std::vector<Ratio> table(1 << kItems);
  for (int s = 0; s < (1 << kItems); ++s) {
    table[s] = by_count[Bundle(static_cast<std::uint64_t>(s)).size()];
  }
  std::vector<Valuation> valuations;
  for (int i = 0; i < 2; ++i) {
    valuations.push_back(Valuation::Explicit(kItems, table));
  }
  return Instance(kItems, std::move(valuations), ValuationClass::kMonotone);
}

Instance RandomAdditive(int n, int m, int max_value, std::uint64_t seed) {
  RequireShape(n, m);
  if (max_value < 0) throw PreconditionError("need max_value >= 0");
  std::mt19937_64 rng(seed);
  std::vector<Valuation> valuations;
  for (int i = 0; i < n; ++i) {
    std::vector<Ratio> values;
    for (int g = 0; g < m; ++g) {
      values.emplace_back(UniformInt(rng, 0, max_value));
    }
    valuations.push_back(Valuation::Additive(std::move(values)));
  }
  return Instance(m, std::move(valuations), ValuationClass::kAdditive);
}

Instance RandomXos(int n, int m, int clauses, std::uint64_t seed,
                   int max_value) {
  RequireExplicitShape(n, m);
  if (clauses < 1) throw PreconditionError("need at least one clause");
  if (max_value < 0) throw PreconditionError("need max_value >= 0");
  std::mt19937_64 rng(seed);
  const std::size_t size = std::size_t{1} << m;
  std::vector<Valuation> valuations;
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<std::int64_t>> weights(
        clauses, std::vector<std::int64_t>(m));
    for (auto& clause : weights) {
      for (auto& w : clause) w = UniformInt(rng, 0, max_value);
    }
    std::vector<Ratio> table(size);
    for (std::size_t s = 0; s < size; ++s) {
      std::int64_t best = 0;
      for (const auto& clause : weights) {
        std::int64_t sum = 0;
        for (int g : Bundle(s)) sum += clause[g];
        best = std::max(best, sum);
      }
      table[s] = Ratio(best);
    }
    valuations.push_back(Valuation::Explicit(m, std::move(table)));
  }
  return Instance(m, std::move(valuations), ValuationClass::kSubadditive);
}

Instance RandomBudgetAdditive(int n, int m, int cap, std::uint64_t seed,
                              int max_value) {
  RequireExplicitShape(n, m);
  if (cap < 0) throw PreconditionError("need cap >= 0");
  if (max_value < 0) throw PreconditionError("need max_value >= 0");
  std::mt19937_64 rng(seed);
  const std::size_t size = std::size_t{1} << m;
  std::vector<Valuation> valuations;
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> weights(m);
    for (auto& w : weights) w = UniformInt(rng, 0, max_value);
    std::vector<Ratio> table(size);
    for (std::size_t s = 0; s < size; ++s) {
      std::int64_t sum = 0;
      for (int g : Bundle(s)) sum += weights[g];
      table[s] = Ratio(std::min<std::int64_t>(sum, cap));
    }
    valuations.push_back(Valuation::Explicit(m, std::move(table)));
  }
  return Instance(m, std::move(valuations), ValuationClass::kSubadditive);
}

GeneratorSpec GeneratorSpecFromJson(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw MalformedInstanceError("generator spec must be an object");
  }
  GeneratorSpec spec;
  auto family = j.find("family");
  if (family == j.end() || !family->is_string()) {
    throw MalformedInstanceError("generator spec needs a 'family' string");
  }
  spec.family = family->get<std::string>();
  if (auto it = j.find("alpha"); it != j.end()) spec.alpha = RatioFromJson(*it);
  if (auto it = j.find("eps"); it != j.end()) spec.eps = RatioFromJson(*it);
  spec.n = static_cast<int>(IntOr(j, "n", spec.n));
  spec.m = static_cast<int>(IntOr(j, "m", spec.m));
  spec.big_n = IntOr(j, "N", spec.big_n);
  spec.max_value = static_cast<int>(IntOr(j, "max_value", spec.max_value));
  spec.clauses = static_cast<int>(IntOr(j, "clauses", spec.clauses));
  spec.cap = static_cast<int>(IntOr(j, "cap", spec.cap));
  spec.seed = static_cast<std::uint64_t>(IntOr(j, "seed", 0));
  static const char* kFamilies[] = {"example1",        "theorem4", "theorem5",
                                    "random_additive", "xos",
                                    "budget_additive"};
  for (const char* name : kFamilies) {
    if (spec.family == name) return spec;
  }
  throw MalformedInstanceError("unknown generator family '" + spec.family +
                               "'");
}

Instance Generate(const GeneratorSpec& spec) {
  if (spec.family == "example1") return Example1();
  if (spec.family == "theorem4") return Theorem4(spec.alpha, spec.eps, spec.n);
  if (spec.family == "theorem5") return Theorem5(spec.big_n);
  if (spec.family == "random_additive") {
    return RandomAdditive(spec.n, spec.m, spec.max_value, spec.seed);
  }
  if (spec.family == "xos") {
    return RandomXos(spec.n, spec.m, spec.clauses, spec.seed, spec.max_value);
  }
  if (spec.family == "budget_additive") {
    return RandomBudgetAdditive(spec.n, spec.m, spec.cap, spec.seed,
                                spec.max_value);
  }
  throw MalformedInstanceError("unknown generator family '" + spec.family +
                               "'");
}

std::string SpecId(const GeneratorSpec& spec) {
  const std::string n = std::to_string(spec.n);
  const std::string m = std::to_string(spec.m);
  const std::string seed = std::to_string(spec.seed);
  if (spec.family == "example1") return "example1";
  if (spec.family == "theorem4") {
    return "theorem4(alpha=" + spec.alpha.ToString() +
           ",eps=" + spec.eps.ToString() + ",n=" + n + ")";
  }
  if (spec.family == "theorem5") {
    return "theorem5(N=" + std::to_string(spec.big_n) + ")";
  }
  if (spec.family == "random_additive") {
    return "random_additive(n=" + n + ",m=" + m +
           ",max_value=" + std::to_string(spec.max_value) + ",seed=" + seed +
           ")";
  }
  if (spec.family == "xos") {
    return "xos(n=" + n + ",m=" + m + ",clauses=" +
           std::to_string(spec.clauses) + ",seed=" + seed + ")";
  }
  return spec.family + "(n=" + n + ",m=" + m +
         ",cap=" + std::to_string(spec.cap) + ",seed=" + seed + ")";
}

}  // namespace fairdiv
