#include "fairdiv/oracle.h"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fairdiv/errors.h"
#include "fairdiv/generators.h"
#include "fairdiv/instance_json.h"
#include "fairdiv/limits.h"
#include "fairdiv/verify.h"

namespace fairdiv {
namespace {

// (positive-agent count, product of positive values), compared
// lexicographically.
struct Score {
  int count = 0;
  Ratio product = Ratio(1);
};

int Compare(const Score& a, const Score& b) {
  if (a.count != b.count) return a.count < b.count ? -1 : 1;
  if (a.product != b.product) return a.product < b.product ? -1 : 1;
  return 0;
}

Score ScoreOf(const Instance& instance, const std::vector<Bundle>& bundles,
              Bundle extra) {
  Score s;
  for (int i = 0; i < instance.n(); ++i) {
    Ratio v = instance.Value(i, bundles[i] | extra);
    if (v.sign() > 0) {
      ++s.count;
      s.product *= v;
    }
  }
  return s;
}

void RequireCap(std::uint64_t base, int m, const char* what) {
  const std::uint64_t leaves = SaturatingPow(base, m);
  if (leaves > GlobalLimits().max_assignments) {
    throw CapacityError(std::string(what) + ": " + std::to_string(base) + "^" +
                        std::to_string(m) + " assignments exceed the cap of " +
                        std::to_string(GlobalLimits().max_assignments) +
                        " (set FAIRDIV_CAP to raise it)");
  }
}

class MnwSearch {
 public:
  MnwSearch(const Instance& instance, SearchMode mode)
      : instance_(instance), mode_(mode), bundles_(instance.n()),
        assignment_(instance.m(), -1) {}

  MnwResult Run() {
    Recurse(0);
    Allocation allocation =
        Allocation::FromAssignment(instance_.n(), best_assignment_);
    MnwResult result{.allocation = allocation,
                     .product = NashProduct(instance_, allocation),
                     .positive_product = best_.product,
                     .positive_agent_count = best_.count,
                     .nw_positive = best_.count == instance_.n(),
                     .ties = ties_};
    return result;
  }

 private:
  void Recurse(int item) {
    const int m = instance_.m();
    if (item == m) {
      Score s = ScoreOf(instance_, bundles_, Bundle());
      const int c = have_best_ ? Compare(s, best_) : 1;
      if (c > 0) {
        best_ = std::move(s);
        best_assignment_ = assignment_;
        have_best_ = true;
        ties_ = 1;
      } else if (c == 0) {
        ++ties_;
      }
      return;
    }
    if (mode_ == SearchMode::kBranchAndBound && have_best_) {
      const Bundle remaining = Bundle::Full(m) - Bundle::Full(item);
      if (Compare(ScoreOf(instance_, bundles_, remaining), best_) < 0) return;
    }
    for (int i = 0; i < instance_.n(); ++i) {
      bundles_[i] = bundles_[i].Plus(item);
      assignment_[item] = i;
      Recurse(item + 1);
      bundles_[i] = bundles_[i].Minus(item);
    }
    assignment_[item] = -1;
  }

  const Instance& instance_;
  SearchMode mode_;
  std::vector<Bundle> bundles_;
  std::vector<int> assignment_;
  Score best_;
  bool have_best_ = false;
  std::vector<int> best_assignment_;
  std::uint64_t ties_ = 0;
};

class BestEfxSearch {
 public:
  BestEfxSearch(const Instance& instance, const Ratio& alpha)
      : instance_(instance), alpha_(alpha), bundles_(instance.n()),
        best_(Allocation::Empty(instance.n(), instance.m())) {}

  BestEfxResult Run() {
    // The all-unallocated leaf is alpha-EFX with product 0.
    Recurse(0);
    return {best_, best_product_};
  }

 private:
  Ratio Product(Bundle extra) const {
    Ratio p(1);
    for (int i = 0; i < instance_.n() && !p.is_zero(); ++i) {
      p *= instance_.Value(i, bundles_[i] | extra);
    }
    return p;
  }

  void Recurse(int item) {
    const int m = instance_.m();
    if (item == m) {
      Ratio p = Product(Bundle());
      if (p <= best_product_) return;
      Allocation candidate(m, bundles_);
      if (!IsAlphaEfx(instance_, candidate, alpha_).pass) return;
      best_product_ = std::move(p);
      best_ = std::move(candidate);
      return;
    }
    if (Product(Bundle::Full(m) - Bundle::Full(item)) <= best_product_) return;
    Recurse(item + 1);  // leave the item unallocated
    for (int i = 0; i < instance_.n(); ++i) {
      bundles_[i] = bundles_[i].Plus(item);
      Recurse(item + 1);
      bundles_[i] = bundles_[i].Minus(item);
    }
  }

  const Instance& instance_;
  Ratio alpha_;
  std::vector<Bundle> bundles_;
  Allocation best_;
  Ratio best_product_;
};

// Integer square root of a perfect square, or -1.
std::int64_t ExactSqrt(std::int64_t x) {
  if (x < 0) return -1;
  mpz_class z(std::to_string(x));
  if (!mpz_perfect_square_p(z.get_mpz_t())) return -1;
  mpz_class r = sqrt(z);
  return r.get_si();
}

}  // namespace

MnwResult ExactMnw(const Instance& instance, SearchMode mode) {
  RequireCap(static_cast<std::uint64_t>(instance.n()), instance.m(),
             "exact mnw");
  return MnwSearch(instance, mode).Run();
}

nlohmann::json MnwResultToJson(const MnwResult& result) {
  nlohmann::json j = AllocationToJson(result.allocation);
  j["product"] = result.product.ToString();
  j["positive_product"] = result.positive_product.ToString();
  j["positive_agent_count"] = result.positive_agent_count;
  j["nw_positive"] = result.nw_positive;
  j["ties"] = result.ties;
  return j;
}

BestEfxResult BestAlphaEfxProduct(const Instance& instance,
                                  const Ratio& alpha) {
  if (alpha.sign() < 0 || alpha > Ratio(1)) {
    throw PreconditionError("alpha = " + alpha.ToString() +
                            " must lie in [0, 1]");
  }
  RequireCap(static_cast<std::uint64_t>(instance.n()) + 1, instance.m(),
             "best alpha-efx product");
  return BestEfxSearch(instance, alpha).Run();
}

ImpossibilityCertificate CertifyTheorem4(const Ratio& alpha, const Ratio& eps,
                                         int n) {
  const Instance instance = Theorem4(alpha, eps, n);
  const MnwResult mnw = ExactMnw(instance);
  const BestEfxResult best = BestAlphaEfxProduct(instance, alpha);
  const Ratio a = Ratio(1) / alpha + eps;
  ImpossibilityCertificate cert{
      .family = "theorem4(alpha=" + alpha.ToString() +
                ",eps=" + eps.ToString() + ",n=" + std::to_string(n) + ")",
      .alpha = alpha,
      .mnw_product = mnw.product,
      .mnw_allocation = mnw.allocation,
      .best_efx_product = best.product,
      .best_efx_allocation = best.allocation,
      .ratio = best.product / mnw.product,
      .expected_mnw_product = (Ratio(1) + a).Pow(n - 1),
      .expected_best_efx_product = a.Pow(n - 1),
  };
  cert.matches_closed_form =
      cert.mnw_product == cert.expected_mnw_product &&
      cert.best_efx_product == cert.expected_best_efx_product;
  return cert;
}

ImpossibilityCertificate CertifyTheorem5(std::int64_t big_n) {
  const std::int64_t root = ExactSqrt(big_n);
  if (root < 2) {
    throw PreconditionError("theorem5 needs a perfect square N >= 4, got " +
                            std::to_string(big_n));
  }
  const Instance instance = Theorem5(big_n);
  const Ratio alpha(2, root);
  const MnwResult mnw = ExactMnw(instance);
  const BestEfxResult best = BestAlphaEfxProduct(instance, alpha);
  ImpossibilityCertificate cert{
      .family = "theorem5(N=" + std::to_string(big_n) + ")",
      .alpha = alpha,
      .mnw_product = mnw.product,
      .mnw_allocation = mnw.allocation,
      .best_efx_product = best.product,
      .best_efx_allocation = best.allocation,
      .ratio = best.product / mnw.product,
      .expected_mnw_product = Ratio(big_n),
      .expected_best_efx_product = Ratio(root),
  };
  cert.matches_closed_form =
      cert.mnw_product == cert.expected_mnw_product &&
      cert.best_efx_product <= cert.expected_best_efx_product;
  return cert;
}

nlohmann::json CertificateToJson(const ImpossibilityCertificate& cert) {
  nlohmann::json j;
  j["family"] = cert.family;
  j["alpha"] = cert.alpha.ToString();
  j["mnw_product"] = cert.mnw_product.ToString();
  j["mnw_allocation"] = AllocationToJson(cert.mnw_allocation)["bundles"];
  j["best_efx_product"] = cert.best_efx_product.ToString();
  j["best_efx_allocation"] =
      AllocationToJson(cert.best_efx_allocation)["bundles"];
  j["ratio"] = cert.ratio.ToString();
  j["ratio_approx"] = cert.ratio.ToDouble();
  j["expected_mnw_product"] = cert.expected_mnw_product.ToString();
  j["expected_best_efx_product"] = cert.expected_best_efx_product.ToString();
  j["matches_closed_form"] = cert.matches_closed_form;
  return j;
}

}  // namespace fairdiv
