// Runs the acceptance criteria and prints one [PASS]/[FAIL] line each.
// Exit status is zero iff every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fairdiv/additive_alg.h"
#include "fairdiv/completion.h"
#include "fairdiv/errors.h"
#include "fairdiv/generators.h"
#include "fairdiv/oracle.h"
#include "fairdiv/subadditive_alg.h"
#include "fairdiv/verify.h"
#include "testing/brute_force.h"
#include "testing/corpus.h"
#include "testing/fixtures.h"
#include "testing/invariants.h"

namespace fairdiv {
namespace {

using testing::NamedInstance;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void Fail(const std::string& message) {
    pass = false;
    if (failures.size() < 5) failures.push_back(message);
  }
};

void Fail(Outcome& out, const std::string& tag, const std::string& what) {
  out.Fail(tag + ": " + what);
}

std::string Str(const Ratio& r) { return r.ToString(); }

// q^n * optimum <= (p+q)^n * product for alpha = p/q.
bool ProductBound(const Ratio& alpha, int n, const Ratio& product,
                  const Ratio& optimum) {
  const Ratio p(mpq_class(alpha.numerator()));
  const Ratio q(mpq_class(alpha.denominator()));
  return q.Pow(n) * optimum <= (p + q).Pow(n) * product;
}

const std::vector<NamedInstance>& Corpus() {
  static const std::vector<NamedInstance> corpus = testing::AdditiveCorpus(200);
  return corpus;
}

Outcome Ac1() {
  Outcome out;
  const std::vector<Ratio> alphas = {0, Ratio(1, 4), Ratio(1, 2), Ratio(3, 5), 1};
  int runs = 0;
  int partial = 0;
  for (const NamedInstance& c : Corpus()) {
    const Instance& inst = c.instance;
    const MnwResult mnw = ExactMnw(inst);
    const Ratio optimum = testing::BruteForceMnw(inst).product;
    for (const Ratio& alpha : alphas) {
      ++runs;
      const Allocation m = Algorithm1(inst, mnw.allocation, alpha).allocation;
      const std::string tag = c.id + " alpha=" + Str(alpha);
      if (!m.complete()) ++partial;
      if (!testing::BruteForceEfx(inst, m, alpha)) Fail(out, tag, "not alpha-EFX");
      if (!testing::BruteForceEf1(inst, m)) Fail(out, tag, "not EF1");
      if (!ProductBound(alpha, inst.n(), NashProduct(inst, m), optimum)) {
        Fail(out, tag, "product bound fails");
      }
    }
  }
  out.detail = std::to_string(runs) + " runs on " +
               std::to_string(Corpus().size()) + " instances, " +
               std::to_string(partial) + " left items unallocated";
  return out;
}

Outcome Ac2() {
  Outcome out;
  const std::vector<Ratio> alphas = {0, Ratio(1, 4), Ratio(1, 2), Ratio(3, 5)};
  int runs = 0;
  for (const NamedInstance& c : Corpus()) {
    const Instance& inst = c.instance;
    const Ratio optimum = testing::BruteForceMnw(inst).product;
    for (const Ratio& alpha : alphas) {
      ++runs;
      const std::string tag = c.id + " alpha=" + Str(alpha);
      const Allocation y =
          PipelineAdditive(inst, alpha, {.mms_family = false}).allocation;
      if (!y.complete()) Fail(out, tag, "incomplete");
      if (!testing::BruteForceEfx(inst, y, alpha)) Fail(out, tag, "not alpha-EFX");
      if (!testing::BruteForceEf1(inst, y)) Fail(out, tag, "not EF1");
      if (!ProductBound(alpha, inst.n(), NashProduct(inst, y), optimum)) {
        Fail(out, tag, "1/(alpha+1)-MNW fails");
      }
    }
  }
  out.detail = std::to_string(runs) + " complete allocations";
  return out;
}

Outcome Ac3() {
  Outcome out;
  const std::vector<Ratio> alphas = {0, Ratio(1, 4), Ratio(1, 2)};
  const std::vector<NamedInstance> corpus = testing::SubadditiveCorpus(100);
  int runs = 0;
  for (const NamedInstance& c : corpus) {
    const Instance& inst = c.instance;
    if (!CheckClass(inst, ValuationClass::kSubadditive).ok()) {
      Fail(out, c.id, "generated instance is not subadditive");
      continue;
    }
    const Ratio optimum = testing::BruteForceMnw(inst).product;
    for (const Ratio& alpha : alphas) {
      ++runs;
      const std::string tag = c.id + " alpha=" + Str(alpha);
      const Allocation y = PipelineSubadditive(inst, alpha).allocation;
      if (!y.complete()) Fail(out, tag, "incomplete");
      if (!testing::BruteForceEfx(inst, y, alpha)) Fail(out, tag, "not alpha-EFX");
      if (!ProductBound(alpha, inst.n(), NashProduct(inst, y), optimum)) {
        Fail(out, tag, "1/(alpha+1)-MNW fails");
      }
    }
  }
  out.detail = std::to_string(runs) + " runs on " +
               std::to_string(corpus.size()) + " XOS/budget-additive instances";
  return out;
}

Outcome Ac4() {
  Outcome out;
  const Ratio eps(1, 100);
  std::ostringstream detail;
  for (const Ratio& alpha : {Ratio(1, 2), Ratio(1)}) {
    for (int n : {2, 3}) {
      const std::string tag = "alpha=" + Str(alpha) + " n=" + std::to_string(n);
      const ImpossibilityCertificate cert = CertifyTheorem4(alpha, eps, n);
      const Ratio inv = Ratio(1) / alpha;
      const Ratio best = (inv + eps).Pow(n - 1);
      const Ratio mnw = (Ratio(1) + inv + eps).Pow(n - 1);
      const Instance inst = Theorem4(alpha, eps, n);
      if (cert.best_efx_product != best) Fail(out, tag, "best alpha-EFX product");
      if (cert.mnw_product != mnw) Fail(out, tag, "MNW product");
      if (testing::BruteForceBestEfxProduct(inst, alpha) != best) {
        Fail(out, tag, "independent best alpha-EFX product");
      }
      if (testing::BruteForceMnw(inst).product != mnw) {
        Fail(out, tag, "independent MNW product");
      }
      if (!cert.matches_closed_form || cert.ratio != best / mnw) {
        Fail(out, tag, "certificate ratio");
      }
      detail << tag << ": " << Str(best) << " vs " << Str(mnw) << "; ";
    }
  }
  out.detail = detail.str();
  if (out.detail.size() >= 2) out.detail.resize(out.detail.size() - 2);
  return out;
}

Outcome Ac5() {
  Outcome out;
  std::ostringstream detail;
  for (std::int64_t big_n : {16, 25}) {
    const std::int64_t root = big_n == 16 ? 4 : 5;
    const std::string tag = "N=" + std::to_string(big_n);
    const ImpossibilityCertificate cert = CertifyTheorem5(big_n);
    const Instance inst = Theorem5(big_n);
    const Ratio alpha(2, root);
    const Ratio best = testing::BruteForceBestEfxProduct(inst, alpha);
    if (cert.mnw_product != Ratio(big_n)) Fail(out, tag, "MNW product");
    if (testing::BruteForceMnw(inst).product != Ratio(big_n)) {
      Fail(out, tag, "independent MNW product");
    }
    if (cert.best_efx_product > Ratio(root)) Fail(out, tag, "best product");
    if (best > Ratio(root)) Fail(out, tag, "independent best product");
    if (!cert.matches_closed_form) Fail(out, tag, "certificate");
    detail << tag << ": best " << Str(best) << " <= " << root << ", MNW "
           << big_n << "; ";
  }
  out.detail = detail.str();
  if (out.detail.size() >= 2) out.detail.resize(out.detail.size() - 2);
  return out;
}

Outcome Ac6() {
  Outcome out;
  const std::vector<Ratio> alphas = {Ratio(1, 4), Ratio(1, 2), Ratio(3, 5)};
  int runs = 0;
  for (const NamedInstance& c : Corpus()) {
    const Instance& inst = c.instance;
    for (const Ratio& alpha : alphas) {
      ++runs;
      const std::string tag = c.id + " alpha=" + Str(alpha);
      const PipelineResult r = PipelineAdditive(inst, alpha);
      const Ratio share = alpha / (alpha * alpha + Ratio(1));
      if (!r.skipped.empty()) Fail(out, tag, "checks skipped");
      if (!r.all_pass()) Fail(out, tag, "library report failed");
      if (!testing::BruteForceGmms(inst, r.allocation, share)) {
        Fail(out, tag, "not alpha/(alpha^2+1)-GMMS");
      }
      if (!testing::BruteForcePmms(inst, r.allocation, alpha)) {
        Fail(out, tag, "not alpha-PMMS");
      }
    }
  }
  out.detail = std::to_string(runs) + " runs";
  return out;
}

Outcome Ac7() {
  Outcome out;
  const std::vector<Ratio> alphas = {Ratio(1, 4), Ratio(1, 2), Ratio(1)};
  int runs = 0;
  int max_iterations = 0;
  for (std::size_t k = 0; k < 50; ++k) {
    const NamedInstance& c = Corpus()[k];
    const Instance& inst = c.instance;
    const int n = inst.n();
    const Allocation x0 = Allocation::FromAssignment(
        n, testing::WorstPositiveAssignment(inst));
    const Ratio optimum = testing::BruteForceMnw(inst).product;
    const Ratio p0 = NashProduct(inst, x0);
    const Ratio beta_power = p0 / optimum;
    for (const Ratio& alpha : alphas) {
      ++runs;
      const std::string tag = c.id + " alpha=" + Str(alpha);
      try {
        const Algorithm7Result r = Algorithm7(inst, x0, alpha, beta_power);
        max_iterations = std::max(max_iterations, r.iterations);
        if (!WithinAlgorithm7Bound(r.iterations, n, alpha, beta_power)) {
          Fail(out, tag, "iteration bound");
        }
        if (!testing::BruteForceEfx(inst, r.allocation, alpha)) {
          Fail(out, tag, "not alpha-EFX");
        }
        // product >= beta^n / (alpha+1)^n * optimum = p0 / (alpha+1)^n.
        if (NashProduct(inst, r.allocation) * (alpha + Ratio(1)).Pow(n) < p0) {
          Fail(out, tag, "beta/(alpha+1)-MNW fails");
        }
      } catch (const InternalError& e) {
        Fail(out, tag, e.what());
      }
    }
  }
  out.detail = std::to_string(runs) + " runs from worst positive allocations, " +
               "max " + std::to_string(max_iterations) + " iterations";
  return out;
}

Outcome Ac8() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  auto draw = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const std::vector<Ratio> additive_alphas = {0, Ratio(1, 4), Ratio(1, 3),
                                              Ratio(1, 2), Ratio(3, 5),
                                              Ratio(2, 3), 1};
  const std::vector<Ratio> sub_alphas = {0, Ratio(1, 5), Ratio(1, 4),
                                         Ratio(1, 3), Ratio(1, 2)};
  int additive_runs = 0;
  int sub_runs = 0;
  std::size_t max_sub_iterations = 0;
  std::map<std::string, int> cases;
  auto check_subadditive = [&](const std::string& tag, const Instance& inst,
                               const Allocation& x, const Ratio& alpha) {
    const int n = inst.n();
    const int m = inst.m();
    const Algorithm2Result r = Algorithm2(inst, x, alpha);
    for (const SubStep& step : r.state.trace) {
      ++cases[std::string(SubCaseTag(step.tag))];
    }
    for (const std::string& e :
         testing::CheckSubadditiveTrace(inst, x, alpha, r.state)) {
      Fail(out, tag, e);
    }
    const std::size_t bound =
        static_cast<std::size_t>((m + 1) * (m + 1) * (m + 1));
    max_sub_iterations = std::max(max_sub_iterations, r.state.trace.size());
    if (r.state.trace.size() > bound) {
      Fail(out, tag, "subadditive iterations " +
                         std::to_string(r.state.trace.size()) +
                         " > (m+1)^3 = " + std::to_string(bound));
    }
    if (!testing::BruteForceEfx(inst, r.allocation, alpha)) {
      Fail(out, tag, "subadditive output not alpha-EFX");
    }
    if (NashProduct(inst, r.allocation) * (alpha + Ratio(1)).Pow(n) <
        NashProduct(inst, x)) {
      Fail(out, tag, "subadditive output below 1/(alpha+1) of the input");
    }
  };
  for (int run = 0; run < 500; ++run) {
    const std::uint64_t seed = rng();
    const std::string tag = "run " + std::to_string(run);
    if (run % 2 == 0) {
      const int n = draw(2, 4);
      const int m = draw(1, 7);
      const Instance inst = RandomAdditive(n, m, 10, seed);
      const Ratio alpha = additive_alphas[draw(0, 6)];
      const bool mnw_input = run % 4 == 0;
      std::vector<int> labels(m);
      for (int& l : labels) l = draw(0, n - 1);
      const Allocation x = mnw_input ? ExactMnw(inst).allocation
                                     : Allocation::FromAssignment(n, labels);
      const Algorithm1Result r = Algorithm1(inst, x, alpha);
      for (const std::string& e :
           testing::CheckAdditiveTrace(inst, alpha, r.state, mnw_input)) {
        Fail(out, tag, e);
      }
      if (!testing::BruteForceEfx(inst, r.allocation, alpha)) {
        Fail(out, tag, "additive output not alpha-EFX");
      }
      if (mnw_input && !IsGammaSeparated(inst, r.allocation, alpha).pass) {
        Fail(out, tag, "additive output not alpha-separated");
      }
      ++additive_runs;
    } else {
      const int n = draw(2, 4);
      const int m = draw(1, 6);
      const Instance inst = run % 4 == 1
                                ? RandomXos(n, m, draw(1, 4), seed)
                                : RandomBudgetAdditive(n, m, draw(3, 25), seed);
      const Ratio alpha = sub_alphas[draw(0, 4)];
      std::vector<int> labels(m);
      for (int& l : labels) l = draw(0, n - 1);
      const Allocation x = Allocation::FromAssignment(n, labels);
      check_subadditive(tag, inst, x, alpha);
      ++sub_runs;
    }
  }
  int fixtures = 0;
  for (const testing::TraceFixture& f : testing::SubadditiveFixtures()) {
    check_subadditive(f.name, f.instance, f.input, f.alpha);
    ++fixtures;
  }
  for (const char* c : {"1", "2.1", "2.2", "2.3", "2.4", "2.5", "2.6", "3", "4"}) {
    if (cases[c] == 0) Fail(out, "coverage", std::string("case ") + c + " never reached");
  }
  out.detail = std::to_string(additive_runs) + " additive + " +
               std::to_string(sub_runs) + " subadditive traces + " +
               std::to_string(fixtures) + " fixtures, max " +
               std::to_string(max_sub_iterations) + " subadditive iterations, cases";
  for (const auto& [tag, count] : cases) {
    out.detail += " " + tag + ":" + std::to_string(count);
  }
  return out;
}

Outcome Ac9() {
  Outcome out;
  int ef1 = 0;
  for (const NamedInstance& c : Corpus()) {
    const MnwResult r = ExactMnw(c.instance);
    if (!testing::BruteForceEf1(c.instance, r.allocation)) {
      Fail(out, c.id, "MNW allocation is not EF1");
    }
    ++ef1;
  }
  int agree = 0;
  for (std::size_t k = 0; k < 100; ++k) {
    const NamedInstance& c = Corpus()[k];
    const MnwResult bnb = ExactMnw(c.instance, SearchMode::kBranchAndBound);
    const MnwResult plain = ExactMnw(c.instance, SearchMode::kPlain);
    const testing::BruteMnw brute = testing::BruteForceMnw(c.instance);
    if (bnb.allocation != plain.allocation || bnb.product != plain.product) {
      Fail(out, c.id, "branch and bound disagrees with plain enumeration");
    }
    if (plain.allocation.Assignment() != brute.assignment ||
        plain.product != brute.product || plain.ties != brute.ties) {
      Fail(out, c.id, "plain enumeration disagrees with brute force");
    }
    ++agree;
  }
  out.detail = std::to_string(ef1) + " EF1 checks, " + std::to_string(agree) +
               " search agreements";
  return out;
}

}  // namespace
}  // namespace fairdiv

int main() {
  using fairdiv::Outcome;
  struct Criterion {
    const char* name;
    const char* description;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "partial additive: alpha-EFX, EF1, 1/(alpha+1)-MNW",
       fairdiv::Ac1},
      {"AC2", "complete additive pipeline: alpha-EFX, EF1, 1/(alpha+1)-MNW",
       fairdiv::Ac2},
      {"AC3", "complete subadditive pipeline: alpha-EFX, 1/(alpha+1)-MNW",
       fairdiv::Ac3},
      {"AC4", "additive impossibility family: exact closed forms",
       fairdiv::Ac4},
      {"AC5", "monotone impossibility family: best <= sqrt(N), MNW = N",
       fairdiv::Ac5},
      {"AC6", "additive pipeline: alpha/(alpha^2+1)-GMMS and alpha-PMMS",
       fairdiv::Ac6},
      {"AC7", "restart loop from beta-MNW inputs: bound, alpha-EFX, "
              "beta/(alpha+1)-MNW",
       fairdiv::Ac7},
      {"AC8", "trace invariants over 500 random runs", fairdiv::Ac8},
      {"AC9", "MNW oracle: EF1 and search agreement", fairdiv::Ac9},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.Fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    all = all && outcome.pass;
    std::printf("[%s] %s %s (%s; %.1fs)\n", outcome.pass ? "PASS" : "FAIL",
                c.name, c.description, outcome.detail.c_str(), seconds);
    for (const std::string& f : outcome.failures) {
      std::printf("    %s\n", f.c_str());
    }
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
