#include "sweep.h"

#include <chrono>
#include <cstdio>
#include <utility>

#include "fairdiv/additive_alg.h"
#include "fairdiv/completion.h"
#include "fairdiv/errors.h"
#include "fairdiv/generators.h"
#include "fairdiv/instance_json.h"
#include "fairdiv/oracle.h"
#include "fairdiv/verify.h"

namespace fairdiv::cli {
namespace {

std::string Verdict(bool pass) { return pass ? "pass" : "fail"; }

struct Outcome {
  Allocation allocation;
  std::vector<GuaranteeReport> reports;
};

Outcome RunTag(const std::string& tag, const Instance& instance,
               const MnwResult& mnw, const Ratio& alpha) {
  const Ratio beta = Ratio(1) / (alpha + Ratio(1));
  if (tag == kAdditivePartial) {
    Algorithm1Result r = Algorithm1(instance, mnw.allocation, alpha);
    std::vector<GuaranteeReport> reports = {
        IsAlphaEfx(instance, r.allocation, alpha),
        IsEf1(instance, r.allocation),
        IsBetaMnw(instance, r.allocation, beta, mnw.product)};
    return {std::move(r.allocation), std::move(reports)};
  }
  if (tag == kAdditiveComplete) {
    PipelineResult r =
        PipelineAdditive(instance, alpha, {.mms_family = false});
    return {std::move(r.allocation), std::move(r.reports)};
  }
  if (tag == kAdditiveRestart) {
    Algorithm7Result r = Algorithm7(instance, mnw.allocation, alpha, Ratio(1));
    std::vector<GuaranteeReport> reports = {
        IsAlphaEfx(instance, r.allocation, alpha),
        IsBetaMnw(instance, r.allocation, beta, mnw.product)};
    return {std::move(r.allocation), std::move(reports)};
  }
  if (tag == kSubadditiveComplete) {
    PipelineResult r = PipelineSubadditive(instance, alpha);
    return {std::move(r.allocation), std::move(r.reports)};
  }
  throw PreconditionError("unknown algorithm tag '" + tag + "'");
}

void Fill(SweepRow& row, const Instance& instance, const MnwResult& mnw,
          const Outcome& outcome) {
  row.complete = outcome.allocation.complete();
  row.product = NashProduct(instance, outcome.allocation);
  row.mnw_product = mnw.product;
  if (mnw.product.sign() > 0) row.ratio = *row.product / mnw.product;
  for (const GuaranteeReport& r : outcome.reports) {
    switch (r.property) {
      case Property::kAlphaEfx:
        row.alpha_efx = Verdict(r.pass);
        break;
      case Property::kEf1:
        row.ef1 = Verdict(r.pass);
        break;
      case Property::kBetaMnw:
        row.mnw_bound = Verdict(r.pass);
        break;
      default:
        break;
    }
  }
}

std::string ApproxOrNa(const std::optional<Ratio>& r) {
  if (!r.has_value()) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", r->ToDouble());
  return buf;
}

std::string ExactOrNa(const std::optional<Ratio>& r) {
  return r.has_value() ? r->ToString() : "NA";
}

std::vector<GeneratorSpec> ExpandInstances(const nlohmann::json& spec) {
  std::vector<GeneratorSpec> out;
  if (!spec.contains("instances")) return out;
  const nlohmann::json& list = spec.at("instances");
  if (!list.is_array()) {
    throw MalformedInstanceError("sweep 'instances' must be an array");
  }
  for (const nlohmann::json& entry : list) {
    nlohmann::json body = entry;
    long long count = 1;
    if (body.is_object() && body.contains("count")) {
      if (!body.at("count").is_number_integer() ||
          body.at("count").get<long long>() < 0) {
        throw MalformedInstanceError("'count' must be a nonnegative integer");
      }
      count = body.at("count").get<long long>();
      body.erase("count");
    }
    const GeneratorSpec base = GeneratorSpecFromJson(body);
    for (long long c = 0; c < count; ++c) {
      GeneratorSpec s = base;
      s.seed = base.seed + static_cast<std::uint64_t>(c);
      out.push_back(s);
    }
  }
  return out;
}

std::vector<Ratio> ParseAlphas(const nlohmann::json& spec) {
  std::vector<Ratio> out;
  if (!spec.contains("alphas")) return out;
  if (!spec.at("alphas").is_array()) {
    throw MalformedInstanceError("sweep 'alphas' must be an array");
  }
  for (const nlohmann::json& a : spec.at("alphas")) {
    out.push_back(RatioFromJson(a));
  }
  return out;
}

}  // namespace

std::vector<SweepRow> RunSweep(const nlohmann::json& spec, bool timing) {
  if (!spec.is_object()) {
    throw MalformedInstanceError("sweep spec must be a JSON object");
  }
  const std::vector<GeneratorSpec> specs = ExpandInstances(spec);
  const std::vector<Ratio> alphas = ParseAlphas(spec);
  std::vector<std::string> fixed_tags;
  if (spec.contains("algorithms")) {
    fixed_tags = spec.at("algorithms").get<std::vector<std::string>>();
  }
  std::vector<SweepRow> rows;
  for (const GeneratorSpec& gs : specs) {
    const Instance instance = Generate(gs);
    std::vector<std::string> tags = fixed_tags;
    if (tags.empty()) {
      if (instance.all_additive()) {
        tags = {kAdditivePartial, kAdditiveComplete, kAdditiveRestart};
      } else {
        tags = {kSubadditiveComplete};
      }
    }
    std::optional<MnwResult> mnw;
    std::string mnw_error;
    try {
      mnw = ExactMnw(instance);
    } catch (const CapacityError&) {
      mnw_error = "capacity";
    }
    for (const Ratio& alpha : alphas) {
      for (const std::string& tag : tags) {
        SweepRow row{.instance_id = SpecId(gs), .alpha = alpha, .algorithm = tag};
        row.bound = (Ratio(1) / (alpha + Ratio(1))).Pow(instance.n());
        const auto start = std::chrono::steady_clock::now();
        if (!mnw.has_value()) {
          row.error = mnw_error;
        } else {
          try {
            Fill(row, instance, *mnw, RunTag(tag, instance, *mnw, alpha));
          } catch (const PreconditionError&) {
            row.error = "precondition";
          } catch (const MalformedInstanceError&) {
            row.error = "malformed";
          } catch (const CapacityError&) {
            row.error = "capacity";
          } catch (const InternalError&) {
            row.error = "internal";
          }
        }
        if (timing) {
          row.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string SweepCsvHeader() {
  return "instance,alpha,algorithm,complete,product,mnw_product,ratio,"
         "ratio_approx,bound,bound_approx,alpha_efx,ef1,mnw_bound,error,"
         "time_ms\n";
}

std::string SweepCsvLine(const SweepRow& row) {
  std::string line = "\"" + row.instance_id + "\"";
  auto add = [&line](const std::string& field) { line += "," + field; };
  add(row.alpha.ToString());
  add(row.algorithm);
  add(row.error.empty() ? (row.complete ? "yes" : "no") : "NA");
  add(ExactOrNa(row.product));
  add(ExactOrNa(row.mnw_product));
  add(ExactOrNa(row.ratio));
  add(ApproxOrNa(row.ratio));
  add(row.bound.ToString());
  add(ApproxOrNa(row.bound));
  add(row.alpha_efx);
  add(row.ef1);
  add(row.mnw_bound);
  add(row.error);
  add(row.time_ms.has_value() ? std::to_string(*row.time_ms) : "NA");
  return line + "\n";
}

}  // namespace fairdiv::cli
