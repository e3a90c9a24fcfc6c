#ifndef FAIRDIV_INSTANCE_JSON_H_
#define FAIRDIV_INSTANCE_JSON_H_

#include <string>

#include <nlohmann/json.hpp>

#include "fairdiv/allocation.h"
#include "fairdiv/instance.h"
#include "fairdiv/ratio.h"

namespace fairdiv {

// Integers become JSON numbers when they fit in int64; everything else is a
// "p/q" string.
nlohmann::json RatioToJson(const Ratio& r);
// Accepts integers, decimal numbers (read exactly from their shortest
// decimal form) and "p/q" strings. Throws MalformedInstanceError.
Ratio RatioFromJson(const nlohmann::json& j);

// Instance format:
//   {"n": 2, "m": 3, "class": "additive",
//    "valuations": [{"additive": [1, 1, 2]},
//                   {"table": {"0": 0, "1": 1, ...}}],
//    "items": ["a", "b", "c"]}          (optional)
// Table keys are bundle bitmasks in decimal; all 2^m keys are required.
// The declared class is verified with CheckClass.
Instance InstanceFromJson(const nlohmann::json& j);
nlohmann::json InstanceToJson(const Instance& instance);

Instance LoadInstanceFile(const std::string& path);
void SaveInstanceFile(const Instance& instance, const std::string& path);

// {"bundles": [[0, 1], [2]]}
Allocation AllocationFromJson(const nlohmann::json& j, int m);
nlohmann::json AllocationToJson(const Allocation& allocation);

}  // namespace fairdiv

#endif  // FAIRDIV_INSTANCE_JSON_H_
