#include "testing/fixtures.h"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "fairdiv/instance_json.h"

namespace fairdiv::testing {

std::string DataPath(const std::string& file) {
  return std::string(FAIRDIV_TEST_DATA_DIR) + "/" + file;
}

std::vector<TraceFixture> SubadditiveFixtures() {
  std::vector<std::string> files;
  for (const auto& entry :
       std::filesystem::directory_iterator(FAIRDIV_TEST_DATA_DIR)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("subadditive_case_", 0) == 0) files.push_back(name);
  }
  std::sort(files.begin(), files.end());
  std::vector<TraceFixture> out;
  for (const std::string& file : files) {
    std::ifstream in(DataPath(file));
    const nlohmann::json j = nlohmann::json::parse(in);
    Instance instance = InstanceFromJson(j.at("instance"));
    Allocation input = AllocationFromJson(j.at("input"), instance.m());
    out.push_back({file, j.at("case").get<std::string>(), std::move(instance),
                   std::move(input), RatioFromJson(j.at("alpha"))});
  }
  return out;
}

}  // namespace fairdiv::testing
