#ifndef FAIRDIV_TESTS_TESTING_FIXTURES_H_
#define FAIRDIV_TESTS_TESTING_FIXTURES_H_

#include <string>
#include <vector>

#include "fairdiv/allocation.h"
#include "fairdiv/instance.h"
#include "fairdiv/ratio.h"

namespace fairdiv::testing {

// A frozen subadditive run whose trace reaches a rarely hit case.
struct TraceFixture {
  std::string name;
  std::string expected_case;
  Instance instance;
  Allocation input;
  Ratio alpha;
};

// Absolute path of a file under tests/data.
std::string DataPath(const std::string& file);

// The fixtures under tests/data named subadditive_case_*.json, sorted by name.
std::vector<TraceFixture> SubadditiveFixtures();

}  // namespace fairdiv::testing

#endif  // FAIRDIV_TESTS_TESTING_FIXTURES_H_
