#pragma once

// The worked examples as executable checks.

#include <string>
#include <vector>

namespace klimm {

struct FixtureResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

std::vector<FixtureResult> run_fixtures();

} // namespace klimm
