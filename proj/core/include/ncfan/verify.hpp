#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncfan/model.hpp"

namespace ncfan {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first failure, or a short success summary
};

struct VerifyOptions {
  int mc_samples = 100000;
  std::uint64_t seed = 42;
};

// Runs every invariant suite over a built model, one named result per
// check. Nothing throws; failures are collected in the results.
std::vector<CheckResult> verify_model(const Model& m, const VerifyOptions& opt);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace ncfan
