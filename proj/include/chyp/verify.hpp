#pragma once

// Property batteries run by the `verify` subcommand.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace chyp {

struct SuiteReport {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  double max_residual = 0.0;
  double threshold = 0.0;
  double seconds = 0.0;
  /// Free-form result lines (tables, sub-checks).
  std::vector<std::string> details;
};

struct VerifyOptions {
  std::uint64_t seed = 20241014ULL;
  /// Scales the randomized case counts; 1 gives the documented sizes.
  double scale = 1.0;
};

const std::vector<std::string_view>& verify_suite_names();

/// Runs one named suite, or every suite for "all". Throws GeometryError on
/// an unknown name, listing the valid ones.
std::vector<SuiteReport> run_verify(std::string_view suite, const VerifyOptions& opts = {});

}  // namespace chyp
