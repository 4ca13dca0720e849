#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace spinc {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when the suite passed

  bool passed() const { return failures == 0; }
};

/// Runs every invariant suite: anticommutation (m <= 8), adjointness of the
/// spinor form (m <= 6), E_12 eigenvalues on u^+ and u^-, decomposition round
/// trip, spin_transfer homomorphism, Lie closure of the catalog and the
/// stabilizer dimensions of the calibration forms found in `forms_dir`.
std::vector<SuiteResult> run_selfcheck(const std::filesystem::path& forms_dir);

}  // namespace spinc
