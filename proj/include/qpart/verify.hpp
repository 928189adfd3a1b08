#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qpart/rational.hpp"

namespace qpart {

struct ManifestEntry {
  std::string id;
  std::string statement;
};

/// Identities and inequalities the suite must cover, compiled in from
/// manifest/verify_manifest.json.
const std::vector<ManifestEntry>& verification_manifest();

struct VerifyOptions {
  int n_max = 10;
  std::vector<Rational> q_set{Rational(2)};
  /// Largest n for which S_n is enumerated in the RSK checks.
  int perm_n_max = 8;
  /// Truncation for certified infinite products.
  long truncation = 40;
};

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string detail;  ///< first failing case, or a short summary
};

struct VerifyReport {
  std::vector<CheckResult> results;
  /// Manifest ids for which no check ran.
  std::vector<std::string> missing;
  bool ok() const;
};

/// Runs every registered check (optionally reporting progress per check) and
/// cross-references the results with the manifest.
VerifyReport run_verification(const VerifyOptions& options,
                              const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace qpart
