#include <doctest.h>

#include <set>

#include "qpart/verify.hpp"

TEST_CASE("manifest is well formed") {
  const auto& manifest = qpart::verification_manifest();
  CHECK(manifest.size() == 24);
  std::set<std::string> ids;
  for (const auto& e : manifest) {
    CHECK_FALSE(e.id.empty());
    CHECK_FALSE(e.statement.empty());
    ids.insert(e.id);
  }
  CHECK(ids.size() == manifest.size());
}

TEST_CASE("every manifest entry runs and passes at desk scale") {
  qpart::VerifyOptions options;
  options.n_max = 8;
  options.q_set = {qpart::Rational(2), qpart::Rational(3)};
  options.perm_n_max = 6;
  std::vector<std::string> seen;
  const auto report = qpart::run_verification(options, [&](const qpart::CheckResult& r) { seen.push_back(r.id); });
  CHECK(report.missing.empty());
  CHECK(report.ok());
  CHECK(seen.size() == report.results.size());
  for (const auto& r : report.results) CHECK_MESSAGE(r.passed, r.id << ": " << r.detail);
  std::set<std::string> ran(seen.begin(), seen.end());
  for (const auto& e : qpart::verification_manifest()) CHECK(ran.count(e.id) == 1);
}

TEST_CASE("inequality checks with only q < 2 fail as empty rather than pass") {
  qpart::VerifyOptions options;
  options.n_max = 4;
  options.q_set = {qpart::Rational(3, 2)};
  options.perm_n_max = 4;
  const auto report = qpart::run_verification(options);
  CHECK_FALSE(report.ok());
  bool identities_pass = false;
  for (const auto& r : report.results) {
    if (r.id == "p-normalization") identities_pass = r.passed;
  }
  CHECK(identities_pass);
}
