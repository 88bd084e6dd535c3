#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rsg::verify {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> lines;

  bool pass() const;
  void add(const std::string& name, bool ok, const std::string& detail = "");
  void print(std::ostream& os) const;
  std::string to_json_text() const;
};

// Defaults pin the acceptance parameters; the CLI may override them for
// exploration.
struct VerifyConfig {
  std::uint64_t seed = 1;
  int samples = 50;        // c ∈ R samples per identity
  int alpha_samples = 100; // constant-vector / (U,V,g) samples
  int chains = 1000;
  int triples = 10000; // identity-suite sample count
  int bound = 4;       // cover bound
  int omega = 2;       // free-instance alphabet size
  bool certify = true; // stabilization certificate
};

SuiteReport verify_identities(const VerifyConfig& cfg);
SuiteReport verify_niceness(const VerifyConfig& cfg);
SuiteReport verify_onedir(const VerifyConfig& cfg);
SuiteReport verify_yuck(const VerifyConfig& cfg);
SuiteReport verify_two_chains(const VerifyConfig& cfg);
SuiteReport verify_oracles(const VerifyConfig& cfg);
SuiteReport verify_cover(const VerifyConfig& cfg);
SuiteReport verify_pact(const VerifyConfig& cfg);
SuiteReport verify_factorisability(const VerifyConfig& cfg);

std::vector<SuiteReport> verify_all(const VerifyConfig& cfg);
SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg); // parse_error if unknown

} // namespace rsg::verify
