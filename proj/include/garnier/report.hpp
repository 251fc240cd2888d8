#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "garnier/hamiltonian.hpp"
#include "garnier/solution.hpp"

namespace garnier {

enum class ReportMode { Exact, Pit, Numeric };
enum class Verdict { Pass, Fail, Skipped };

std::string to_string(ReportMode m);
std::string to_string(Verdict v);

// One line of the report stream. A failing verdict always carries a witness;
// pit mode always carries its failure-probability bound.
struct VerificationReport {
  std::string check;
  std::string anchor;
  ReportMode mode = ReportMode::Exact;
  Verdict verdict = Verdict::Skipped;
  std::optional<std::string> witness;
  double seconds = 0.0;
  std::optional<unsigned> digits;
  std::optional<unsigned> trials;
  std::optional<double> failure_bound;
  std::optional<std::uint64_t> seed;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  bool pass() const { return verdict == Verdict::Pass; }
  // Enforces the invariants above; throws std::logic_error when violated.
  void validate() const;
};

nlohmann::ordered_json to_json(const VerificationReport& r);

struct RunConfig {
  std::uint64_t seed = 42;
  unsigned digits = 50;
  unsigned trials = 20;
  CheckMode mode = CheckMode::Pit;
  STriple s{Scalar(1), Scalar(1), Scalar(1)};
  Branch branch;
  std::optional<int> direction;  // flow direction; all three when absent
  std::string delta = "0.1";
  std::string tol = "1e-18";
  unsigned random_points = 5;    // extra random points for the eta and apparentness checks
};

// Parses "a,b,c" with rational or decimal entries.
STriple parse_s(const std::string& text);

// A deferred check; `numeric` checks touch the process-wide working precision
// and must not run concurrently with each other.
struct CheckTask {
  std::string name;
  bool numeric = false;
  std::function<std::vector<VerificationReport>()> run;
};

VerificationReport report_hamiltonian(int i);
VerificationReport report_compatibility(int i, int j, const RunConfig& cfg);
VerificationReport report_sigma_system();
std::vector<VerificationReport> report_eta(const RunConfig& cfg);
VerificationReport report_derive(int i, const RunConfig& cfg);
std::vector<VerificationReport> report_apparent(const RunConfig& cfg);
std::vector<VerificationReport> report_pullback(const RunConfig& cfg);
std::vector<VerificationReport> report_tau(const RunConfig& cfg);
VerificationReport report_flow(int i, const RunConfig& cfg);
VerificationReport report_properties(const RunConfig& cfg);

// Every check of the suite, in a fixed order.
std::vector<CheckTask> all_checks(const RunConfig& cfg);

}  // namespace garnier
