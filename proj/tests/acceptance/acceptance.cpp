// Acceptance run: one PASS/FAIL line per criterion with pinned tolerances.
//
// Exit status is 0 when every criterion passes except those listed in
// kKnownRed, which print FAIL honestly and are explained in the README.
// With --strict every FAIL line makes the exit status nonzero.

#include <chrono>
#include <cstring>
#include <iostream>
#include <set>
#include <sstream>

#include "garnier/algebra/errors.hpp"
#include "garnier/algebra/properties.hpp"
#include "garnier/connection.hpp"
#include "garnier/flow.hpp"
#include "garnier/hamiltonian.hpp"
#include "garnier/pullback.hpp"
#include "garnier/report.hpp"
#include "garnier/solution.hpp"
#include "garnier/tau.hpp"

using namespace garnier;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// The closed-form one-form coefficients carry the opposite sign of the
// Hamiltonians restricted to the solution; see README.
const std::set<int> kKnownRed{7};

constexpr std::uint64_t kSeed = 42;
constexpr unsigned kTrials = 20;
constexpr unsigned kDigits = 50;

struct Line {
  int id;
  std::string title;
  bool pass;
  std::string detail;
  std::vector<std::string> info;
};

void print(const Line& l) {
  std::cout << (l.pass ? "[PASS] " : "[FAIL] ") << l.id << ". " << l.title << " -- " << l.detail << std::endl;
  for (const auto& s : l.info) std::cout << "         info: " << s << std::endl;
}

std::string secs(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

Line criterion1() {
  Line l{1, "compatibility identity", true, "", {}};
  const auto t0 = Clock::now();
  PitOptions opt;
  opt.trials = kTrials;
  opt.seed = kSeed;
  int pit_ok = 0;
  double worst = 0;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    const CompatibilityReport r = check_compatibility(i, j, CheckMode::Pit, opt);
    pit_ok += r.zero && r.pit->trials >= kTrials;
    worst = std::max(worst, r.pit->failure_bound);
  }
  const double pit_s = since(t0);
  const auto t1 = Clock::now();
  int full_ok = 0;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
    full_ok += check_compatibility(i, j, CheckMode::Full).zero;
  const double full_s = since(t1);
  l.pass = pit_ok == 3 && pit_s < 60 && full_ok == 3 && full_s < 1800;
  l.detail = "pit (" + std::to_string(kTrials) + " trials): " + std::to_string(pit_ok) + "/3 pairs zero, bound " + sci(worst) +
             ", " + secs(pit_s) + " (limit 60 s); full: " + std::to_string(full_ok) + "/3 zero, " + secs(full_s) +
             " (limit 1800 s)";
  // The same identity with the bracket term subtracted does not vanish.
  const RatFunc br = poisson(hamiltonian(0), hamiltonian(1));
  const PitResult minus = pit_zero(compatibility_expr(0, 1) - Expr(br) - Expr(br), opt);
  l.info.push_back(std::string("form tested: dH_i/dt_j - dH_j/dt_i + {H_i,H_j}; with -{H_i,H_j} pair (0,1) is ") +
                   (minus.zero ? "zero" : "nonzero"));
  return l;
}

Line criterion2() {
  Line l{2, "sigma-system", true, "", {}};
  const SigmaSystemReport r = verify_sigma_system();
  int zero = 0;
  for (const auto& e : r.equations) zero += e.zero;
  l.pass = r.all_zero && r.equations.size() == 9 && r.seconds < 60;
  l.detail = std::to_string(zero) + "/" + std::to_string(r.equations.size()) + " equations exactly zero, " + secs(r.seconds) +
             " (limit 60 s)";
  return l;
}

Line criterion3() {
  Line l{3, "eta-equations", true, "", {}};
  const auto t0 = Clock::now();
  RunConfig cfg;
  cfg.seed = kSeed;
  cfg.digits = kDigits;
  cfg.random_points = 5;
  const auto reps = report_eta(cfg);
  int ok = 0;
  std::string worst;
  for (const auto& r : reps) {
    // Pinned threshold 1e-40 at 50 digits.
    ok += r.pass() && r.details.value("threshold", "") == "1e-40";
    if (!r.pass()) worst = r.witness.value_or("");
  }
  const double s = since(t0);
  l.pass = ok == int(reps.size()) && reps.size() == 6 && s < 120;
  l.detail = std::to_string(ok) + "/" + std::to_string(reps.size()) + " points (s=(1,1,1) + 5 random) with all 9 residuals < 1e-40 at " +
             std::to_string(kDigits) + " digits, " + secs(s) + " (limit 120 s)";
  if (!worst.empty()) l.info.push_back(worst);
  return l;
}

Line criterion4() {
  Line l{4, "Hamiltonians from formal data", true, "", {}};
  const auto t0 = Clock::now();
  PitOptions opt;
  opt.trials = kTrials;
  opt.seed = kSeed;
  int ok = 0, exact = 0;
  double worst = 0;
  for (int i = 0; i < 3; ++i) {
    const DerivedHamiltonian d = derive_hamiltonian_from_connection(i, opt);
    ok += d.pit->zero && d.pit->trials >= kTrials;
    exact += d.exact_equal;
    worst = std::max(worst, d.pit->failure_bound);
  }
  const double s = since(t0);
  l.pass = ok == 3 && worst < 1e-12 && s < 600;
  l.detail = "pit (" + std::to_string(kTrials) + " trials) " + std::to_string(ok) + "/3 equal, failure bound " + sci(worst) +
             " (limit 1e-12), " + secs(s) + " (limit 600 s)";
  l.info.push_back("exact comparison: " + std::to_string(exact) + "/3 identical");
  return l;
}

Line criterion5() {
  Line l{5, "apparent singularities", true, "", {}};
  const auto t0 = Clock::now();
  RunConfig cfg;
  cfg.seed = kSeed;
  cfg.random_points = 10;
  const auto reps = report_apparent(cfg);
  int ok = 0;
  for (const auto& r : reps) ok += r.pass();
  const double s = since(t0);
  l.pass = ok == int(reps.size()) && reps.size() >= 10 && s < 60;
  l.detail = std::to_string(ok) + "/" + std::to_string(reps.size()) +
             " random exact points apparent at q1,q2,q3 and not apparent after Ctilde_q1 += 1, " + secs(s) + " (limit 60 s)";
  return l;
}

Line criterion6() {
  Line l{6, "pull-back coincidence", true, "", {}};
  const auto t0 = Clock::now();
  const PullbackReport e = verify_pullback_exact({1, 1, 1});
  const PullbackReport y = verify_pullback_symbolic();
  const double s = since(t0);
  l.pass = e.family_zero && y.family_zero && s < 600;
  l.detail = std::string("invariant difference at s=(1,1,1): ") + (e.family_zero ? "0" : "nonzero") +
             "; symbolic (sigma-level): " + (y.family_zero ? "0" : "nonzero") + ", " + secs(s) + " (limit 600 s)";
  l.info.push_back(std::string("displayed pulled-back connection, c2 as printed: ") +
                   (y.display_literal_zero ? "agrees" : "agrees only at s2 = 1") + "; with c2 scaled by s2: " +
                   (y.display_rescaled_zero ? "agrees" : "differs"));
  return l;
}

Line criterion7() {
  Line l{7, "tau-function", true, "", {}};
  const TauReport t = verify_tau(Branch{}, true);
  auto all = [](const std::array<bool, 3>& a) { return a[0] && a[1] && a[2]; };
  auto count = [](const std::array<bool, 3>& a) { return std::to_string(int(a[0]) + int(a[1]) + int(a[2])); };
  l.pass = t.pass() && t.seconds < 30;
  l.detail = "coefficients equal to closed form: " + count(t.matches_display) + "/3; d(varpi) = 0: " + (t.closed ? "yes" : "no") +
             "; varpi - dF = 0: " + count(t.exact) + "/3; " + secs(t.seconds) + " (limit 30 s)";
  l.info.push_back("with varpi -> -varpi: coefficients " + count(t.matches_negated_display) + "/3, varpi + dF = 0 " +
                   count(t.exact_negated) + "/3, verdict " + (t.pass_negated() ? "PASS" : "FAIL"));
  l.info.push_back(std::string("restricted brackets vanish: ") + (all(t.bracket_zero) ? "yes" : "no"));
  return l;
}

Line criterion8() {
  Line l{8, "flow stays on the locus", true, "", {}};
  DigitsScope d(kDigits);
  bool ok = true;
  std::string parts;
  for (int i = 0; i < 3; ++i) {
    const FlowReport f = flow_preserves_locus(i, {1, 1, 1}, Branch{}, Complex(Real("0.1")), Real("1e-18"), Real("1e-15"));
    const bool pass = f.pass && f.seconds < 300;
    ok = ok && pass;
    parts += (i ? "; " : "") + std::string("t") + std::to_string(i) + ": max residual " + to_string(f.max_residual, 3) + ", " +
             std::to_string(f.trajectory.accepted) + " steps, " + secs(f.seconds);
    if (f.trajectory.aborted) parts += " (aborted: " + f.trajectory.abort_reason + ")";
  }
  l.pass = ok;
  l.detail = "|dt| = 0.1, tol 1e-18, residual limit 1e-15, 300 s per direction -- " + parts;
  return l;
}

Line criterion9() {
  Line l{9, "kernel property suite", true, "", {}};
  const PropertyReport p = run_kernel_properties(kSeed, 100);
  l.pass = p.pass() && p.cases() >= 500 && p.seconds < 60;
  l.detail = std::to_string(p.cases() - p.failures()) + "/" + std::to_string(p.cases()) + " randomized cases, " + secs(p.seconds) +
             " (limit 60 s)";
  for (const auto& prop : p.properties)
    if (prop.witness) l.info.push_back(prop.name + ": " + *prop.witness);
  return l;
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  set_working_digits(kDigits);
  int unexpected = 0, red = 0;
  int id = 0;
  for (auto fn : {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7, criterion8, criterion9}) {
    ++id;
    Line l;
    try {
      l = fn();
    } catch (const std::exception& e) {
      l = Line{id, "error", false, e.what(), {}};
    }
    print(l);
    if (!l.pass) {
      ++red;
      if (strict || !kKnownRed.count(l.id)) ++unexpected;
    }
  }
  std::cout << "summary: " << 9 - red << "/9 criteria pass";
  if (red) std::cout << "; red: " << red << " (known unattainable: criterion 7)";
  std::cout << std::endl;
  return unexpected ? 1 : 0;
}
