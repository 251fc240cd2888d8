// garnier: command-line verification of the irregular Garnier system and its
// algebraic solution. Emits one JSON object per check on standard output.

#include <CLI11.hpp>

#include <future>
#include <iostream>
#include <mutex>
#include <thread>

#include "garnier/algebra/errors.hpp"
#include "garnier/flow.hpp"
#include "garnier/report.hpp"

using namespace garnier;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2;

std::mutex out_mu;

void emit_line(const nlohmann::ordered_json& j) {
  std::lock_guard<std::mutex> lock(out_mu);
  std::cout << j.dump() << '\n' << std::flush;
}

struct Outcome {
  bool any_fail = false;
  void add(const VerificationReport& r) {
    r.validate();
    emit_line(to_json(r));
    any_fail = any_fail || r.verdict == Verdict::Fail;
  }
  void add(const std::vector<VerificationReport>& rs) {
    for (const auto& r : rs) add(r);
  }
  int code() const { return any_fail ? kExitFail : kExitPass; }
};

int usage_error(const std::string& check, const std::string& message) {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["verdict"] = "error";
  j["error"] = message;
  emit_line(j);
  return kExitUsage;
}

// Exact checks run on worker threads; numeric checks share the process-wide
// working precision and run on the calling thread. Lines come out in task order.
void run_tasks(const std::vector<CheckTask>& tasks, unsigned jobs, Outcome& out) {
  std::vector<std::future<std::vector<VerificationReport>>> pending(tasks.size());
  std::vector<std::size_t> exact;
  for (std::size_t k = 0; k < tasks.size(); ++k)
    if (!tasks[k].numeric) exact.push_back(k);
  // Launch at most `jobs` exact tasks ahead of the one being printed.
  std::size_t next = 0;
  auto launch_upto = [&](std::size_t limit) {
    while (next < exact.size() && next < limit) {
      const std::size_t k = exact[next++];
      pending[k] = std::async(jobs > 1 ? std::launch::async : std::launch::deferred, tasks[k].run);
    }
  };
  std::size_t printed_exact = 0;
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    if (tasks[k].numeric) {
      launch_upto(printed_exact + jobs);
      out.add(tasks[k].run());
    } else {
      launch_upto(printed_exact + jobs);
      out.add(pending[k].get());
      ++printed_exact;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification of the irregular Garnier system and its algebraic solution"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Configuration file with key=value lines");

  RunConfig cfg;
  std::vector<std::string> s_parts{"1,1,1"};
  std::string branch_arg = "+++", mode_arg, emit = "report";
  int direction = -1;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--digits", cfg.digits, "Working precision in decimal digits")->capture_default_str()->check(CLI::Range(20u, 2000u));
  app.add_option("--trials", cfg.trials, "Identity-testing trials")->capture_default_str()->check(CLI::Range(1u, 10000u));
  app.add_option("--mode", mode_arg, "pit | full (compatibility); exact | symbolic (pull-back)")
      ->check(CLI::IsMember({"pit", "full", "exact", "symbolic"}));
  // Config files split comma lists into items; both spellings are accepted.
  app.add_option("--s", s_parts, "Sample point s0,s1,s2 (rationals)")->expected(1, 3)->capture_default_str();
  app.add_option("--branch", branch_arg, "Signs of t_i = sign_i s_i^(3/2)")->capture_default_str();
  app.add_option("--direction", direction, "Flow direction 0, 1 or 2 (all when omitted)")->check(CLI::Range(0, 2));
  app.add_option("--delta", cfg.delta, "Flow time increment")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Flow local error tolerance")->capture_default_str();
  app.add_option("--emit", emit, "report | trajectory")->capture_default_str()->check(CLI::IsMember({"report", "trajectory"}));
  app.add_option("--jobs", jobs, "Worker threads for exact checks")->check(CLI::Range(1u, 256u));

  int hi = 0, ci = 0, cj = 1, di = -1;
  auto* ham = app.add_subcommand("hamiltonian", "Print H_{t_i}");
  ham->add_option("--i", hi, "Index 0, 1 or 2")->check(CLI::Range(0, 2));
  auto* comp = app.add_subcommand("check-compatibility", "dH_i/dt_j - dH_j/dt_i + {H_i, H_j} = 0");
  comp->add_option("--i", ci, "First index")->check(CLI::Range(0, 2));
  comp->add_option("--j", cj, "Second index")->check(CLI::Range(0, 2));
  auto* sol = app.add_subcommand("verify-solution", "sigma-system (exact) and eta-equations (numeric)");
  auto* der = app.add_subcommand("derive-hamiltonians", "Hamiltonians from the local formal data");
  der->add_option("--i", di, "Index 0, 1 or 2 (all when omitted)")->check(CLI::Range(0, 2));
  auto* app_c = app.add_subcommand("check-apparent", "Apparentness at random exact parameter points");
  auto* pb = app.add_subcommand("verify-pullback", "Pull-back coincidence with the isomonodromic family");
  auto* tau = app.add_subcommand("tau", "tau-function one-form and potential");
  auto* flow = app.add_subcommand("flow", "Integrate the Garnier flow from the locus point");
  auto* all = app.add_subcommand("verify-all", "Every check of the suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return kExitUsage;
  }

  try {
    std::string s_arg;
    for (const auto& part : s_parts) s_arg += (s_arg.empty() ? "" : ",") + part;
    cfg.s = parse_s(s_arg);
    cfg.branch = Branch::parse(branch_arg);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return kExitUsage;
  }
  if (direction >= 0) cfg.direction = direction;
  if (mode_arg == "full") cfg.mode = CheckMode::Full;
  set_working_digits(cfg.digits);

  Outcome out;
  try {
    if (*ham) {
      out.add(report_hamiltonian(hi));
    } else if (*comp) {
      if (ci == cj) return usage_error("compatibility", "precondition violated: i != j required");
      out.add(report_compatibility(ci, cj, cfg));
    } else if (*sol) {
      out.add(report_sigma_system());
      out.add(report_eta(cfg));
    } else if (*der) {
      for (int i = 0; i < 3; ++i)
        if (di < 0 || di == i) out.add(report_derive(i, cfg));
    } else if (*app_c) {
      out.add(report_apparent(cfg));
    } else if (*pb) {
      auto reports = report_pullback(cfg);
      for (const auto& r : reports)
        if (mode_arg.empty() || (mode_arg == "exact") == (r.check == "pullback.exact")) out.add(r);
    } else if (*tau) {
      out.add(report_tau(cfg));
    } else if (*flow) {
      for (int i = 0; i < 3; ++i) {
        if (cfg.direction && *cfg.direction != i) continue;
        if (emit == "trajectory") {
          DigitsScope d(cfg.digits);
          const PhasePoint p0 = phase_point(locus_point(cfg.s, cfg.branch));
          const Trajectory tr = integrate(i, p0, Complex(Real(cfg.delta)), Real(cfg.tol));
          for (const auto& smp : tr.samples) {
            nlohmann::ordered_json j;
            j["direction"] = i;
            j["t"] = to_string(smp.ti, 30);
            for (int k = 0; k < 3; ++k) {
              j["q"].push_back(to_string(smp.point.q[k], 30));
              j["eta"].push_back(to_string(smp.point.eta[k], 30));
            }
            emit_line(j);
          }
        }
        out.add(report_flow(i, cfg));
      }
    } else if (*all) {
      run_tasks(all_checks(cfg), jobs, out);
    }
  } catch (const std::invalid_argument& e) {
    return usage_error(app.get_subcommands().front()->get_name(), e.what());
  } catch (const DomainError& e) {
    return usage_error(app.get_subcommands().front()->get_name(), e.what());
  }
  return out.code();
}
