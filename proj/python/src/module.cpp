#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "garnier/algebra/errors.hpp"
#include "garnier/report.hpp"
#include "garnier/tau.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace garnier;

namespace {

using S3 = std::array<std::string, 3>;

RunConfig make_config(std::uint64_t seed, unsigned digits, unsigned trials, const S3& s, const std::string& branch) {
  RunConfig cfg;
  cfg.seed = seed;
  cfg.digits = digits;
  cfg.trials = trials;
  cfg.s = {parse_scalar(s[0]), parse_scalar(s[1]), parse_scalar(s[2])};
  cfg.branch = Branch::parse(branch);
  return cfg;
}

std::string dump(const VerificationReport& r) { return to_json(r).dump(); }

std::vector<std::string> dump(const std::vector<VerificationReport>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs) out.push_back(dump(r));
  return out;
}

const S3 kOnes{"1", "1", "1"};

}  // namespace

PYBIND11_MODULE(_garnier, m) {
  m.doc() = "Exact and numeric verification of the irregular Garnier system (JSON report strings).";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("hamiltonian", [](int i) { return hamiltonian(i).to_string(); }, "H_{t_i} as text", "i"_a);

  m.def(
      "check_compatibility",
      [](int i, int j, const std::string& mode, unsigned trials, std::uint64_t seed) {
        RunConfig cfg = make_config(seed, 50, trials, kOnes, "+++");
        cfg.mode = mode == "full" ? CheckMode::Full : CheckMode::Pit;
        return dump(report_compatibility(i, j, cfg));
      },
      "i"_a, "j"_a, "mode"_a = "pit", "trials"_a = 20, "seed"_a = 42, py::call_guard<py::gil_scoped_release>());

  m.def("verify_sigma_system", [] { return dump(report_sigma_system()); }, py::call_guard<py::gil_scoped_release>());

  m.def(
      "verify_eta",
      [](const S3& s, unsigned digits, const std::string& branch, std::uint64_t seed, unsigned random_points) {
        RunConfig cfg = make_config(seed, digits, 20, s, branch);
        cfg.random_points = random_points;
        return dump(report_eta(cfg));
      },
      "s"_a = kOnes, "digits"_a = 50, "branch"_a = "+++", "seed"_a = 42, "random_points"_a = 5,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "derive_hamiltonian",
      [](int i, unsigned trials, std::uint64_t seed) { return dump(report_derive(i, make_config(seed, 50, trials, kOnes, "+++"))); },
      "i"_a, "trials"_a = 20, "seed"_a = 42, py::call_guard<py::gil_scoped_release>());

  m.def(
      "check_apparent",
      [](std::uint64_t seed, unsigned points) {
        RunConfig cfg = make_config(seed, 50, 20, kOnes, "+++");
        cfg.random_points = points;
        return dump(report_apparent(cfg));
      },
      "seed"_a = 42, "points"_a = 5, py::call_guard<py::gil_scoped_release>());

  m.def(
      "verify_pullback",
      [](const S3& s, const std::string& branch) { return dump(report_pullback(make_config(42, 50, 20, s, branch))); },
      "s"_a = kOnes, "branch"_a = "+++", py::call_guard<py::gil_scoped_release>());

  m.def(
      "tau", [](const std::string& branch) { return dump(report_tau(make_config(42, 50, 20, kOnes, branch))); },
      "branch"_a = "+++", py::call_guard<py::gil_scoped_release>());

  m.def(
      "tau_exponent",
      [](const S3& s, unsigned digits) {
        DigitsScope d(digits);
        return to_string(tau_exponent({parse_scalar(s[0]), parse_scalar(s[1]), parse_scalar(s[2])}), digits);
      },
      "F(s) with tau = c exp(F)", "s"_a, "digits"_a = 50);

  m.def(
      "flow",
      [](int direction, const S3& s, const std::string& branch, const std::string& delta, const std::string& tol, unsigned digits) {
        RunConfig cfg = make_config(42, digits, 20, s, branch);
        cfg.delta = delta;
        cfg.tol = tol;
        return dump(report_flow(direction, cfg));
      },
      "direction"_a, "s"_a = kOnes, "branch"_a = "+++", "delta"_a = "0.1", "tol"_a = "1e-18", "digits"_a = 50,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "kernel_properties", [](std::uint64_t seed) { return dump(report_properties(make_config(seed, 50, 20, kOnes, "+++"))); },
      "seed"_a = 42, py::call_guard<py::gil_scoped_release>());
}
