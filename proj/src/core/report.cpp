#include "garnier/report.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "garnier/algebra/errors.hpp"
#include "garnier/algebra/properties.hpp"
#include "garnier/connection.hpp"
#include "garnier/flow.hpp"
#include "garnier/pullback.hpp"
#include "garnier/tau.hpp"

namespace garnier {

std::string to_string(ReportMode m) {
  switch (m) {
    case ReportMode::Exact: return "exact";
    case ReportMode::Pit: return "pit";
    case ReportMode::Numeric: return "numeric";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

void VerificationReport::validate() const {
  if (verdict == Verdict::Fail && !witness) throw std::logic_error(check + ": failing report without witness");
  if (mode == ReportMode::Pit && verdict != Verdict::Skipped && !failure_bound)
    throw std::logic_error(check + ": pit report without failure bound");
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["anchor"] = r.anchor;
  j["mode"] = to_string(r.mode);
  j["verdict"] = to_string(r.verdict);
  if (r.witness) j["witness"] = *r.witness;
  j["seconds"] = r.seconds;
  if (r.digits) j["digits"] = *r.digits;
  if (r.trials) j["trials"] = *r.trials;
  if (r.failure_bound) j["failure_bound"] = *r.failure_bound;
  if (r.seed) j["seed"] = *r.seed;
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

STriple parse_s(const std::string& text) {
  STriple s;
  std::stringstream in(text);
  std::string item;
  int k = 0;
  while (std::getline(in, item, ',')) {
    if (k == 3) throw std::invalid_argument("--s expects three comma-separated values");
    s[std::size_t(k++)] = parse_scalar(item);
  }
  if (k != 3) throw std::invalid_argument("--s expects three comma-separated values");
  return s;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string s_text(const STriple& s) { return s[0].get_str() + "," + s[1].get_str() + "," + s[2].get_str(); }

Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

std::string real_text(const Real& x) { return to_string(x, 6); }

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  Scalar nonzero() {
    for (;;) {
      Scalar q(std::uniform_int_distribution<long>(-9, 9)(rng_), std::uniform_int_distribution<long>(1, 5)(rng_));
      q.canonicalize();
      if (q != 0) return q;
    }
  }

 private:
  std::mt19937_64 rng_;
};

// Random exact s whose locus point exists (distinct roots away from 0 and 1).
std::vector<STriple> random_s(std::uint64_t seed, unsigned n) {
  Sampler g(seed);
  std::vector<STriple> out;
  DigitsScope d(30);
  while (out.size() < n) {
    STriple s{g.nonzero(), g.nonzero(), g.nonzero()};
    try {
      (void)locus_point(s);
      out.push_back(s);
    } catch (const DomainError&) {
    }
  }
  return out;
}

ConnectionParams random_params(Sampler& g) {
  for (;;) {
    std::array<Scalar, 3> t{g.nonzero(), g.nonzero(), g.nonzero()}, q{g.nonzero(), g.nonzero(), g.nonzero()},
        p{g.nonzero(), g.nonzero(), g.nonzero()};
    try {
      return ConnectionParams::exact(t, q, p);
    } catch (const DomainError&) {
    }
  }
}

}  // namespace

VerificationReport report_hamiltonian(int i) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.check = "hamiltonian." + std::to_string(i);
  r.anchor = "Hamiltonians of the irregular Garnier system";
  r.mode = ReportMode::Exact;
  const Hamiltonian h = build_hamiltonian(i);
  r.verdict = Verdict::Pass;
  r.details["expression"] = h.expr.to_string();
  r.seconds = since(t0);
  return r;
}

VerificationReport report_compatibility(int i, int j, const RunConfig& cfg) {
  VerificationReport r;
  r.check = "compatibility." + std::to_string(i) + std::to_string(j);
  r.anchor = "compatibility of the Hamiltonian flows";
  PitOptions opt;
  opt.trials = cfg.trials;
  opt.seed = cfg.seed;
  const CompatibilityReport c = check_compatibility(i, j, cfg.mode, opt);
  r.verdict = verdict_of(c.zero);
  r.seconds = c.seconds;
  r.details["form"] = "dH_i/dt_j - dH_j/dt_i + {H_i, H_j}";
  if (c.mode == CheckMode::Pit) {
    r.mode = ReportMode::Pit;
    r.seed = cfg.seed;
    r.trials = c.pit->trials;
    r.failure_bound = c.pit->failure_bound;
    r.details["log10_failure_bound"] = c.pit->log10_failure_bound;
    if (c.pit->witness) {
      std::string w;
      for (const auto& v : *c.pit->witness) w += (w.empty() ? "" : ",") + v.get_str();
      r.witness = "point (" + w + ") value " + c.pit->witness_value.value_or(Scalar(0)).get_str();
    }
  } else {
    r.mode = ReportMode::Exact;
    if (c.residual) r.witness = c.residual->to_string();
  }
  return r;
}

VerificationReport report_sigma_system() {
  VerificationReport r;
  r.check = "sigma-system";
  r.anchor = "reduced system for the elementary symmetric functions";
  r.mode = ReportMode::Exact;
  const SigmaSystemReport s = verify_sigma_system();
  r.verdict = verdict_of(s.all_zero);
  r.seconds = s.seconds;
  r.details["equations"] = s.equations.size();
  for (const auto& e : s.equations)
    if (!e.zero && !r.witness)
      r.witness = "d sigma_" + std::to_string(e.k) + "/dt_" + std::to_string(e.i) + ": " + (e.lhs - e.rhs).to_string();
  return r;
}

std::vector<VerificationReport> report_eta(const RunConfig& cfg) {
  std::vector<STriple> points{cfg.s};
  for (const auto& s : random_s(cfg.seed, cfg.random_points)) points.push_back(s);
  std::vector<VerificationReport> out;
  for (std::size_t k = 0; k < points.size(); ++k) {
    VerificationReport r;
    r.check = "eta-equations." + std::to_string(k);
    r.anchor = "eta-equations along the algebraic solution";
    r.mode = ReportMode::Numeric;
    r.digits = cfg.digits;
    r.seed = cfg.seed;
    r.details["s"] = s_text(points[k]);
    r.details["branch"] = cfg.branch.to_string();
    try {
      const EtaReport e = verify_eta_equations_numeric(points[k], cfg.digits, cfg.branch);
      r.verdict = verdict_of(e.pass);
      r.seconds = e.seconds;
      r.details["max_residual"] = real_text(e.max_residual);
      r.details["threshold"] = real_text(e.threshold);
      if (!e.pass) r.witness = "s=(" + s_text(points[k]) + ") max residual " + real_text(e.max_residual);
    } catch (const DomainError& ex) {
      r.verdict = Verdict::Skipped;
      r.witness = ex.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

VerificationReport report_derive(int i, const RunConfig& cfg) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.check = "derive-hamiltonian." + std::to_string(i);
  r.anchor = "Hamiltonians from the local formal data";
  r.mode = ReportMode::Pit;
  r.seed = cfg.seed;
  PitOptions opt;
  opt.trials = cfg.trials;
  opt.seed = cfg.seed;
  const DerivedHamiltonian d = derive_hamiltonian_from_connection(i, opt);
  r.trials = d.pit->trials;
  r.failure_bound = d.pit->failure_bound;
  r.details["log10_failure_bound"] = d.pit->log10_failure_bound;
  r.details["exact_equal"] = d.exact_equal;
  r.verdict = verdict_of(d.pit->zero && d.exact_equal);
  if (!r.pass()) r.witness = "derived - built = " + (d.derived - hamiltonian(i)).to_string();
  r.seconds = since(t0);
  return r;
}

std::vector<VerificationReport> report_apparent(const RunConfig& cfg) {
  Sampler g(cfg.seed);
  std::vector<VerificationReport> out;
  const unsigned n = std::max(1u, cfg.random_points);
  for (unsigned k = 0; k < n; ++k) {
    const auto t0 = Clock::now();
    const ConnectionParams prm = random_params(g);
    const ConnectionMatrix c = build_connection(prm);
    const ConnectionMatrix broken = build_connection(prm, {1, 0, 0});
    VerificationReport r;
    r.check = "apparent." + std::to_string(k);
    r.anchor = "apparent singularities of the linear equation";
    r.mode = ReportMode::Exact;
    r.seed = cfg.seed;
    std::string params;
    for (int j = 0; j < 3; ++j)
      params += (j ? ";" : "") + prm.t[j].to_string() + "," + prm.q[j].to_string() + "," + prm.p[j].to_string();
    r.details["params_t_q_p"] = params;
    bool ok = true;
    nlohmann::ordered_json per = nlohmann::ordered_json::array();
    for (int j = 0; j < 3; ++j) {
      const bool a = check_apparent(c, prm, j).apparent();
      per.push_back(a);
      if (!a && ok) r.witness = "q" + std::to_string(j + 1) + " not apparent at " + params;
      ok = ok && a;
    }
    r.details["apparent"] = per;
    const bool perturbed = check_apparent(broken, prm, 0).apparent();
    r.details["perturbed_q1_apparent"] = perturbed;
    if (perturbed && ok) r.witness = "perturbing Ctilde_q1 by 1 keeps q1 apparent at " + params;
    ok = ok && !perturbed;
    r.verdict = verdict_of(ok);
    r.seconds = since(t0);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> report_pullback(const RunConfig& cfg) {
  std::vector<VerificationReport> out;
  auto fill = [&](VerificationReport& r, const PullbackReport& p) {
    r.verdict = verdict_of(p.family_zero);
    r.seconds = p.seconds;
    r.details["branch"] = p.branch.to_string();
    r.details["display_literal_zero"] = p.display_literal_zero;
    r.details["display_rescaled_by_s2_zero"] = p.display_rescaled_zero;
    r.details["gauge_log_derivative"] = p.gauge_log_derivative.to_string();
    if (!p.family_zero) r.witness = p.witness.value_or("nonzero invariant difference");
  };
  {
    VerificationReport r;
    r.check = "pullback.exact";
    r.anchor = "ramified-cover pull-back of a fixed equation";
    r.mode = ReportMode::Exact;
    r.details["s"] = s_text(cfg.s);
    try {
      fill(r, verify_pullback_exact(cfg.s, cfg.branch));
    } catch (const DomainError& e) {
      r.verdict = Verdict::Skipped;
      r.witness = e.what();
    }
    out.push_back(std::move(r));
  }
  {
    VerificationReport r;
    r.check = "pullback.symbolic";
    r.anchor = "ramified-cover pull-back of a fixed equation";
    r.mode = ReportMode::Exact;
    fill(r, verify_pullback_symbolic(cfg.branch));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> report_tau(const RunConfig& cfg) {
  const TauReport t = verify_tau(cfg.branch, true);
  const OneFormS disp = displayed_varpi();
  const LogRatFunc F = potential_F();
  auto base = [&](const std::string& id) {
    VerificationReport r;
    r.check = "tau." + id;
    r.anchor = "tau-function of the algebraic solution";
    r.mode = ReportMode::Exact;
    r.seconds = t.seconds;
    r.details["branch"] = t.branch.to_string();
    return r;
  };
  auto all = [](const std::array<bool, 3>& a) { return a[0] && a[1] && a[2]; };
  std::vector<VerificationReport> out;

  VerificationReport coeff = base("varpi-coefficients");
  coeff.verdict = verdict_of(all(t.matches_display));
  coeff.details["matches_display"] = t.matches_display;
  coeff.details["matches_negated_display"] = t.matches_negated_display;
  for (int i = 0; i < 3; ++i)
    if (!t.matches_display[i] && !coeff.witness)
      coeff.witness = "A_" + std::to_string(i) + " = " + t.varpi.a[i].to_string() + " but closed form is " + disp.a[i].to_string();
  out.push_back(std::move(coeff));

  VerificationReport closed = base("closed");
  closed.verdict = verdict_of(t.closed);
  if (!t.closed) closed.witness = "d varpi != 0";
  out.push_back(std::move(closed));

  VerificationReport pot = base("potential");
  pot.verdict = verdict_of(all(t.exact) && t.F_symmetric);
  pot.details["F"] = F.to_string();
  pot.details["varpi_equals_dF"] = t.exact;
  pot.details["varpi_equals_minus_dF"] = t.exact_negated;
  pot.details["F_symmetric"] = t.F_symmetric;
  for (int i = 0; i < 3; ++i)
    if (!t.exact[i] && !pot.witness)
      pot.witness = "A_" + std::to_string(i) + " - dF/ds_" + std::to_string(i) + " = " +
                    (t.varpi.a[i] - F.diff(std::size_t(i))).to_string();
  if (!t.F_symmetric && !pot.witness) pot.witness = "F not symmetric";
  out.push_back(std::move(pot));

  VerificationReport br = base("brackets");
  br.verdict = verdict_of(all(t.bracket_zero));
  br.details["bracket_zero_01_02_12"] = t.bracket_zero;
  if (!br.pass()) br.witness = "a restricted bracket is nonzero";
  out.push_back(std::move(br));
  return out;
}

VerificationReport report_flow(int i, const RunConfig& cfg) {
  DigitsScope d(cfg.digits);
  VerificationReport r;
  r.check = "flow." + std::to_string(i);
  r.anchor = "Garnier flow along the algebraic solution";
  r.mode = ReportMode::Numeric;
  r.digits = cfg.digits;
  r.details["s"] = s_text(cfg.s);
  r.details["branch"] = cfg.branch.to_string();
  r.details["delta"] = cfg.delta;
  r.details["tol"] = cfg.tol;
  try {
    const FlowReport f = flow_preserves_locus(i, cfg.s, cfg.branch, Complex(Real(cfg.delta)), Real(cfg.tol));
    r.verdict = verdict_of(f.pass);
    r.seconds = f.seconds;
    r.details["accepted"] = f.trajectory.accepted;
    r.details["rejected"] = f.trajectory.rejected;
    r.details["initial_residual"] = real_text(f.initial_residual);
    r.details["max_residual"] = real_text(f.max_residual);
    r.details["threshold"] = real_text(f.threshold);
    if (f.trajectory.aborted) r.details["abort_reason"] = f.trajectory.abort_reason;
    if (!f.pass) {
      const auto& last = f.trajectory.samples.back();
      r.witness = (f.trajectory.aborted ? f.trajectory.abort_reason + " at t_i = " : "max residual " + real_text(f.max_residual) + " near t_i = ") +
                  to_string(last.ti, 20);
    }
  } catch (const DomainError& e) {
    r.verdict = Verdict::Skipped;
    r.witness = e.what();
  }
  return r;
}

VerificationReport report_properties(const RunConfig& cfg) {
  VerificationReport r;
  r.check = "kernel-properties";
  r.anchor = "exact arithmetic kernel";
  r.mode = ReportMode::Exact;
  r.seed = cfg.seed;
  const PropertyReport p = run_kernel_properties(cfg.seed);
  r.verdict = verdict_of(p.pass());
  r.seconds = p.seconds;
  r.details["cases"] = p.cases();
  r.details["failures"] = p.failures();
  for (const auto& prop : p.properties) {
    r.details["properties"][prop.name] = prop.failures == 0 ? "pass" : "fail";
    if (prop.witness && !r.witness) r.witness = prop.name + ": " + *prop.witness;
  }
  return r;
}

std::vector<CheckTask> all_checks(const RunConfig& cfg) {
  auto one = [](VerificationReport r) { return std::vector<VerificationReport>{std::move(r)}; };
  std::vector<CheckTask> tasks;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
    tasks.push_back({"compatibility", false, [=] { return one(report_compatibility(i, j, cfg)); }});
  tasks.push_back({"sigma-system", false, [=] { return one(report_sigma_system()); }});
  tasks.push_back({"eta-equations", true, [=] { return report_eta(cfg); }});
  for (int i = 0; i < 3; ++i) tasks.push_back({"derive-hamiltonian", false, [=] { return one(report_derive(i, cfg)); }});
  tasks.push_back({"apparent", false, [=] { return report_apparent(cfg); }});
  tasks.push_back({"pullback", false, [=] { return report_pullback(cfg); }});
  tasks.push_back({"tau", false, [=] { return report_tau(cfg); }});
  for (int i = 0; i < 3; ++i)
    if (!cfg.direction || *cfg.direction == i) tasks.push_back({"flow", true, [=] { return one(report_flow(i, cfg)); }});
  tasks.push_back({"kernel-properties", false, [=] { return one(report_properties(cfg)); }});
  return tasks;
}

}  // namespace garnier
