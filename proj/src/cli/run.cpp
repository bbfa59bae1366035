#include "nadyn/cli/run.hpp"

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "nadyn/arboreal/degrees.hpp"
#include "nadyn/arboreal/kummer.hpp"
#include "nadyn/arboreal/transport.hpp"
#include "nadyn/boettcher/boettcher.hpp"
#include "nadyn/boettcher/budget.hpp"
#include "nadyn/cli/serialize.hpp"
#include "nadyn/errors.hpp"
#include "nadyn/newton/polygon.hpp"

namespace nadyn::cli {

namespace {

using localfield::ExactQp;
using localfield::MonicPoly;
using localfield::Padic;
using localfield::PrimeContext;
using localfield::Valuation;
using localfield::rational_string;

class Checks {
 public:
  void order(const std::string& name, int value, int required) {
    push(name, value >= required, "agreement_order", value, required);
  }
  void residual(const std::string& name, const Valuation& value, const mpq_class& required) {
    push(name, value.certainly_ge(required), "residual_valuation", value.to_string(), rational_string(required));
  }
  void flag(const std::string& name, bool ok) { push(name, ok, "boolean", ok, true); }

  bool all_passed() const { return all_; }
  const json& list() const { return list_; }

 private:
  void push(const std::string& name, bool ok, const char* kind, json value, json required) {
    list_.push_back({{"name", name}, {"passed", ok}, {"kind", kind}, {"value", std::move(value)},
                     {"required", std::move(required)}});
    all_ = all_ && ok;
  }

  json list_ = json::array();
  bool all_ = true;
};

std::vector<mpq_class> rationals(const std::vector<std::string>& text) {
  std::vector<mpq_class> out;
  for (const auto& t : text) out.push_back(localfield::parse_rational(t));
  return out;
}

template <class F>
MonicPoly<F> monic(const JobSpec& job, const PrimeContext& ctx) {
  return MonicPoly<F>::from_rationals(ctx, rationals(job.poly));
}

mpq_class as_rational(const ExactQp& x) { return x.value(); }
mpq_class as_rational(const Padic& x) { return x.lift(); }

// Omega as a series in z^-1.
template <class F>
std::string latex_series(const series::TailSeries<F>& s, const std::string& lhs) {
  std::ostringstream out;
  out << lhs << " = ";
  bool first = true;
  for (int k = s.ord(); k < s.trunc(); ++k) {
    mpq_class c = as_rational(s.coeff(k));
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (!first || negative) out << (negative ? (first ? "-" : " - ") : " + ");
    first = false;
    if (c != 1) {
      if (c.get_den() == 1) {
        out << c.get_num().get_str() << " ";
      } else {
        out << "\\frac{" << c.get_num().get_str() << "}{" << c.get_den().get_str() << "} ";
      }
    }
    out << "z^{-" << k << "}";
  }
  if (first) out << "0";
  out << " + O(z^{-" << s.trunc() << "})";
  return out.str();
}

template <class F>
bool integral(const series::TailSeries<F>& s) {
  for (int k = s.ord(); k < s.trunc(); ++k) {
    if (!s.coeff(k).valuation().certainly_ge(0)) return false;
  }
  return true;
}

template <class F>
void integrality_checks(const boettcher::BoettcherData<F>& b, Checks& checks) {
  if (b.good_reduction) {
    checks.flag("omega_integral", integral(b.omega));
    checks.flag("omega_inverse_integral", integral(b.omega_inverse));
  } else {
    const mpq_class radius = -b.cf_valuation;
    checks.flag("omega_rescaled_integral", boettcher::rescaled_min_valuation(b.omega, radius).certainly_ge(0));
    checks.flag("omega_inverse_rescaled_integral",
                boettcher::rescaled_min_valuation(b.omega_inverse, radius).certainly_ge(0));
  }
}

template <class F>
void run_cf(const JobSpec& job, const PrimeContext& ctx, json& doc, Checks& checks) {
  const auto f = monic<F>(job, ctx);
  const mpq_class cf = boettcher::cf_constant(f);
  doc["cf_valuation"] = rational_string(cf);
  doc["good_reduction"] = boettcher::good_reduction(f);
  doc["degree"] = f.degree();
  checks.flag("cf_sup_check", boettcher::cf_sup_check(f, cf));
}

template <class F>
void run_boettcher(const JobSpec& job, const PrimeContext& ctx, const Budget& budget, json& doc, Checks& checks) {
  const auto f = monic<F>(job, ctx);
  const auto b = boettcher::boettcher_series(f, job.order, budget);
  doc["cf_valuation"] = rational_string(b.cf_valuation);
  doc["good_reduction"] = b.good_reduction;
  doc["omega"] = series_json(b.omega);
  doc["omega_inverse"] = series_json(b.omega_inverse);
  doc["verified_order"] = b.verified_order;
  doc["domain"] = {{"center", "infinity"}, {"radius_valuation", rational_string(b.domain.radius_exponent)}};
  checks.order("functional_equation", b.verified_order, job.order);
  checks.order("inverse", boettcher::inverse_check(b.omega, b.omega_inverse), job.order);
  integrality_checks(b, checks);
  if (job.emit_latex) {
    doc["latex"] = {{"omega", latex_series(b.omega, "\\Omega(z)")},
                    {"omega_inverse", latex_series(b.omega_inverse, "\\Omega^{-1}(z)")}};
  }
}

// A point of valuation floor(v(C_f)) - 1 - extra, strictly inside D(inf; 1/C_f).
mpq_class sample_point(std::mt19937_64& rng, long p, const mpq_class& cf, int extra) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), cf.get_num_mpz_t(), cf.get_den_mpz_t());
  const long k = -(fl.get_si() - 1 - extra);
  std::uniform_int_distribution<long> digit(1, p * p * p);
  long u = digit(rng);
  while (u % p == 0) u = digit(rng);
  mpq_class out(u);
  out /= mpq_class(localfield::prime_power(p, k));
  return out;
}

template <class F>
void run_verify(const JobSpec& job, const PrimeContext& ctx, const Budget& budget, json& doc, Checks& checks) {
  const auto f = monic<F>(job, ctx);
  const int d = f.degree();
  const auto b = boettcher::boettcher_series(f, job.order, budget);
  doc["cf_valuation"] = rational_string(b.cf_valuation);
  doc["good_reduction"] = b.good_reduction;
  doc["verified_order"] = b.verified_order;
  const int inv = boettcher::inverse_check(b.omega, b.omega_inverse);
  doc["inverse_order"] = inv;
  checks.order("functional_equation", b.verified_order, job.order);
  checks.order("inverse", inv, job.order);
  checks.flag("cf_sup_check", boettcher::cf_sup_check(f, b.cf_valuation));
  integrality_checks(b, checks);

  const auto cauchy = boettcher::cauchy_rate_check(f, 2, -1, budget);
  doc["cauchy_orders"] = cauchy;
  long dn = 1;
  for (std::size_t n = 0; n < cauchy.size(); ++n) {
    dn *= d;
    checks.order("cauchy_rate_N" + std::to_string(n + 1), cauchy[n], static_cast<int>(dn));
  }

  std::mt19937_64 rng(job.seed);
  std::vector<F> points;
  for (int s = 0; s < job.samples; ++s) {
    points.push_back(F::from_rational(ctx, sample_point(rng, ctx.prime(), b.cf_valuation, s % 2)));
  }
  const auto values = boettcher::omega_at_batch(b, points);
  json samples = json::array();
  for (std::size_t s = 0; s < points.size(); ++s) {
    const auto lhs = values[s].power(static_cast<unsigned long>(d));
    const auto rhs = boettcher::omega_at(b, f(points[s]));
    const Valuation residual = lhs.residual_against(rhs);
    const mpq_class bound = lhs.joint_error(rhs);
    samples.push_back({{"point", rational_string(as_rational(points[s]))},
                       {"residual", residual.to_string()},
                       {"error_bound", rational_string(bound)}});
    checks.residual("pointwise_equation_" + std::to_string(s), residual, bound);
  }
  doc["samples"] = std::move(samples);
  if (job.emit_latex) doc["latex"] = {{"omega", latex_series(b.omega, "\\Omega(z)")}};
}

template <class F>
void run_polygon(const JobSpec& job, const PrimeContext& ctx, json& doc, Checks& checks) {
  const auto g = localfield::Poly<F>::from_rationals(ctx, rationals(job.poly));
  const auto polygon = newton::build_polygon(g);
  const json pj = polygon_json(polygon);
  for (auto it = pj.begin(); it != pj.end(); ++it) doc[it.key()] = it.value();
  if (!g.coeff(0).is_zero()) {
    mpq_class sum = 0;
    for (const auto& r : newton::root_valuations(polygon)) sum += r;
    const mpq_class want = g.coeff(0).valuation().exact() - g.coeff(g.degree()).valuation().exact();
    checks.flag("endpoint_identity", sum == want);
  }
}

const char* status_name(boettcher::EscapeResult::Status s) {
  switch (s) {
    case boettcher::EscapeResult::Status::escapes: return "escapes";
    case boettcher::EscapeResult::Status::bounded: return "bounded";
    case boettcher::EscapeResult::Status::bounded_so_far: return "bounded_so_far";
  }
  return "?";
}

template <class F>
void run_escape(const JobSpec& job, const PrimeContext& ctx, json& doc) {
  const auto f = monic<F>(job, ctx);
  const F point = F::from_rational(ctx, localfield::parse_rational(*job.point));
  const auto r = boettcher::escape_test(f, point, job.max_iter);
  doc["cf_valuation"] = rational_string(boettcher::cf_constant(f));
  doc["escape_status"] = status_name(r.status);
  doc["iterations"] = r.iterations;
  doc["certified"] = r.status != boettcher::EscapeResult::Status::bounded_so_far;
}

void run_degrees(const JobSpec& job, const PrimeContext& ctx, const Budget& budget, json& doc, Checks& checks) {
  if (job.backend != Backend::exact) throw UsageError("degrees requires the exact backend");
  const auto f = monic<ExactQp>(job, ctx);
  const ExactQp point(ctx, localfield::parse_rational(*job.point));
  const auto b = boettcher::boettcher_series(f, job.order, budget);
  const auto chain = arboreal::degree_chain(b, point, job.levels, budget);
  doc["d"] = chain.d;
  doc["v_q"] = chain.v_q;
  json levels = json::array();
  for (const auto& lvl : chain.levels) {
    levels.push_back({{"n", lvl.n},
                      {"predicted_step", lvl.predicted_step},
                      {"certified_degree", lvl.certified_degree ? json(*lvl.certified_degree) : json(nullptr)}});
  }
  doc["levels"] = std::move(levels);
  doc["consistent"] = chain.consistent();
  checks.flag("chain_consistent", chain.consistent());
}

void run_kummer(const JobSpec& job, const Budget& budget, json& doc, Checks& checks) {
  const arboreal::KummerLevel level(job.d, job.N);
  std::vector<arboreal::KummerElement> gens;
  for (const auto& [i, j] : job.generators) {
    arboreal::KummerElement g{i, j};
    if (!level.is_element(g)) {
      throw UsageError("generator (" + std::to_string(i) + "," + std::to_string(j) + ") is not in the group");
    }
    gens.push_back(g);
  }
  const long sub = arboreal::subgroup_order(gens, level, budget);
  doc["d"] = job.d;
  doc["N"] = job.N;
  doc["modulus"] = level.modulus();
  doc["group_order"] = level.order();
  doc["subgroup_order"] = sub;
  doc["orbits"] = arboreal::subgroup_orbit_count(gens, level);
  checks.flag("subgroup_order_divides_group_order", level.order() % sub == 0);
}

template <class F>
void run_transport(const JobSpec& job, const PrimeContext& ctx, const Budget& budget, json& doc, Checks& checks) {
  const auto f = monic<F>(job, ctx);
  const F point = F::from_rational(ctx, localfield::parse_rational(*job.point));
  const auto b = boettcher::boettcher_series(f, job.order, budget);
  const auto pre = arboreal::eisenstein_preimage(f, point);
  const auto report = arboreal::transport_check(b, pre.preimage, point);
  doc["extension_degree"] = f.degree();
  doc["preimage_valuation"] = pre.preimage.valuation().to_string();
  doc["precision"] = rational_string(report.precision);
  doc["tolerance"] = rational_string(report.tolerance);
  doc["preimage_residual"] = report.preimage_residual.to_string();
  doc["equation_residual"] = report.equation_residual.to_string();
  json conj = json::array();
  for (const auto& r : report.conjugate_residuals) conj.push_back(r.to_string());
  doc["conjugate_residuals"] = std::move(conj);
  doc["passed"] = report.passed;
  checks.residual("omega_equation", report.equation_residual, report.tolerance);
  for (std::size_t k = 0; k < report.conjugate_residuals.size(); ++k) {
    checks.residual("conjugate_" + std::to_string(k), report.conjugate_residuals[k], report.tolerance);
  }
}

template <class F>
void dispatch(const JobSpec& job, const PrimeContext& ctx, const Budget& budget, json& doc, Checks& checks) {
  switch (job.command) {
    case Command::cf: return run_cf<F>(job, ctx, doc, checks);
    case Command::boettcher: return run_boettcher<F>(job, ctx, budget, doc, checks);
    case Command::verify: return run_verify<F>(job, ctx, budget, doc, checks);
    case Command::newton_polygon: return run_polygon<F>(job, ctx, doc, checks);
    case Command::escape: return run_escape<F>(job, ctx, doc);
    case Command::degrees: return run_degrees(job, ctx, budget, doc, checks);
    case Command::transport: return run_transport<F>(job, ctx, budget, doc, checks);
    case Command::kummer: return run_kummer(job, budget, doc, checks);
  }
}

json error_block(const char* kind, const std::exception& e) { return {{"kind", kind}, {"message", e.what()}}; }

}  // namespace

RunResult run(const JobSpec& job) {
  RunResult out;
  json& doc = out.document;
  doc["command"] = command_name(job.command);
  doc["inputs"] = to_json(job);
  Checks checks;
  try {
    const Budget budget = Budget::from_env();
    if (job.command == Command::kummer) {
      run_kummer(job, budget, doc, checks);
    } else {
      const PrimeContext ctx = localfield::make_prime_context(job.prime, job.precision);
      if (job.backend == Backend::exact) {
        dispatch<ExactQp>(job, ctx, budget, doc, checks);
      } else {
        dispatch<Padic>(job, ctx, budget, doc, checks);
      }
    }
    out.status = checks.all_passed() ? kOk : kCheckFailed;
  } catch (const UsageError& e) {
    out.status = kUsage;
    doc["error"] = error_block("usage", e);
  } catch (const DomainError& e) {
    out.status = kDomain;
    doc["error"] = error_block("domain", e);
  } catch (const PrecisionError& e) {
    out.status = kDomain;
    doc["error"] = error_block("precision", e);
  } catch (const BudgetExceeded& e) {
    out.status = kBudget;
    doc["error"] = error_block("budget", e);
  } catch (const CheckFailure& e) {
    out.status = kCheckFailed;
    doc["error"] = error_block("check", e);
  }
  doc["checks"] = checks.list();
  static const char* names[] = {"ok", "", "usage_error", "domain_error", "check_failed", "budget_exceeded"};
  doc["status"] = names[out.status];
  return out;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<JobSpec> job;
  try {
    job = parse_args(argc, argv, out);
  } catch (const UsageError& e) {
    err << "nadyn: " << e.what() << "\n";
    return kUsage;
  }
  if (!job) return kOk;

  const RunResult result = run(*job);
  const std::string text = result.document.dump(2) + "\n";
  if (job->output.empty()) {
    out << text;
  } else {
    std::ofstream file(job->output, std::ios::binary);
    if (!file) {
      err << "nadyn: cannot write " << job->output << "\n";
      return kUsage;
    }
    file << text;
  }

  long passed = 0;
  const auto& checks = result.document["checks"];
  for (const auto& c : checks) passed += c["passed"].get<bool>() ? 1 : 0;
  err << "nadyn " << command_name(job->command) << ": " << result.document["status"].get<std::string>() << " ("
      << passed << "/" << checks.size() << " checks passed)";
  if (result.document.contains("error")) err << ": " << result.document["error"]["message"].get<std::string>();
  err << "\n";
  return result.status;
}

}  // namespace nadyn::cli
