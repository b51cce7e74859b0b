#include "xitail/cli.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "xitail/equilibrium.hpp"
#include "xitail/errors.hpp"
#include "xitail/gram.hpp"
#include "xitail/gram_sums.hpp"
#include "xitail/scaled_integral.hpp"
#include "xitail/specfun.hpp"

namespace xitail::cli {

namespace {

// 15 significant digits, C locale, no trailing locale surprises.
std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

// Rows buffered as ordered JSON objects; CSV prints them in field order,
// JSON mirrors the fields 1:1.
class Emitter {
 public:
  Emitter(std::ostream& out, bool json) : out_(out), json_(json) {}

  void row(const nlohmann::ordered_json& r) { rows_.push_back(r); }

  void flush() {
    if (json_) {
      out_ << nlohmann::ordered_json(rows_).dump(2) << "\n";
      return;
    }
    if (rows_.empty()) return;
    bool first = true;
    for (const auto& [key, value] : rows_.front().items()) {
      out_ << (first ? "" : ",") << key;
      first = false;
      (void)value;
    }
    out_ << "\n";
    for (const auto& r : rows_) {
      first = true;
      for (const auto& [key, value] : r.items()) {
        out_ << (first ? "" : ",");
        first = false;
        if (value.is_number_float())
          out_ << num(value.get<double>());
        else if (value.is_string())
          out_ << value.get<std::string>();
        else
          out_ << value.dump();
      }
      out_ << "\n";
    }
  }

 private:
  std::ostream& out_;
  bool json_;
  std::vector<nlohmann::ordered_json> rows_;
};

struct GoldenSet {
  double K;
  double Kprime;
  double C_Z;
};

GoldenSet run_calibration() {
  GoldenSet g{0.0, 0.0, 0.0};
  for (double T : {500.0, 1000.0, 2000.0, 5000.0, 10000.0}) {
    const double scale = std::pow(T, 0.25);
    g.K = std::max(g.K, std::abs(psi_explicit(T) - psi_quad(T, 1e-9).value) *
                            scale);
    g.Kprime = std::max(
        g.Kprime, std::abs(phi1_scaled_explicit(T) -
                           phi1_scaled_quad(T, 1e-9).value) *
                      scale);
  }
  for (double t = 50.0; t < 1.0e6; t *= 1.001)
    g.C_Z = std::max(g.C_Z, std::abs(z(t)) / std::pow(t, 0.25));
  return g;
}

int golden_io(const GoldenSet& g, const std::string& path, std::ostream& out,
              std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    std::ofstream of(path);
    if (!of) {
      err << "golden: cannot write " << path << "\n";
      return 2;
    }
    of << "K=" << num(g.K) << "\nKprime=" << num(g.Kprime)
       << "\nC_Z=" << num(g.C_Z) << "\n";
    out << "golden written: " << path << "\n";
    return 0;
  }
  std::map<std::string, double> want;
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    want[line.substr(0, eq)] = std::strtod(line.c_str() + eq + 1, nullptr);
  }
  const std::map<std::string, double> have{
      {"K", g.K}, {"Kprime", g.Kprime}, {"C_Z", g.C_Z}};
  int rc = 0;
  for (const auto& [key, val] : have) {
    const auto it = want.find(key);
    if (it == want.end()) {
      err << "golden: missing key " << key << "\n";
      rc = 2;
      continue;
    }
    const bool ok =
        std::abs(val - it->second) <= 1e-12 * std::max(1.0, std::abs(val));
    out << key << ": computed=" << num(val) << " golden=" << num(it->second)
        << (ok ? " MATCH" : " MISMATCH") << "\n";
    if (!ok) rc = 2;
  }
  return rc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Riemann Xi tail-integral toolkit"};
  app.require_subcommand(1);

  std::string format = "csv";
  int threads = 1;
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", threads, "worker threads for verify")
      ->check(CLI::Range(1, 256));
  app.fallthrough();

  // theta
  double t_arg = 0.0;
  std::string mode = "exact";
  auto* c_theta = app.add_subcommand("theta", "theta(t) with derivatives");
  c_theta->add_option("--t", t_arg)->required();
  c_theta->add_option("--mode", mode)->check(CLI::IsMember({"exact", "asym"}));

  // z
  std::string z_method = "auto";
  int rs_order = 1;
  auto* c_z = app.add_subcommand("z", "Hardy Z(t)");
  c_z->add_option("--t", t_arg)->required();
  c_z->add_option("--method", z_method)
      ->check(CLI::IsMember({"auto", "em", "rs"}));
  c_z->add_option("--rs-order", rs_order)->check(CLI::Range(0, 1));

  // xi
  auto* c_xi = app.add_subcommand("xi", "scaled Xi(t)");
  c_xi->add_option("--t", t_arg)->required();

  // gram
  std::int64_t nu = -1;
  double T_arg = 0.0;
  double H_arg = 0.0;
  auto* c_gram = app.add_subcommand("gram", "Gram points");
  auto* o_nu = c_gram->add_option("--nu", nu);
  auto* o_T = c_gram->add_option("--T", T_arg);
  auto* o_H = c_gram->add_option("--H", H_arg);
  o_T->needs(o_H);
  o_nu->excludes(o_T);

  // psi
  std::string psi_method = "both";
  double tol = 1e-9;
  bool phi1 = false;
  bool calibrate = false;
  std::int64_t at_gram_nu = -1;
  std::string golden_path;
  auto* c_psi = app.add_subcommand("psi", "scaled tail integral");
  c_psi->add_option("--t,--T", t_arg);
  c_psi->add_option("--method", psi_method)
      ->check(CLI::IsMember({"explicit", "quad", "both"}));
  c_psi->add_option("--tol", tol)->check(CLI::Range(1e-12, 1e-2));
  c_psi->add_flag("--phi1", phi1, "Phi_1 scaled forms instead of Psi");
  c_psi->add_option("--at-gram-nu", at_gram_nu,
                    "Psi at Gram point nu, coefficients frozen at --t");
  c_psi->add_flag("--calibrate", calibrate,
                  "compute the K / Kprime / C_Z calibration constants");
  c_psi->add_option("--golden", golden_path,
                    "write or compare the calibration file");

  // omega
  double start = 0.0;
  int count = 0;
  bool validate = false;
  auto* c_omega = app.add_subcommand("omega", "equilibrium points");
  c_omega->add_option("--start", start)->required();
  c_omega->add_option("--count", count)->required()->check(CLI::Range(1, 10000));
  c_omega->add_flag("--validate", validate);

  // verify
  double epsilon = 0.1;
  bool no_validate = false;
  double zeros_a = 0.0;
  double zeros_b = 0.0;
  auto* c_verify = app.add_subcommand("verify", "per-interval reports");
  c_verify->add_option("--start", start);
  c_verify->add_option("--count", count)->check(CLI::Range(1, 10000));
  c_verify->add_option("--epsilon", epsilon)->check(CLI::Range(0.05, 0.5));
  c_verify->add_flag("--no-validate", no_validate);
  auto* o_za = c_verify->add_option("--zeros-a", zeros_a,
                                    "list Z sign changes in (a,b) instead");
  auto* o_zb = c_verify->add_option("--zeros-b", zeros_b);
  o_za->needs(o_zb);

  // sums
  bool coefs_only = false;
  auto* c_sums = app.add_subcommand("sums", "Gram-point Psi sums");
  c_sums->add_option("--T", T_arg)->required();
  c_sums->add_option("--H", H_arg);
  c_sums->add_flag("--coefs", coefs_only, "emit the coefficient arrays");

  // asym
  auto* c_asym = app.add_subcommand("asym", "parity sums vs predictions");
  c_asym->add_option("--T", T_arg)->required();
  c_asym->add_option("--epsilon", epsilon)->check(CLI::Range(0.05, 0.5));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Emitter em(out, format == "json");
  try {
    if (*c_theta) {
      const ThetaJet j = theta_jet(
          t_arg, mode == "exact" ? ThetaMode::Exact : ThetaMode::Asymptotic);
      em.row({{"t", j.t},
              {"mode", mode},
              {"theta", j.theta},
              {"dtheta", j.dtheta},
              {"d2theta", j.d2theta}});
    } else if (*c_z) {
      double v = 0.0;
      std::string used = z_method;
      if (z_method == "em")
        v = z_em(t_arg);
      else if (z_method == "rs")
        v = z_rs(t_arg, rs_order);
      else
        v = z(t_arg);
      em.row({{"t", t_arg}, {"method", used}, {"value", v}});
    } else if (*c_xi) {
      const ScaledValue x = xi_scaled(t_arg);
      em.row({{"t", t_arg}, {"sign", x.sign}, {"log_mag", x.log_mag}});
    } else if (*c_gram) {
      if (o_nu->count()) {
        const GramPoint g = gram_point(nu);
        em.row({{"nu", g.nu}, {"t", g.t}, {"residual", g.residual}});
      } else if (o_T->count()) {
        for (const GramPoint& g : gram_points_in(T_arg, H_arg))
          em.row({{"nu", g.nu}, {"t", g.t}, {"residual", g.residual}});
      } else {
        err << "error: gram needs --nu or --T/--H\n";
        return 2;
      }
    } else if (*c_psi) {
      if (calibrate) {
        const GoldenSet g = run_calibration();
        em.row({{"name", "K"}, {"value", g.K}});
        em.row({{"name", "Kprime"}, {"value", g.Kprime}});
        em.row({{"name", "C_Z"}, {"value", g.C_Z}});
        em.flush();
        return golden_path.empty() ? 0 : golden_io(g, golden_path, out, err);
      } else if (at_gram_nu >= 0) {
        const GramPoint gp = gram_point(at_gram_nu);
        em.row({{"T", t_arg},
                {"nu", gp.nu},
                {"t_nu", gp.t},
                {"value", psi_at_gram(gp, t_arg)}});
      } else {
        nlohmann::ordered_json r{{"T", t_arg},
                                 {"kind", phi1 ? "phi1" : "psi"}};
        std::optional<double> ev;
        std::optional<QuadResult> qv;
        if (psi_method != "quad")
          ev = phi1 ? phi1_scaled_explicit(t_arg) : psi_explicit(t_arg);
        if (psi_method != "explicit")
          qv = phi1 ? phi1_scaled_quad(t_arg, tol) : psi_quad(t_arg, tol);
        r["explicit"] = ev ? nlohmann::ordered_json(*ev)
                           : nlohmann::ordered_json("");
        r["quad"] = qv ? nlohmann::ordered_json(qv->value)
                       : nlohmann::ordered_json("");
        r["diff"] = (ev && qv)
                        ? nlohmann::ordered_json(std::abs(*ev - qv->value))
                        : nlohmann::ordered_json("");
        r["err_est"] = qv ? nlohmann::ordered_json(qv->err_est)
                          : nlohmann::ordered_json("");
        r["tail_bound"] = qv ? nlohmann::ordered_json(qv->tail_bound)
                             : nlohmann::ordered_json("");
        r["evals"] = qv ? nlohmann::ordered_json(qv->evals)
                        : nlohmann::ordered_json("");
        em.row(r);
      }
    } else if (*c_omega) {
      for (const EquilibriumPoint& p : find_omegas(start, count, validate))
        em.row({{"n", p.n},
                {"omega", p.omega},
                {"bracket_lo", p.bracket_lo},
                {"bracket_hi", p.bracket_hi},
                {"psi_residual", p.psi_residual}});
    } else if (*c_verify) {
      if (o_za->count()) {
        for (double c : z_sign_changes(zeros_a, zeros_b))
          em.row({{"zero", c}});
      } else {
        if (count < 2) {
          err << "error: verify needs --count >= 2\n";
          return 2;
        }
        const auto omegas = find_omegas(start, count, !no_validate);
        std::vector<IntervalReport> reports(omegas.size() - 1);
        const int nthreads = std::max(1, threads);
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int w = 0; w < nthreads; ++w)
          pool.emplace_back([&] {
            for (std::size_t i = next++; i < reports.size(); i = next++)
              reports[i] = interval_report(omegas[i], omegas[i + 1], epsilon);
          });
        for (auto& th : pool) th.join();
        for (const IntervalReport& r : reports)
          em.row({{"n", r.n},
                  {"omega_lo", r.omega_lo},
                  {"omega_hi", r.omega_hi},
                  {"gap", r.gap},
                  {"gap_ratio", r.gap_ratio},
                  {"pos_area", r.pos_area},
                  {"neg_area", r.neg_area},
                  {"cancellation", r.cancellation},
                  {"zero_count", r.zeros.size()}});
      }
    } else if (*c_sums) {
      if (coefs_only) {
        const Coefs c = coefficients(T_arg);
        for (std::size_t i = 0; i < c.a.size(); ++i)
          em.row({{"n", i + 2}, {"a_n", c.a[i]}, {"b_n", c.b[i]}});
      } else {
        const SumReport s = gram_sum_psi(T_arg, H_arg);
        const WSums w = w_sums(T_arg, H_arg);
        em.row({{"T", s.T},
                {"H", s.H},
                {"count", s.count},
                {"sum_plain", s.sum_plain},
                {"sum_alt", s.sum_alt},
                {"main_term", s.main_term},
                {"w1", w.direct[0]},
                {"w2", w.direct[1]},
                {"w3", w.direct[2]},
                {"w4", w.direct[3]},
                {"w1_abel", w.abel[0]},
                {"w2_abel", w.abel[1]},
                {"w3_abel", w.abel[2]},
                {"w4_abel", w.abel[3]}});
      }
    } else if (*c_asym) {
      const AsymReport a = asymptotic_check(T_arg, epsilon);
      em.row({{"T", a.T},
              {"epsilon", a.epsilon},
              {"Hbar", a.Hbar},
              {"count_even", a.count_even},
              {"count_odd", a.count_odd},
              {"sum_even", a.sum_even},
              {"sum_odd", a.sum_odd},
              {"main_even", a.main_even},
              {"main_odd", a.main_odd},
              {"ratio_even", std::abs(a.sum_even / a.main_even)},
              {"ratio_odd", std::abs(a.sum_odd / a.main_odd)}});
    }
  } catch (const ScanExhausted& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ToleranceNotMet& e) {
    err << "error: " << e.what() << " (best=" << num(e.best_value)
        << ", achieved=" << num(e.achieved_err) << ")\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  em.flush();
  return 0;
}

}  // namespace xitail::cli
