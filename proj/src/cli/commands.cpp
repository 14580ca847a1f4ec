#include "phasekit/cli.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>

#include <CLI11.hpp>

#include "phasekit/csv_io.hpp"
#include "phasekit/error.hpp"
#include "phasekit/pegg_barnett.hpp"
#include "phasekit/phase_analysis.hpp"
#include "phasekit/random.hpp"
#include "phasekit/state_spec.hpp"
#include "phasekit/wigner.hpp"

namespace phasekit::cli {

namespace {

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const DegenerateSuperposition& e) {
    err << "invalid state: " << e.what() << '\n';
    return kParseError;
  } catch (const CutoffTooSmall& e) {
    err << "cutoff: " << e.what() << '\n';
    return kPathUnavailable;
  } catch (const CutoffMismatch& e) {
    err << "cutoff: " << e.what() << '\n';
    return kPathUnavailable;
  } catch (const PathUnavailable& e) {
    err << "path unavailable: " << e.what() << '\n';
    return kPathUnavailable;
  } catch (const CancellationOverflow& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kValidationFailed;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kValidationFailed;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailed;
  }
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void emit(const CsvTable& table, const std::filesystem::path& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << render_csv(table);
  } else {
    write_csv(path, table);
  }
}

std::vector<std::pair<std::string, std::string>> grid_metadata(const PhaseGrid& grid) {
  return {{"theta0", format_double(grid.theta0())}, {"M", std::to_string(grid.count())}};
}

}  // namespace

int cmd_dist(const DistOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const StateSpec spec = parse_state_spec(opts.state);
    const std::string& method = opts.method;
    if (method != "radial" && method != "operator" && method != "pb" && method != "closed-form") {
      throw ParseError("unknown method '" + method + "' (radial|operator|pb|closed-form)");
    }
    const PhaseGrid grid(opts.theta0, opts.grid);
    const int cutoff = opts.cutoff.value_or(minimal_cutoff(spec, opts.eps_tail));
    if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
    const int max_operator = opts.force_method ? INT_MAX : kOperatorPathMaxCutoff;
    if (method == "operator" && cutoff > max_operator) {
      throw PathUnavailable("operator path is validated up to cutoff " +
                            std::to_string(kOperatorPathMaxCutoff) + ", requested " +
                            std::to_string(cutoff) + "; use --method radial");
    }

    CsvTable table;
    table.metadata = {{"state", spec.text}, {"method", method}, {"cutoff", std::to_string(cutoff)}};
    for (auto& kv : grid_metadata(grid)) table.metadata.push_back(std::move(kv));

    PhaseDistribution dist{grid, {}, DistributionKind::closed_form};
    if (method == "closed-form") {
      if (spec.kind != StateSpec::Kind::pair) {
        throw ParseError("closed-form method is only defined for pair:n=... states");
      }
      dist = closed_form_pair_state(spec.n, grid);
    } else {
      const StateVector psi = build_state(spec, cutoff, opts.eps_tail);
      table.metadata.emplace_back("tail_mass", format_double(psi.tail_mass()));
      table.metadata.emplace_back("norm_constant", format_double(psi.norm_constant()));
      if (method == "pb") {
        dist = pb_density(psi, grid);
      } else if (method == "radial") {
        dist = phase_distribution_radial(density_from_pure(psi), grid);
      } else {
        dist = phase_distribution_operator(density_from_pure(psi), grid, max_operator);
      }
    }
    table.metadata.emplace_back("kind", std::string(to_string(dist.kind)));

    const double integral = dist.integral();
    if (!(std::abs(integral - 1.0) <= kNormalizationTolerance)) {
      err << "validation: distribution integrates to " << format_double(integral)
          << " (tolerance " << kNormalizationTolerance << "); nothing written\n";
      return static_cast<int>(kValidationFailed);
    }
    table.columns = {"theta", "value"};
    for (int i = 0; i < grid.count(); ++i) table.rows.push_back({grid.theta(i), dist.values[i]});
    emit(table, opts.out, out);
    return static_cast<int>(kOk);
  });
}

namespace {

int figure1_pair(int n, const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
  constexpr int kCutoff = 20;
  const PhaseGrid grid(kDefaultTheta0, kDefaultGrid);
  const StateVector psi = make_pair_state(n, kCutoff);
  const DensityMatrix rho = density_from_pure(psi);
  const auto radial = phase_distribution_radial(rho, grid);
  const auto op = phase_distribution_operator(rho, grid);
  const auto closed = closed_form_pair_state(n, grid);
  const auto pb = pb_density(psi, grid);
  const auto closed_pb = closed_form_pair_state_pb(n, grid);

  const double radial_err = max_abs_diff(radial.values, closed.values);
  const double op_err = max_abs_diff(op.values, closed.values);
  const double pb_err = max_abs_diff(pb.values, closed_pb.values);
  out << "figure1 pair n=" << n << ": |radial-closed| " << fmt(radial_err) << ", |operator-closed| "
      << fmt(op_err) << ", |pb-closed| " << fmt(pb_err) << '\n';
  if (radial_err > 1e-6 || op_err > 1e-6 || pb_err > 1e-10) {
    err << "validation: figure1 pair n=" << n << " deviates from the closed forms\n";
    return kValidationFailed;
  }

  CsvTable table;
  table.metadata = {{"figure", "1a"},
                    {"state", "pair:n=" + std::to_string(n)},
                    {"method", "radial,operator,pb,closed-form"},
                    {"cutoff", std::to_string(kCutoff)}};
  for (auto& kv : grid_metadata(grid)) table.metadata.push_back(std::move(kv));
  table.columns = {"theta",       "wigner_radial", "wigner_operator", "wigner_closed_form",
                   "pegg_barnett", "pegg_barnett_closed_form"};
  for (int i = 0; i < grid.count(); ++i) {
    table.rows.push_back({grid.theta(i), radial.values[i], op.values[i], closed.values[i],
                          pb.values[i], closed_pb.values[i]});
  }
  write_csv(path, table);
  out << "wrote " << path.string() << '\n';
  return kOk;
}

int figure1_cat(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
  constexpr int kCutoff = 160;
  const std::string spec_text = "cat:alpha=-2,beta=8";
  const PhaseGrid grid(kDefaultTheta0, kDefaultGrid);
  const StateVector psi = build_state(parse_state_spec(spec_text), kCutoff);
  const auto radial = phase_distribution_radial(density_from_pure(psi), grid);
  const auto pb = pb_density(psi, grid);
  const auto neg = negativity_report(radial);
  out << "figure1 cat: integral(P^W) " << format_double(radial.integral()) << ", integral(P_PB) "
      << format_double(pb.integral()) << ", min P^W " << fmt(neg.min_value) << " at theta "
      << fmt(neg.argmin) << ", negative fraction " << fmt(neg.negative_fraction) << '\n';
  if (std::abs(radial.integral() - 1.0) > 1e-5 || std::abs(pb.integral() - 1.0) > 1e-5) {
    err << "validation: figure1 cat distributions are not normalized\n";
    return kValidationFailed;
  }

  CsvTable table;
  table.metadata = {{"figure", "1b"},
                    {"state", spec_text},
                    {"method", "radial,pb"},
                    {"cutoff", std::to_string(kCutoff)},
                    {"norm_constant", format_double(psi.norm_constant())}};
  for (auto& kv : grid_metadata(grid)) table.metadata.push_back(std::move(kv));
  table.columns = {"theta", "wigner_radial", "pegg_barnett"};
  for (int i = 0; i < grid.count(); ++i) {
    table.rows.push_back({grid.theta(i), radial.values[i], pb.values[i]});
  }
  write_csv(path, table);
  out << "wrote " << path.string() << '\n';
  return kOk;
}

}  // namespace

int cmd_figure1(const std::string& variant, const std::filesystem::path& out_dir,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (variant != "a1" && variant != "a2" && variant != "b" && variant != "all") {
      throw ParseError("unknown figure1 variant '" + variant + "' (a1|a2|b|all)");
    }
    std::filesystem::create_directories(out_dir);
    int code = kOk;
    if (variant == "a1" || variant == "all") code = std::max(code, figure1_pair(1, out_dir / "figure1_a1.csv", out, err));
    if (variant == "a2" || variant == "all") code = std::max(code, figure1_pair(2, out_dir / "figure1_a2.csv", out, err));
    if (variant == "b" || variant == "all") code = std::max(code, figure1_cat(out_dir / "figure1_b.csv", out, err));
    return code;
  });
}

namespace {

struct CheckRow {
  std::string name;
  std::string status;  // PASS | FAIL | SKIP
  std::string detail;
};

class CheckTable {
 public:
  void pass_if(const std::string& name, bool ok, const std::string& detail) {
    rows_.push_back({name, ok ? "PASS" : "FAIL", detail});
  }
  void skip(const std::string& name, const std::string& why) { rows_.push_back({name, "SKIP", why}); }
  // Runs `body`; any exception becomes a FAIL row carrying its message.
  void run(const std::string& name, const std::function<void(CheckTable&)>& body) {
    try {
      body(*this);
    } catch (const std::exception& e) {
      rows_.push_back({name, "FAIL", e.what()});
    }
  }
  bool all_pass() const {
    return std::none_of(rows_.begin(), rows_.end(), [](const CheckRow& r) { return r.status == "FAIL"; });
  }
  void print(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& r : rows_) width = std::max(width, r.name.size());
    for (const auto& r : rows_) {
      out << r.status << "  " << r.name << std::string(width - r.name.size() + 2, ' ') << r.detail
          << '\n';
    }
  }

 private:
  std::vector<CheckRow> rows_;
};

}  // namespace

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
    if (!opts.method.empty() && opts.method != "operator" && opts.method != "radial") {
      throw ParseError("check --method accepts radial or operator");
    }
    const int cutoff = opts.cutoff;
    const bool forced = opts.force_method && opts.method == "operator";
    const int op_cutoff = forced ? cutoff : std::min(cutoff, kOperatorPathMaxCutoff);
    const double theta0 = kDefaultTheta0;
    const PhaseGrid grid(theta0, 64);
    std::mt19937_64 rng(20240611);

    struct Named {
      std::string name;
      StateVector psi;
    };
    auto states_at = [&](int n_c) {
      std::vector<Named> states;
      states.push_back({"fock:n=0", make_number_state(0, n_c)});
      if (n_c >= 3) states.push_back({"fock:n=3", make_number_state(3, n_c)});
      if (n_c >= 2) states.push_back({"pair:n=1", make_pair_state(1, n_c)});
      if (n_c >= 4) states.push_back({"pair:n=2", make_pair_state(2, n_c)});
      if (minimal_coherent_cutoff(1.0) <= n_c) states.push_back({"coherent:alpha=1", make_coherent_state(1.0, n_c)});
      if (n_c >= 1) {
        const int support = std::min(5, n_c);
        states.push_back({"random support " + std::to_string(support), random_state(support, n_c, rng)});
      }
      return states;
    };

    CheckTable table;
    out << "phasekit check: cutoff " << cutoff << ", operator-path cutoff " << op_cutoff
        << (forced ? " (forced)" : "") << '\n';

    table.run("radial normalization", [&](CheckTable& t) {
      double worst = 0.0;
      for (const auto& s : states_at(cutoff)) {
        worst = std::max(worst, std::abs(phase_distribution_radial(density_from_pure(s.psi), grid).integral() - 1.0));
      }
      t.pass_if("radial normalization", worst <= 1e-6, "max |int P^W - 1| = " + fmt(worst) + " <= 1e-6");
    });

    std::optional<OperatorMatrix> w0;
    try {
      w0 = rho_w_zero(op_cutoff);
    } catch (const CancellationOverflow& e) {
      table.pass_if("rho_W(0) construction", false, e.what());
    }

    if (w0) {
      table.pass_if("rho_W(0) Hermitian", max_hermitian_deviation(w0->elems()) <= 1e-9,
                    "max |A - A^dag| = " + fmt(max_hermitian_deviation(w0->elems())) + " <= 1e-9");

      table.run("cross-path oracle", [&](CheckTable& t) {
        double worst = 0.0;
        for (const auto& s : states_at(op_cutoff)) {
          const DensityMatrix rho = density_from_pure(s.psi);
          const auto radial = phase_distribution_radial(rho, grid);
          for (int i = 0; i < grid.count(); ++i) {
            const double op = expectation(rho_w(grid.theta(i), *w0), rho).real();
            worst = std::max(worst, std::abs(op - radial.values[i]));
          }
        }
        t.pass_if("cross-path oracle", worst <= 1e-7, "max |P_op - P_radial| = " + fmt(worst) + " <= 1e-7");
      });

      table.run("covariance", [&](CheckTable& t) {
        const double phi = 0.7;
        const DensityMatrix rho = density_from_pure(random_state(std::min(5, op_cutoff), op_cutoff, rng));
        const DensityMatrix shifted = phase_conjugate(rho, phi);
        double worst = 0.0;
        for (int i = 0; i < grid.count(); ++i) {
          const double theta = grid.theta(i);
          const Complex a = expectation(rho_w(theta, *w0), shifted);
          const Complex b = expectation(rho_w(theta - phi, *w0), rho);
          worst = std::max(worst, std::abs(a - b));
        }
        t.pass_if("covariance", worst <= 1e-9, "max |Tr[rho' W(t)] - Tr[rho W(t-phi)]| = " + fmt(worst) + " <= 1e-9");
      });

      table.run("weak equivalence", [&](CheckTable& t) {
        const double w = weak_equivalence_scan([&](double th) { return rho_w(th, *w0); }, op_cutoff, grid);
        t.pass_if("weak equivalence rho_W", w <= 1e-9, "scan = " + fmt(w) + " <= 1e-9");
        double wa = 0.0;
        for (int trial = 0; trial < 3; ++trial) {
          const OperatorMatrix a = random_hermitian(op_cutoff, rng);
          wa = std::max(wa, weak_equivalence_scan([&](double th) { return phase_conjugate(a, th); }, op_cutoff, grid));
        }
        t.pass_if("weak equivalence 3x A(theta)", wa <= 1e-9, "max scan = " + fmt(wa) + " <= 1e-9");
        const OperatorMatrix a0 = random_hermitian(op_cutoff, rng);
        if (op_cutoff >= 1) {
          const double wc = weak_equivalence_scan([&](double) { return a0; }, op_cutoff, grid);
          t.pass_if("non-covariant family detected", wc > 1e-3, "scan = " + fmt(wc) + " > 1e-3");
        } else {
          t.skip("non-covariant family detected", "no off-diagonal elements at cutoff 0");
        }
      });

      table.run("Q moments", [&](CheckTable& t) {
        const OperatorMatrix q = build_moment_operator(1, theta0, *w0);
        const PhaseGrid fine(theta0, 2 * op_cutoff + 8);
        double worst = 0.0;
        for (const auto& s : states_at(op_cutoff)) {
          // Tr[rho Q] against int theta P^W taken from the radial path.
          const DensityMatrix rho = density_from_pure(s.psi);
          const double lhs = expectation(q, rho).real();
          const double rhs = sampled_moment(phase_distribution_radial(rho, fine), 1);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
        t.pass_if("Q p=1 equality", worst <= 1e-9, "max gap = " + fmt(worst) + " <= 1e-9");
        if (op_cutoff >= 2) {
          const DensityMatrix rho = density_from_pure(make_pair_state(1, op_cutoff));
          const double lhs = expectation(OperatorMatrix::general(q.elems() * q.elems()), rho).real();
          const double rhs = sampled_moment(phase_distribution_radial(rho, fine), 2);
          t.pass_if("Q p=2 mismatch witness", std::abs(lhs - rhs) > 1e-3,
                    "pair n=1 gap = " + fmt(std::abs(lhs - rhs)) + " > 1e-3");
        } else {
          t.skip("Q p=2 mismatch witness", "pair state needs cutoff >= 2");
        }
      });

      if (op_cutoff >= 2) {
        table.run("non-positivity", [&](CheckTable& t) {
          Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(w0->elems(), Eigen::EigenvaluesOnly);
          const double lowest = solver.eigenvalues().minCoeff();
          t.pass_if("rho_W(0) not positive", lowest < -1e-3, "min eigenvalue = " + fmt(lowest) + " < -1e-3");
        });
      }
    }

    table.run("Pegg-Barnett moments", [&](CheckTable& t) {
      const StateVector psi = cutoff >= 2 ? make_pair_state(1, 2) : make_number_state(0, 0);
      const PhiMoment m = phi_s_moment(1024, theta0, psi, 2);
      t.pass_if("PB p=2 convergence s=1024", std::abs(m.spectral - m.limit) <= 1e-3,
                "gap = " + fmt(std::abs(m.spectral - m.limit)) + " <= 1e-3");
      double worst = 0.0;
      for (int s : {psi.cutoff(), 8, 64, 257}) {
        const PhiMoment ms = phi_s_moment(s, theta0, psi, 2);
        double riemann = 0.0;
        for (int k = 0; k <= s; ++k) {
          const double th = theta0 + kTwoPi * k / (s + 1);
          riemann += th * th * pb_density_at(psi, th) * kTwoPi / (s + 1);
        }
        worst = std::max(worst, std::abs(ms.spectral - riemann));
      }
      t.pass_if("PB Riemann-sum identity", worst <= 1e-12, "max deviation = " + fmt(worst) + " <= 1e-12");
      double pb_min = 0.0;
      for (const auto& s : states_at(cutoff)) {
        pb_min = std::min(pb_min, negativity_report(pb_density(s.psi, grid)).min_value);
      }
      t.pass_if("PB nonnegative", pb_min >= -1e-12, "min P_PB = " + fmt(pb_min) + " >= -1e-12");
    });

    table.print(out);
    const bool ok = table.all_pass();
    out << (ok ? "all checks passed" : "some checks FAILED") << '\n';
    return ok ? static_cast<int>(kOk) : static_cast<int>(kCheckFailed);
  });
}

int cmd_dump_op(const DumpOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
    const int max_operator = opts.force_method ? INT_MAX : kOperatorPathMaxCutoff;
    MatrixDump dump;
    dump.metadata.emplace_back("operator", opts.op);
    if (opts.op == "rho_w") {
      if (opts.cutoff > max_operator) {
        throw PathUnavailable("rho_w is validated up to cutoff " + std::to_string(kOperatorPathMaxCutoff));
      }
      dump.metadata.emplace_back("theta", "0");
      dump.elems = rho_w_zero(opts.cutoff).elems();
    } else if (opts.op == "Q") {
      dump.metadata.emplace_back("theta0", format_double(opts.theta0));
      dump.elems = build_Q(opts.theta0, opts.cutoff, max_operator).elems();
    } else if (opts.op == "phi_s") {
      dump.metadata.emplace_back("theta0", format_double(opts.theta0));
      dump.metadata.emplace_back("s", std::to_string(opts.cutoff));
      dump.elems = phi_s_matrix(opts.cutoff, opts.theta0).elems();
    } else {
      throw ParseError("unknown operator '" + opts.op + "' (rho_w|Q|phi_s)");
    }
    if (opts.out.empty()) throw ParseError("dump-op needs --out");
    write_matrix_dump(opts.out, dump);
    out << "wrote " << opts.out.string() << '\n';
    return static_cast<int>(kOk);
  });
}

namespace {

// Reads "key=value" lines ('#' comments allowed) and appends "--key value" for
// every key not already given on the command line. "true"/"false" values
// toggle flags.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  auto it = std::find(args.begin(), args.end(), "--config");
  if (it == args.end() || std::next(it) == args.end()) return args;
  const std::filesystem::path path = *std::next(it);
  args.erase(it, it + 2);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path.string());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) != 0) key = "--" + key;
    if (std::find(args.begin(), args.end(), key) != args.end()) continue;
    if (value == "true") {
      args.push_back(key);
    } else if (value != "false") {
      args.push_back(key);
      args.push_back(value);
    }
  }
  return args;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  try {
    args = expand_config(raw_args);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  }
  std::string config_path;
  CLI::App app{"phasekit: Wigner and Pegg-Barnett phase distributions on a truncated Fock space"};
  app.add_option("--config", config_path, "key=value file mirroring the command-line flags");
  app.require_subcommand(1);

  DistOptions dist;
  int dist_cutoff = -1;
  auto* dist_cmd = app.add_subcommand("dist", "Compute a phase distribution and write CSV");
  dist_cmd->add_option("--state", dist.state, "State spec, e.g. pair:n=1")->required();
  dist_cmd->add_option("--method", dist.method, "radial|operator|pb|closed-form");
  dist_cmd->add_option("--cutoff", dist_cutoff, "Fock cutoff (default: smallest adequate)");
  dist_cmd->add_option("--theta0", dist.theta0, "Start of the phase window");
  dist_cmd->add_option("--grid", dist.grid, "Number of phase samples M");
  dist_cmd->add_option("--out", dist.out, "Output CSV (default stdout)");
  dist_cmd->add_option("--eps-tail", dist.eps_tail, "Allowed coherent-state tail mass");
  dist_cmd->add_flag("--force-method", dist.force_method, "Run the operator path past its validated cutoff");

  std::string variant = "all";
  std::filesystem::path fig_dir = ".";
  auto* fig_cmd = app.add_subcommand("figure1", "Write the pair-state (a1, a2) and cat-state (b) comparison CSVs");
  fig_cmd->add_option("--variant", variant, "a1|a2|b|all");
  fig_cmd->add_option("--out", fig_dir, "Output directory");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Run the invariant checks and print a table");
  check_cmd->add_option("--cutoff", check.cutoff, "Fock cutoff");
  check_cmd->add_option("--method", check.method, "operator to combine with --force-method");
  check_cmd->add_flag("--force-method", check.force_method, "Lift the operator-path cutoff cap");

  DumpOptions dump;
  auto* dump_cmd = app.add_subcommand("dump-op", "Dump rho_w, Q or phi_s as j,k,re,im rows");
  dump_cmd->add_option("operator", dump.op, "rho_w|Q|phi_s")->required();
  dump_cmd->add_option("--cutoff", dump.cutoff, "Fock cutoff (s for phi_s)");
  dump_cmd->add_option("--theta0", dump.theta0, "Start of the phase window");
  dump_cmd->add_option("--out", dump.out, "Output file")->required();
  dump_cmd->add_flag("--force-method", dump.force_method, "Lift the operator-path cutoff cap");

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "parse error: " << e.what() << '\n' << app.help();
    return kParseError;
  }

  if (*dist_cmd) {
    if (dist_cutoff >= 0) dist.cutoff = dist_cutoff;
    return cmd_dist(dist, out, err);
  }
  if (*fig_cmd) return cmd_figure1(variant, fig_dir, out, err);
  if (*check_cmd) return cmd_check(check, out, err);
  return cmd_dump_op(dump, out, err);
}

}  // namespace phasekit::cli
