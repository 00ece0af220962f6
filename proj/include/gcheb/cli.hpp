#pragma once

// Command-line front end. Every command emits a table of records as CSV (header
// row, %.17g numbers, complex values split into _re/_im columns) or JSON (an
// array of objects, complex values as {"re": .., "im": ..}).
//
// Exit status: 0 success, 2 invalid input, 3 numerical failure, 4 verify failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcheb/branch.hpp"
#include "gcheb/errors.hpp"
#include "gcheb/genchebyshev.hpp"
#include "gcheb/jost.hpp"
#include "gcheb/pointres.hpp"
#include "gcheb/scattering.hpp"
#include "gcheb/spectral.hpp"
#include "gcheb/verify.hpp"

namespace gcheb::cli {

enum ExitCode { kOk = 0, kValidation = 2, kNumerical = 3, kVerifyFailed = 4 };

using Cell = std::variant<double, long, std::string, cplx>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

inline void write_csv(const Table& t, std::ostream& out) {
  // complex columns are detected from the first row
  std::vector<bool> is_cplx(t.columns.size(), false);
  if (!t.rows.empty())
    for (std::size_t c = 0; c < t.columns.size(); ++c) is_cplx[c] = std::holds_alternative<cplx>(t.rows[0][c]);
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out << ',';
    if (is_cplx[c])
      out << t.columns[c] << "_re," << t.columns[c] << "_im";
    else
      out << t.columns[c];
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      std::visit(
          [&out](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>)
              out << format_double(v);
            else if constexpr (std::is_same_v<V, long>)
              out << v;
            else if constexpr (std::is_same_v<V, std::string>)
              out << v;
            else
              out << format_double(v.real()) << ',' << format_double(v.imag());
          },
          row[c]);
    }
    out << '\n';
  }
}

inline void write_json(const Table& t, std::ostream& out) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            auto z = [](double x) { return x == 0.0 ? 0.0 : x; };
            if constexpr (std::is_same_v<V, cplx>)
              obj[t.columns[c]] = {{"re", z(v.real())}, {"im", z(v.imag())}};
            else if constexpr (std::is_same_v<V, double>)
              obj[t.columns[c]] = z(v);
            else
              obj[t.columns[c]] = v;
          },
          row[c]);
    }
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

/// "start:stop:count" (inclusive, evenly spaced) or a bare count, meaning count
/// evenly spaced interior points of (-1, 1).
inline std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  auto to_double = [&spec](const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || s.empty()) throw DomainError("grid: cannot parse '" + spec + "'");
    return v;
  };
  auto to_count = [&](const std::string& s) {
    const double c = to_double(s);
    if (c < 1.0 || c != std::floor(c) || c > 1e7) throw DomainError("grid: count must be a positive integer");
    return static_cast<std::size_t>(c);
  };
  std::vector<double> g;
  if (parts.size() == 1) {
    const std::size_t n = to_count(parts[0]);
    for (std::size_t k = 0; k < n; ++k) g.push_back(-1.0 + 2.0 * double(k + 1) / double(n + 1));
    return g;
  }
  if (parts.size() != 3) throw DomainError("grid: expected start:stop:count or count");
  const double lo = to_double(parts[0]), hi = to_double(parts[1]);
  const std::size_t n = to_count(parts[2]);
  if (n == 1) return {lo};
  for (std::size_t k = 0; k < n; ++k) g.push_back(lo + (hi - lo) * double(k) / double(n - 1));
  return g;
}

inline std::vector<double> parse_list(const std::string& spec) {
  std::vector<double> v;
  if (spec.empty()) return v;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || item.empty()) throw DomainError("cannot parse number list '" + spec + "'");
    v.push_back(x);
  }
  return v;
}

struct RunConfig {
  std::string command;
  double a = 1.0;
  double b = 0.0;
  int n = 0;
  int m = 0;
  int nmax = 10;
  double z_re = 2.0;
  double z_im = 0.0;
  std::string grid = "101";
  std::string method = "closed";
  std::string a_seq;
  std::string b_seq;
  std::string coeffs;
  std::string suite = "all";
  std::size_t truncation = 4096;
  double tol = 1e-12;
  std::string format = "csv";
  std::string output;
};

inline Table cmd_poly(const RunConfig& c) {
  const CouplingParams p(c.a, c.b);
  detail::require(c.nmax >= 0, "nmax must be >= 0");
  const cplx z(c.z_re, c.z_im);
  Table t{{"n", "value"}, {}};
  if (c.method == "recurrence" || c.method == "closed") {
    std::vector<cplx> vals;
    if (c.method == "recurrence" || (z.imag() == 0.0 && std::abs(z.real()) <= 1.0)) {
      vals = chebyshev_values<cplx>(p, z, c.nmax);
    } else {
      const auto pt = EnergyPoint::at(z);
      vals.push_back(1.0);
      for (int k = 1; k <= c.nmax; ++k) vals.push_back(eval_closed_form(p, pt, k));
    }
    for (int k = 0; k <= c.nmax; ++k) t.add({long(k), vals[k]});
    return t;
  }
  throw DomainError("poly: method must be recurrence or closed");
}

inline Table cmd_resolvent(const RunConfig& c) {
  detail::require(c.n >= 0 && c.m >= 0, "n and m must be >= 0");
  const auto pt = EnergyPoint::at(cplx(c.z_re, c.z_im));
  Table t{{"n", "m", "value"}, {}};
  cplx v;
  if (c.b != 0.0)
    v = resolvent_entry_general(JacobiCoeffs::from_coupling(CouplingParams(c.a, c.b)), c.n, c.m, pt);
  else
    v = resolvent_entry(c.a, c.n, c.m, pt);
  t.add({long(c.n), long(c.m), v});
  return t;
}

inline Table cmd_measure(const RunConfig& c) {
  const auto rec = spectral_measure(c.a);
  Table t{{"kind", "lambda", "value"}, {}};
  for (double l : parse_grid(c.grid)) t.add({std::string("density"), l, rec.density(l)});
  for (const auto& at : rec.atoms) t.add({std::string("atom"), at.location, at.weight});
  return t;
}

inline Table cmd_scatter(const RunConfig& c) {
  Table t{{"lambda", "s", "xi", "sigma_plus", "sigma_minus", "det_plus"}, {}};
  for (double l : parse_grid(c.grid)) {
    const auto r = scattering_record(c.a, l);
    t.add({r.lambda, r.s_value, r.xi, r.sigma_plus, r.sigma_minus, r.det_plus});
  }
  return t;
}

inline Table cmd_ssf(const RunConfig& c) {
  detail::require(c.a > 0.0, "a must be positive");
  const auto grid = parse_grid(c.grid);
  if (c.method == "closed") {
    Table t{{"lambda", "xi"}, {}};
    for (double l : grid) t.add({l, ssf_closed(c.a, l)});
    return t;
  }
  if (c.method == "tracked" || c.method == "both") {
    const bool both = c.method == "both";
    Table t{both ? std::vector<std::string>{"lambda", "xi_closed", "xi_tracked"}
                 : std::vector<std::string>{"lambda", "xi"},
            {}};
    for (double l : grid) {
      if (both)
        t.add({l, ssf_closed(c.a, l), ssf_arg_tracked(c.a, l)});
      else
        t.add({l, ssf_arg_tracked(c.a, l)});
    }
    return t;
  }
  throw DomainError("ssf: method must be closed, tracked or both");
}

inline Table cmd_moments(const RunConfig& c) {
  detail::require(c.nmax >= 0, "nmax must be >= 0");
  Table t{{"n", "kappa"}, {}};
  if (c.method == "quadrature") {
    for (int k = 0; k <= c.nmax; ++k) t.add({long(k), oracle::numeric_moment(c.a, k, c.tol)});
    return t;
  }
  const auto ms = moment_series(c.a, c.nmax);
  for (int k = 0; k <= c.nmax; ++k) t.add({long(k), ms[k]});
  return t;
}

inline Table cmd_trace(const RunConfig& c) {
  detail::require(c.nmax >= 0, "nmax must be >= 0");
  const auto ts = trace_series(c.a, c.nmax);
  Table t{{"n", "trace"}, {}};
  for (int k = 0; k <= c.nmax; ++k) t.add({long(k), ts[k]});
  return t;
}

inline JacobiCoeffs coeffs_from(const RunConfig& c) {
  if (c.a_seq.empty() && c.b_seq.empty()) return JacobiCoeffs::from_coupling(CouplingParams(c.a, c.b));
  auto as = parse_list(c.a_seq);
  auto bs = parse_list(c.b_seq);
  if (bs.empty()) bs.assign(as.size(), 0.0);
  return JacobiCoeffs(as, bs);
}

inline Table cmd_jost(const RunConfig& c) {
  const auto coeffs = coeffs_from(c);
  const auto pt = EnergyPoint::at(cplx(c.z_re, c.z_im));
  Table t{{"kind", "index", "value"}, {}};
  const auto u = jost_solution(coeffs, pt, -1);
  for (long n = u.first; n <= u.last(); ++n) t.add({std::string("u"), n, u.at(n)});
  t.add({std::string("det"), 0L, pert_det_general(coeffs, pt)});
  const auto L = det_polynomial(coeffs);
  for (std::size_t k = 0; k < L.coeffs.size(); ++k) t.add({std::string("coeff"), long(k), L.coeffs[k]});
  return t;
}

inline Table cmd_recover(const RunConfig& c) {
  const auto l = parse_list(c.coeffs);
  detail::require(!l.empty(), "recover: --coeffs is required");
  DetPolynomial L;
  for (double v : l) L.coeffs.emplace_back(v, 0.0);
  while (L.coeffs.size() > 1 && L.coeffs.back() == cplx(0.0)) L.coeffs.pop_back();
  const JacobiCoeffs out = L.coeffs.size() <= 3 ? recover_rank1(L) : recover_rank2(L);
  Table t{{"n", "a_n", "b_n"}, {}};
  for (std::size_t k = 0; k < out.support(); ++k) t.add({long(k), out.a_seq()[k], out.b_seq()[k]});
  return t;
}

inline Table cmd_resonances(const RunConfig& c) {
  Table t{{"index", "z"}, {}};
  const auto rs = resonances(c.a);
  for (std::size_t k = 0; k < rs.points.size(); ++k) t.add({long(k), rs.points[k]});
  return t;
}

inline Table cmd_verify(const RunConfig& c, bool& all_passed) {
  verify::Options opt;
  opt.truncation = c.truncation;
  opt.eigen_truncation = std::max<std::size_t>(2 * c.truncation, 8);
  Table t{{"criterion", "suite", "status", "detail"}, {}};
  all_passed = true;
  bool matched = false;
  for (const auto& s : verify::suites()) {
    if (c.suite != "all" && c.suite != s.name && c.suite != std::to_string(s.id)) continue;
    matched = true;
    const auto r = verify::run_suite(s, opt);
    all_passed = all_passed && r.passed;
    t.add({long(r.id), r.suite, std::string(r.passed ? "PASS" : "FAIL"), r.detail});
  }
  detail::require(matched, "verify: unknown suite '" + c.suite + "'");
  return t;
}

inline void print_verify_table(const Table& t, std::ostream& out) {
  for (const auto& row : t.rows) {
    char head[96];
    std::snprintf(head, sizeof head, "%-4s %2ld %-13s ", std::get<std::string>(row[2]).c_str(), std::get<long>(row[0]),
                  std::get<std::string>(row[1]).c_str());
    out << head << std::get<std::string>(row[3]) << '\n';
  }
}

/// Parses argv, runs the command and writes the result. Returns the exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral and scattering data of point-interaction Jacobi operators"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("-o,--output", cfg.output, "output path (default stdout)");
  };
  auto coupling = [&cfg](CLI::App* sub) {
    sub->add_option("--a", cfg.a, "coupling a > 0")->check(CLI::PositiveNumber);
    sub->add_option("--b", cfg.b, "diagonal coupling b");
  };
  auto energy = [&cfg](CLI::App* sub) {
    sub->add_option("--z_re,--z", cfg.z_re, "real part of z");
    sub->add_option("--z_im", cfg.z_im, "imaginary part of z");
  };

  auto* poly = app.add_subcommand("poly", "Ch_n(z; a, b) for n = 0..nmax");
  coupling(poly);
  energy(poly);
  poly->add_option("--nmax", cfg.nmax, "largest degree")->check(CLI::NonNegativeNumber);
  poly->add_option("--method", cfg.method, "recurrence or closed");
  common(poly);

  auto* res = app.add_subcommand("resolvent", "(R_a(z) e_n, e_m)");
  coupling(res);
  energy(res);
  res->add_option("--n", cfg.n)->check(CLI::NonNegativeNumber);
  res->add_option("--m", cfg.m)->check(CLI::NonNegativeNumber);
  common(res);

  auto* meas = app.add_subcommand("measure", "spectral density on a grid and the atoms");
  coupling(meas);
  meas->add_option("--grid", cfg.grid, "start:stop:count or count");
  common(meas);

  auto* scat = app.add_subcommand("scatter", "S, xi, sigma_+-, D(lambda + i0) on a grid");
  coupling(scat);
  scat->add_option("--grid", cfg.grid, "start:stop:count or count");
  common(scat);

  auto* ssf = app.add_subcommand("ssf", "spectral shift function on a grid");
  coupling(ssf);
  ssf->add_option("--grid", cfg.grid, "start:stop:count or count");
  ssf->add_option("--method", cfg.method, "closed, tracked or both");
  common(ssf);

  auto* mom = app.add_subcommand("moments", "moments kappa_0..kappa_nmax");
  coupling(mom);
  mom->add_option("--nmax", cfg.nmax)->check(CLI::NonNegativeNumber);
  mom->add_option("--method", cfg.method, "series (default) or quadrature");
  mom->add_option("--tol", cfg.tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  common(mom);

  auto* tr = app.add_subcommand("trace", "Tr(H_a^n - H_1^n) for n = 0..nmax");
  coupling(tr);
  tr->add_option("--nmax", cfg.nmax)->check(CLI::NonNegativeNumber);
  common(tr);

  auto* jost = app.add_subcommand("jost", "Jost solution, determinant and its omega-polynomial");
  coupling(jost);
  energy(jost);
  jost->add_option("--a-seq", cfg.a_seq, "comma-separated a_0..a_{N-1}");
  jost->add_option("--b-seq", cfg.b_seq, "comma-separated b_0..b_{N-1}");
  common(jost);

  auto* rec = app.add_subcommand("recover", "coefficients from a determinant polynomial (degree <= 4)");
  rec->add_option("--coeffs", cfg.coeffs, "comma-separated l_0..l_{2N}")->required();
  common(rec);

  auto* reso = app.add_subcommand("resonances", "second-sheet zeros of D_a");
  coupling(reso);
  common(reso);

  auto* ver = app.add_subcommand("verify", "run the agreement suites");
  ver->add_option("--suite", cfg.suite, "all, a suite name or a criterion number");
  ver->add_option("--truncation", cfg.truncation)->check(CLI::Range(std::size_t{64}, std::size_t{16384}));
  common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "moments" && cfg.method == "closed") cfg.method = "series";

  try {
    Table t;
    bool passed = true;
    const std::string& cmd = cfg.command;
    if (cmd == "poly") t = cmd_poly(cfg);
    else if (cmd == "resolvent") t = cmd_resolvent(cfg);
    else if (cmd == "measure") t = cmd_measure(cfg);
    else if (cmd == "scatter") t = cmd_scatter(cfg);
    else if (cmd == "ssf") t = cmd_ssf(cfg);
    else if (cmd == "moments") t = cmd_moments(cfg);
    else if (cmd == "trace") t = cmd_trace(cfg);
    else if (cmd == "jost") t = cmd_jost(cfg);
    else if (cmd == "recover") t = cmd_recover(cfg);
    else if (cmd == "resonances") t = cmd_resonances(cfg);
    else if (cmd == "verify") t = cmd_verify(cfg, passed);

    std::ofstream file;
    std::ostream* dest = &out;
    if (!cfg.output.empty()) {
      file.open(cfg.output);
      if (!file) throw DomainError("cannot open output file '" + cfg.output + "'");
      dest = &file;
    }
    if (cfg.format == "json")
      write_json(t, *dest);
    else
      write_csv(t, *dest);
    if (cmd == "verify" && !cfg.output.empty()) print_verify_table(t, out);
    return passed ? kOk : kVerifyFailed;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumerical;
  }
}

}  // namespace gcheb::cli
