#include "opuc_tools/cli.hpp"

#include <CLI11.hpp>
#include <complex>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "opuc/cmv.hpp"
#include "opuc/dunkl.hpp"
#include "opuc/errors.hpp"
#include "opuc/moments.hpp"
#include "opuc/opuc.hpp"
#include "opuc/quadrature.hpp"
#include "opuc/szego.hpp"
#include "opuc_tools/suites.hpp"

namespace opuc::tools {

namespace {

using json = nlohmann::ordered_json;
using Point = std::pair<Rational, Rational>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RawConfig {
  std::string alpha = "0";
  std::string beta = "0";
  int n = 10;
  std::vector<std::string> suites{"all"};
  std::string grid;
  std::string grid_file;
  int quad_order = 64;
  double tol = 1e-10;
  std::string format;
  std::string out;
  int corrupt = -1;
  std::string closure = "truncate";
  std::string table = "family";
  std::string weight = "jacobi";
  std::string xi = "1";
};

Rational parse_rational(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError(what + ": " + e.what());
  }
}

Point parse_point(const std::string& text) {
  auto sep = text.find(',');
  if (sep == std::string::npos) {
    std::istringstream ss(text);
    std::string a, b, rest;
    if (!(ss >> a >> b) || (ss >> rest)) throw UsageError("grid point '" + text + "' is not 'alpha,beta'");
    return {parse_rational(a, "grid alpha"), parse_rational(b, "grid beta")};
  }
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  return {parse_rational(trim(text.substr(0, sep)), "grid alpha"),
          parse_rational(trim(text.substr(sep + 1)), "grid beta")};
}

std::vector<Point> parse_grid(const RawConfig& raw) {
  std::vector<Point> grid;
  if (!raw.grid.empty()) {
    std::istringstream ss(raw.grid);
    std::string item;
    while (std::getline(ss, item, ';')) {
      if (item.find_first_not_of(" \t") != std::string::npos) grid.push_back(parse_point(item));
    }
  }
  if (!raw.grid_file.empty()) {
    std::ifstream in(raw.grid_file);
    if (!in) throw UsageError("cannot read grid file " + raw.grid_file);
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) grid.push_back(parse_point(line));
    }
  }
  if (grid.empty()) grid.emplace_back(parse_rational(raw.alpha, "--alpha"), parse_rational(raw.beta, "--beta"));
  for (const auto& [a, b] : grid) {
    try {
      JacobiParams check(a, b);
    } catch (const ParamOutOfRange& e) {
      throw UsageError(e.what());
    }
  }
  return grid;
}

json to_json(const std::vector<std::string>& v) { return json(v); }

json grid_json(const std::vector<Point>& grid) {
  json out = json::array();
  for (const auto& [a, b] : grid) out.push_back({{"alpha", a.to_string()}, {"beta", b.to_string()}});
  return out;
}

// Destination chosen by --out, stdout otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open " + path + " for writing");
      os_ = file_.get();
    }
  }
  std::ostream& get() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int gen_recurrence(const RawConfig& raw, const JacobiParams& p, int last, std::ostream& os) {
  const auto rc = rec_coeffs(build_family(p, 2 * last + 2), last);
  if (raw.format == "csv") {
    write_rec_coeffs_csv(os, rc);
  } else if (raw.format == "json") {
    json rows = json::array();
    for (std::size_t n = 0; n < rc.b.size(); ++n) {
      rows.push_back({{"n", n},
                      {"b_n", rc.b[n].to_string()},
                      {"u_n", rc.u[n].to_string()},
                      {"bt_n", rc.bt[n].to_string()},
                      {"ut_n", rc.ut[n].to_string()}});
    }
    json doc{{"config", {{"alpha", p.alpha().to_string()}, {"beta", p.beta().to_string()}, {"rows", raw.n}}},
             {"rows", rows}};
    os << doc.dump(2) << '\n';
  } else {
    for (std::size_t n = 0; n < rc.b.size(); ++n) {
      os << "n=" << n << "  b=" << rc.b[n] << "  u=" << rc.u[n] << "  bt=" << rc.bt[n] << "  ut=" << rc.ut[n] << '\n';
    }
  }
  return kOk;
}

int cmd_gen(const RawConfig& raw, std::ostream& os) {
  const JacobiParams p(parse_rational(raw.alpha, "--alpha"), parse_rational(raw.beta, "--beta"));
  // --n counts rows: indices 0..n-1.
  const int last = raw.n - 1;
  if (raw.table == "recurrence") return gen_recurrence(raw, p, last, os);
  const auto fam = build_family(p, last);
  std::vector<Rational> lambda;
  for (int n = 0; n <= last; ++n) lambda.push_back(lambda_n(p, n));

  if (raw.format == "csv") {
    write_family_csv(os, fam, lambda);
  } else if (raw.format == "json") {
    json rows = json::array();
    for (int n = 0; n <= last; ++n) {
      const auto i = static_cast<std::size_t>(n);
      rows.push_back({{"n", n},
                      {"a_n", fam.a[i].to_string()},
                      {"h_n", fam.h[i].to_string()},
                      {"lambda_n", lambda[i].to_string()},
                      {"psi_n", fam.psi[i].to_string()}});
    }
    json doc{{"config", {{"alpha", p.alpha().to_string()}, {"beta", p.beta().to_string()}, {"rows", raw.n}}},
             {"rows", rows}};
    os << doc.dump(2) << '\n';
  } else {
    for (int n = 0; n <= last; ++n) {
      const auto i = static_cast<std::size_t>(n);
      os << "n=" << n << "  a=" << fam.a[i] << "  h=" << fam.h[i] << "  lambda=" << lambda[i] << "\n  psi = "
         << fam.psi[i] << '\n';
    }
  }
  return kOk;
}

struct SuiteRun {
  std::string suite;
  Point point;
  VerificationReport report;
};

// Per-n {n, lambda, residual_is_zero} view of the eigenvalue check.
json bispectral_records(const IdentityCheck& c, const Point& p) {
  json out = json::array();
  for (const auto& idx : c.indices_checked) {
    const int n = std::stoi(idx.substr(idx.find('=') + 1));
    bool zero = true;
    for (const auto& f : c.failures) zero = zero && f.index != idx;
    out.push_back({{"n", n}, {"lambda", lambda_n(JacobiParams(p.first, p.second), n).to_string()}, {"residual_is_zero", zero}});
  }
  return out;
}

void record_error(VerificationReport& report, const std::string& suite, const std::exception& e) {
  auto& check = report.add(suite + "-error", "suite completed without raising");
  check.expect_true("run", false, e.what());
}

int cmd_verify(const RawConfig& raw, std::ostream& os) {
  const auto grid = parse_grid(raw);
  std::vector<std::string> suites;
  try {
    suites = expand_suites(raw.suites);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  SuiteOptions opts{raw.quad_order, raw.tol, std::nullopt};
  if (raw.corrupt >= 0) {
    if (raw.corrupt > raw.n) throw UsageError("--corrupt-a index exceeds --n");
    opts.corrupt_index = raw.corrupt;
  }

  std::vector<SuiteRun> runs;
  for (const auto& point : grid) {
    for (const auto& suite : suites) {
      SuiteRun run{suite, point, {}};
      try {
        run.report = run_suite(suite, point.first, point.second, raw.n, opts);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      } catch (const std::exception& e) {
        record_error(run.report, suite, e);
      }
      runs.push_back(std::move(run));
    }
  }

  std::size_t identities = 0, failures = 0, failed_identities = 0;
  for (const auto& r : runs) {
    for (const auto& c : r.report.checks()) {
      ++identities;
      failures += c.failures.size();
      if (!c.passed()) ++failed_identities;
    }
  }
  const bool ok = failures == 0;

  if (raw.format == "json") {
    json results = json::array();
    for (const auto& r : runs) {
      for (const auto& c : r.report.checks()) {
        json fails = json::array();
        for (const auto& f : c.failures) fails.push_back({{"index", f.index}, {"residual", f.residual}});
        json entry{{"suite", r.suite},
                           {"alpha", r.point.first.to_string()},
                           {"beta", r.point.second.to_string()},
                           {"identity", c.identity},
                           {"paper_ref", c.formula},
                           {"exact", c.exact},
                           {"passed", c.passed()},
                           {"indices_checked", to_json(c.indices_checked)},
                           {"skipped", to_json(c.skipped)},
                           {"notes", to_json(c.notes)},
                           {"failures", fails}};
        if (c.identity == "EIG") entry["records"] = bispectral_records(c, r.point);
        results.push_back(std::move(entry));
      }
    }
    json config{{"alpha", raw.alpha},      {"beta", raw.beta},
                {"n", raw.n},              {"grid", grid_json(grid)},
                {"suites", suites},        {"quad_order", raw.quad_order},
                {"tol", raw.tol},          {"corrupt_a", raw.corrupt >= 0 ? json(raw.corrupt) : json(nullptr)}};
    json summary{{"identities", identities},
                 {"failed_identities", failed_identities},
                 {"failures", failures},
                 {"passed", ok}};
    os << json{{"config", config}, {"suite_results", results}, {"summary", summary}}.dump(2) << '\n';
  } else if (raw.format == "csv") {
    os << "suite,alpha,beta,identity,exact,checked,skipped,failures,status\n";
    for (const auto& r : runs) {
      for (const auto& c : r.report.checks()) {
        os << r.suite << ',' << r.point.first << ',' << r.point.second << ',' << csv_field(c.identity) << ','
           << (c.exact ? "exact" : "numeric") << ',' << c.indices_checked.size() << ',' << c.skipped.size() << ','
           << c.failures.size() << ',' << (c.passed() ? "PASS" : "FAIL") << '\n';
      }
    }
  } else {
    for (const auto& r : runs) {
      os << "[" << r.suite << "] alpha=" << r.point.first << " beta=" << r.point.second << " n=" << raw.n << '\n';
      for (const auto& c : r.report.checks()) {
        os << "  " << (c.passed() ? "PASS " : "FAIL ") << std::left << std::setw(20) << c.identity << ' '
           << c.indices_checked.size() << " checked";
        if (!c.skipped.empty()) os << ", " << c.skipped.size() << " skipped";
        os << '\n';
        for (const auto& f : c.failures) os << "      " << f.index << ": " << f.residual << '\n';
      }
    }
    os << "summary: " << identities << " identities, " << failed_identities << " failed, " << failures
       << " failing indices\n";
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_spectrum(const RawConfig& raw, std::ostream& os) {
  const JacobiParams p(parse_rational(raw.alpha, "--alpha"), parse_rational(raw.beta, "--beta"));
  std::vector<Rational> a;
  for (int n = 0; n < raw.n; ++n) a.push_back(verblunsky_jacobi(p, n));
  BoundaryClosure closure;
  if (raw.closure == "1" || raw.closure == "-1") {
    closure.unimodular = Rational{raw.closure == "1" ? 1 : -1};
  } else if (raw.closure != "truncate") {
    throw UsageError("--closure must be truncate, 1 or -1");
  }
  const auto eig = truncated_spectrum(cmv_matrix(a, static_cast<std::size_t>(raw.n), closure));
  os << std::setprecision(17);
  if (raw.format == "json") {
    json pts = json::array();
    for (const auto& z : eig) pts.push_back({{"re", z.real()}, {"im", z.imag()}, {"modulus", std::abs(z)}});
    os << json{{"config", {{"alpha", p.alpha().to_string()}, {"beta", p.beta().to_string()}, {"n", raw.n},
                           {"closure", raw.closure}}},
               {"eigenvalues", pts}}
              .dump(2)
       << '\n';
  } else {
    os << "k,re,im,modulus\n";
    for (std::size_t k = 0; k < eig.size(); ++k) {
      os << k << ',' << eig[k].real() << ',' << eig[k].imag() << ',' << std::abs(eig[k]) << '\n';
    }
  }
  return kOk;
}

int cmd_moments(const RawConfig& raw, std::ostream& os) {
  std::optional<Weight> w;
  if (raw.weight == "jacobi") {
    w = Weight::jacobi(JacobiParams(parse_rational(raw.alpha, "--alpha"), parse_rational(raw.beta, "--beta")));
  } else if (raw.weight == "single-moment") {
    const Rational xi = parse_rational(raw.xi, "--xi");
    try {
      w = Weight::single_moment(xi);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  } else if (raw.weight == "lebesgue") {
    w = Weight::lebesgue();
  } else {
    throw UsageError("--weight must be jacobi, single-moment or lebesgue");
  }
  if (raw.quad_order < 64) throw UsageError("--quad-order must be at least 64");
  const MomentSeq m(*w, raw.n, raw.quad_order);
  if (raw.format == "json") {
    json rows = json::array();
    for (int n = -raw.n; n <= raw.n; ++n) {
      const auto& v = m.at(n);
      rows.push_back({{"n", n},
                      {"sigma", v.value},
                      {"provenance", to_string(v.provenance)},
                      {"exact", v.exact ? json(v.exact->to_string()) : json(nullptr)}});
    }
    os << json{{"config", {{"weight", w->describe()}, {"n", raw.n}, {"quad_order", raw.quad_order}}},
               {"moments", rows}}
              .dump(2)
       << '\n';
  } else {
    write_moments_csv(os, m);
  }
  return kOk;
}

void add_params(CLI::App* cmd, RawConfig& raw) {
  cmd->add_option("--alpha", raw.alpha, "alpha as p/q or integer")->capture_default_str();
  cmd->add_option("--beta", raw.beta, "beta as p/q or integer")->capture_default_str();
  cmd->add_option("--n", raw.n, "largest index")->capture_default_str()->check(CLI::Range(1, 100000));
  cmd->add_option("--out", raw.out, "output file (default stdout)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact OPUC / CMV / Dunkl verification toolkit", "opuc"};
  app.require_subcommand(1);
  RawConfig raw;

  auto* gen = app.add_subcommand("gen", "tabulate n, a_n, h_n, lambda_n, psi_n");
  add_params(gen, raw);
  gen->add_option("--table", raw.table, "family or recurrence (b_n, u_n, bt_n, ut_n)")
      ->capture_default_str()
      ->check(CLI::IsMember({"family", "recurrence"}));

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_params(verify, raw);
  verify->add_option("--suite", raw.suites, "bispectral, cmv, algebra, szego, moments or all")
      ->capture_default_str()
      ->delimiter(',');
  verify->add_option("--grid", raw.grid, "parameter points 'a,b;a,b;...'");
  verify->add_option("--grid-file", raw.grid_file, "file with one 'alpha,beta' per line");
  verify->add_option("--quad-order", raw.quad_order, "starting quadrature order (>= 64)")
      ->capture_default_str()
      ->check(CLI::Range(64, 1 << 14));
  verify->add_option("--tol", raw.tol, "numeric tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--corrupt-a", raw.corrupt, "shift a_k by +1/100 (negative control)")
      ->check(CLI::NonNegativeNumber);

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the N x N CMV truncation");
  add_params(spectrum, raw);
  spectrum->add_option("--closure", raw.closure, "truncate, 1 or -1")->capture_default_str();

  auto* moments = app.add_subcommand("moments", "normalized trigonometric moments");
  add_params(moments, raw);
  moments->add_option("--weight", raw.weight, "jacobi, single-moment or lebesgue")->capture_default_str();
  moments->add_option("--xi", raw.xi, "single-moment parameter")->capture_default_str();
  moments->add_option("--quad-order", raw.quad_order, "quadrature order (>= 64)")->capture_default_str();

  // Formats differ per subcommand; the defaults are applied after parsing.
  std::string fmt;
  for (auto* cmd : {gen, verify, spectrum, moments}) {
    cmd->add_option("--format", fmt, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  }

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help is reported as a parse error by some CLI11 versions.
    if (e.get_exit_code() == 0) {
      for (auto* cmd : app.get_subcommands()) out << cmd->help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (fmt.empty()) fmt = chosen == verify ? "json" : "csv";
  raw.format = fmt;

  try {
    Sink sink(raw.out, out);
    if (chosen == gen) return cmd_gen(raw, sink.get());
    if (chosen == verify) return cmd_verify(raw, sink.get());
    if (chosen == spectrum) return cmd_spectrum(raw, sink.get());
    return cmd_moments(raw, sink.get());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParamOutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace opuc::tools
