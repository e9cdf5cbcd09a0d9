// ghp: build, verify, compare and root-find generalized Hermite polynomials.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "ghp/cli.hpp"
#include "ghp/errors.hpp"

namespace {

using namespace ghp;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw cli::UsageError("cannot open '" + path + "' for writing");
  file << text;
  if (!file.flush()) throw cli::UsageError("failed writing '" + path + "'");
}

std::string caustic_path_for(const std::string& out) {
  const auto dot = out.rfind('.');
  const auto slash = out.rfind('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return out + "_caustic";
  return out.substr(0, dot) + "_caustic" + out.substr(dot);
}

struct Flags {
  int r = 2;
  int n = 0;
  std::optional<int> precision_bits;
  double series_tol = 1e-14;
  double newton_tol = 1e-13;
  double caustic_guard = 0.1;
  std::string out;
  std::string format = "json";

  AsymptoticParams asymptotic() const {
    AsymptoticParams params(r);
    params.series_tol = series_tol;
    params.newton_tol = newton_tol;
    params.caustic_guard = caustic_guard;
    params.validate();
    return params;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Hermite polynomials: exact construction, asymptotics and zeros"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&f](CLI::App* cmd) {
    cmd->add_option("--out", f.out, "Output file (stdout when omitted)");
  };
  auto add_family = [&f](CLI::App* cmd) {
    cmd->add_option("--r", f.r, "Order r >= 2")->required()->check(CLI::Range(2, 64));
    cmd->add_option("--n", f.n, "Index n >= 0")->required()->check(CLI::NonNegativeNumber);
  };

  auto* poly = app.add_subcommand("poly", "Print H_n^r as JSON or CSV");
  add_family(poly);
  add_common(poly);
  poly->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  int r_max = 4, n_max = 10;
  auto* verify = app.add_subcommand("verify", "Check every exact identity over a range of (r, n)");
  verify->add_option("--r-max", r_max, "Largest r")->check(CLI::Range(2, 64));
  verify->add_option("--n-max", n_max, "Largest n")->check(CLI::NonNegativeNumber);
  add_common(verify);

  cli::SweepSpec sweep;
  std::string path_kind = "segment";
  double from_re = 0, from_im = 0, to_re = 1, to_im = 0;
  std::string methods = "exact,auto";
  auto* compare = app.add_subcommand("compare", "Exact values against the outer and inner approximations");
  add_family(compare);
  add_common(compare);
  compare->add_option("--path", path_kind, "segment or circle")->check(CLI::IsMember({"segment", "circle"}));
  compare->add_option("--from-re", from_re, "Segment start, real part");
  compare->add_option("--from-im", from_im, "Segment start, imaginary part");
  compare->add_option("--to-re", to_re, "Segment end, real part");
  compare->add_option("--to-im", to_im, "Segment end, imaginary part");
  compare->add_option("--radius", sweep.radius, "Circle radius");
  compare->add_option("--angle-start", sweep.angle_start, "Circle start angle (radians)");
  compare->add_option("--angle-end", sweep.angle_end, "Circle end angle (radians)");
  compare->add_option("--samples", sweep.samples, "Number of points, >= 2");
  compare->add_option("--methods", methods, "Comma list of exact,outer,inner,auto");
  compare->add_option("--precision-bits", f.precision_bits, "Exact-engine precision, >= 53");
  compare->add_option("--series-tol", f.series_tol, "Series truncation tolerance");
  compare->add_option("--newton-tol", f.newton_tol, "Newton residual tolerance");
  compare->add_option("--caustic-guard", f.caustic_guard, "Relative half-width of the caustic band");

  double tol = 1e-12;
  auto* roots = app.add_subcommand("roots", "All complex zeros of H_n^r");
  add_family(roots);
  add_common(roots);
  roots->add_option("--tol", tol, "Root width and backward-error tolerance");
  roots->add_option("--format", f.format, "json (orbits) or csv (every root)")
      ->check(CLI::IsMember({"json", "csv"}));

  double s_max = 4, t_max = 1;
  int steps = 20;
  std::string caustic_out;
  auto* rays = app.add_subcommand("rays", "Characteristic rays and caustic points");
  rays->add_option("--r", f.r, "Order r >= 2")->required()->check(CLI::Range(2, 64));
  rays->add_option("--s-max", s_max, "Largest launch point s");
  rays->add_option("--t-max", t_max, "Largest ray time t");
  rays->add_option("--steps", steps, "Grid steps per axis");
  rays->add_option("--caustic-out", caustic_out, "Caustic file (default: <out>_caustic)");
  add_common(rays);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kUsageError;
  }

  try {
    if (*poly) {
      write_output(cli::cmd_poly(f.r, f.n, f.format), f.out);
    } else if (*verify) {
      const auto report = cli::cmd_verify(r_max, n_max);
      write_output(report.to_csv(), f.out);
      return report.all_passed() ? cli::kOk : cli::kVerificationFailed;
    } else if (*compare) {
      if (path_kind == "circle") {
        sweep.kind = cli::SweepSpec::Kind::Circle;
      } else {
        sweep.start = {from_re, from_im};
        sweep.end = {to_re, to_im};
      }
      sweep.methods.clear();
      std::stringstream list(methods);
      for (std::string m; std::getline(list, m, ',');) sweep.methods.push_back(m);
      const int bits = f.precision_bits ? *f.precision_bits : cli::default_precision_bits();
      write_output(cli::cmd_compare(f.asymptotic(), f.n, sweep, bits), f.out);
    } else if (*roots) {
      write_output(cli::cmd_roots(f.r, f.n, tol, f.format), f.out);
    } else if (*rays) {
      const auto result = cli::cmd_rays(f.r, s_max, t_max, steps);
      write_output(result.rays_csv, f.out);
      const std::string path = !caustic_out.empty() ? caustic_out : f.out.empty() ? "" : caustic_path_for(f.out);
      if (!path.empty()) write_output(result.caustic_csv, path);
    }
  } catch (const cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return cli::kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return cli::kUsageError;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return cli::kNumericError;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << '\n';
    return cli::kNumericError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kNumericError;
  }
  return cli::kOk;
}
