#pragma once

// Command implementations behind the ghp executable. Each returns the exact
// bytes the executable writes, so output can be tested without a process.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghp/asymptotic.hpp"

namespace ghp::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kNumericError = 3,
};

/// Bad flag values detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default precision for exact-engine evaluation: GHP_PRECISION_BITS when set
/// to an integer >= 53, else 128. UsageError for a malformed value.
int default_precision_bits();

/// "json" (default schema of poly_to_json, pretty printed) or "csv".
std::string cmd_poly(int r, int n, const std::string& format);

struct VerifyRow {
  std::string identity;
  int checked = 0;
  int failed = 0;
  std::string counterexample;  // first failing case, empty when none
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  bool all_passed() const;
  /// "identity,checked,failed,status,counterexample"
  std::string to_csv() const;
};

/// Runs every exact identity for 2 <= r <= r_max, 0 <= n <= n_max.
VerifyReport cmd_verify(int r_max, int n_max);

struct SweepSpec {
  enum class Kind { Segment, Circle };
  Kind kind = Kind::Segment;
  std::complex<double> start{0.0, 0.0};
  std::complex<double> end{1.0, 0.0};
  double radius = 1.0;
  double angle_start = 0.0;
  double angle_end = 0.0;
  int samples = 2;
  /// Any of "exact", "outer", "inner", "auto", in output order.
  std::vector<std::string> methods{"exact"};

  /// UsageError on samples < 2, radius <= 0, unknown or repeated methods.
  void validate() const;
  /// Evenly spaced in the path parameter, endpoints included.
  std::vector<std::complex<double>> points() const;
};

/// Comparison CSV "x_re,x_im,method,log_mag,arg,ratio_log,ratio_arg,status".
/// One row per point and method, point-major. ratio_* compare against the
/// exact value at the same point and are empty when it is zero or for the
/// exact rows themselves. Status is "ok", "zero", "exact-zero",
/// "skipped: caustic-guard" or "error: <reason>"; rows that are not "ok"
/// carry empty numeric fields apart from x.
std::string cmd_compare(const AsymptoticParams& params, int n, const SweepSpec& sweep,
                        int precision_bits);

/// "json" gives the RootSet schema; "csv" lists every root as
/// "re,im,multiplicity".
std::string cmd_roots(int r, int n, double tol, const std::string& format);

struct RaysOutput {
  std::string rays_csv;     // "s,t,x,n,p,q,jacobian"
  std::string caustic_csv;  // "s,t,x,n,xc" on s = (r-1) t
};

/// Grid s = s_max k / steps (k = 1..steps), t = t_max j / steps (j = 0..steps),
/// plus caustic points at the same s values.
RaysOutput cmd_rays(int r, double s_max, double t_max, int steps);

}  // namespace ghp::cli
