#pragma once

// Command-line front end and the pieces it is built from: parallel sweeps,
// the CSV schema, the SVG scatter plot and the verification suites.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "falt/height.hpp"
#include "falt/real.hpp"

namespace falt::app {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// CSV content that does not follow the sweep schema; `line` is 1-based.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline constexpr std::int64_t kSweepMax = 100'000;
inline constexpr int kDefaultDigits = 20;
inline constexpr const char* kCsvHeader =
    "n,h_fal,finite_sum,log_n_term,pi_term,two_term,gamma_term,lower_bound,upper_bound";

/// The corollary envelope is moved from h - (n/8) log n back onto h.
struct SweepRow {
  HeightBreakdown height;
  Real lower_bound;
  Real upper_bound;
};

SweepRow sweep_row(std::int64_t n, const PrecisionContext& ctx);

/// Odd n in [from, to], computed by `jobs` workers (each with its own
/// context) and returned in increasing n.
std::vector<SweepRow> compute_sweep(std::int64_t from, std::int64_t to, Precision bits, unsigned jobs);

/// Header plus one line per row, `digits` significant digits, LF endings.
std::string sweep_csv(const std::vector<SweepRow>& rows, int digits);

/// Writes through a temporary sibling and renames it into place; the
/// temporary is removed on failure.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

struct PlotPoint {
  std::int64_t n = 0;
  double h = 0;
  double lower = 0;
  double upper = 0;
};

/// Parses sweep CSV. Throws SchemaError on a bad header, a malformed row, or
/// when there are no data rows.
std::vector<PlotPoint> parse_sweep_csv(std::istream& in);

/// 960x600 scatter of (n, h), optionally with the two envelope curves.
std::string render_svg(const std::vector<PlotPoint>& points, bool envelope);

struct SuiteResult {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

SuiteResult verify_bounds(std::int64_t from, std::int64_t to, Precision bits, unsigned jobs);
SuiteResult verify_clusters(std::int64_t from, std::int64_t to);
SuiteResult verify_archimedean(const std::vector<std::int64_t>& ns, Precision bits);
SuiteResult verify_constants(Precision bits);

/// Full CLI. Returns the process exit status: 0 success, 1 failed
/// verification or runtime error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace falt::app
