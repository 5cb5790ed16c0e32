#include "falt/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "falt/archimedean.hpp"
#include "falt/bound_constants.hpp"
#include "falt/bounds.hpp"
#include "falt/cluster.hpp"
#include "falt/gamma.hpp"

namespace falt::app {

namespace {

// 50-digit reference values.
constexpr const char* kZetaPrimeMinusOneRef = "-0.1654211437004509292139196602427806427640363803352";
constexpr const char* kLogGlaisherRef = "0.24875447703378426254725299357611397609736971366853";

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// Runs fn(i, ctx) for i in [0, count) on up to `jobs` threads, each with its
// own precision context. Results keep their index; the first exception wins.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, Precision bits, F fn) {
  std::vector<T> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      PrecisionContext ctx(bits);
      for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i, ctx);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = count;
    }
    mpfr_free_cache();
  };
  jobs = static_cast<unsigned>(std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<std::int64_t> odd_range(std::int64_t from, std::int64_t to) {
  std::vector<std::int64_t> ns;
  for (std::int64_t n = from | 1; n <= to; n += 2) ns.push_back(n);
  return ns;
}

void collect(SuiteResult& result, const BoundReport& r) {
  ++result.checked;
  if (!r.satisfied) result.failures.push_back(format_bound_report(r));
}

void expect(SuiteResult& result, bool ok, const std::string& what) {
  ++result.checked;
  if (!ok) result.failures.push_back(what);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_double(const std::string& s, std::size_t line, const char* column) {
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (s.empty() || end != begin + s.size() || !std::isfinite(v)) {
    throw SchemaError(line, std::string("column ") + column + ": not a number: '" + s + "'");
  }
  return v;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Round tick spacing: 1, 2 or 5 times a power of ten, about `target` ticks.
double tick_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0}) {
    if (m * mag >= raw) return m * mag;
  }
  return 10 * mag;
}

}  // namespace

SweepRow sweep_row(std::int64_t n, const PrecisionContext& ctx) {
  SweepRow row;
  row.height = faltings_height(n, ctx);
  const BoundReport env = corollary_bounds_check(row.height, ctx);
  row.lower_bound = env.lower + row.height.log_n_term;
  row.upper_bound = env.upper + row.height.log_n_term;
  return row;
}

std::vector<SweepRow> compute_sweep(std::int64_t from, std::int64_t to, Precision bits, unsigned jobs) {
  const auto ns = odd_range(from, to);
  return parallel_map<SweepRow>(ns.size(), jobs, bits,
                                [&](std::size_t i, const PrecisionContext& ctx) { return sweep_row(ns[i], ctx); });
}

std::string sweep_csv(const std::vector<SweepRow>& rows, int digits) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    const auto& h = r.height;
    out += std::to_string(h.n);
    for (const Real* v : {&h.total, &h.finite_sum, &h.log_n_term, &h.pi_term, &h.two_term, &h.gamma_term,
                          &r.lower_bound, &r.upper_bound}) {
      out += ',';
      out += v->to_string(digits);
    }
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".partial";
  try {
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
      f.write(content.data(), static_cast<std::streamsize>(content.size()));
      f.flush();
      if (!f) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw;
  }
}

std::vector<PlotPoint> parse_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw SchemaError(1, "empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw SchemaError(1, "unexpected header '" + line + "'");
  std::vector<PlotPoint> points;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 9) throw SchemaError(lineno, "expected 9 fields, found " + std::to_string(f.size()));
    PlotPoint p;
    const double n = parse_double(f[0], lineno, "n");
    if (n != std::floor(n) || n < 1) throw SchemaError(lineno, "column n: not a positive integer");
    p.n = static_cast<std::int64_t>(n);
    p.h = parse_double(f[1], lineno, "h_fal");
    for (std::size_t i = 2; i <= 6; ++i) parse_double(f[i], lineno, "term");
    p.lower = parse_double(f[7], lineno, "lower_bound");
    p.upper = parse_double(f[8], lineno, "upper_bound");
    points.push_back(p);
  }
  if (points.empty()) throw SchemaError(lineno, "no data rows");
  return points;
}

std::string render_svg(const std::vector<PlotPoint>& points, bool envelope) {
  if (points.empty()) throw std::invalid_argument("render_svg: no points");
  constexpr double kW = 960, kH = 600, kLeft = 80, kRight = 20, kTop = 30, kBottom = 60;
  auto sorted = points;
  std::sort(sorted.begin(), sorted.end(), [](const PlotPoint& a, const PlotPoint& b) { return a.n < b.n; });

  double x0 = static_cast<double>(sorted.front().n), x1 = static_cast<double>(sorted.back().n);
  double y0 = sorted.front().h, y1 = y0;
  for (const auto& p : sorted) {
    y0 = std::min(y0, envelope ? p.lower : p.h);
    y1 = std::max(y1, envelope ? p.upper : p.h);
  }
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  const double pad = (y1 - y0) * 0.03;
  y0 -= pad;
  y1 += pad;
  auto sx = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * (kW - kLeft - kRight); };
  auto sy = [&](double y) { return kH - kBottom - (y - y0) / (y1 - y0) * (kH - kTop - kBottom); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 960 600\" width=\"960\" height=\"600\">\n"
     << "<rect width=\"960\" height=\"600\" fill=\"white\"/>\n"
     << "<g stroke=\"black\" stroke-width=\"1\">\n"
     << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kH - kBottom) << "\" x2=\"" << fmt(kW - kRight) << "\" y2=\""
     << fmt(kH - kBottom) << "\"/>\n"
     << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(kLeft) << "\" y2=\""
     << fmt(kH - kBottom) << "\"/>\n"
     << "</g>\n";

  os << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  const double xs = tick_step(x1 - x0, 8);
  for (double t = std::ceil(x0 / xs) * xs; t <= x1; t += xs) {
    os << "<line x1=\"" << fmt(sx(t)) << "\" y1=\"" << fmt(kH - kBottom) << "\" x2=\"" << fmt(sx(t)) << "\" y2=\""
       << fmt(kH - kBottom + 5) << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << fmt(sx(t)) << "\" y=\"" << fmt(kH - kBottom + 20) << "\" text-anchor=\"middle\">"
       << static_cast<long long>(std::llround(t)) << "</text>\n";
  }
  const double ys = tick_step(y1 - y0, 8);
  for (double t = std::ceil(y0 / ys) * ys; t <= y1; t += ys) {
    os << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(sy(t)) << "\" x2=\"" << fmt(kLeft) << "\" y2=\""
       << fmt(sy(t)) << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(sy(t) + 4) << "\" text-anchor=\"end\">"
       << static_cast<long long>(std::llround(t)) << "</text>\n";
  }
  os << "<text x=\"" << fmt((kLeft + kW - kRight) / 2) << "\" y=\"" << fmt(kH - 15)
     << "\" text-anchor=\"middle\">n</text>\n"
     << "<text x=\"20\" y=\"" << fmt((kTop + kH - kBottom) / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
     << fmt((kTop + kH - kBottom) / 2) << ")\">h_Fal(X_n)</text>\n"
     << "</g>\n";

  os << "<g fill=\"#1f4e9c\">\n";
  for (const auto& p : sorted) {
    os << "<circle cx=\"" << fmt(sx(static_cast<double>(p.n))) << "\" cy=\"" << fmt(sy(p.h)) << "\" r=\"1\"/>\n";
  }
  os << "</g>\n";
  if (envelope) {
    for (int side = 0; side < 2; ++side) {
      os << "<polyline class=\"envelope\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1\" points=\"";
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double y = side == 0 ? sorted[i].lower : sorted[i].upper;
        os << (i ? " " : "") << fmt(sx(static_cast<double>(sorted[i].n))) << ',' << fmt(sy(y));
      }
      os << "\"/>\n";
    }
  }

  os << "</svg>\n";
  return os.str();
}

SuiteResult verify_bounds(std::int64_t from, std::int64_t to, Precision bits, unsigned jobs) {
  const auto ns = odd_range(std::max<std::int64_t>(from, 3), to);
  auto per_n = parallel_map<SuiteResult>(ns.size(), jobs, bits, [&](std::size_t i, const PrecisionContext& ctx) {
    SuiteResult r;
    const std::int64_t n = ns[i];
    const HeightBreakdown h = faltings_height(n, ctx);
    const BoundReport cor = corollary_bounds_check(h, ctx);
    collect(r, cor);
    collect(r, gamma_sum_bounds(n, -h.gamma_term, ctx));
    collect(r, prime_sum_bounds(n, ctx));
    const BoundReport mid = intermediate_bound_check(h, ctx);
    collect(r, mid);
    expect(r, mid.upper < cor.upper + h.log_n_term,
           "intermediate n=" + std::to_string(n) + " FAIL intermediate bound above the final upper bound");
    collect(r, cm_bound_check(h, ctx));
    if (is_prime(n)) {
      expect(r, n - 1 - euler_phi(n) == 0, "cm n=" + std::to_string(n) + " FAIL nonzero Remond term at a prime");
    }
    return r;
  });
  SuiteResult total;
  for (auto& r : per_n) {
    total.checked += r.checked;
    for (auto& f : r.failures) total.failures.push_back(std::move(f));
  }
  const PrecisionContext ctx(bits);
  for (const auto& r : rosser_schoenfeld_checks(std::clamp<std::int64_t>(to, 100'000, kSieveLimit), ctx)) {
    collect(total, r);
  }
  return total;
}

SuiteResult verify_clusters(std::int64_t from, std::int64_t to) {
  if (to > kBruteForceMaxN) throw UsageError("clusters suite: --to above " + std::to_string(kBruteForceMaxN));
  SuiteResult r;
  for (std::int64_t n : odd_range(std::max<std::int64_t>(from, 3), to)) {
    for (const auto& pp : factorize(n)) {
      const ClusterPicture closed = cluster_picture(n, pp.prime);
      const std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(pp.prime);
      expect(r, brute_force_clusters(n, pp.prime) == closed, "clusters " + tag + " FAIL brute force differs");
      if (n >= 5) {
        const Rational ord = kunzweiler_order(closed);
        const Rational expected = ord_lambda(n, pp.prime);
        expect(r, ord == expected,
               "order " + tag + " FAIL " + ord.to_string() + " != " + expected.to_string());
      }
    }
  }
  return r;
}

SuiteResult verify_archimedean(const std::vector<std::int64_t>& ns, Precision bits) {
  const PrecisionContext ctx(bits);
  const Real det_tol = Real::from_string("1e-20", ctx.working_bits());
  const Real entry_tol = min(Real::from_string("1e-25", ctx.working_bits()), ctx.quadrature_target() * 10);
  SuiteResult r;
  for (std::int64_t n : ns) {
    const std::string tag = "n=" + std::to_string(n);
    const Real closed = closed_form_log_det(n, ctx);
    const Real numeric = numeric_log_det(n, ctx, EntryPath::kBeta);
    const Real rel = abs(numeric - closed) / abs(closed);
    expect(r, rel < det_tol, "determinant " + tag + " FAIL rel_err=" + rel.to_string(6));

    const ComplexMatrix beta = period_matrix_a(n, ctx, EntryPath::kBeta);
    const ComplexMatrix quad = period_matrix_a(n, ctx, EntryPath::kQuadrature);
    Real worst(ctx.working_bits());
    for (std::size_t j = 0; j < beta.rows(); ++j)
      for (std::size_t k = 0; k < beta.cols(); ++k)
        worst = max(worst, (quad(j, k) - beta(j, k)).abs() / beta(j, k).abs());
    expect(r, worst < entry_tol, "entries " + tag + " FAIL quadrature vs beta " + worst.to_string(6));

    const PeriodMatrices pm = period_matrices(beta);
    const Real residual = bilinear_residual(pm);
    expect(r, residual < ctx.function_tolerance() * max(Real(1, ctx.working_bits()), beta.max_abs() * beta.max_abs()),
           "bilinear " + tag + " FAIL residual " + residual.to_string(6));
    expect(r, is_positive_definite(gram_matrix(n, ctx), ctx.function_tolerance()),
           "gram " + tag + " FAIL not Hermitian positive definite");
    expect(r, log_lambda_norm(n, ctx).is_finite(), "lambda_norm " + tag + " FAIL not finite");
  }
  return r;
}

SuiteResult verify_constants(Precision bits) {
  const PrecisionContext ctx(bits);
  const PrecisionContext twice(2 * bits);
  SuiteResult r;
  for (const auto& c : constant_chain_checks(ctx)) collect(r, c);

  auto stable = [&](const char* name, const Real& lo, const Real& hi) {
    const Real diff = abs(lo - hi);
    expect(r, diff <= ctx.function_tolerance() * max(Real(1, ctx.working_bits()), abs(hi)),
           std::string(name) + " FAIL precision doubling moved the value by " + diff.to_string(6));
  };
  stable("zeta_prime_minus_one", zeta_prime_minus_one(ctx), zeta_prime_minus_one(twice));
  stable("log_barnes_g_half", log_barnes_g_half(ctx), log_barnes_g_half(twice));
  stable("gamma_sum_slope", gamma_sum_slope(ctx), gamma_sum_slope(twice));

  const Real ref_tol = max(ctx.function_tolerance(), Real::from_string("1e-48", ctx.working_bits()));
  auto against = [&](const char* name, const Real& v, const char* ref) {
    const Real diff = abs(v - Real::from_string(ref, ctx.working_bits()));
    expect(r, diff <= ref_tol, std::string(name) + " FAIL off reference by " + diff.to_string(6));
  };
  against("zeta_prime_minus_one_reference", zeta_prime_minus_one(ctx), kZetaPrimeMinusOneRef);
  against("log_glaisher_reference", log_glaisher(ctx), kLogGlaisherRef);

  const DeligneCheck d = deligne_check(ctx);
  const Real rel = abs(d.formula_value - d.deligne_value) / abs(d.deligne_value);
  expect(r, rel <= ldexp_one(16 - bits, ctx.working_bits()), "deligne FAIL rel_err=" + rel.to_string(6));
  return r;
}

namespace {

Precision default_bits() {
  if (const char* env = std::getenv("FALT_BITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0') throw UsageError("FALT_BITS is not an integer");
    return v;
  }
  return PrecisionContext::kDefaultBits;
}

void check_bits(Precision bits) {
  if (bits < 64) throw UsageError("--bits must be at least 64");
}

void check_digits(int digits) {
  if (digits < 1 || digits > 1000) throw UsageError("--digits must be in 1..1000");
}

void check_odd(std::int64_t n) {
  if (n < 3 || n % 2 == 0) throw UsageError("--n must be an odd integer >= 3");
}

std::vector<std::int64_t> parse_set(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const auto& f : split_csv_line(s)) {
    char* end = nullptr;
    const long long v = std::strtoll(f.c_str(), &end, 10);
    if (f.empty() || *end != '\0' || v < 2) throw UsageError("--set: bad entry '" + f + "'");
    out.push_back(v);
  }
  return out;
}

int report_suite(const char* name, const SuiteResult& r, std::ostream& out) {
  for (const auto& f : r.failures) out << f << '\n';
  out << "suite " << name << ": " << r.checked << " checks, " << r.failures.size() << " failed\n";
  return r.ok() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App cli{"Stable Faltings heights of y^2 = x(1 - x^n)", "falt"};
  cli.require_subcommand(1);

  Precision bits = 0;
  int digits = kDefaultDigits;
  unsigned jobs = default_jobs();
  std::int64_t n = 0, p = 0, from = 3, to = 6001;
  bool json = false, envelope = false;
  std::string out_path, in_path, suite, set;

  auto add_bits = [&](CLI::App* sub) { sub->add_option("--bits", bits, "Target precision in bits (>= 64)"); };

  auto* compute = cli.add_subcommand("compute", "Height of X_n with its five summands");
  compute->add_option("--n", n, "Odd n >= 3")->required();
  add_bits(compute);
  compute->add_option("--digits", digits, "Significant digits");
  compute->add_flag("--json", json, "key=value lines");

  auto* sweep = cli.add_subcommand("sweep", "CSV of heights over odd n in a range");
  sweep->add_option("--from", from, "First n");
  sweep->add_option("--to", to, "Last n");
  sweep->add_option("--out", out_path, "Output CSV")->required();
  add_bits(sweep);
  sweep->add_option("--digits", digits, "Significant digits");
  sweep->add_option("--jobs", jobs, "Worker threads");

  auto* plot = cli.add_subcommand("plot", "SVG scatter plot from a sweep CSV");
  plot->add_option("--in", in_path, "Sweep CSV")->required();
  plot->add_option("--out", out_path, "Output SVG")->required();
  plot->add_flag("--envelope", envelope, "Overlay the two-sided envelope");

  auto* verify = cli.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "bounds | clusters | archimedean | constants")
      ->required()
      ->check(CLI::IsMember({"bounds", "clusters", "archimedean", "constants"}));
  auto* from_opt = verify->add_option("--from", from, "First n");
  auto* to_opt = verify->add_option("--to", to, "Last n");
  verify->add_option("--set", set, "Comma-separated n (archimedean)");
  add_bits(verify);
  verify->add_option("--jobs", jobs, "Worker threads");

  auto* clusters = cli.add_subcommand("clusters", "Cluster pictures and section orders");
  clusters->add_option("--n", n, "Odd n >= 3")->required();
  clusters->add_option("--p", p, "Odd prime dividing n (default: all)");

  auto* arch = cli.add_subcommand("archimedean", "Period-matrix report");
  arch->add_option("--n", n, "n >= 2")->required();
  add_bits(arch);
  arch->add_option("--digits", digits, "Significant digits");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return cli.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return cli.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    cli.exit(e, out, err);
    return 2;
  }

  try {
    if (bits == 0) bits = default_bits();
    check_bits(bits);
    check_digits(digits);
    if (jobs == 0) throw UsageError("--jobs must be positive");

    if (compute->parsed()) {
      check_odd(n);
      const PrecisionContext ctx(bits);
      const HeightBreakdown h = faltings_height(n, ctx);
      const std::pair<const char*, const Real*> fields[] = {
          {"finite_sum", &h.finite_sum}, {"log_n_term", &h.log_n_term}, {"pi_term", &h.pi_term},
          {"two_term", &h.two_term},     {"gamma_term", &h.gamma_term}, {"total", &h.total}};
      if (json) {
        out << "n=" << n << "\ngenus=" << h.genus << "\nbits=" << bits << '\n';
        for (const auto& [k, v] : fields) out << k << '=' << v->to_string(digits) << '\n';
      } else {
        out << std::left << std::setw(12) << "n" << n << '\n' << std::setw(12) << "genus" << h.genus << '\n';
        for (const auto& [k, v] : fields) out << std::setw(12) << k << v->to_string(digits) << '\n';
      }
      return 0;
    }

    if (sweep->parsed()) {
      from = std::max<std::int64_t>(from, 3) | 1;
      if (to % 2 == 0) --to;
      if (to > kSweepMax) throw UsageError("--to above " + std::to_string(kSweepMax));
      if (from > to) throw UsageError("empty range after clamping to odd n >= 3");
      write_file_atomic(out_path, sweep_csv(compute_sweep(from, to, bits, jobs), digits));
      err << "wrote " << (to - from) / 2 + 1 << " rows to " << out_path << '\n';
      return 0;
    }

    if (plot->parsed()) {
      std::ifstream in(in_path, std::ios::binary);
      if (!in) throw std::runtime_error("cannot open " + in_path);
      std::vector<PlotPoint> points;
      try {
        points = parse_sweep_csv(in);
      } catch (const SchemaError& e) {
        throw std::runtime_error(in_path + ": " + e.what());
      }
      write_file_atomic(out_path, render_svg(points, envelope));
      return 0;
    }

    if (verify->parsed()) {
      if (suite == "bounds") {
        if (to > kSweepMax) throw UsageError("--to above " + std::to_string(kSweepMax));
        return report_suite("bounds", verify_bounds(from, to, bits, jobs), out);
      }
      if (suite == "clusters") {
        if (!to_opt->count()) to = 299;
        if (!from_opt->count()) from = 3;
        return report_suite("clusters", verify_clusters(from, to), out);
      }
      if (suite == "archimedean") {
        const auto ns = set.empty() ? std::vector<std::int64_t>{2, 3, 4, 5, 7, 9, 11, 15} : parse_set(set);
        return report_suite("archimedean", verify_archimedean(ns, bits), out);
      }
      return report_suite("constants", verify_constants(bits), out);
    }

    if (clusters->parsed()) {
      check_odd(n);
      std::vector<std::int64_t> primes;
      if (p != 0) {
        primes.push_back(p);
      } else {
        for (const auto& pp : factorize(n)) primes.push_back(pp.prime);
      }
      for (std::int64_t q : primes) {
        ClusterPicture pic;
        try {
          pic = cluster_picture(n, q);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        out << "p=" << q << " order=" << kunzweiler_order(pic).to_string() << '\n' << format_cluster_picture(pic);
      }
      return 0;
    }

    if (arch->parsed()) {
      if (n < 2) throw UsageError("--n must be >= 2");
      out << format_report(archimedean_report(n, PrecisionContext(bits)), digits);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace falt::app
