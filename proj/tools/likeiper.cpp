// likeiper: command-line front end.
//
//   likeiper lambda  --n-max 7 --digits 20
//   likeiper verify  --table 3
//   likeiper approx  --scheme a2 --seed exact --n-max 7
//   likeiper scan    --n-max 64
//   likeiper zeros   --inversion --n-max 7
//   likeiper probe   --line im --b 1 --t0 0 --t1 30 --samples 500
//
// Exit status: 0 ok, 1 verification mismatch, 2 bad input.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "likeiper/likeiper.hpp"

#ifndef LIKEIPER_DEFAULT_DATA_DIR
#define LIKEIPER_DEFAULT_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace likeiper;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int digits = kDefaultDigits;
  int n_max = 32;
  std::string stieltjes_path;
  std::string zeros_path;
  std::string format = "tsv";
  std::string out_path;

  OutputFormat output_format() const { return parse_format(format); }
};

std::string data_dir() {
  if (const char* env = std::getenv("LIKEIPER_DATA_DIR"); env && *env) return env;
  return LIKEIPER_DEFAULT_DATA_DIR;
}

std::string resolve(const std::string& given, const char* file) {
  const std::string path = given.empty() ? (fs::path(data_dir()) / file).string() : given;
  if (!fs::is_regular_file(path)) throw InputError("data file not found: " + path);
  return path;
}

StieltjesTable stieltjes(const RunConfig& c) { return load_stieltjes(resolve(c.stieltjes_path, "stieltjes.tsv"), c.digits); }
ZeroList zeros(const RunConfig& c) { return load_zeros(resolve(c.zeros_path, "zeros.tsv"), c.digits); }

/// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw InputError("cannot write " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const RunConfig& c, const TextTable& t, const std::vector<std::string>& comments = {}) {
  Sink sink(c.out_path);
  write_table(sink.os(), t, c.output_format(), comments);
  sink.os().flush();
}

std::string fixed(const BigReal& v, int decimals) {
  std::string s = v.to_fixed(decimals);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string sci(const BigReal& v, int sig = 10) { return v.to_sci(sig); }

// ---------------------------------------------------------------- lambda

int cmd_lambda(const RunConfig& c) {
  const auto st = stieltjes(c);
  const auto t = lambda_table(c.n_max, c.digits, st);
  TextTable out{{"n", "trend_over_n", "tiny_over_n", "lambda"}, {}};
  for (const auto& r : t.rows) {
    const long n = r.n;
    out.add({std::to_string(r.n), fixed(r.trend / n, c.digits), fixed(r.tiny / n, c.digits), fixed(r.total, c.digits)});
  }
  emit(c, out);
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& c, int table, const std::string& golden_dir) {
  const std::string dir = golden_dir.empty() ? (fs::path(data_dir()) / "golden").string() : golden_dir;
  const std::string path = (fs::path(dir) / ("table" + std::to_string(table) + ".tsv")).string();
  if (!fs::is_regular_file(path)) throw InputError("golden fixture not found: " + path);
  const GoldenTable g = load_golden(path);
  if (g.id != table) throw InputError(path + " declares table " + std::to_string(g.id));
  const int n_lambda = table == 5 ? 1 : golden_n_max(g);
  const TableRecompute rc(stieltjes(c), c.digits, n_lambda);
  const VerifyReport rep = verify_golden(g, rc);

  TextTable out{{"n", "column", "printed", "recomputed", "status", "note"}, {}};
  for (const auto& r : rep.cells) {
    std::string status = r.ok ? "match" : "MISMATCH";
    if (r.flagged) status = r.ok ? "flagged" : "flagged-MISMATCH";
    out.add({std::to_string(r.cell.n), r.cell.column, r.cell.printed, r.computed, status, r.cell.reason});
  }
  emit(c, out);
  std::cerr << "table " << table << ": " << rep.cells.size() << " cells, " << rep.failures() << " mismatches, "
            << rep.flagged() << " flagged misprints\n";
  return rep.ok() ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- approx

struct ApproxOptions {
  std::string scheme = "d";
  std::string seed = "exact";
  std::string part = "total";
  std::string scale = "none";
};

int cmd_approx(const RunConfig& c, const ApproxOptions& o) {
  const RecurrenceScheme scheme = RecurrenceScheme::parse(o.scheme);
  std::optional<std::optional<BigReal>> initial;  // set for initial:c seeds
  if (o.seed == "exact") {
  } else if (o.seed == "initial") {
    initial.emplace();
  } else if (o.seed.starts_with("initial:")) {
    try {
      initial.emplace(BigReal(std::string_view(o.seed).substr(8), c.digits));
    } catch (const std::invalid_argument&) {
      throw InputError("bad seed constant in '" + o.seed + "'");
    }
  } else {
    throw InputError("unknown seed '" + o.seed + "' (expected exact, initial or initial:c)");
  }

  const auto t = lambda_table(c.n_max, c.digits, stieltjes(c));
  std::vector<BigReal> truth;
  if (o.part == "total") {
    truth = t.totals();
  } else if (o.part == "tiny") {
    truth = t.tinies();
  } else if (o.part == "trend") {
    truth = t.trends();
  } else {
    throw InputError("unknown part '" + o.part + "' (expected total, tiny or trend)");
  }
  const BigReal gamma = t.row(1).tiny;
  const auto divisor = [&](int n) {
    if (o.scale == "none") return BigReal(1L, c.digits);
    if (o.scale == "n") return BigReal(static_cast<long>(n), c.digits);
    if (o.scale == "ngamma") return gamma * static_cast<long>(n);
    throw InputError("unknown scale '" + o.scale + "' (expected none, n or ngamma)");
  };
  divisor(1);

  TextTable out{{"n", "predicted", "exact", "abs_error", "rel_error"}, {}};
  std::vector<std::string> comments = {"scheme " + scheme.name() + ", seed " + o.seed + ", part " + o.part +
                                       ", scale " + o.scale};
  if (!initial) {
    for (const auto& r : run_exact_history(scheme, truth, 2, c.n_max)) {
      const BigReal d = divisor(r.n);
      out.add({std::to_string(r.n), fixed(r.predicted / d, c.digits), fixed(*r.exact / d, c.digits),
               sci(*r.abs_error / d), r.rel_error ? sci(*r.rel_error) : "nan"});
    }
  } else {
    out.header.push_back("ratio_to_first");
    const auto seq = self_seeded_run<BigReal>(scheme, truth[1], *initial, c.n_max);
    for (int n = 1; n <= c.n_max; ++n) {
      const auto r = make_result(n, seq[n], truth[n]);
      const BigReal d = divisor(n);
      out.add({std::to_string(n), fixed(r.predicted / d, c.digits), fixed(*r.exact / d, c.digits),
               sci(*r.abs_error / d), r.rel_error ? sci(*r.rel_error) : "nan", fixed(seq[n] / seq[1], c.digits)});
    }
  }
  emit(c, out, comments);
  return kExitOk;
}

// ---------------------------------------------------------------- scan

int cmd_scan(const RunConfig& c) {
  const auto rows = conjecture_scan(c.n_max, c.digits, stieltjes(c));
  TextTable out{{"n", "ratio", "within_bound"}, {}};
  int violations = 0;
  for (const auto& r : rows) {
    if (!r.within_bound) ++violations;
    out.add({std::to_string(r.n), fixed(r.ratio, c.digits), r.within_bound ? "yes" : "NO"});
  }
  emit(c, out, {"|lambda_tiny(n)/(n gamma)| <= 1 for n = 1.." + std::to_string(c.n_max)});
  std::cerr << "scan: " << rows.size() << " values, " << violations << " violations\n";
  return violations == 0 ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- zeros

int cmd_zeros(const RunConfig& c, bool inversion, int count) {
  ZeroList z = zeros(c);
  if (count > 0) {
    if (count > z.count()) throw InputError("--count " + std::to_string(count) + " exceeds the " +
                                            std::to_string(z.count()) + " ordinates on file");
    z = z.prefix(count);
  }
  for (const auto& w : z.warnings()) std::cerr << "warning: " << w << "\n";
  std::vector<std::string> comments = {std::to_string(z.count()) + " ordinates, last " + z.last().to_fixed(6)};
  if (!inversion) {
    TextTable out{{"j", "z_partial", "z_tail_bound", "delta_bound"}, {}};
    for (int j = 1; j <= c.n_max; ++j) {
      out.add({std::to_string(j), sci(z_partial(j, z, c.digits), c.digits),
               sci(z_tail_bound(j, z.last().with_digits(c.digits)), c.digits), sci(delta_bound(j, c.digits), c.digits)});
    }
    emit(c, out, comments);
    return kExitOk;
  }
  const auto t = lambda_table(c.n_max, c.digits, stieltjes(c));
  TextTable out{{"n", "lhs", "z_partial", "gap", "z_tail_bound", "consistent"}, {}};
  int bad = 0;
  for (int n = 1; n <= c.n_max; ++n) {
    const auto r = inversion_check(n, t, z);
    if (!r.consistent) ++bad;
    out.add({std::to_string(n), sci(r.lhs, c.digits), sci(r.partial, c.digits), sci(r.gap, 10), sci(r.tail, 10),
             r.consistent ? "yes" : "NO"});
  }
  emit(c, out, comments);
  std::cerr << "zeros: " << c.n_max << " checks, " << bad << " inconsistent\n";
  return bad == 0 ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- probe

struct ProbeOptions {
  std::string line = "im";
  std::string fixed_re = "1";
  std::string fixed_im = "1";
  std::string b0 = "1", b1 = "10";
  std::string t0 = "0", t1 = "30";
  int samples = 500;
  double tol = 1e-6;
};

int cmd_probe(const RunConfig& c, const ProbeOptions& o) {
  const auto num = [&](const std::string& s, const char* what) {
    try {
      return BigReal(s, c.digits);
    } catch (const std::invalid_argument&) {
      throw InputError(std::string("bad value for ") + what + ": '" + s + "'");
    }
  };
  if (o.line != "re" && o.line != "im") throw InputError("--line must be re or im");
  const bool vary_re = o.line == "re";
  LineSpec spec{vary_re ? LineKind::kVaryRe : LineKind::kVaryIm,
                vary_re ? num(o.fixed_im, "--t") : num(o.fixed_re, "--b"),
                vary_re ? num(o.b0, "--b0") : num(o.t0, "--t0"),
                vary_re ? num(o.b1, "--b1") : num(o.t1, "--t1"),
                o.samples,
                c.digits,
                o.tol};
  if (!(spec.hi > spec.lo)) throw InputError("probe range is empty");
  const ProbeReport rep = line_probe(spec);

  const int dec = std::min(c.digits, 20);
  TextTable out{{vary_re ? "b" : "t", "re_f", "im_f"}, {}};
  for (const auto& s : rep.samples) {
    if (s.f) {
      out.add({fixed(s.param, dec), fixed(s.f->re, dec), fixed(s.f->im, dec)});
    } else {
      out.add({fixed(s.param, dec), "nan", "nan"});
    }
  }
  const std::string verdict = rep.sampled_injective() ? "sampled-injective" : "NOT sampled-injective";
  std::ostringstream tol;
  tol << o.tol;
  std::vector<std::string> comments = {
      std::string(vary_re ? "s = b + i t, t = " + o.fixed_im + ", b in [" + o.b0 + ", " + o.b1 + "]"
                          : "s = b + i t, b = " + o.fixed_re + ", t in [" + o.t0 + ", " + o.t1 + "]"),
      std::to_string(o.samples) + " samples, " + std::to_string(c.digits) + " digits, tol " + tol.str(),
      "verdict: " + verdict,
      "near-collisions: " + std::to_string(rep.collisions.size()),
      "failed samples: " + std::to_string(rep.failures),
      std::string("Re f strictly monotone: ") + (rep.re_monotone ? "yes" : "no"),
      std::string("Im f strictly monotone: ") + (rep.im_monotone ? "yes" : "no")};
  emit(c, out, comments);
  for (const auto& col : rep.collisions) {
    std::cerr << "near-collision: samples " << col.i << " and " << col.j << ", |df| = " << col.distance << "\n";
  }
  for (const auto& s : rep.samples) {
    if (!s.f) std::cerr << "skipped: " << s.issue << "\n";
  }
  std::cerr << "probe: " << verdict << " (" << rep.collisions.size() << " near-collisions, " << rep.failures
            << " failed samples)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Li-Keiper coefficients: computation, approximation schemes and checks"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--digits", cfg.digits, "working precision in decimal digits")->check(CLI::Range(10, 100000));
  app.add_option("--n-max", cfg.n_max, "largest n")->check(CLI::PositiveNumber);
  app.add_option("--stieltjes", cfg.stieltjes_path, "Stieltjes constants file");
  app.add_option("--zeros", cfg.zeros_path, "zero ordinates file");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "tsv"}));
  app.add_option("--out", cfg.out_path, "output file (default: standard output)");

  auto* lambda = app.add_subcommand("lambda", "lambda_trend(n)/n, lambda_tiny(n)/n and lambda(n)");

  auto* verify = app.add_subcommand("verify", "recompute a golden table and compare");
  int table = 0;
  std::string golden_dir;
  verify->add_option("--table", table, "table number")->required()->check(CLI::Range(1, 5));
  verify->add_option("--golden-dir", golden_dir, "fixture directory (default: <data>/golden)");

  auto* approx = app.add_subcommand("approx", "recurrence approximation schemes");
  ApproxOptions ao;
  approx->add_option("--scheme", ao.scheme, "a1, b, d, a2 or m:k")->capture_default_str();
  approx->add_option("--seed", ao.seed, "exact, initial or initial:c (lambda(2) = c lambda(1))")->capture_default_str();
  approx->add_option("--part", ao.part, "total, tiny or trend")->capture_default_str();
  approx->add_option("--scale", ao.scale, "divide values by: none, n or ngamma")->capture_default_str();

  auto* scan = app.add_subcommand("scan", "conjecture scan |lambda_tiny(n)/(n gamma)| <= 1");

  auto* zsub = app.add_subcommand("zeros", "zero sums Z(j), tail bounds and the binomial inversion check");
  bool inversion = false;
  int count = 0;
  zsub->add_flag("--inversion", inversion, "check sum_k (-1)^(k+1) C(2n,n-k) lambda_k against Z(n)");
  zsub->add_option("--count", count, "use only the first COUNT ordinates")->check(CLI::PositiveNumber);

  auto* probe = app.add_subcommand("probe", "sample f(s) along a line and test sampled injectivity");
  ProbeOptions po;
  probe->add_option("--line", po.line, "re (vary Re s) or im (vary Im s)")->capture_default_str();
  probe->add_option("--b", po.fixed_re, "Re s on an im line")->capture_default_str();
  probe->add_option("--t", po.fixed_im, "Im s on a re line")->capture_default_str();
  probe->add_option("--b0", po.b0, "re line start")->capture_default_str();
  probe->add_option("--b1", po.b1, "re line end")->capture_default_str();
  probe->add_option("--t0", po.t0, "im line start")->capture_default_str();
  probe->add_option("--t1", po.t1, "im line end")->capture_default_str();
  probe->add_option("--samples", po.samples, "grid points")->check(CLI::Range(2, 1000000))->capture_default_str();
  probe->add_option("--tol", po.tol, "near-collision tolerance on |f(s1) - f(s2)|")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*lambda) return cmd_lambda(cfg);
    if (*verify) return cmd_verify(cfg, table, golden_dir);
    if (*approx) return cmd_approx(cfg, ao);
    if (*scan) return cmd_scan(cfg);
    if (*zsub) return cmd_zeros(cfg, inversion, count);
    if (*probe) {
      if (app.count("--digits") == 0) cfg.digits = 30;
      return cmd_probe(cfg, po);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
