#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dickson/bench.hpp"
#include "dickson/engine.hpp"
#include "dickson/errors.hpp"
#include "dickson/graycodes.hpp"
#include "dickson/seedgen.hpp"

namespace dickson::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 7;

struct Range {
  long lo = 0;
  long hi = 0;
};

// "a..b" or a single integer "a".
Range parse_range(const std::string& text, const char* what) {
  Range r;
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stol(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string a = text.substr(0, dots);
      const std::string b = text.substr(dots + 2);
      r.lo = std::stol(a, &used);
      if (used != a.size()) throw std::invalid_argument(text);
      r.hi = std::stol(b, &used);
      if (used != b.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw InvalidArgument(std::string("invalid ") + what + " range '" + text + "'");
  }
  if (r.lo > r.hi) throw InvalidArgument(std::string("empty ") + what + " range '" + text + "'");
  return r;
}

std::uint64_t parse_seed(const std::string& text) {
  if (text == "random") return std::random_device{}();
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used == text.size() && text.find('-') == std::string::npos) return v;
  } catch (const std::logic_error&) {
  }
  throw InvalidArgument("--seed must be a non-negative integer or 'random'");
}

// Writes to --output when given, otherwise to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::out | std::ios::trunc);
      if (!file_) throw InvalidArgument("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct FactorFlags {
  std::uint64_t p = 0;
  int e = 1;
  std::string mode = "generator";
  std::vector<int> indices;
  std::string seed = std::to_string(kDefaultSeed);
  std::string search = "lex";
  bool no_verify = false;
  bool trace = false;
  std::string output;
};

void add_factor_flags(CLI::App* cmd, FactorFlags& f, bool targeted) {
  cmd->add_option("--p", f.p, "Odd prime p")->required();
  cmd->add_option("--e", f.e, "Precision exponent e >= 1 (ring Z/p^e)")->capture_default_str();
  if (!targeted) {
    cmd->add_option("--mode", f.mode, "generator or targeted")
        ->check(CLI::IsMember({"generator", "targeted"}))
        ->capture_default_str();
  }
  cmd->add_option("--indices", f.indices,
                  targeted ? "Slots to lift, 1..floor(p/4); default all"
                           : "Slots to lift in targeted mode, 1..floor(p/4)")
      ->delimiter(',');
  cmd->add_option("--seed", f.seed, "RNG seed for the primitive search, or 'random'")
      ->capture_default_str();
  cmd->add_option("--search", f.search, "Primitive quadratic search: lex or random")
      ->check(CLI::IsMember({"lex", "random"}))
      ->capture_default_str();
  cmd->add_flag("--no-verify", f.no_verify, "Skip the product check");
  cmd->add_flag("--trace", f.trace, "Include per-level lift values in the JSON");
  cmd->add_option("--output", f.output, "Write JSON here instead of stdout");
}

int run_factor(const FactorFlags& flags, bool targeted, std::ostream& out) {
  FactorOptions opts;
  opts.mode = targeted || flags.mode == "targeted" ? FactorMode::targeted : FactorMode::generator;
  opts.search = flags.search == "random" ? SeedSearch::random : SeedSearch::lexicographic;
  opts.rng_seed = parse_seed(flags.seed);
  opts.verify = !flags.no_verify;
  opts.trace = flags.trace;
  opts.indices = flags.indices;
  if (opts.mode == FactorMode::targeted && opts.indices.empty()) {
    for (int i = 1; i <= static_cast<int>(flags.p / 4); ++i) opts.indices.push_back(i);
  }
  const Factorization f = factor(flags.p, flags.e, opts);
  Sink sink(flags.output, out);
  sink.get() << to_json(f).dump(2) << '\n';
  return kOk;
}

struct VerifyFlags {
  std::string input;
};

int run_verify(const VerifyFlags& flags, std::ostream& out, std::ostream& err) {
  std::ifstream in(flags.input);
  if (!in) throw InvalidArgument("cannot read " + flags.input);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed JSON: ") + ex.what());
  }
  const auto polys = factor_polys_from_json(doc);
  if (polys.empty()) throw InvalidArgument("document lists no factors");
  const std::uint64_t p = polys.front().modulus().p();
  if (!verify_product(polys, p + 1)) {
    err << "verification failed: product differs from x^" << p + 1 << " - 1\n";
    return kVerification;
  }
  out << "ok: " << polys.size() << " factors multiply to x^" << p + 1 << " - 1 mod " << p << '^'
      << polys.front().modulus().e() << '\n';
  return kOk;
}

struct BenchFlags {
  std::uint64_t pmin = 101;
  std::uint64_t pmax = 5003;
  int count = 12;
  std::vector<std::uint64_t> p;
  std::string e = "1";
  int reps = 5;
  bool no_baseline = false;
  std::string seed = "1";
  std::string output;
};

int run_bench(const BenchFlags& flags, std::ostream& out) {
  std::vector<std::uint64_t> primes = flags.p;
  if (primes.empty()) primes = log_spaced_primes(flags.pmin, flags.pmax, flags.count);
  if (primes.empty()) throw InvalidArgument("benchmark sweep is empty");
  for (std::uint64_t p : primes) {
    if (p == 2 || !is_prime(p)) throw InvalidArgument("p must be an odd prime");
  }
  const Range er = parse_range(flags.e, "e");
  if (er.lo < 1) throw InvalidArgument("e must be at least 1");
  std::vector<int> exps;
  for (long e = er.lo; e <= er.hi; ++e) exps.push_back(static_cast<int>(e));
  if (flags.reps < 1) throw InvalidArgument("--reps must be positive");

  BenchConfig config;
  config.repetitions = flags.reps;
  config.with_baseline = !flags.no_baseline;
  config.rng_seed = parse_seed(flags.seed);
  const auto rows = bench_suite(primes, exps, config);
  Sink sink(flags.output, out);
  write_bench_csv(sink.get(), rows);
  return kOk;
}

struct CodesFlags {
  std::uint64_t p = 13;
  int e = 2;
  std::string rank;
  std::uint64_t samples = 1000000;
  std::string seed = std::to_string(kDefaultSeed);
  unsigned workers = 0;
  std::optional<double> budget;
  bool symmetry = false;
  std::string output;
};

int run_codes(const CodesFlags& flags, std::ostream& out) {
  if (flags.e != 2) throw UnsupportedExponent("codes are defined over Z/p^2 only (--e 2)");
  if (flags.samples < 1) throw InvalidArgument("--samples must be positive");
  const double budget = flags.budget ? *flags.budget : budget_from_env();
  if (budget <= 0) throw InvalidArgument("--budget must be positive");
  const std::uint64_t seed = parse_seed(flags.seed);
  if (!flags.symmetry && flags.rank.empty()) throw InvalidArgument("--rank is required");
  std::optional<Range> ranks;
  if (!flags.rank.empty()) {
    ranks = parse_range(flags.rank, "rank");
    if (ranks->lo < 1 || ranks->hi > static_cast<long>(flags.p)) {
      throw InvalidArgument("--rank must lie within 1.." + std::to_string(flags.p));
    }
  }

  const Factorization f = factor(flags.p, 2);
  std::vector<CodeRow> rows;
  if (flags.symmetry) {
    rows = symmetry_experiment(f, flags.workers, budget).rows;
  } else {
    SearchOptions opts;
    opts.rank_min = static_cast<int>(ranks->lo);
    opts.rank_max = static_cast<int>(ranks->hi);
    opts.samples = flags.samples;
    opts.rng_seed = seed;
    opts.workers = flags.workers;
    opts.budget = budget;
    rows = search_codes(f, opts);
  }
  Sink sink(flags.output, out);
  write_codes_csv(sink.get(), rows);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factor x^(p+1) - 1 over Z/p^e and build LCD codes over Z/p^2", "dickson"};
  app.require_subcommand(1);
  app.allow_extras(false);

  FactorFlags factor_flags;
  add_factor_flags(app.add_subcommand("factor", "Factor x^(p+1) - 1 and print JSON"),
                   factor_flags, false);
  FactorFlags lift_flags;
  add_factor_flags(app.add_subcommand("lift", "Lift selected quadratic slots (targeted mode)"),
                   lift_flags, true);

  VerifyFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "Check a factorization JSON by multiplying out");
  verify_cmd->add_option("--input", verify_flags.input, "Factorization JSON file")->required();

  BenchFlags bench_flags;
  auto* bench_cmd = app.add_subcommand("bench", "Time the engine against the baseline; CSV");
  bench_cmd->add_option("--pmin", bench_flags.pmin, "Smallest prime in the sweep")
      ->capture_default_str();
  bench_cmd->add_option("--pmax", bench_flags.pmax, "Largest prime in the sweep")
      ->capture_default_str();
  bench_cmd->add_option("--count", bench_flags.count, "Number of log-spaced primes")
      ->capture_default_str();
  bench_cmd->add_option("--p", bench_flags.p, "Explicit primes; overrides the sweep")
      ->delimiter(',');
  bench_cmd->add_option("--e", bench_flags.e, "Exponent or range a..b")->capture_default_str();
  bench_cmd->add_option("--reps", bench_flags.reps, "Timed runs per point (median)")
      ->capture_default_str();
  bench_cmd->add_flag("--no-baseline", bench_flags.no_baseline, "Time the engine only");
  bench_cmd->add_option("--seed", bench_flags.seed, "RNG seed, or 'random'")
      ->capture_default_str();
  bench_cmd->add_option("--output", bench_flags.output, "Write CSV here instead of stdout");

  CodesFlags codes_flags;
  auto* codes_cmd = app.add_subcommand("codes", "Search LCD codes over Z/p^2; CSV");
  codes_cmd->add_option("--p", codes_flags.p, "Odd prime p")->capture_default_str();
  codes_cmd->add_option("--e", codes_flags.e, "Exponent; only 2 is supported")
      ->capture_default_str();
  codes_cmd->add_option("--rank", codes_flags.rank, "Rank or range a..b to search");
  codes_cmd->add_option("--samples", codes_flags.samples, "Samples per code beyond the budget")
      ->capture_default_str();
  codes_cmd->add_option("--seed", codes_flags.seed, "RNG seed, or 'random'")
      ->capture_default_str();
  codes_cmd->add_option("--workers", codes_flags.workers, "Worker threads; 0 uses all cores")
      ->capture_default_str();
  codes_cmd->add_option("--budget", codes_flags.budget,
                        "Exhaustive budget in messages (default DICKSON_BUDGET or 1e9)");
  codes_cmd->add_flag("--symmetry", codes_flags.symmetry,
                      "Measure every subset that leaves out two factors");
  codes_cmd->add_option("--output", codes_flags.output, "Write CSV here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }

  try {
    if (app.got_subcommand("factor")) return run_factor(factor_flags, false, out);
    if (app.got_subcommand("lift")) return run_factor(lift_flags, true, out);
    if (app.got_subcommand("verify")) return run_verify(verify_flags, out, err);
    if (app.got_subcommand("bench")) return run_bench(bench_flags, out);
    if (app.got_subcommand("codes")) return run_codes(codes_flags, out);
  } catch (const VerificationFailed& ex) {
    err << "verification failed: " << ex.what() << '\n';
    return kVerification;
  } catch (const InternalInconsistency& ex) {
    err << "consistency failure: " << ex.what() << '\n';
    return kVerification;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace dickson::cli
