#include "tribsum/cli.hpp"

#include <omp.h>

#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tribsum/catalog.hpp"
#include "tribsum/error.hpp"
#include "tribsum/oeis.hpp"
#include "tribsum/oracle.hpp"
#include "tribsum/sum_engine.hpp"
#include "tribsum/verify.hpp"

namespace tribsum::cli {

namespace {

using json = nlohmann::ordered_json;

/// Raised for argument combinations CLI11 cannot express.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct SequenceArgs {
  std::string seq;
  std::string r, s, t, w0, w1, w2;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--seq", seq, "catalog key (see `catalog`)");
    cmd.add_option("--r", r, "coefficient r (p or p/q)");
    cmd.add_option("--s", s, "coefficient s (p or p/q)");
    cmd.add_option("--t", t, "coefficient t (p or p/q)");
    cmd.add_option("--w0", w0, "initial term W0");
    cmd.add_option("--w1", w1, "initial term W1");
    cmd.add_option("--w2", w2, "initial term W2");
  }

  /// Catalog lookup or explicit parameters, never a mix.
  std::pair<std::string, SequenceDef> resolve() const {
    const std::array<const std::string*, 6> fields{&r, &s, &t, &w0, &w1, &w2};
    const auto given = std::count_if(fields.begin(), fields.end(),
                                     [](const std::string* f) { return !f->empty(); });
    if (!seq.empty()) {
      if (given != 0) throw UsageError("--seq cannot be combined with --r/--s/--t/--w0/--w1/--w2");
      return {seq, lookup(seq).def};
    }
    if (given != 6) throw UsageError("give --seq, or all of --r --s --t --w0 --w1 --w2");
    SequenceDef def{RecurrenceParams{Rational::parse(r), Rational::parse(s), Rational::parse(t)},
                    Rational::parse(w0), Rational::parse(w1), Rational::parse(w2),
                    std::nullopt, std::nullopt};
    return {"custom", std::move(def)};
  }
};

json params_json(const SequenceDef& d) {
  return json{{"r", d.params.r.to_string()},   {"s", d.params.s.to_string()},
              {"t", d.params.t.to_string()},   {"w0", d.w0.to_string()},
              {"w1", d.w1.to_string()},        {"w2", d.w2.to_string()}};
}

class Emitter {
 public:
  Emitter(std::ostream& out, bool as_json) : out_(out), json_(as_json) {}
  bool json_mode() const { return json_; }
  void record(const json& j) { out_ << j.dump() << '\n'; }
  std::ostream& text() { return out_; }

 private:
  std::ostream& out_;
  bool json_;
};

std::int64_t elapsed_ns(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                              since)
      .count();
}

// ---------------------------------------------------------------------------

int cmd_term(const SequenceArgs& seq, std::int64_t n, const std::string& method, Emitter& em) {
  const auto [label, def] = seq.resolve();
  Rational value;
  if (method == "iterative") {
    value = term_iterative(def, n);
  } else if (method == "matrix") {
    value = term_matrix(def, n);
  } else if (method == "oracle") {
    value = oracle::oracle_term(def, n);
  } else {
    value = fetch_window(def, n)[0];
  }
  if (em.json_mode()) {
    em.record(json{{"command", "term"}, {"sequence", label}, {"params", params_json(def)},
                   {"n", n}, {"method", method}, {"value", value.to_string()}});
  } else {
    em.text() << value << '\n';
  }
  return kOk;
}

Direction parse_direction(const std::string& s) {
  return s == "bwd" ? Direction::Backward : Direction::Forward;
}

Parity parse_parity(const std::string& s) {
  return s == "even" ? Parity::Even : (s == "odd" ? Parity::Odd : Parity::All);
}

int cmd_sum(const SequenceArgs& seq, const std::string& dir, const std::string& parity,
            std::int64_t n, bool check, Emitter& em, std::ostream& err) {
  const auto [label, def] = seq.resolve();
  const SumQuery query{parse_direction(dir), parse_parity(parity), n};
  SumResult result;
  try {
    result = check ? evaluate_sum_checked(def, query) : evaluate_sum(def, query);
  } catch (const SumMismatch& e) {
    err << "verification mismatch: " << e.what() << '\n';
    return kMismatch;
  }
  if (em.json_mode()) {
    em.record(json{{"command", "sum"},
                   {"sequence", label},
                   {"params", params_json(def)},
                   {"dir", dir},
                   {"parity", parity},
                   {"n", n},
                   {"value", result.value.to_string()},
                   {"case", std::string(to_string(result.case_used))},
                   {"oracle_checked", result.oracle_checked}});
  } else {
    em.text() << result.value << " (" << to_string(result.case_used) << ")\n";
  }
  return kOk;
}

struct VerifyArgs {
  std::int64_t max_n = 100;
  std::string seq;
  std::size_t random = 0;
  std::uint64_t seed = 42;
  bool serial = false;
  int threads = 0;
};

int cmd_verify(const VerifyArgs& args, Emitter& em) {
  std::vector<verify::Subject> subjects;
  if (!args.seq.empty() || args.random == 0) subjects = verify::catalog_subjects(args.seq);
  if (args.random > 0) {
    verify::RandomDefs gen(args.seed);
    auto random = gen.subjects(args.random, verify::Constraint::Any);
    std::move(random.begin(), random.end(), std::back_inserter(subjects));
  }
  verify::Options options;
  options.max_n = args.max_n;
  options.corollary_max_n = args.max_n;
  if (args.threads > 0) omp_set_num_threads(args.threads);
  const verify::Report report = args.serial ? verify::run_serial(subjects, options)
                                            : verify::run_parallel(subjects, options);

  constexpr std::array kSuites{verify::Suite::FormulaOracle, verify::Suite::ParityPartition,
                               verify::Suite::Specialization, verify::Suite::DegenerateAffine,
                               verify::Suite::Corollary};
  if (em.json_mode()) {
    for (auto suite : kSuites) {
      const auto& t = report.tally(suite);
      em.record(json{{"command", "verify"}, {"suite", std::string(verify::to_string(suite))},
                     {"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped}});
    }
    for (const auto& f : report.failures) {
      em.record(json{{"command", "verify"}, {"failure", std::string(verify::to_string(f.suite))},
                     {"subject", f.subject}, {"detail", f.detail}});
    }
    em.record(json{{"command", "verify"}, {"subjects", subjects.size()}, {"max_n", args.max_n},
                   {"seed", args.seed}, {"checks", report.checks()},
                   {"status", report.ok() ? "PASS" : "FAIL"}});
  } else {
    auto& os = em.text();
    for (auto suite : kSuites) {
      const auto& t = report.tally(suite);
      os << std::left << std::setw(20) << verify::to_string(suite) << " passed " << t.passed
         << "  failed " << t.failed << "  skipped " << t.skipped << '\n';
    }
    constexpr std::size_t kShown = 20;
    for (std::size_t i = 0; i < report.failures.size() && i < kShown; ++i) {
      const auto& f = report.failures[i];
      os << "FAIL [" << verify::to_string(f.suite) << "] " << f.subject << ": " << f.detail
         << '\n';
    }
    if (report.failures.size() > kShown) {
      os << "... " << report.failures.size() - kShown << " more failures\n";
    }
    os << (report.ok() ? "PASS" : "FAIL") << " (" << report.checks() << " checks over "
       << subjects.size() << " sequences)\n";
  }
  return report.ok() ? kOk : kMismatch;
}

struct OeisArgs {
  std::string seq;
  std::int64_t count = 50;
  std::string fixtures;
  bool network = false;
  std::int64_t window = oeis::kDefaultShiftWindow;
};

int cmd_oeis_check(const OeisArgs& args, Emitter& em) {
  std::vector<const CatalogEntry*> entries;
  if (args.seq.empty()) {
    for (const auto& e : list_all()) entries.push_back(&e);
  } else {
    entries.push_back(&lookup(args.seq));
  }
  oeis::FetchOptions fetch;
  fetch.fixture_dir = args.fixtures.empty() ? oeis::default_fixture_dir()
                                            : std::filesystem::path(args.fixtures);
  fetch.base_url = oeis::default_base_url();
  const auto source = args.network ? oeis::Source::Network : oeis::Source::FixtureDir;

  bool any_failed = false;
  for (const CatalogEntry* e : entries) {
    json rec{{"command", "oeis-check"}, {"sequence", e->key}};
    std::string line;
    const auto id = e->primary_oeis_id();
    if (!id) {
      rec["status"] = "skipped";
      rec["reason"] = "no OEIS id";
      line = e->key + ": skipped: no OEIS id";
    } else {
      rec["oeis_id"] = *id;
      try {
        const oeis::BFile bfile = oeis::fetch_bfile(*id, source, fetch);
        const auto report = oeis::align(e->def, bfile, args.window);
        if (report.status == oeis::AlignmentStatus::NoAlignment) {
          any_failed = true;
          rec["status"] = "no-alignment";
          line = *id + " (" + e->key + "): no alignment within shift window +-" +
                 std::to_string(args.window);
        } else {
          const auto matched = oeis::count_matches(e->def, bfile, report.shift, args.count);
          const bool ok = matched == args.count;
          any_failed = any_failed || !ok;
          rec["status"] = ok ? "match" : "mismatch";
          rec["shift"] = report.shift;
          rec["matched"] = matched;
          rec["count"] = args.count;
          line = *id + " aligned (shift " + std::to_string(report.shift) + "), " +
                 std::to_string(matched) + "/" + std::to_string(args.count) + " match";
        }
      } catch (const Error& ex) {
        any_failed = true;
        rec["status"] = "error";
        rec["error"] = ex.what();
        line = *id + " (" + e->key + "): " + ex.what();
      }
    }
    if (em.json_mode()) {
      em.record(rec);
    } else {
      em.text() << line << '\n';
    }
  }
  return any_failed ? kOeisFailure : kOk;
}

struct BenchArgs {
  std::string seq = "tribonacci";
  std::vector<std::int64_t> sizes{1000, 10000, 100000};
  std::string dir = "fwd";
  std::string parity = "all";
};

int cmd_bench(const BenchArgs& args, Emitter& em, std::ostream& err) {
  const SequenceDef& def = lookup(args.seq).def;
  if (!em.json_mode()) {
    em.text() << std::left << std::setw(10) << "n" << std::setw(18) << "case" << std::right
              << std::setw(16) << "closed_ns" << std::setw(16) << "oracle_ns" << std::setw(12)
              << "speedup" << '\n';
  }
  for (std::int64_t n : args.sizes) {
    const SumQuery query{parse_direction(args.dir), parse_parity(args.parity), n};
    auto start = std::chrono::steady_clock::now();
    const SumResult closed = evaluate_sum(def, query);
    const std::int64_t closed_ns = elapsed_ns(start);
    start = std::chrono::steady_clock::now();
    const Rational brute = oracle::oracle_sum(def, query);
    const std::int64_t oracle_ns = elapsed_ns(start);
    if (closed.value != brute) {
      err << "bench: closed form disagrees with oracle at n=" << n << '\n';
      return kMismatch;
    }
    const double speedup =
        static_cast<double>(oracle_ns) / static_cast<double>(std::max<std::int64_t>(closed_ns, 1));
    if (em.json_mode()) {
      em.record(json{{"command", "bench"}, {"sequence", args.seq}, {"dir", args.dir},
                     {"parity", args.parity}, {"n", n},
                     {"case", std::string(to_string(closed.case_used))},
                     {"closed_ns", closed_ns}, {"oracle_ns", oracle_ns}, {"speedup", speedup}});
    } else {
      em.text() << std::left << std::setw(10) << n << std::setw(18) << to_string(closed.case_used)
                << std::right << std::setw(16) << closed_ns << std::setw(16) << oracle_ns
                << std::setw(11) << std::fixed << std::setprecision(1) << speedup << "x\n";
    }
  }
  return kOk;
}

int cmd_catalog(Emitter& em) {
  if (!em.json_mode()) {
    em.text() << catalog_table();
    return kOk;
  }
  for (const auto& e : list_all()) {
    json rec{{"command", "catalog"}, {"key", e.key}, {"name", e.display_name},
             {"params", params_json(e.def)}, {"oeis_ids", e.oeis_ids}};
    if (e.oeis_offset_shift) rec["oeis_offset_shift"] = *e.oeis_offset_shift;
    em.record(rec);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Tribonacci terms and closed-form partial sums"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  SequenceArgs term_seq;
  std::int64_t term_n = 0;
  std::string term_method = "auto";
  auto* term = app.add_subcommand("term", "evaluate W(n) for a signed index");
  term_seq.add_to(*term);
  term->add_option("--n", term_n, "signed index")->required()->allow_extra_args(false);
  term->add_option("--method", term_method, "evaluation route")
      ->check(CLI::IsMember({"auto", "iterative", "matrix", "oracle"}));

  SequenceArgs sum_seq;
  std::string sum_dir = "fwd";
  std::string sum_parity = "all";
  std::int64_t sum_n = 0;
  bool sum_check = false;
  auto* sum = app.add_subcommand("sum", "closed-form partial sum");
  sum_seq.add_to(*sum);
  sum->add_option("--dir", sum_dir, "fwd (k=0..n) or bwd (k=1..n, negated indices)")
      ->check(CLI::IsMember({"fwd", "bwd"}));
  sum->add_option("--parity", sum_parity, "all, even or odd indices")
      ->check(CLI::IsMember({"all", "even", "odd"}));
  sum->add_option("--n", sum_n, "upper bound")->required();
  sum->add_flag("--check", sum_check, "also compute the term-by-term sum and compare");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification sweeps");
  verify_cmd->add_option("--max-n", verify_args.max_n, "largest sum bound")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{100000}));
  verify_cmd->add_option("--seq", verify_args.seq, "restrict to one catalog entry");
  verify_cmd->add_option("--random", verify_args.random, "add K random parameter sets");
  verify_cmd->add_option("--seed", verify_args.seed, "seed for --random");
  verify_cmd->add_flag("--serial", verify_args.serial, "use the serial reference runner");
  verify_cmd->add_option("--threads", verify_args.threads, "OpenMP thread count");

  OeisArgs oeis_args;
  auto* oeis_cmd = app.add_subcommand("oeis-check", "compare catalog entries with OEIS b-files");
  oeis_cmd->add_option("--seq", oeis_args.seq, "restrict to one catalog entry");
  oeis_cmd->add_option("--count", oeis_args.count, "terms to compare")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1000000}));
  oeis_cmd->add_option("--fixtures", oeis_args.fixtures,
                       "b-file directory (default $TRIBSUM_FIXTURE_DIR or bundled data)");
  oeis_cmd->add_flag("--network", oeis_args.network, "download b-files and cache them");
  oeis_cmd->add_option("--window", oeis_args.window, "offset search window")
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{1000}));

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time closed-form sums against the oracle");
  bench->add_option("--seq", bench_args.seq, "catalog entry");
  bench->add_option("--n", bench_args.sizes, "one or more sum bounds (space or comma separated)")
      ->delimiter(',')
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{10000000}));
  bench->add_option("--dir", bench_args.dir)->check(CLI::IsMember({"fwd", "bwd"}));
  bench->add_option("--parity", bench_args.parity)->check(CLI::IsMember({"all", "even", "odd"}));

  auto* catalog = app.add_subcommand("catalog", "list the named sequences");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("tribsum");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Emitter em(out, format == "json");
  try {
    if (*term) return cmd_term(term_seq, term_n, term_method, em);
    if (*sum) return cmd_sum(sum_seq, sum_dir, sum_parity, sum_n, sum_check, em, err);
    if (*verify_cmd) return cmd_verify(verify_args, em);
    if (*oeis_cmd) return cmd_oeis_check(oeis_args, em);
    if (*bench) return cmd_bench(bench_args, em, err);
    if (*catalog) return cmd_catalog(em);
  } catch (const FetchFailed& e) {
    err << "error: " << e.what() << '\n';
    return kOeisFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace tribsum::cli
