#include "tribsum/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "tribsum/catalog.hpp"
#include "tribsum/corollaries.hpp"
#include "tribsum/oracle.hpp"
#include "tribsum/sum_engine.hpp"

namespace tribsum::verify {

namespace {

/// Outcomes of one task, merged into the report in task order.
struct TaskResult {
  std::array<Tally, kSuiteCount> tallies{};
  std::vector<Failure> failures;
};

using TaskFn = std::function<void(TaskResult&)>;

class Recorder {
 public:
  Recorder(TaskResult& out, Suite suite, const Subject& subject)
      : out_(out), suite_(suite), subject_(subject) {}

  void check(bool ok, const std::function<std::string()>& detail) {
    auto& t = out_.tallies[static_cast<std::size_t>(suite_)];
    if (ok) {
      ++t.passed;
    } else {
      ++t.failed;
      out_.failures.push_back({suite_, subject_.label, detail()});
    }
  }

  void skip() { ++out_.tallies[static_cast<std::size_t>(suite_)].skipped; }

 private:
  TaskResult& out_;
  Suite suite_;
  const Subject& subject_;
};

std::string family_label(Direction d, Parity p) {
  return std::string(to_string(d)) + "/" + std::string(to_string(p));
}

void formula_vs_oracle(const Subject& subject, Direction direction, Parity parity,
                       std::int64_t max_n, TaskResult& out) {
  Recorder rec(out, Suite::FormulaOracle, subject);
  const auto oracle_sums = oracle::oracle_prefix_sums(subject.def, direction, parity, max_n);
  const std::int64_t first = direction == Direction::Forward ? 0 : 1;
  for (std::int64_t n = first; n <= max_n; ++n) {
    const SumResult got = evaluate_sum(subject.def, {direction, parity, n});
    if (got.case_used == FormulaCase::OracleFallback) {
      rec.skip();
      continue;
    }
    const Rational& want = oracle_sums[static_cast<std::size_t>(n)];
    rec.check(got.value == want, [&] {
      return family_label(direction, parity) + " n=" + std::to_string(n) + " " +
             std::string(to_string(got.case_used)) + ": closed form " + got.value.to_string() +
             " != oracle " + want.to_string();
    });
  }
}

void parity_partition(const Subject& subject, Direction direction, std::int64_t max_n,
                      TaskResult& out) {
  Recorder rec(out, Suite::ParityPartition, subject);
  const std::int64_t first = direction == Direction::Forward ? 0 : 1;
  for (std::int64_t n = first; n <= max_n; ++n) {
    const Rational even = evaluate_sum(subject.def, {direction, Parity::Even, n}).value;
    const Rational odd = evaluate_sum(subject.def, {direction, Parity::Odd, n}).value;
    const std::int64_t all_n = direction == Direction::Forward ? 2 * n + 1 : 2 * n;
    const Rational all = evaluate_sum(subject.def, {direction, Parity::All, all_n}).value;
    rec.check(even + odd == all, [&] {
      return std::string(to_string(direction)) + " n=" + std::to_string(n) + ": even " +
             even.to_string() + " + odd " + odd.to_string() + " != all " + all.to_string();
    });
  }
}

void specialization(const Subject& subject, FormulaCase special, FormulaCase generic,
                    std::int64_t max_n, TaskResult& out) {
  Recorder rec(out, Suite::Specialization, subject);
  if (!case_applies(subject.def.params, special)) return;
  const std::int64_t first = special == FormulaCase::FwdEven_S1 || special == FormulaCase::FwdOdd_S1
                                 ? 0
                                 : 1;
  for (std::int64_t n = first; n <= max_n; ++n) {
    const Rational a = evaluate_formula(subject.def, special, n);
    const Rational b = evaluate_formula(subject.def, generic, n);
    rec.check(a == b, [&] {
      return std::string(to_string(special)) + " n=" + std::to_string(n) + ": " +
             a.to_string() + " != " + std::string(to_string(generic)) + " " + b.to_string();
    });
  }
}

/// For (0,2,1): sum_even(n) - W(2n+1) (forward) and sum_even(n) + W(-2n+1) -
/// W(-2n) (backward) are affine in n with slope W2 - W1 - W0.
void degenerate_affine(const Subject& subject, Direction direction, std::int64_t max_n,
                       TaskResult& out) {
  Recorder rec(out, Suite::DegenerateAffine, subject);
  if (!is_degenerate_021(subject.def.params)) return;
  const auto& d = subject.def;
  const Rational slope = d.w2 - d.w1 - d.w0;
  auto residual = [&](std::int64_t n) {
    const Rational s = evaluate_sum(d, {direction, Parity::Even, n}).value;
    if (direction == Direction::Forward) return s - term_iterative(d, 2 * n + 1);
    return s + term_iterative(d, -2 * n + 1) - term_iterative(d, -2 * n);
  };
  const std::int64_t first = direction == Direction::Forward ? 0 : 1;
  for (std::int64_t n = first; n + 2 <= max_n; ++n) {
    const Rational f0 = residual(n);
    const Rational f1 = residual(n + 1);
    const Rational f2 = residual(n + 2);
    const Rational second = f2 - 2 * f1 + f0;
    rec.check(second.is_zero() && f1 - f0 == slope, [&] {
      return std::string(to_string(direction)) + " n=" + std::to_string(n) +
             ": second difference " + second.to_string() + ", step " + (f1 - f0).to_string() +
             ", expected slope " + slope.to_string();
    });
  }
}

void corollary_suite(const Subject& subject, const CorollaryClause& clause, std::int64_t max_n,
                     TaskResult& out) {
  Recorder rec(out, Suite::Corollary, subject);
  const auto oracle_sums =
      oracle::oracle_prefix_sums(subject.def, clause.direction, clause.parity, max_n);
  const auto& symbol = lookup(clause.sequence_key).symbol;
  for (std::int64_t n = clause.first_n(); n <= max_n; ++n) {
    const Rational got = evaluate(clause, subject.def, n);
    const Rational& want = oracle_sums[static_cast<std::size_t>(n)];
    rec.check(got == want, [&] {
      return clause.describe(symbol) + " at n=" + std::to_string(n) + ": " + got.to_string() +
             " != oracle " + want.to_string();
    });
  }
}

bool enabled(const Options& o, Suite s) { return o.enabled[static_cast<std::size_t>(s)]; }

std::vector<TaskFn> plan(std::span<const Subject> subjects, const Options& options) {
  std::vector<TaskFn> tasks;
  const std::int64_t max_n = options.max_n;
  for (const Subject& subj : subjects) {
    const Subject* s = &subj;
    const bool backward_ok = !s->def.params.t.is_zero();
    if (enabled(options, Suite::FormulaOracle)) {
      for (const auto& fam : kAllFamilies) {
        if (fam.direction == Direction::Backward && !backward_ok) continue;
        tasks.emplace_back([s, fam, max_n](TaskResult& out) {
          formula_vs_oracle(*s, fam.direction, fam.parity, max_n, out);
        });
      }
    }
    for (Direction dir : {Direction::Forward, Direction::Backward}) {
      if (dir == Direction::Backward && !backward_ok) continue;
      if (enabled(options, Suite::ParityPartition)) {
        tasks.emplace_back([s, dir, max_n](TaskResult& out) { parity_partition(*s, dir, max_n, out); });
      }
      if (enabled(options, Suite::DegenerateAffine) && is_degenerate_021(s->def.params)) {
        tasks.emplace_back(
            [s, dir, max_n](TaskResult& out) { degenerate_affine(*s, dir, max_n, out); });
      }
    }
    if (enabled(options, Suite::Specialization)) {
      static constexpr std::pair<FormulaCase, FormulaCase> kPairs[] = {
          {FormulaCase::FwdEven_S1, FormulaCase::FwdEven_Generic},
          {FormulaCase::FwdOdd_S1, FormulaCase::FwdOdd_Generic},
          {FormulaCase::BwdEven_RplusT0, FormulaCase::BwdEven_Generic},
          {FormulaCase::BwdOdd_RplusT0, FormulaCase::BwdOdd_Generic},
      };
      for (const auto& [special, generic] : kPairs) {
        if (!case_applies(s->def.params, special) || !case_applies(s->def.params, generic)) continue;
        tasks.emplace_back([s, special, generic, max_n](TaskResult& out) {
          specialization(*s, special, generic, max_n, out);
        });
      }
    }
    if (enabled(options, Suite::Corollary) && s->catalog_key) {
      const std::int64_t cmax = std::min(max_n, options.corollary_max_n);
      for (const auto& clause : corollaries()) {
        if (clause.sequence_key != *s->catalog_key) continue;
        const CorollaryClause* c = &clause;
        tasks.emplace_back([s, c, cmax](TaskResult& out) { corollary_suite(*s, *c, cmax, out); });
      }
    }
  }
  return tasks;
}

Report merge(std::vector<TaskResult>& results) {
  Report report;
  for (auto& r : results) {
    for (std::size_t i = 0; i < kSuiteCount; ++i) {
      report.tallies[i].passed += r.tallies[i].passed;
      report.tallies[i].failed += r.tallies[i].failed;
      report.tallies[i].skipped += r.tallies[i].skipped;
    }
    std::move(r.failures.begin(), r.failures.end(), std::back_inserter(report.failures));
  }
  return report;
}

}  // namespace

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::FormulaOracle: return "formula-vs-oracle";
    case Suite::ParityPartition: return "parity-partition";
    case Suite::Specialization: return "specialization";
    case Suite::DegenerateAffine: return "degenerate-affine";
    case Suite::Corollary: return "corollary";
  }
  return "?";
}

std::size_t Report::checks() const {
  std::size_t total = 0;
  for (const auto& t : tallies) total += t.passed + t.failed;
  return total;
}

std::size_t Report::failed() const {
  std::size_t total = 0;
  for (const auto& t : tallies) total += t.failed;
  return total;
}

Report run_serial(std::span<const Subject> subjects, const Options& options) {
  const auto tasks = plan(subjects, options);
  std::vector<TaskResult> results(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) tasks[i](results[i]);
  return merge(results);
}

Report run_parallel(std::span<const Subject> subjects, const Options& options) {
  const auto tasks = plan(subjects, options);
  std::vector<TaskResult> results(tasks.size());
  const auto count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    tasks[static_cast<std::size_t>(i)](results[static_cast<std::size_t>(i)]);
  }
  return merge(results);
}

std::vector<Subject> catalog_subjects(std::string_view key) {
  std::vector<Subject> out;
  for (const auto& e : list_all()) {
    if (!key.empty() && e.key != key) continue;
    out.push_back({e.key, e.def, e.key});
  }
  if (!key.empty() && out.empty()) lookup(key);  // throws UnknownSequence
  return out;
}

Rational RandomDefs::draw_rational() {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(-9, 8);
  int d = den(rng_);
  if (d >= 0) ++d;  // skip zero: [-9,-1] u [1,9]
  return Rational(num(rng_), d);
}

SequenceDef RandomDefs::draw(Constraint constraint) {
  for (;;) {
    RecurrenceParams p{draw_rational(), draw_rational(), draw_rational()};
    switch (constraint) {
      case Constraint::S1:
        p.s = 1;
        break;
      case Constraint::RplusT0:
        p.t = -p.r;
        break;
      case Constraint::Triple021:
        p = RecurrenceParams{0, 2, 1};
        break;
      default:
        break;
    }
    if (p.t.is_zero()) continue;
    const Rational product = denominators(p).product();
    if (constraint == Constraint::NonDegenerate && product.is_zero()) continue;
    if (constraint == Constraint::S1 && (p.r + p.t).is_zero()) continue;
    if (constraint == Constraint::RplusT0 && (p.s == 1 || product.is_zero())) continue;
    SequenceDef def{std::move(p), draw_rational(), draw_rational(), draw_rational(),
                    std::nullopt, std::nullopt};
    return def;
  }
}

std::vector<Subject> RandomDefs::subjects(std::size_t count, Constraint constraint,
                                          std::string_view prefix) {
  std::vector<Subject> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    SequenceDef def = draw(constraint);
    out.push_back({std::string(prefix) + "#" + std::to_string(i) + " " + describe(def),
                   std::move(def), std::nullopt});
  }
  return out;
}

std::string describe(const SequenceDef& def) {
  std::ostringstream os;
  os << "W(" << def.w0 << "," << def.w1 << "," << def.w2 << ";" << def.params.r << ","
     << def.params.s << "," << def.params.t << ")";
  return os.str();
}

}  // namespace tribsum::verify
