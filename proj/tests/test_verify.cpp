#include <doctest.h>

#include <omp.h>

#include "tribsum/catalog.hpp"
#include "tribsum/error.hpp"
#include "tribsum/sum_engine.hpp"
#include "tribsum/verify.hpp"

using namespace tribsum;
using namespace tribsum::verify;

TEST_CASE("catalog subjects") {
  CHECK(catalog_subjects().size() == 15);
  const auto one = catalog_subjects("perrin");
  REQUIRE(one.size() == 1);
  CHECK(one[0].catalog_key == "perrin");
  CHECK_THROWS_AS(catalog_subjects("nope"), UnknownSequence);
}

TEST_CASE("catalog sweep passes") {
  Options opts;
  opts.max_n = 30;
  opts.corollary_max_n = 30;
  const auto report = run_parallel(catalog_subjects(), opts);
  CHECK(report.ok());
  CHECK(report.failures.empty());
  for (std::size_t i = 0; i < kSuiteCount; ++i) CHECK(report.tallies[i].failed == 0);
  CHECK(report.tally(Suite::Corollary).passed > 0);
  CHECK(report.tally(Suite::DegenerateAffine).passed > 0);
  CHECK(report.tally(Suite::Specialization).passed > 0);
}

TEST_CASE("serial and parallel reports are identical") {
  Options opts;
  opts.max_n = 20;
  opts.corollary_max_n = 20;
  RandomDefs gen(7);
  auto subjects = gen.subjects(12, Constraint::Any);
  for (auto& s : catalog_subjects()) subjects.push_back(s);
  const auto serial = run_serial(subjects, opts);
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    CHECK(run_parallel(subjects, opts) == serial);
  }
  CHECK(serial.ok());
}

TEST_CASE("random generation is deterministic") {
  RandomDefs a(42);
  RandomDefs b(42);
  RandomDefs c(43);
  bool differs = false;
  for (int i = 0; i < 20; ++i) {
    const auto da = a.draw(Constraint::Any);
    const auto db = b.draw(Constraint::Any);
    const auto dc = c.draw(Constraint::Any);
    CHECK(describe(da) == describe(db));
    differs = differs || describe(da) != describe(dc);
  }
  CHECK(differs);
}

TEST_CASE("constraints hold") {
  RandomDefs gen(3);
  for (int i = 0; i < 200; ++i) {
    const auto rational_ok = [](const Rational& q) {
      return BigInt(abs(q.numerator())) <= 9 && q.denominator() <= 9;
    };
    const auto x = gen.draw_rational();
    CHECK(rational_ok(x));

    auto d = gen.draw(Constraint::Any);
    CHECK_FALSE(d.params.t.is_zero());

    d = gen.draw(Constraint::NonDegenerate);
    CHECK_FALSE(d.params.t.is_zero());
    CHECK_FALSE(denominators(d.params).product().is_zero());

    d = gen.draw(Constraint::S1);
    CHECK(d.params.s == 1);
    CHECK_FALSE((d.params.r + d.params.t).is_zero());
    CHECK_FALSE(d.params.t.is_zero());

    d = gen.draw(Constraint::RplusT0);
    CHECK((d.params.r + d.params.t).is_zero());
    CHECK(d.params.s != 1);
    CHECK_FALSE(d.params.t.is_zero());
    CHECK_FALSE(denominators(d.params).product().is_zero());

    d = gen.draw(Constraint::Triple021);
    CHECK(is_degenerate_021(d.params));
  }
}

TEST_CASE("subjects are labelled") {
  RandomDefs gen(9);
  const auto subjects = gen.subjects(3, Constraint::S1, "s1");
  REQUIRE(subjects.size() == 3);
  CHECK(subjects[0].label.rfind("s1", 0) == 0);
  CHECK(subjects[0].label != subjects[1].label);
  CHECK_FALSE(subjects[0].catalog_key);
}

TEST_CASE("a wrong identity is reported") {
  // Tribonacci terms checked against the Perrin identities must fail.
  Subject bad{"mislabelled", lookup("tribonacci").def, std::string("perrin")};
  Options opts;
  opts.max_n = 10;
  opts.corollary_max_n = 10;
  opts.enabled = {false, false, false, false, true};
  const std::vector<Subject> subjects{bad};
  const auto report = run_serial(subjects, opts);
  CHECK_FALSE(report.ok());
  CHECK(report.tally(Suite::Corollary).failed > 0);
  REQUIRE_FALSE(report.failures.empty());
  CHECK(report.failures[0].suite == Suite::Corollary);
  CHECK(report.failures[0].subject == "mislabelled");
  CHECK(run_parallel(subjects, opts) == report);
}

TEST_CASE("disabled suites do not run") {
  Options opts;
  opts.max_n = 10;
  opts.enabled = {true, false, false, false, false};
  const auto report = run_serial(catalog_subjects("tribonacci"), opts);
  CHECK(report.tally(Suite::FormulaOracle).passed > 0);
  for (auto s : {Suite::ParityPartition, Suite::Specialization, Suite::DegenerateAffine,
                 Suite::Corollary}) {
    CHECK(report.tally(s) == Tally{});
  }
}

TEST_CASE("fallback results are skipped rather than passed") {
  Subject s{"d1 zero", make_def(0, 1, 1, 1, 1, -1), std::nullopt};
  Options opts;
  opts.max_n = 10;
  opts.enabled = {true, false, false, false, false};
  const std::vector<Subject> subjects{s};
  const auto report = run_serial(subjects, opts);
  CHECK(report.ok());
  CHECK(report.tally(Suite::FormulaOracle).skipped > 0);
}
