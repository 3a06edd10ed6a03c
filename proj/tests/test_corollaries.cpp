#include <doctest.h>

#include <set>
#include <tuple>

#include "tribsum/catalog.hpp"
#include "tribsum/corollaries.hpp"
#include "tribsum/oracle.hpp"

using namespace tribsum;

namespace {

const CorollaryClause& find(std::string_view key, Direction dir, Parity parity) {
  for (const auto& c : corollaries()) {
    if (c.sequence_key == key && c.direction == dir && c.parity == parity) return c;
  }
  FAIL("no clause for " << key);
  throw;
}

Rational eval(std::string_view key, Direction dir, Parity parity, std::int64_t n) {
  return evaluate(find(key, dir, parity), lookup(key).def, n);
}

}  // namespace

TEST_CASE("ninety clauses, one per sequence and family") {
  const auto all = corollaries();
  CHECK(all.size() == 90);
  std::set<std::tuple<std::string_view, Direction, Parity>> seen;
  for (const auto& c : all) {
    CHECK_NOTHROW(lookup(c.sequence_key));
    CHECK(seen.emplace(c.sequence_key, c.direction, c.parity).second);
    CHECK(c.divisor > 0);
    CHECK_FALSE(c.terms.empty());
  }
}

TEST_CASE("corollary examples") {
  using enum Direction;
  CHECK(eval("narayana", Forward, Parity::All, 5) == 8);
  CHECK(eval("tribonacci-lucas", Forward, Parity::All, 3) == 14);
  CHECK(eval("pell-padovan", Forward, Parity::Even, 2) == 5);
  CHECK(eval("pell-padovan", Forward, Parity::Odd, 1) == 4);
  CHECK(eval("tribonacci", Forward, Parity::Odd, 3) == 34);
  CHECK(eval("perrin", Backward, Parity::All, 2) == 0);
  CHECK(eval("padovan", Backward, Parity::Even, 1) == 1);
  CHECK(eval("tribonacci", Backward, Parity::Odd, 3) == 1);
}

TEST_CASE("describe renders the identity") {
  using enum Direction;
  CHECK(find("narayana", Forward, Parity::All).describe("N") ==
        "sum_{k=0}^{n} N_{k} = N_{n+3} - 1");
  CHECK(find("tribonacci", Forward, Parity::Odd).describe("T") ==
        "sum_{k=0}^{n} T_{2k+1} = (T_{2n+2} + T_{2n+1})/2");
  CHECK(find("tribonacci", Backward, Parity::Even).describe("T") ==
        "sum_{k=1}^{n} T_{-2k} = (-T_{-2n+1} + T_{-2n} + 1)/2");
  CHECK(find("pell-padovan", Forward, Parity::Even).label() == 'b');
}

TEST_CASE("every clause matches the brute-force sums") {
  for (const auto& c : corollaries()) {
    const auto& def = lookup(c.sequence_key).def;
    const auto sums = oracle::oracle_prefix_sums(def, c.direction, c.parity, 30);
    for (std::int64_t n = c.first_n(); n <= 30; ++n) {
      CAPTURE(c.sequence_key);
      CAPTURE(n);
      CHECK(evaluate(c, def, n) == sums[static_cast<std::size_t>(n)]);
    }
  }
}
