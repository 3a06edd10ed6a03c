#include <doctest.h>

#include <set>
#include <string>

#include "tribsum/catalog.hpp"
#include "tribsum/error.hpp"
#include "tribsum/oeis.hpp"

using namespace tribsum;

namespace {

bool same_def(const SequenceDef& d, std::int64_t w0, std::int64_t w1, std::int64_t w2,
              std::int64_t r, std::int64_t s, std::int64_t t) {
  const auto expected = make_def(w0, w1, w2, r, s, t);
  return d.params == expected.params && d.w0 == expected.w0 && d.w1 == expected.w1 &&
         d.w2 == expected.w2;
}

}  // namespace

TEST_CASE("lookup examples") {
  const auto& trib = lookup("tribonacci");
  CHECK(same_def(trib.def, 0, 1, 1, 1, 1, 1));
  CHECK(trib.oeis_ids == std::vector<std::string>{"A000073", "A057597"});
  const auto& pp = lookup("pell-perrin");
  CHECK(same_def(pp.def, 3, 0, 2, 0, 2, 1));
  CHECK(pp.oeis_ids.empty());
  CHECK_FALSE(pp.primary_oeis_id());
  const auto& nar = lookup("narayana");
  CHECK(same_def(nar.def, 0, 1, 1, 1, 0, 1));
  CHECK(nar.oeis_ids == std::vector<std::string>{"A078012"});
}

TEST_CASE("unknown keys throw") {
  CHECK_THROWS_AS(lookup("fibonacci"), UnknownSequence);
  CHECK_THROWS_AS(lookup("Tribonacci"), UnknownSequence);
  CHECK_THROWS_AS(lookup(""), UnknownSequence);
}

TEST_CASE("list_all order and size") {
  const auto all = list_all();
  REQUIRE(all.size() == 15);
  CHECK(all.front().key == "tribonacci");
  CHECK(all.back().key == "third-order-jacobsthal-lucas");
  CHECK(same_def(all.back().def, 2, 1, 5, 1, 1, 2));
  const std::vector<std::string> order = {
      "tribonacci",         "tribonacci-lucas",          "third-order-pell",
      "third-order-pell-lucas", "third-order-modified-pell", "padovan",
      "perrin",             "padovan-perrin",            "pell-padovan",
      "pell-perrin",        "jacobsthal-padovan",        "jacobsthal-perrin",
      "narayana",           "third-order-jacobsthal",    "third-order-jacobsthal-lucas"};
  for (std::size_t i = 0; i < order.size(); ++i) CHECK(all[i].key == order[i]);
}

TEST_CASE("keys are unique and normalized") {
  std::set<std::string> keys;
  for (const auto& e : list_all()) {
    CHECK(keys.insert(e.key).second);
    for (char c : e.key) CHECK(((c >= 'a' && c <= 'z') || c == '-'));
    CHECK(&lookup(e.key) == &e);
    CHECK(e.def.name == e.display_name);
    if (e.primary_oeis_id()) CHECK(e.def.oeis_id == e.primary_oeis_id());
    for (const auto& id : e.oeis_ids) CHECK(oeis::is_valid_id(id));
  }
}

TEST_CASE("entries reproduce their OEIS terms where a b-file is bundled") {
  const oeis::FetchOptions opts{oeis::default_fixture_dir(), ""};
  int checked = 0;
  for (const auto& e : list_all()) {
    const auto id = e.primary_oeis_id();
    if (!id || !std::filesystem::exists(opts.fixture_dir / oeis::bfile_name(*id))) continue;
    CAPTURE(e.key);
    const auto bfile = oeis::fetch_bfile(*id, oeis::Source::FixtureDir, opts);
    const auto report = oeis::align(e.def, bfile);
    REQUIRE(report.status == oeis::AlignmentStatus::Aligned);
    REQUIRE(e.oeis_offset_shift);
    CHECK(report.shift == *e.oeis_offset_shift);
    CHECK(oeis::count_matches(e.def, bfile, report.shift, 10) == 10);
    ++checked;
  }
  CHECK(checked == 6);
}

TEST_CASE("shifts are only stored where they were confirmed") {
  const oeis::FetchOptions opts{oeis::default_fixture_dir(), ""};
  for (const auto& e : list_all()) {
    if (!e.oeis_offset_shift) continue;
    REQUIRE(e.primary_oeis_id());
    CHECK(std::filesystem::exists(opts.fixture_dir / oeis::bfile_name(*e.primary_oeis_id())));
  }
}

TEST_CASE("catalog table lists every entry") {
  const auto table = catalog_table();
  for (const auto& e : list_all()) CHECK(table.find(e.key) != std::string::npos);
  CHECK(table.find("W(2,1,5;1,1,2)") != std::string::npos);
}
