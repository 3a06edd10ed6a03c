#include <doctest.h>
#include <httplib.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "tribsum/catalog.hpp"
#include "tribsum/error.hpp"
#include "tribsum/oeis.hpp"

using namespace tribsum;
using namespace tribsum::oeis;
namespace fs = std::filesystem;

namespace {

FetchOptions bundled() { return {default_fixture_dir(), ""}; }

BFile from_terms(const SequenceDef& def, std::int64_t first_index, std::int64_t from,
                 std::int64_t count) {
  BFile b{"A000000", {}};
  for (std::int64_t i = 0; i < count; ++i) {
    b.entries.push_back({first_index + i, term_iterative(def, from + i).numerator()});
  }
  return b;
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("tribsum-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("parse_bfile examples") {
  auto b = parse_bfile("0 0\n1 0\n2 1\n");
  REQUIRE(b.entries.size() == 3);
  CHECK(b.entries[0] == BFileEntry{0, 0});
  CHECK(b.entries[1] == BFileEntry{1, 0});
  CHECK(b.entries[2] == BFileEntry{2, 1});
  CHECK(b.first_index() == 0);

  b = parse_bfile("# comment\n5 4\n6 7\n");
  REQUIRE(b.entries.size() == 2);
  CHECK(b.entries[0] == BFileEntry{5, 4});
  CHECK(b.entries[1] == BFileEntry{6, 7});

  CHECK_THROWS_AS(parse_bfile("0 0\n2 1\n"), MalformedBFile);
}

TEST_CASE("parse_bfile edge cases") {
  CHECK(parse_bfile("").entries.empty());
  CHECK_FALSE(parse_bfile("# only a comment\n").first_index());
  const auto b = parse_bfile("\n-2 -5\r\n-1   12345678901234567890123\n\n0\t7\n");
  REQUIRE(b.entries.size() == 3);
  CHECK(b.entries[0] == BFileEntry{-2, -5});
  CHECK(b.entries[1].value == BigInt("12345678901234567890123"));
  CHECK_THROWS_AS(parse_bfile("0 1\n0 1\n"), MalformedBFile);
  CHECK_THROWS_AS(parse_bfile("1 1\n0 1\n"), MalformedBFile);
  CHECK_THROWS_AS(parse_bfile("0 x\n"), MalformedBFile);
  CHECK_THROWS_AS(parse_bfile("0\n"), MalformedBFile);
  CHECK_THROWS_AS(parse_bfile("0 1 2\n"), MalformedBFile);
  CHECK_THROWS_AS(parse_bfile("0 1/2\n"), MalformedBFile);
}

TEST_CASE("serialize round-trips") {
  const auto original = parse_bfile("# header\n3 1\n4 -1\n5 100000000000000000000\n", "A123456");
  const auto text = serialize(original);
  CHECK(text == "3 1\n4 -1\n5 100000000000000000000\n");
  const auto again = parse_bfile(text, "A123456");
  CHECK(again == original);
  CHECK(serialize(again) == text);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    BFile b{"A000001", {}};
    const std::int64_t first = static_cast<std::int64_t>(rng() % 41) - 20;
    const auto len = rng() % 30;
    for (std::uint64_t k = 0; k < len; ++k) {
      BigInt v(std::to_string(static_cast<std::int64_t>(rng())));
      b.entries.push_back({first + static_cast<std::int64_t>(k), v * v * v});
    }
    CHECK(parse_bfile(serialize(b), "A000001") == b);
  }
}

TEST_CASE("align examples") {
  const auto& trib = lookup("tribonacci").def;
  const auto a73 = parse_bfile("0 0\n1 0\n2 1\n3 1\n4 2\n5 4\n6 7\n7 13\n8 24\n9 44\n10 81\n11 149\n");
  auto report = align(trib, a73);
  CHECK(report.status == AlignmentStatus::Aligned);
  CHECK(report.shift == 1);
  CHECK(report.matched_terms >= kMinAlignedTerms);

  const auto& pad = lookup("padovan").def;
  report = align(pad, from_terms(pad, 0, 0, 20));
  CHECK(report.status == AlignmentStatus::Aligned);
  CHECK(report.shift == 0);
  CHECK(report.matched_terms == 20);

  BFile zeros{"A000004", {}};
  for (std::int64_t i = 0; i < 30; ++i) zeros.entries.push_back({i, 0});
  report = align(trib, zeros);
  CHECK(report.status == AlignmentStatus::NoAlignment);
}

TEST_CASE("align finds planted shifts") {
  for (const auto& e : list_all()) {
    for (std::int64_t shift = -8; shift <= 8; ++shift) {
      // b(i) = W(i - shift), starting at the first index with i - shift >= 0.
      const std::int64_t first = std::max<std::int64_t>(0, shift);
      const auto report = align(e.def, from_terms(e.def, first, first - shift, 40));
      CAPTURE(e.key);
      CAPTURE(shift);
      REQUIRE(report.status == AlignmentStatus::Aligned);
      // A smaller shift may also fit when the sequence repeats early terms.
      CHECK(report.shift <= shift);
      CHECK(count_matches(e.def, from_terms(e.def, first, first - shift, 40), report.shift, 40) >=
            kMinAlignedTerms);
    }
  }
}

TEST_CASE("too short a b-file never aligns") {
  const auto& trib = lookup("tribonacci").def;
  CHECK(align(trib, from_terms(trib, 0, 0, 9)).status == AlignmentStatus::NoAlignment);
  CHECK(align(trib, from_terms(trib, 0, 0, 10)).status == AlignmentStatus::Aligned);
}

TEST_CASE("ids and file names") {
  CHECK(is_valid_id("A000073"));
  CHECK_FALSE(is_valid_id("A999999x"));
  CHECK_FALSE(is_valid_id("a000073"));
  CHECK_FALSE(is_valid_id("A00073"));
  CHECK_FALSE(is_valid_id("../etc"));
  CHECK(bfile_name("A000073") == "b000073.txt");
}

TEST_CASE("bundled fixtures") {
  const auto a73 = fetch_bfile("A000073", Source::FixtureDir, bundled());
  CHECK(a73.entries.size() >= 50);
  CHECK(a73.oeis_id == "A000073");
  CHECK_THROWS_AS(fetch_bfile("A999999x", Source::FixtureDir, bundled()), FixtureMissing);
  CHECK_THROWS_AS(fetch_bfile("A999999", Source::FixtureDir, bundled()), FixtureMissing);

  const auto a1608 = fetch_bfile("A001608", Source::FixtureDir, bundled());
  const auto& perrin = lookup("perrin").def;
  const auto report = align(perrin, a1608);
  REQUIRE(report.status == AlignmentStatus::Aligned);
  CHECK(count_matches(perrin, a1608, report.shift, 50) == 50);
}

TEST_CASE("environment overrides") {
  const char* saved = std::getenv("TRIBSUM_FIXTURE_DIR");
  const std::string saved_value = saved ? saved : "";
  ::setenv("TRIBSUM_FIXTURE_DIR", "/tmp/elsewhere", 1);
  CHECK(default_fixture_dir() == fs::path("/tmp/elsewhere"));
  if (saved) {
    ::setenv("TRIBSUM_FIXTURE_DIR", saved_value.c_str(), 1);
  } else {
    ::unsetenv("TRIBSUM_FIXTURE_DIR");
  }
  ::setenv("TRIBSUM_OEIS_URL", "http://127.0.0.1:1", 1);
  CHECK(default_base_url() == "http://127.0.0.1:1");
  ::unsetenv("TRIBSUM_OEIS_URL");
  CHECK(default_base_url() == "https://oeis.org");
}

TEST_CASE("network fetch against a local server") {
  httplib::Server server;
  const std::string body = "# A000073 test\n0 0\n1 0\n2 1\n3 1\n4 2\n";
  server.Get("/A000073/b000073.txt",
             [&](const httplib::Request&, httplib::Response& res) { res.set_content(body, "text/plain"); });
  server.Get("/A000001/b000001.txt",
             [](const httplib::Request&, httplib::Response& res) { res.set_content("0 1\n2 2\n", "text/plain"); });
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  TempDir cache;
  const FetchOptions opts{cache.path, "http://127.0.0.1:" + std::to_string(port)};

  const auto b = fetch_bfile("A000073", Source::Network, opts);
  CHECK(b.entries.size() == 5);
  CHECK(b.oeis_id == "A000073");
  const auto cached = cache.path / "b000073.txt";
  REQUIRE(fs::exists(cached));
  std::ifstream in(cached);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == body);
  CHECK(fetch_bfile("A000073", Source::FixtureDir, opts) == b);
  for (const auto& f : fs::directory_iterator(cache.path)) {
    CHECK(f.path().filename() == "b000073.txt");
  }

  CHECK_THROWS_AS(fetch_bfile("A000002", Source::Network, opts), FetchFailed);
  CHECK_FALSE(fs::exists(cache.path / "b000002.txt"));
  CHECK_THROWS_AS(fetch_bfile("A000001", Source::Network, opts), MalformedBFile);
  CHECK_FALSE(fs::exists(cache.path / "b000001.txt"));
  CHECK_THROWS_AS(fetch_bfile("bogus", Source::Network, opts), FetchFailed);

  server.stop();
  worker.join();

  CHECK_THROWS_AS(fetch_bfile("A000073", Source::Network, opts), FetchFailed);
}
