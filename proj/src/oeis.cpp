#include "tribsum/oeis.hpp"

#include <unistd.h>

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <httplib.h>

#include "tribsum/error.hpp"

namespace tribsum::oeis {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_signed_digits(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BFileEntry parse_line(std::string_view line, std::size_t line_no) {
  auto fail = [&](const std::string& why) {
    return MalformedBFile("line " + std::to_string(line_no) + ": " + why + " in '" +
                          std::string(line) + "'");
  };
  std::istringstream is{std::string(line)};
  std::string index_tok;
  std::string value_tok;
  std::string extra;
  if (!(is >> index_tok >> value_tok) || (is >> extra)) throw fail("expected '<index> <value>'");
  if (!is_signed_digits(index_tok) || !is_signed_digits(value_tok)) {
    throw fail("non-integer field");
  }
  std::int64_t index = 0;
  const auto [ptr, ec] =
      std::from_chars(index_tok.data(), index_tok.data() + index_tok.size(), index);
  if (ec != std::errc{} || ptr != index_tok.data() + index_tok.size()) {
    throw fail("index out of range");
  }
  return BFileEntry{index, BigInt(value_tok, 10)};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomically(const std::filesystem::path& target, const std::string& body) {
  std::filesystem::create_directories(target.parent_path());
  std::random_device rd;
  const auto tmp = target.parent_path() /
                   (target.filename().string() + ".tmp." + std::to_string(::getpid()) + "." +
                    std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << body;
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw FetchFailed("cannot write cache file " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

std::optional<std::int64_t> BFile::first_index() const {
  if (entries.empty()) return std::nullopt;
  return entries.front().index;
}

BFile parse_bfile(std::string_view content, std::string oeis_id) {
  BFile out{std::move(oeis_id), {}};
  std::size_t line_no = 0;
  while (!content.empty()) {
    const auto nl = content.find('\n');
    const std::string_view raw = content.substr(0, nl);
    content = nl == std::string_view::npos ? std::string_view{} : content.substr(nl + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    BFileEntry e = parse_line(line, line_no);
    if (!out.entries.empty() && e.index != out.entries.back().index + 1) {
      throw MalformedBFile("line " + std::to_string(line_no) + ": index " +
                           std::to_string(e.index) + " does not follow " +
                           std::to_string(out.entries.back().index));
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

std::string serialize(const BFile& bfile) {
  std::string out;
  for (const auto& e : bfile.entries) {
    out += std::to_string(e.index);
    out += ' ';
    out += e.value.get_str();
    out += '\n';
  }
  return out;
}

std::int64_t count_matches(const SequenceDef& def, const BFile& bfile, std::int64_t shift,
                           std::int64_t limit) {
  if (bfile.entries.empty()) return 0;
  const std::int64_t first = bfile.entries.front().index;
  // Sequence index of the first usable b-file entry.
  const std::int64_t n0 = std::max<std::int64_t>(0, first - shift);
  TermWalker walker(def, TermWalker::Way::Forward);
  while (walker.index() < n0) walker.advance();

  std::int64_t matched = 0;
  for (std::size_t pos = static_cast<std::size_t>(n0 + shift - first);
       pos < bfile.entries.size() && (limit < 0 || matched < limit); ++pos) {
    if (walker.current() != Rational(bfile.entries[pos].value)) break;
    ++matched;
    walker.advance();
  }
  return matched;
}

AlignmentReport align(const SequenceDef& def, const BFile& bfile, std::int64_t window) {
  AlignmentReport report{bfile.oeis_id, 0, 0, AlignmentStatus::NoAlignment};
  for (std::int64_t shift = -window; shift <= window; ++shift) {
    const std::int64_t matched = count_matches(def, bfile, shift);
    if (matched >= kMinAlignedTerms) {
      report.shift = shift;
      report.matched_terms = matched;
      report.status = AlignmentStatus::Aligned;
      return report;
    }
  }
  return report;
}

bool is_valid_id(std::string_view oeis_id) {
  if (oeis_id.size() != 7 || oeis_id.front() != 'A') return false;
  for (char c : oeis_id.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string bfile_name(std::string_view oeis_id) {
  return "b" + std::string(oeis_id.substr(1)) + ".txt";
}

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("TRIBSUM_FIXTURE_DIR"); env && *env) return env;
  return TRIBSUM_DEFAULT_FIXTURE_DIR;
}

std::string default_base_url() {
  if (const char* env = std::getenv("TRIBSUM_OEIS_URL"); env && *env) return env;
  return "https://oeis.org";
}

BFile fetch_bfile(std::string_view oeis_id, Source source, const FetchOptions& options) {
  const std::string id(oeis_id);
  if (source == Source::FixtureDir) {
    if (!is_valid_id(oeis_id)) throw FixtureMissing("no fixture for invalid id '" + id + "'");
    const auto path = options.fixture_dir / bfile_name(oeis_id);
    if (!std::filesystem::is_regular_file(path)) {
      throw FixtureMissing("fixture not found: " + path.string());
    }
    return parse_bfile(read_file(path), id);
  }

  if (!is_valid_id(oeis_id)) throw FetchFailed("invalid OEIS id '" + id + "'");
  httplib::Client client(options.base_url);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  client.set_follow_location(true);
  const std::string resource = "/" + id + "/" + bfile_name(oeis_id);
  const auto response = client.Get(resource);
  if (!response) {
    throw FetchFailed("GET " + options.base_url + resource + " failed: " +
                      httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    throw FetchFailed("GET " + options.base_url + resource + " returned HTTP " +
                      std::to_string(response->status));
  }
  BFile parsed = parse_bfile(response->body, id);
  write_atomically(options.fixture_dir / bfile_name(oeis_id), response->body);
  return parsed;
}

}  // namespace tribsum::oeis
