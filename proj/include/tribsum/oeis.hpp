#pragma once

/// OEIS b-file handling: parsing, offset alignment against a recurrence,
/// and retrieval from a local fixture directory or from oeis.org.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tribsum/recurrence.hpp"

namespace tribsum::oeis {

struct BFileEntry {
  std::int64_t index;
  BigInt value;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

/// Indices strictly increase by one, without gaps.
struct BFile {
  std::string oeis_id;
  std::vector<BFileEntry> entries;

  std::optional<std::int64_t> first_index() const;
  friend bool operator==(const BFile&, const BFile&) = default;
};

/// Lines are "<index> <value>"; blank lines and lines starting with '#' are
/// skipped. Throws MalformedBFile on bad syntax, gaps or duplicate indices.
BFile parse_bfile(std::string_view content, std::string oeis_id = {});

/// Canonical "<index> <value>\n" rendering (no comments).
std::string serialize(const BFile& bfile);

enum class AlignmentStatus { Aligned, NoAlignment };

struct AlignmentReport {
  std::string oeis_id;
  std::int64_t shift = 0;  // b-file index = sequence index + shift
  std::int64_t matched_terms = 0;
  AlignmentStatus status = AlignmentStatus::NoAlignment;
};

inline constexpr std::int64_t kMinAlignedTerms = 10;
inline constexpr std::int64_t kDefaultShiftWindow = 8;

/// Number of consecutive matches W(n) == b(n + shift), starting at the
/// first b-file index whose sequence index n is >= 0, stopping at the
/// first mismatch or after `limit` terms.
std::int64_t count_matches(const SequenceDef& def, const BFile& bfile, std::int64_t shift,
                           std::int64_t limit = -1);

/// Tries every shift in [-window, window] in increasing order and reports
/// the first one with at least kMinAlignedTerms consecutive matches.
AlignmentReport align(const SequenceDef& def, const BFile& bfile,
                      std::int64_t window = kDefaultShiftWindow);

enum class Source { Network, FixtureDir };

/// True for ids of the form "A" followed by six digits.
bool is_valid_id(std::string_view oeis_id);

/// "A000073" -> "b000073.txt".
std::string bfile_name(std::string_view oeis_id);

struct FetchOptions {
  std::filesystem::path fixture_dir;
  std::string base_url = "https://oeis.org";
};

/// Fixture directory from $TRIBSUM_FIXTURE_DIR, else the bundled data/oeis.
std::filesystem::path default_fixture_dir();

/// Base URL from $TRIBSUM_OEIS_URL, else https://oeis.org.
std::string default_base_url();

/// FixtureDir reads <fixture_dir>/b<digits>.txt and throws FixtureMissing if
/// absent. Network downloads <base_url>/<id>/b<digits>.txt, throws
/// FetchFailed on transport or HTTP errors, and stores the body in the
/// fixture directory via write-to-temp-then-rename.
BFile fetch_bfile(std::string_view oeis_id, Source source, const FetchOptions& options);

}  // namespace tribsum::oeis
