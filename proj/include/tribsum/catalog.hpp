#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tribsum/recurrence.hpp"

namespace tribsum {

struct CatalogEntry {
  std::string key;           // lowercase, hyphenated
  std::string display_name;
  std::string symbol;        // conventional letter, e.g. "T" for Tribonacci
  SequenceDef def;
  std::vector<std::string> oeis_ids;  // first one is the primary id
  /// b-file index = sequence index + shift, for the primary id. Only set
  /// where it was confirmed by align() against a bundled b-file.
  std::optional<std::int64_t> oeis_offset_shift;

  std::optional<std::string> primary_oeis_id() const {
    if (oeis_ids.empty()) return std::nullopt;
    return oeis_ids.front();
  }
};

/// The fifteen named sequences, in their conventional order.
std::span<const CatalogEntry> list_all();

/// Throws UnknownSequence.
const CatalogEntry& lookup(std::string_view key);

/// Plain-text table of the catalog (one row per entry).
std::string catalog_table();

}  // namespace tribsum
