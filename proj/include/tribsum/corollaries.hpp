#pragma once

/// Named-sequence sum identities: the general closed forms instantiated for
/// each catalog entry, written out as standalone expressions
///
///   ( sum_i coef_i * W(mult_i * n + offset_i) + linear * n + constant ) / divisor
///
/// and checked against the brute-force sums as regression fixtures.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tribsum/query.hpp"
#include "tribsum/recurrence.hpp"

namespace tribsum {

struct IndexedTerm {
  std::int64_t coef;
  std::int64_t mult;
  std::int64_t offset;
};

struct CorollaryClause {
  std::string_view sequence_key;
  Direction direction;
  Parity parity;
  std::vector<IndexedTerm> terms;
  std::int64_t linear;
  std::int64_t constant;
  std::int64_t divisor;

  /// Smallest n the identity is stated for (0 forward, 1 backward).
  std::int64_t first_n() const { return direction == Direction::Forward ? 0 : 1; }
  char label() const { return parity == Parity::All ? 'a' : (parity == Parity::Even ? 'b' : 'c'); }
  std::string describe(std::string_view symbol) const;
};

/// All 90 clauses: 15 sequences x {forward, backward} x {a, b, c}.
std::span<const CorollaryClause> corollaries();

Rational evaluate(const CorollaryClause& clause, const SequenceDef& def, std::int64_t n);

}  // namespace tribsum
