#pragma once

/// Brute-force reference implementations. Nothing here shares code with the
/// closed forms or with the sliding-window / matrix evaluators: every term is
/// produced from a fully stored history, and sums are literal loops.

#include <cstdint>
#include <vector>

#include "tribsum/query.hpp"
#include "tribsum/recurrence.hpp"

namespace tribsum::oracle {

Rational oracle_term(const SequenceDef& def, std::int64_t n);

Rational oracle_sum(const SequenceDef& def, const SumQuery& query);

/// Partial sums of one family for every bound 0..max_n in a single pass.
/// Element n equals oracle_sum(def, {direction, parity, n}); for the backward
/// family element 0 is the empty sum 0.
std::vector<Rational> oracle_prefix_sums(const SequenceDef& def, Direction direction,
                                         Parity parity, std::int64_t max_n);

}  // namespace tribsum::oracle
