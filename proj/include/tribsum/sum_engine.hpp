#pragma once

/// Closed-form partial sums of generalized Tribonacci sequences.
///
/// Six families are supported (forward/backward x all/even/odd, see
/// SumQuery). Each request is dispatched to the formula whose hypothesis
/// holds for (r, s, t):
///
///   (r,s,t) = (0,2,1)            -> dedicated formulas with a term linear in n
///   parity All,  d1 != 0         -> generic formula over d1
///   parity Even/Odd, d1*d2 != 0  -> generic formula over d1*d2
///   anything else                -> brute-force fallback (OracleFallback)
///
/// where d1 = r+s+t-1 and d2 = r-s+t+1. The s = 1 and r+t = 0 variants are
/// algebraic specializations of the generic even/odd formulas; they are
/// available through evaluate_formula() for cross-checking but never chosen
/// by dispatch.

#include <cstdint>
#include <optional>
#include <string_view>

#include "tribsum/query.hpp"
#include "tribsum/recurrence.hpp"

namespace tribsum {

struct Denominators {
  Rational d1;  // r + s + t - 1
  Rational d2;  // r - s + t + 1

  Rational product() const { return d1 * d2; }
};

Denominators denominators(const RecurrenceParams& params);

enum class FormulaCase {
  FwdAll_Generic,
  FwdEven_Generic,
  FwdOdd_Generic,
  FwdEven_S1,
  FwdOdd_S1,
  Fwd_021_All,
  Fwd_021_Even,
  Fwd_021_Odd,
  BwdAll_Generic,
  BwdEven_Generic,
  BwdOdd_Generic,
  BwdEven_RplusT0,
  BwdOdd_RplusT0,
  Bwd_021_All,
  Bwd_021_Even,
  Bwd_021_Odd,
  OracleFallback,
};

std::string_view to_string(FormulaCase c);
std::optional<FormulaCase> parse_formula_case(std::string_view name);

struct SumResult {
  Rational value;
  FormulaCase case_used = FormulaCase::OracleFallback;
  bool oracle_checked = false;
};

/// True for the exact triple (0, 2, 1), where d2 = 0.
bool is_degenerate_021(const RecurrenceParams& params);

FormulaCase select_case(const RecurrenceParams& params, const SumQuery& query);

/// Whether the hypothesis of `c` holds for `params` (always false for
/// OracleFallback).
bool case_applies(const RecurrenceParams& params, FormulaCase c);

/// Evaluates one specific closed form, bypassing dispatch. Throws
/// InvalidQuery if the case's hypothesis fails or n is out of range, and
/// NegativeIndexWithZeroT for backward cases with t = 0.
Rational evaluate_formula(const SequenceDef& def, FormulaCase c, std::int64_t n);

SumResult sum_forward_all(const SequenceDef& def, std::int64_t n);
SumResult sum_forward_even(const SequenceDef& def, std::int64_t n);
SumResult sum_forward_odd(const SequenceDef& def, std::int64_t n);
SumResult sum_backward_all(const SequenceDef& def, std::int64_t n);
SumResult sum_backward_even(const SequenceDef& def, std::int64_t n);
SumResult sum_backward_odd(const SequenceDef& def, std::int64_t n);

/// Dispatches on query.direction and query.parity.
SumResult evaluate_sum(const SequenceDef& def, const SumQuery& query);

/// evaluate_sum() followed by comparison with sum_oracle(); sets
/// oracle_checked and throws SumMismatch on disagreement.
SumResult evaluate_sum_checked(const SequenceDef& def, const SumQuery& query);

/// Literal term-by-term sum, walking the recurrence once.
Rational sum_oracle(const SequenceDef& def, const SumQuery& query);

/// Terms whose |index| stays within this bound are fetched by iteration;
/// beyond it the matrix route is used. Tuning constant only.
inline constexpr std::int64_t kMatrixCrossover = 64;

/// {W(m), W(m+1), W(m+2)} via whichever route kMatrixCrossover selects.
TermWindow fetch_window(const SequenceDef& def, std::int64_t m);

}  // namespace tribsum
