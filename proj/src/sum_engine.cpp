#include "tribsum/sum_engine.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

#include "tribsum/error.hpp"

namespace tribsum {

namespace {

struct CaseInfo {
  FormulaCase c;
  std::string_view name;
  Direction direction;
  Parity parity;
};

constexpr std::array<CaseInfo, 17> kCases{{
    {FormulaCase::FwdAll_Generic, "FwdAll_Generic", Direction::Forward, Parity::All},
    {FormulaCase::FwdEven_Generic, "FwdEven_Generic", Direction::Forward, Parity::Even},
    {FormulaCase::FwdOdd_Generic, "FwdOdd_Generic", Direction::Forward, Parity::Odd},
    {FormulaCase::FwdEven_S1, "FwdEven_S1", Direction::Forward, Parity::Even},
    {FormulaCase::FwdOdd_S1, "FwdOdd_S1", Direction::Forward, Parity::Odd},
    {FormulaCase::Fwd_021_All, "Fwd_021_All", Direction::Forward, Parity::All},
    {FormulaCase::Fwd_021_Even, "Fwd_021_Even", Direction::Forward, Parity::Even},
    {FormulaCase::Fwd_021_Odd, "Fwd_021_Odd", Direction::Forward, Parity::Odd},
    {FormulaCase::BwdAll_Generic, "BwdAll_Generic", Direction::Backward, Parity::All},
    {FormulaCase::BwdEven_Generic, "BwdEven_Generic", Direction::Backward, Parity::Even},
    {FormulaCase::BwdOdd_Generic, "BwdOdd_Generic", Direction::Backward, Parity::Odd},
    {FormulaCase::BwdEven_RplusT0, "BwdEven_RplusT0", Direction::Backward, Parity::Even},
    {FormulaCase::BwdOdd_RplusT0, "BwdOdd_RplusT0", Direction::Backward, Parity::Odd},
    {FormulaCase::Bwd_021_All, "Bwd_021_All", Direction::Backward, Parity::All},
    {FormulaCase::Bwd_021_Even, "Bwd_021_Even", Direction::Backward, Parity::Even},
    {FormulaCase::Bwd_021_Odd, "Bwd_021_Odd", Direction::Backward, Parity::Odd},
    {FormulaCase::OracleFallback, "OracleFallback", Direction::Forward, Parity::All},
}};

const CaseInfo& info(FormulaCase c) { return kCases[static_cast<std::size_t>(c)]; }

FormulaCase degenerate_case(const SumQuery& q) {
  if (q.direction == Direction::Forward) {
    switch (q.parity) {
      case Parity::All: return FormulaCase::Fwd_021_All;
      case Parity::Even: return FormulaCase::Fwd_021_Even;
      case Parity::Odd: return FormulaCase::Fwd_021_Odd;
    }
  }
  switch (q.parity) {
    case Parity::All: return FormulaCase::Bwd_021_All;
    case Parity::Even: return FormulaCase::Bwd_021_Even;
    case Parity::Odd: return FormulaCase::Bwd_021_Odd;
  }
  return FormulaCase::OracleFallback;
}

FormulaCase generic_case(const SumQuery& q) {
  if (q.direction == Direction::Forward) {
    switch (q.parity) {
      case Parity::All: return FormulaCase::FwdAll_Generic;
      case Parity::Even: return FormulaCase::FwdEven_Generic;
      case Parity::Odd: return FormulaCase::FwdOdd_Generic;
    }
  }
  switch (q.parity) {
    case Parity::All: return FormulaCase::BwdAll_Generic;
    case Parity::Even: return FormulaCase::BwdEven_Generic;
    case Parity::Odd: return FormulaCase::BwdOdd_Generic;
  }
  return FormulaCase::OracleFallback;
}

// Closed forms. Each receives the one window of three consecutive terms it
// needs; the window's base index is given next to each formula.

// base n+1
Rational fwd_all_generic(const SequenceDef& d, const TermWindow& w) {
  const auto& [r, s, t] = d.params;
  return (w[2] + (1 - r) * w[1] + (1 - r - s) * w[0] - d.w2 + (r - 1) * d.w1 +
          (r + s - 1) * d.w0) /
         (r + s + t - 1);
}

// base 2n
Rational fwd_even_generic(const SequenceDef& d, const TermWindow& w) {
  const auto& [r, s, t] = d.params;
  return ((1 - s) * w[2] + (t + r * s) * w[1] + (t * t + r * t) * w[0] + (s - 1) * d.w2 +
          (-t - r * s) * d.w1 + (-1 + r * r - s * s + r * t + 2 * s) * d.w0) /
         denominators(d.params).product();
}

// base 2n
Rational fwd_odd_generic(const SequenceDef& d, const TermWindow& w) {
  const auto& [r, s, t] = d.params;
  return ((r + t) * w[2] + (s - s * s + t * t + r * t) * w[1] + (t - s * t) * w[0] +
          (-r - t) * d.w2 + (-1 + s + r * r + r * t) * d.w1 + (-t + s * t) * d.w0) /
         denominators(d.params).product();
}

// base 2n
Rational fwd_even_s1(const SequenceDef& d, const TermWindow& w) {
  const auto& [r, s, t] = d.params;
  return (w[1] + t * w[0] - d.w1 + r * d.w0) / (r + t);
}

// base 2n
Rational fwd_odd_s1(const SequenceDef& d, const TermWindow& w) {
  const auto& [r, s, t] = d.params;
  return (w[2] + t * w[1] - d.w2 + r * d.w1) / (r + t);
}

// base n+1
Rational fwd_021_all(const SequenceDef& d, const TermWindow& w) {
  return (w[2] + w[1] - w[0] - d.w2 - d.w1 + d.w0) / 2;
}

// base 2n
Rational fwd_021_even(const SequenceDef& d, const TermWindow& w, std::int64_t n) {
  return w[1] + (d.w2 - d.w1 - d.w0) * n + d.w0 - d.w1;
}

// base 2n+1
Rational fwd_021_odd(const SequenceDef& d, const TermWindow& w, std::int64_t n) {
  return (w[2] + w[1] - w[0] + Rational(2 * n) * (-d.w2 + d.w1 + d.w0) - d.w2 + d.w1 - d.w0) / 2;
}

// base -n-3: w = {W(-n-3), W(-n-2), W(-n-1)}
Rational bwd_all_generic(const SequenceDef& d, const TermWindow& w) {
  const auto& [r, s, t] = d.params;
  return (-(r + s + t) * w[2] - (s + t) * w[1] - t * w[0] + d.w2 + (1 - r) * d.w1 +
          (1 - r - s) * d.w0) /
         (r + s + t - 1);
}

// base -2n-1: w = {W(-2n-1), W(-2n), W(-2n+1)}
Rational bwd_even_generic(const SequenceDef& d, const TermWindow& w) {
  const auto& [r, s, t] = d.params;
  return (-(r + t) * w[2] + (r * r + r * t + s - 1) * w[1] + (s * t - t) * w[0] +
          (1 - s) * d.w2 + (t + r * s) * d.w1 + (1 - r * t - 2 * s - r * r + s * s) * d.w0) /
         denominators(d.params).product();
}

// base -2n-1
Rational bwd_odd_generic(const SequenceDef& d, const TermWindow& w) {
  const auto& [r, s, t] = d.params;
  return ((s - 1) * w[2] - (t + r * s) * w[1] - (t * t + r * t) * w[0] + (r + t) * d.w2 +
          (1 - r * r - r * t - s) * d.w1 + (t - s * t) * d.w0) /
         denominators(d.params).product();
}

// base -2n-1
Rational bwd_even_rplust0(const SequenceDef& d, const TermWindow& w) {
  const auto& [r, s, t] = d.params;
  return (-w[1] - t * w[0] + d.w2 + t * d.w1 + (1 - s) * d.w0) / (s - 1);
}

// base -2n-1
Rational bwd_odd_rplust0(const SequenceDef& d, const TermWindow& w) {
  const auto& [r, s, t] = d.params;
  return (-w[2] - t * w[1] + d.w1 + t * d.w0) / (s - 1);
}

// base -n-3
Rational bwd_021_all(const SequenceDef& d, const TermWindow& w) {
  return (-3 * w[2] - 3 * w[1] - w[0] + d.w2 + d.w1 - d.w0) / 2;
}

// base -2n-1
Rational bwd_021_even(const SequenceDef& d, const TermWindow& w, std::int64_t n) {
  return -w[2] + w[1] + (d.w1 - d.w0) + (d.w2 - d.w1 - d.w0) * n;
}

// base -2n-1
Rational bwd_021_odd(const SequenceDef& d, const TermWindow& w, std::int64_t n) {
  return (w[2] - 3 * w[1] - w[0] + (d.w2 - d.w1 + d.w0) +
          Rational(2 * n) * (-d.w2 + d.w1 + d.w0)) /
         2;
}

SumResult closed_or_fallback(const SequenceDef& def, const SumQuery& query) {
  validate(query);
  if (query.direction == Direction::Backward && def.params.t.is_zero()) {
    throw NegativeIndexWithZeroT();
  }
  const FormulaCase c = select_case(def.params, query);
  if (c == FormulaCase::OracleFallback) {
    return SumResult{sum_oracle(def, query), c, false};
  }
  return SumResult{evaluate_formula(def, c, query.n), c, false};
}

}  // namespace

Denominators denominators(const RecurrenceParams& p) {
  return Denominators{p.r + p.s + p.t - 1, p.r - p.s + p.t + 1};
}

std::string_view to_string(FormulaCase c) { return info(c).name; }

std::optional<FormulaCase> parse_formula_case(std::string_view name) {
  for (const auto& ci : kCases) {
    if (ci.name == name) return ci.c;
  }
  return std::nullopt;
}

bool is_degenerate_021(const RecurrenceParams& p) {
  return p.r == 0 && p.s == 2 && p.t == 1;
}

FormulaCase select_case(const RecurrenceParams& params, const SumQuery& query) {
  if (is_degenerate_021(params)) return degenerate_case(query);
  const Denominators d = denominators(params);
  if (query.parity == Parity::All) {
    return d.d1.is_zero() ? FormulaCase::OracleFallback : generic_case(query);
  }
  return d.product().is_zero() ? FormulaCase::OracleFallback : generic_case(query);
}

bool case_applies(const RecurrenceParams& p, FormulaCase c) {
  const Denominators d = denominators(p);
  const bool backward_ok = !p.t.is_zero() || info(c).direction == Direction::Forward;
  switch (c) {
    case FormulaCase::FwdAll_Generic:
    case FormulaCase::BwdAll_Generic:
      return backward_ok && !d.d1.is_zero();
    case FormulaCase::FwdEven_Generic:
    case FormulaCase::FwdOdd_Generic:
    case FormulaCase::BwdEven_Generic:
    case FormulaCase::BwdOdd_Generic:
      return backward_ok && !d.product().is_zero();
    case FormulaCase::FwdEven_S1:
    case FormulaCase::FwdOdd_S1:
      return p.s == 1 && !(p.r + p.t).is_zero();
    case FormulaCase::BwdEven_RplusT0:
    case FormulaCase::BwdOdd_RplusT0:
      return backward_ok && !d.product().is_zero() && (p.r + p.t).is_zero() && p.s != 1;
    case FormulaCase::Fwd_021_All:
    case FormulaCase::Fwd_021_Even:
    case FormulaCase::Fwd_021_Odd:
    case FormulaCase::Bwd_021_All:
    case FormulaCase::Bwd_021_Even:
    case FormulaCase::Bwd_021_Odd:
      return is_degenerate_021(p);
    case FormulaCase::OracleFallback:
      return false;
  }
  return false;
}

Rational evaluate_formula(const SequenceDef& def, FormulaCase c, std::int64_t n) {
  if (c == FormulaCase::OracleFallback) {
    throw InvalidQuery("OracleFallback is not a closed form");
  }
  validate(SumQuery{info(c).direction, info(c).parity, n});
  if (info(c).direction == Direction::Backward && def.params.t.is_zero()) {
    throw NegativeIndexWithZeroT();
  }
  if (!case_applies(def.params, c)) {
    throw InvalidQuery("hypothesis of " + std::string(to_string(c)) +
                       " does not hold for these parameters");
  }
  switch (c) {
    case FormulaCase::FwdAll_Generic: return fwd_all_generic(def, fetch_window(def, n + 1));
    case FormulaCase::FwdEven_Generic: return fwd_even_generic(def, fetch_window(def, 2 * n));
    case FormulaCase::FwdOdd_Generic: return fwd_odd_generic(def, fetch_window(def, 2 * n));
    case FormulaCase::FwdEven_S1: return fwd_even_s1(def, fetch_window(def, 2 * n));
    case FormulaCase::FwdOdd_S1: return fwd_odd_s1(def, fetch_window(def, 2 * n));
    case FormulaCase::Fwd_021_All: return fwd_021_all(def, fetch_window(def, n + 1));
    case FormulaCase::Fwd_021_Even: return fwd_021_even(def, fetch_window(def, 2 * n), n);
    case FormulaCase::Fwd_021_Odd: return fwd_021_odd(def, fetch_window(def, 2 * n + 1), n);
    case FormulaCase::BwdAll_Generic: return bwd_all_generic(def, fetch_window(def, -n - 3));
    case FormulaCase::BwdEven_Generic:
      return bwd_even_generic(def, fetch_window(def, -2 * n - 1));
    case FormulaCase::BwdOdd_Generic: return bwd_odd_generic(def, fetch_window(def, -2 * n - 1));
    case FormulaCase::BwdEven_RplusT0:
      return bwd_even_rplust0(def, fetch_window(def, -2 * n - 1));
    case FormulaCase::BwdOdd_RplusT0: return bwd_odd_rplust0(def, fetch_window(def, -2 * n - 1));
    case FormulaCase::Bwd_021_All: return bwd_021_all(def, fetch_window(def, -n - 3));
    case FormulaCase::Bwd_021_Even: return bwd_021_even(def, fetch_window(def, -2 * n - 1), n);
    case FormulaCase::Bwd_021_Odd: return bwd_021_odd(def, fetch_window(def, -2 * n - 1), n);
    case FormulaCase::OracleFallback: break;
  }
  throw InvalidQuery("unhandled formula case");
}

SumResult sum_forward_all(const SequenceDef& def, std::int64_t n) {
  return closed_or_fallback(def, {Direction::Forward, Parity::All, n});
}

SumResult sum_forward_even(const SequenceDef& def, std::int64_t n) {
  return closed_or_fallback(def, {Direction::Forward, Parity::Even, n});
}

SumResult sum_forward_odd(const SequenceDef& def, std::int64_t n) {
  return closed_or_fallback(def, {Direction::Forward, Parity::Odd, n});
}

SumResult sum_backward_all(const SequenceDef& def, std::int64_t n) {
  return closed_or_fallback(def, {Direction::Backward, Parity::All, n});
}

SumResult sum_backward_even(const SequenceDef& def, std::int64_t n) {
  return closed_or_fallback(def, {Direction::Backward, Parity::Even, n});
}

SumResult sum_backward_odd(const SequenceDef& def, std::int64_t n) {
  return closed_or_fallback(def, {Direction::Backward, Parity::Odd, n});
}

SumResult evaluate_sum(const SequenceDef& def, const SumQuery& query) {
  return closed_or_fallback(def, query);
}

SumResult evaluate_sum_checked(const SequenceDef& def, const SumQuery& query) {
  SumResult result = closed_or_fallback(def, query);
  const Rational expected = sum_oracle(def, query);
  result.oracle_checked = true;
  if (result.value != expected) {
    throw SumMismatch(std::string(to_string(result.case_used)) + " gave " +
                      result.value.to_string() + " but the term-by-term sum is " +
                      expected.to_string());
  }
  return result;
}

Rational sum_oracle(const SequenceDef& def, const SumQuery& query) {
  validate(query);
  const auto way = query.direction == Direction::Forward ? TermWalker::Way::Forward
                                                         : TermWalker::Way::Backward;
  TermWalker walker(def, way);
  Rational total;
  const std::int64_t first = query.direction == Direction::Forward ? 0 : 1;
  for (std::int64_t k = first; k <= query.n; ++k) {
    const std::int64_t target = summand_index(query.direction, query.parity, k);
    while (walker.index() != target) walker.advance();
    total += walker.current();
  }
  return total;
}

TermWindow fetch_window(const SequenceDef& def, std::int64_t m) {
  const std::int64_t reach = std::max(std::llabs(m), std::llabs(m + 2));
  return reach <= kMatrixCrossover ? window_iterative(def, m) : window_matrix(def, m);
}

}  // namespace tribsum
