#include "tribsum/corollaries.hpp"

#include <sstream>

namespace tribsum {

namespace {

constexpr Direction F = Direction::Forward;
constexpr Direction B = Direction::Backward;
constexpr Parity A = Parity::All;
constexpr Parity E = Parity::Even;
constexpr Parity O = Parity::Odd;

// Shorthands for W(n+k) and W(2n+k).
IndexedTerm w1(std::int64_t coef, std::int64_t offset) { return {coef, 1, offset}; }
IndexedTerm w2(std::int64_t coef, std::int64_t offset) { return {coef, 2, offset}; }
// Backward: W(-n+k) and W(-2n+k).
IndexedTerm m1(std::int64_t coef, std::int64_t offset) { return {coef, -1, offset}; }
IndexedTerm m2(std::int64_t coef, std::int64_t offset) { return {coef, -2, offset}; }

std::vector<CorollaryClause> build() {
  return {
      // Tribonacci
      {"tribonacci", F, A, {w1(1, 3), w1(-1, 1)}, 0, -1, 2},
      {"tribonacci", F, E, {w2(1, 1), w2(1, 0)}, 0, -1, 2},
      {"tribonacci", F, O, {w2(1, 2), w2(1, 1)}, 0, 0, 2},
      // Tribonacci-Lucas
      {"tribonacci-lucas", F, A, {w1(1, 3), w1(-1, 1)}, 0, 0, 2},
      {"tribonacci-lucas", F, E, {w2(1, 1), w2(1, 0)}, 0, 2, 2},
      {"tribonacci-lucas", F, O, {w2(1, 2), w2(1, 1)}, 0, -2, 2},
      // third order Pell
      {"third-order-pell", F, A, {w1(1, 3), w1(-1, 2), w1(-2, 1)}, 0, -1, 3},
      {"third-order-pell", F, E, {w2(1, 1), w2(1, 0)}, 0, -1, 3},
      {"third-order-pell", F, O, {w2(1, 2), w2(1, 1)}, 0, 0, 3},
      // third order Pell-Lucas
      {"third-order-pell-lucas", F, A, {w1(1, 3), w1(-1, 2), w1(-2, 1)}, 0, 2, 3},
      {"third-order-pell-lucas", F, E, {w2(1, 1), w2(1, 0)}, 0, 4, 3},
      {"third-order-pell-lucas", F, O, {w2(1, 2), w2(1, 1)}, 0, -2, 3},
      // third order modified Pell
      {"third-order-modified-pell", F, A, {w1(1, 3), w1(-1, 2), w1(-2, 1)}, 0, 0, 3},
      {"third-order-modified-pell", F, E, {w2(1, 1), w2(1, 0)}, 0, -1, 3},
      {"third-order-modified-pell", F, O, {w2(1, 2), w2(1, 1)}, 0, 1, 3},
      // Padovan
      {"padovan", F, A, {w1(1, 3), w1(1, 2)}, 0, -2, 1},
      {"padovan", F, E, {w2(1, 1), w2(1, 0)}, 0, -1, 1},
      {"padovan", F, O, {w2(1, 2), w2(1, 1)}, 0, -1, 1},
      // Perrin
      {"perrin", F, A, {w1(1, 3), w1(1, 2)}, 0, -2, 1},
      {"perrin", F, E, {w2(1, 1), w2(1, 0)}, 0, 0, 1},
      {"perrin", F, O, {w2(1, 2), w2(1, 1)}, 0, -2, 1},
      // Padovan-Perrin
      {"padovan-perrin", F, A, {w1(1, 3), w1(1, 2)}, 0, -1, 1},
      {"padovan-perrin", F, E, {w2(1, 1), w2(1, 0)}, 0, 0, 1},
      {"padovan-perrin", F, O, {w2(1, 2), w2(1, 1)}, 0, -1, 1},
      // Pell-Padovan
      {"pell-padovan", F, A, {w1(1, 3), w1(1, 2), w1(-1, 1)}, 0, -1, 2},
      {"pell-padovan", F, E, {w2(1, 1)}, -1, 0, 1},
      {"pell-padovan", F, O, {w2(1, 3), w2(1, 2), w2(-1, 1)}, 2, -1, 2},
      // Pell-Perrin
      {"pell-perrin", F, A, {w1(1, 3), w1(1, 2), w1(-1, 1)}, 0, 1, 2},
      {"pell-perrin", F, E, {w2(1, 1)}, -1, 3, 1},
      {"pell-perrin", F, O, {w2(1, 3), w2(1, 2), w2(-1, 1)}, 2, -5, 2},
      // Jacobsthal-Padovan
      {"jacobsthal-padovan", F, A, {w1(1, 3), w1(1, 2)}, 0, -2, 2},
      {"jacobsthal-padovan", F, E, {w2(1, 1), w2(2, 0)}, 0, -1, 2},
      {"jacobsthal-padovan", F, O, {w2(1, 2), w2(2, 1)}, 0, -1, 2},
      // Jacobsthal-Perrin
      {"jacobsthal-perrin", F, A, {w1(1, 3), w1(1, 2)}, 0, -2, 2},
      {"jacobsthal-perrin", F, E, {w2(1, 1), w2(2, 0)}, 0, 0, 2},
      {"jacobsthal-perrin", F, O, {w2(1, 2), w2(2, 1)}, 0, -2, 2},
      // Narayana
      {"narayana", F, A, {w1(1, 3)}, 0, -1, 1},
      {"narayana", F, E, {w2(1, 2), w2(1, 1), w2(2, 0)}, 0, -2, 3},
      {"narayana", F, O, {w2(2, 2), w2(2, 1), w2(1, 0)}, 0, -1, 3},
      // third order Jacobsthal
      {"third-order-jacobsthal", F, A, {w1(1, 3), w1(-1, 1)}, 0, -1, 3},
      {"third-order-jacobsthal", F, E, {w2(1, 1), w2(2, 0)}, 0, -1, 3},
      {"third-order-jacobsthal", F, O, {w2(1, 2), w2(2, 1)}, 0, 0, 3},
      // third order Jacobsthal-Lucas
      {"third-order-jacobsthal-lucas", F, A, {w1(1, 3), w1(-1, 1)}, 0, -3, 3},
      {"third-order-jacobsthal-lucas", F, E, {w2(1, 1), w2(2, 0)}, 0, 1, 3},
      {"third-order-jacobsthal-lucas", F, O, {w2(1, 2), w2(2, 1)}, 0, -4, 3},

      // Negative subscripts.
      {"tribonacci", B, A, {m1(-3, -1), m1(-2, -2), m1(-1, -3)}, 0, 1, 2},
      {"tribonacci", B, E, {m2(-1, 1), m2(1, 0)}, 0, 1, 2},
      {"tribonacci", B, O, {m2(-1, 0), m2(-1, -1)}, 0, 0, 2},
      {"tribonacci-lucas", B, A, {m1(-3, -1), m1(-2, -2), m1(-1, -3)}, 0, 0, 2},
      {"tribonacci-lucas", B, E, {m2(-1, 1), m2(1, 0)}, 0, -2, 2},
      {"tribonacci-lucas", B, O, {m2(-1, 0), m2(-1, -1)}, 0, 2, 2},
      {"third-order-pell", B, A, {m1(-4, -1), m1(-2, -2), m1(-1, -3)}, 0, 1, 3},
      {"third-order-pell", B, E, {m2(-1, 1), m2(2, 0)}, 0, 1, 3},
      {"third-order-pell", B, O, {m2(-1, 0), m2(-1, -1)}, 0, 0, 3},
      {"third-order-pell-lucas", B, A, {m1(-4, -1), m1(-2, -2), m1(-1, -3)}, 0, -2, 3},
      {"third-order-pell-lucas", B, E, {m2(-1, 1), m2(2, 0)}, 0, -4, 3},
      {"third-order-pell-lucas", B, O, {m2(-1, 0), m2(-1, -1)}, 0, 2, 3},
      {"third-order-modified-pell", B, A, {m1(-4, -1), m1(-2, -2), m1(-1, -3)}, 0, 0, 3},
      {"third-order-modified-pell", B, E, {m2(-1, 1), m2(2, 0)}, 0, 1, 3},
      {"third-order-modified-pell", B, O, {m2(-1, 0), m2(-1, -1)}, 0, -1, 3},
      {"padovan", B, A, {m1(-2, -1), m1(-2, -2), m1(-1, -3)}, 0, 2, 1},
      {"padovan", B, E, {m2(-1, 1)}, 0, 1, 1},
      {"padovan", B, O, {m2(-1, 0), m2(-1, -1)}, 0, 1, 1},
      {"perrin", B, A, {m1(-2, -1), m1(-2, -2), m1(-1, -3)}, 0, 2, 1},
      {"perrin", B, E, {m2(-1, 1)}, 0, 0, 1},
      {"perrin", B, O, {m2(-1, 0), m2(-1, -1)}, 0, 2, 1},
      {"padovan-perrin", B, A, {m1(-2, -1), m1(-2, -2), m1(-1, -3)}, 0, 1, 1},
      {"padovan-perrin", B, E, {m2(-1, 1)}, 0, 0, 1},
      {"padovan-perrin", B, O, {m2(-1, 0), m2(-1, -1)}, 0, 1, 1},
      {"pell-padovan", B, A, {m1(-3, -1), m1(-3, -2), m1(-1, -3)}, 0, 1, 2},
      {"pell-padovan", B, E, {m2(-1, 1), m2(1, 0)}, -1, 0, 1},
      {"pell-padovan", B, O, {m2(1, 1), m2(-3, 0), m2(-1, -1)}, 2, 1, 2},
      {"pell-perrin", B, A, {m1(-3, -1), m1(-3, -2), m1(-1, -3)}, 0, -1, 2},
      {"pell-perrin", B, E, {m2(-1, 1), m2(1, 0)}, -1, -3, 1},
      {"pell-perrin", B, O, {m2(1, 1), m2(-3, 0), m2(-1, -1)}, 2, 5, 2},
      {"jacobsthal-padovan", B, A, {m1(-3, -1), m1(-3, -2), m1(-2, -3)}, 0, 2, 2},
      {"jacobsthal-padovan", B, E, {m2(-1, 1)}, 0, 1, 2},
      {"jacobsthal-padovan", B, O, {m2(-1, 0), m2(-2, -1)}, 0, 1, 2},
      {"jacobsthal-perrin", B, A, {m1(-3, -1), m1(-3, -2), m1(-2, -3)}, 0, 2, 2},
      {"jacobsthal-perrin", B, E, {m2(-1, 1)}, 0, 0, 2},
      {"jacobsthal-perrin", B, O, {m2(-1, 0), m2(-2, -1)}, 0, 2, 2},
      {"narayana", B, A, {m1(-2, -1), m1(-1, -2), m1(-1, -3)}, 0, 1, 1},
      {"narayana", B, E, {m2(-2, 1), m2(1, 0), m2(-1, -1)}, 0, 2, 3},
      {"narayana", B, O, {m2(-1, 1), m2(-1, 0), m2(-2, -1)}, 0, 1, 3},
      {"third-order-jacobsthal", B, A, {m1(-4, -1), m1(-3, -2), m1(-2, -3)}, 0, 1, 3},
      {"third-order-jacobsthal", B, E, {m2(-1, 1), m2(1, 0)}, 0, 1, 3},
      {"third-order-jacobsthal", B, O, {m2(-1, 0), m2(-2, -1)}, 0, 0, 3},
      {"third-order-jacobsthal-lucas", B, A, {m1(-4, -1), m1(-3, -2), m1(-2, -3)}, 0, 3, 3},
      {"third-order-jacobsthal-lucas", B, E, {m2(-1, 1), m2(1, 0)}, 0, -1, 3},
      {"third-order-jacobsthal-lucas", B, O, {m2(-1, 0), m2(-2, -1)}, 0, 4, 3},
  };
}

void append_signed(std::ostringstream& os, std::int64_t coef, const std::string& body,
                   bool first) {
  if (coef < 0) {
    os << (first ? "-" : " - ");
  } else if (!first) {
    os << " + ";
  }
  const std::int64_t mag = coef < 0 ? -coef : coef;
  if (mag != 1 || body.empty()) os << mag;
  os << body;
}

std::string index_text(std::int64_t mult, std::int64_t offset) {
  std::ostringstream os;
  if (mult == -1) {
    os << "-n";
  } else if (mult == 1) {
    os << "n";
  } else {
    os << mult << "n";
  }
  if (offset > 0) os << "+" << offset;
  if (offset < 0) os << offset;
  return os.str();
}

}  // namespace

std::span<const CorollaryClause> corollaries() {
  static const std::vector<CorollaryClause> clauses = build();
  return clauses;
}

Rational evaluate(const CorollaryClause& clause, const SequenceDef& def, std::int64_t n) {
  Rational total = Rational(clause.linear) * n + clause.constant;
  for (const auto& term : clause.terms) {
    total += Rational(term.coef) * term_iterative(def, term.mult * n + term.offset);
  }
  return total / clause.divisor;
}

std::string CorollaryClause::describe(std::string_view symbol) const {
  std::ostringstream os;
  const std::string sym(symbol);
  const char* summand = direction == Direction::Forward
                            ? (parity == Parity::All ? "k" : (parity == Parity::Even ? "2k" : "2k+1"))
                            : (parity == Parity::All ? "-k" : (parity == Parity::Even ? "-2k" : "-2k+1"));
  os << "sum_{k=" << first_n() << "}^{n} " << sym << "_{" << summand << "} = ";
  if (divisor != 1) os << "(";
  bool first = true;
  for (const auto& term : terms) {
    append_signed(os, term.coef, sym + "_{" + index_text(term.mult, term.offset) + "}", first);
    first = false;
  }
  if (linear != 0) {
    append_signed(os, linear, "n", first);
    first = false;
  }
  if (constant != 0 || first) append_signed(os, constant, "", first);
  if (divisor != 1) os << ")/" << divisor;
  return os.str();
}

}  // namespace tribsum
