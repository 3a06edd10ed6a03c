#pragma once

/// Generalized Tribonacci recurrence
///
///   W(n) = r*W(n-1) + s*W(n-2) + t*W(n-3),   W(0), W(1), W(2) given,
///
/// extended to negative indices by running it backward (needs t != 0):
///
///   W(-m) = (W(-m+3) - r*W(-m+2) - s*W(-m+1)) / t.
///
/// Two evaluation routes are provided: a sliding-window iteration (O(|n|))
/// and companion-matrix exponentiation (O(log |n|) matrix products).

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "tribsum/rational.hpp"

namespace tribsum {

struct RecurrenceParams {
  Rational r;
  Rational s;
  Rational t;

  friend bool operator==(const RecurrenceParams&, const RecurrenceParams&) = default;
};

struct SequenceDef {
  RecurrenceParams params;
  Rational w0;
  Rational w1;
  Rational w2;
  std::optional<std::string> name;
  std::optional<std::string> oeis_id;

  const Rational& initial(int k) const { return k == 0 ? w0 : (k == 1 ? w1 : w2); }
};

/// Shorthand for integer definitions, W(w0,w1,w2; r,s,t).
SequenceDef make_def(std::int64_t w0, std::int64_t w1, std::int64_t w2, std::int64_t r,
                     std::int64_t s, std::int64_t t);

using Matrix3 = std::array<std::array<Rational, 3>, 3>;
using Vector3 = std::array<Rational, 3>;

/// Counts matrix-matrix and matrix-vector products performed by the matrix
/// route. Optional out-parameter; the library keeps no global counters.
struct MatrixOpCounter {
  std::size_t products = 0;
};

Matrix3 identity_matrix();
Matrix3 multiply(const Matrix3& a, const Matrix3& b, MatrixOpCounter* counter = nullptr);
Vector3 multiply(const Matrix3& a, const Vector3& v, MatrixOpCounter* counter = nullptr);
Rational determinant(const Matrix3& m);

/// Fixed layout [[r, s, t], [1, 0, 0], [0, 1, 0]]. Advances the state
/// (W(n), W(n-1), W(n-2)) to (W(n+1), W(n), W(n-1)).
class CompanionMatrix {
 public:
  explicit CompanionMatrix(RecurrenceParams params) : params_(std::move(params)) {}

  Rational at(int row, int col) const;
  Matrix3 dense() const;
  Rational determinant() const { return params_.t; }

  /// Exact inverse [[0,1,0],[0,0,1],[1/t,-r/t,-s/t]]; throws
  /// NegativeIndexWithZeroT when t = 0.
  Matrix3 inverse() const;

  const RecurrenceParams& params() const { return params_; }

 private:
  RecurrenceParams params_;
};

CompanionMatrix companion_matrix(const RecurrenceParams& params);

/// M^exponent by binary exponentiation; negative exponents use the inverse.
Matrix3 matrix_power(const CompanionMatrix& m, std::int64_t exponent,
                     MatrixOpCounter* counter = nullptr);

/// W(n) by stepping the recurrence one index at a time from the initial
/// terms, keeping only the last three values.
Rational term_iterative(const SequenceDef& def, std::int64_t n);

/// W(n) as the top entry of M^(n-2) (W2, W1, W0)^T.
Rational term_matrix(const SequenceDef& def, std::int64_t n, MatrixOpCounter* counter = nullptr);

/// Three consecutive terms {W(m), W(m+1), W(m+2)}.
using TermWindow = std::array<Rational, 3>;

TermWindow window_iterative(const SequenceDef& def, std::int64_t m);
TermWindow window_matrix(const SequenceDef& def, std::int64_t m,
                         MatrixOpCounter* counter = nullptr);

/// Stateful forward/backward walker over the sequence. Visits W(0) first,
/// then W(1), W(2), ... (forward) or W(-1), W(-2), ... (backward).
class TermWalker {
 public:
  enum class Way { Forward, Backward };

  TermWalker(const SequenceDef& def, Way way);

  const Rational& current() const { return window_[0]; }
  std::int64_t index() const { return index_; }
  void advance();

 private:
  RecurrenceParams params_;
  Way way_;
  std::int64_t index_ = 0;
  // Forward: {W(i), W(i+1), W(i+2)}. Backward: {W(i), W(i+1), W(i+2)} too,
  // so window_[0] is always the current term.
  std::array<Rational, 3> window_;
  Rational inv_t_;
};

}  // namespace tribsum
