#include "tribsum/recurrence.hpp"

#include <cstdlib>
#include <optional>
#include <utility>

#include "tribsum/error.hpp"

namespace tribsum {

namespace {

// {W(i), W(i+1), W(i+2)} -> {W(i+1), W(i+2), W(i+3)}
void step_forward(const RecurrenceParams& p, TermWindow& w) {
  Rational next = p.r * w[2] + p.s * w[1] + p.t * w[0];
  w[0] = std::move(w[1]);
  w[1] = std::move(w[2]);
  w[2] = std::move(next);
}

// {W(i), W(i+1), W(i+2)} -> {W(i-1), W(i), W(i+1)}
void step_backward(const RecurrenceParams& p, const Rational& inv_t, TermWindow& w) {
  Rational prev = (w[2] - p.r * w[1] - p.s * w[0]) * inv_t;
  w[2] = std::move(w[1]);
  w[1] = std::move(w[0]);
  w[0] = std::move(prev);
}

Rational inverse_t(const RecurrenceParams& p) {
  if (p.t.is_zero()) throw NegativeIndexWithZeroT();
  return Rational(1) / p.t;
}

std::uint64_t magnitude(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

}  // namespace

SequenceDef make_def(std::int64_t w0, std::int64_t w1, std::int64_t w2, std::int64_t r,
                     std::int64_t s, std::int64_t t) {
  return SequenceDef{RecurrenceParams{r, s, t}, w0, w1, w2, std::nullopt, std::nullopt};
}

Matrix3 identity_matrix() {
  Matrix3 m;
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  return m;
}

Matrix3 multiply(const Matrix3& a, const Matrix3& b, MatrixOpCounter* counter) {
  Matrix3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Rational acc;
      for (int k = 0; k < 3; ++k) {
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) acc += a[i][k] * b[k][j];
      }
      out[i][j] = std::move(acc);
    }
  }
  if (counter) ++counter->products;
  return out;
}

Vector3 multiply(const Matrix3& a, const Vector3& v, MatrixOpCounter* counter) {
  Vector3 out;
  for (int i = 0; i < 3; ++i) {
    Rational acc;
    for (int k = 0; k < 3; ++k) {
      if (!a[i][k].is_zero() && !v[k].is_zero()) acc += a[i][k] * v[k];
    }
    out[i] = std::move(acc);
  }
  if (counter) ++counter->products;
  return out;
}

Rational determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Rational CompanionMatrix::at(int row, int col) const {
  if (row == 0) return col == 0 ? params_.r : (col == 1 ? params_.s : params_.t);
  return (row == 1 && col == 0) || (row == 2 && col == 1) ? Rational(1) : Rational(0);
}

Matrix3 CompanionMatrix::dense() const {
  Matrix3 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = at(i, j);
  }
  return m;
}

Matrix3 CompanionMatrix::inverse() const {
  const Rational inv_t = inverse_t(params_);
  Matrix3 m;
  m[0][1] = 1;
  m[1][2] = 1;
  m[2][0] = inv_t;
  m[2][1] = -params_.r * inv_t;
  m[2][2] = -params_.s * inv_t;
  return m;
}

CompanionMatrix companion_matrix(const RecurrenceParams& params) {
  return CompanionMatrix(params);
}

Matrix3 matrix_power(const CompanionMatrix& m, std::int64_t exponent, MatrixOpCounter* counter) {
  if (exponent == 0) return identity_matrix();
  Matrix3 base = exponent > 0 ? m.dense() : m.inverse();
  std::uint64_t k = magnitude(exponent);
  std::optional<Matrix3> result;
  for (;;) {
    if (k & 1U) result = result ? multiply(*result, base, counter) : base;
    k >>= 1U;
    if (k == 0) break;
    base = multiply(base, base, counter);
  }
  return *result;
}

Rational term_iterative(const SequenceDef& def, std::int64_t n) {
  if (n >= 0 && n <= 2) return def.initial(static_cast<int>(n));
  return window_iterative(def, n)[0];
}

Rational term_matrix(const SequenceDef& def, std::int64_t n, MatrixOpCounter* counter) {
  if (n == 2) return def.w2;
  return window_matrix(def, n - 2, counter)[2];
}

TermWindow window_iterative(const SequenceDef& def, std::int64_t m) {
  TermWindow w{def.w0, def.w1, def.w2};
  if (m >= 0) {
    for (std::int64_t i = 0; i < m; ++i) step_forward(def.params, w);
  } else {
    const Rational inv_t = inverse_t(def.params);
    for (std::int64_t i = 0; i > m; --i) step_backward(def.params, inv_t, w);
  }
  return w;
}

TermWindow window_matrix(const SequenceDef& def, std::int64_t m, MatrixOpCounter* counter) {
  if (m == 0) return {def.w0, def.w1, def.w2};
  const Matrix3 power = matrix_power(companion_matrix(def.params), m, counter);
  // power * (W2, W1, W0) = (W(m+2), W(m+1), W(m))
  Vector3 state = multiply(power, Vector3{def.w2, def.w1, def.w0}, counter);
  return {std::move(state[2]), std::move(state[1]), std::move(state[0])};
}

TermWalker::TermWalker(const SequenceDef& def, Way way)
    : params_(def.params), way_(way), window_{def.w0, def.w1, def.w2} {
  if (way_ == Way::Backward) inv_t_ = inverse_t(params_);
}

void TermWalker::advance() {
  if (way_ == Way::Forward) {
    step_forward(params_, window_);
    ++index_;
  } else {
    step_backward(params_, inv_t_, window_);
    --index_;
  }
}

}  // namespace tribsum
