#include "tribsum/oracle.hpp"

#include <algorithm>

#include "tribsum/error.hpp"

namespace tribsum::oracle {

namespace {

/// W(lo..hi) stored in full, lo <= 0 <= 2 <= hi.
class History {
 public:
  History(const SequenceDef& def, std::int64_t lo, std::int64_t hi)
      : lo_(std::min<std::int64_t>(lo, 0)) {
    hi = std::max<std::int64_t>(hi, 2);
    const auto& p = def.params;
    terms_.resize(static_cast<std::size_t>(hi - lo_ + 1));
    at(0) = def.w0;
    at(1) = def.w1;
    at(2) = def.w2;
    for (std::int64_t k = 3; k <= hi; ++k) {
      at(k) = p.r * at(k - 1) + p.s * at(k - 2) + p.t * at(k - 3);
    }
    if (lo_ < 0 && p.t.is_zero()) throw NegativeIndexWithZeroT();
    for (std::int64_t k = -1; k >= lo_; --k) {
      // W(k+3) = r W(k+2) + s W(k+1) + t W(k), solved for W(k).
      at(k) = (at(k + 3) - p.r * at(k + 2) - p.s * at(k + 1)) / p.t;
    }
  }

  const Rational& operator[](std::int64_t k) const {
    return terms_[static_cast<std::size_t>(k - lo_)];
  }

 private:
  Rational& at(std::int64_t k) { return terms_[static_cast<std::size_t>(k - lo_)]; }

  std::int64_t lo_;
  std::vector<Rational> terms_;
};

}  // namespace

Rational oracle_term(const SequenceDef& def, std::int64_t n) {
  const History history(def, n, n);
  return history[n];
}

Rational oracle_sum(const SequenceDef& def, const SumQuery& query) {
  validate(query);
  const auto indices = summand_indices(query);
  const auto [lo, hi] = std::minmax_element(indices.begin(), indices.end());
  const History history(def, *lo, *hi);
  Rational total;
  for (std::int64_t k : indices) total += history[k];
  return total;
}

std::vector<Rational> oracle_prefix_sums(const SequenceDef& def, Direction direction,
                                         Parity parity, std::int64_t max_n) {
  if (max_n < 0) throw InvalidQuery("max_n must be non-negative");
  const std::int64_t first_k = direction == Direction::Forward ? 0 : 1;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  for (std::int64_t k : {first_k, max_n}) {
    const std::int64_t idx = summand_index(direction, parity, std::max(k, first_k));
    lo = std::min(lo, idx);
    hi = std::max(hi, idx);
  }
  const History history(def, lo, hi);

  std::vector<Rational> sums(static_cast<std::size_t>(max_n + 1));
  Rational running;
  for (std::int64_t k = first_k; k <= max_n; ++k) {
    running += history[summand_index(direction, parity, k)];
    sums[static_cast<std::size_t>(k)] = running;
  }
  return sums;
}

}  // namespace tribsum::oracle
