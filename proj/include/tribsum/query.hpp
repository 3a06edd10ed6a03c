#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace tribsum {

enum class Direction { Forward, Backward };
enum class Parity { All, Even, Odd };

/// One partial-sum family plus its bound.
///   Forward:  k = 0..n over W(k), W(2k), W(2k+1).
///   Backward: k = 1..n over W(-k), W(-2k), W(-2k+1). Requires n >= 1.
struct SumQuery {
  Direction direction = Direction::Forward;
  Parity parity = Parity::All;
  std::int64_t n = 0;
};

/// Throws InvalidQuery for n < 0, or n = 0 on the backward family.
void validate(const SumQuery& query);

/// The sequence index of the k-th summand of the query's family.
std::int64_t summand_index(Direction direction, Parity parity, std::int64_t k);

/// Every index summed by the query, in summation order.
std::vector<std::int64_t> summand_indices(const SumQuery& query);

std::string_view to_string(Direction direction);
std::string_view to_string(Parity parity);

/// All six families in a fixed order: fwd all/even/odd, bwd all/even/odd.
inline constexpr struct {
  Direction direction;
  Parity parity;
} kAllFamilies[] = {
    {Direction::Forward, Parity::All},  {Direction::Forward, Parity::Even},
    {Direction::Forward, Parity::Odd},  {Direction::Backward, Parity::All},
    {Direction::Backward, Parity::Even}, {Direction::Backward, Parity::Odd},
};

}  // namespace tribsum
