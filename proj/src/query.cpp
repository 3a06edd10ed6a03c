#include "tribsum/query.hpp"

#include <string>

#include "tribsum/error.hpp"

namespace tribsum {

void validate(const SumQuery& query) {
  if (query.n < 0) throw InvalidQuery("sum bound n must be non-negative");
  if (query.direction == Direction::Backward && query.n < 1) {
    throw InvalidQuery("backward sums start at k = 1 and need n >= 1");
  }
}

std::int64_t summand_index(Direction direction, Parity parity, std::int64_t k) {
  if (direction == Direction::Forward) {
    switch (parity) {
      case Parity::All: return k;
      case Parity::Even: return 2 * k;
      case Parity::Odd: return 2 * k + 1;
    }
  }
  switch (parity) {
    case Parity::All: return -k;
    case Parity::Even: return -2 * k;
    case Parity::Odd: return -2 * k + 1;
  }
  return 0;
}

std::vector<std::int64_t> summand_indices(const SumQuery& query) {
  validate(query);
  std::vector<std::int64_t> out;
  const std::int64_t first = query.direction == Direction::Forward ? 0 : 1;
  out.reserve(static_cast<std::size_t>(query.n - first + 1));
  for (std::int64_t k = first; k <= query.n; ++k) {
    out.push_back(summand_index(query.direction, query.parity, k));
  }
  return out;
}

std::string_view to_string(Direction direction) {
  return direction == Direction::Forward ? "fwd" : "bwd";
}

std::string_view to_string(Parity parity) {
  switch (parity) {
    case Parity::All: return "all";
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
  }
  return "?";
}

}  // namespace tribsum
