#pragma once

/// Verification sweeps: closed forms against the brute-force oracle, plus
/// the algebraic cross-checks (parity partition, specializations, the
/// (0,2,1) linear term, named-sequence identities).
///
/// Work is split into independent (subject, check-group) tasks. The
/// parallel runner evaluates them with OpenMP; the serial runner is the
/// reference and must produce an identical report.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tribsum/recurrence.hpp"

namespace tribsum::verify {

enum class Suite { FormulaOracle, ParityPartition, Specialization, DegenerateAffine, Corollary };
inline constexpr std::size_t kSuiteCount = 5;

std::string_view to_string(Suite suite);

struct Subject {
  std::string label;
  SequenceDef def;
  std::optional<std::string> catalog_key;  // enables the Corollary suite
};

struct Failure {
  Suite suite;
  std::string subject;
  std::string detail;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct Tally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;  // OracleFallback results, which have no closed form to test

  friend bool operator==(const Tally&, const Tally&) = default;
};

struct Report {
  std::array<Tally, kSuiteCount> tallies{};
  std::vector<Failure> failures;

  const Tally& tally(Suite s) const { return tallies[static_cast<std::size_t>(s)]; }
  std::size_t checks() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }

  friend bool operator==(const Report&, const Report&) = default;
};

struct Options {
  std::int64_t max_n = 100;
  /// Upper bound for the named-identity suite.
  std::int64_t corollary_max_n = 100;
  std::array<bool, kSuiteCount> enabled{true, true, true, true, true};
};

Report run_serial(std::span<const Subject> subjects, const Options& options);
Report run_parallel(std::span<const Subject> subjects, const Options& options);

/// Catalog entries as subjects; all fifteen when `key` is empty.
std::vector<Subject> catalog_subjects(std::string_view key = {});

enum class Constraint {
  Any,            // t != 0
  NonDegenerate,  // t != 0 and d1*d2 != 0
  S1,             // s = 1, r+t != 0, t != 0
  RplusT0,        // r+t = 0, s != 1, d1*d2 != 0, t != 0
  Triple021,      // (r,s,t) = (0,2,1), random initial terms
};

/// Seeded generator of random definitions whose numerators and denominators
/// are drawn from [-9, 9] (denominators non-zero).
class RandomDefs {
 public:
  explicit RandomDefs(std::uint64_t seed) : rng_(seed) {}

  Rational draw_rational();
  SequenceDef draw(Constraint constraint);
  std::vector<Subject> subjects(std::size_t count, Constraint constraint,
                                std::string_view prefix = "random");

 private:
  std::mt19937_64 rng_;
};

std::string describe(const SequenceDef& def);

}  // namespace tribsum::verify
