#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "omuco/core.hpp"
#include "omuco/dominance.hpp"
#include "omuco/greedy.hpp"

namespace omuco {

// Instance text format, one record per line, '#' starts a comment:
//
//   omuco 1
//   n 6 alpha -1 beta 0 gamma 1 w 3
//   tilde K 3 3 3 1 2 3 1
//   hat none
//   f 1 2 3 4 5 6

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  /// 1-based line of the offending record; 0 when the input ended early.
  int line() const { return line_; }

 private:
  int line_;
};

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

enum class OutputFormat { kTable, kCsv };

OutputFormat format_from_string(std::string_view name);

/// CSV: one column per outcome component, then the solution bitstring, rows
/// in canonical order, stats as trailing '#' lines. Timing is left out so the
/// bytes only depend on the instance.
/// Table: x, f, -C~x style columns followed by a stats line with wall time.
std::string emit_result(const ParetoResult& res, const Instance& inst, OutputFormat format);

/// Greedy candidates in enumeration order, same columns as the table format.
std::string emit_candidates(const std::vector<GreedyCandidate>& candidates, const Instance& inst);

struct GeneratorSpec {
  int n = 0;
  int ktilde = 0;
  int khat = 0;
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  std::optional<int> w;
  std::int64_t fmin = 0;
  std::int64_t fmax = 0;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument describing the first bad field.
void check_spec(const GeneratorSpec& spec);

/// Draws with std::mt19937_64 seeded by spec.seed: n tilde categories, then n
/// hat categories, then n values of f, each uniform over its range. Absent
/// objectives consume no draws. Integers come from rejection sampling on the
/// raw 64-bit output, so the result is the same on every platform.
Instance generate_instance(const GeneratorSpec& spec);

/// serialize_instance(generate_instance(spec)).
std::string generate(const GeneratorSpec& spec);

/// Uniform integer in [lo, hi] from raw 64-bit words.
template <typename Engine>
std::int64_t uniform_int(Engine& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == UINT64_MAX) return static_cast<std::int64_t>(rng());
  const std::uint64_t range = span + 1;
  const std::uint64_t reject_from = UINT64_MAX - (UINT64_MAX % range + 1) % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > reject_from);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

}  // namespace omuco
