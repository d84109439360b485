#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omuco/io.hpp"
#include "omuco/solver.hpp"

namespace omuco {

// Benchmark spec: one configuration family per line, '#' comments allowed.
// Each field is key=value; a comma-separated value expands into one run per
// element, and a line expands into the cartesian product of its lists:
//
//   n=20,40,80,160 ktilde=2 khat=2 alpha=1 beta=1 gamma=-1 fmax=100 seed=1
//
// Keys: n ktilde khat alpha beta gamma w fmin fmax seed (generator) and
// algorithm augment workers repeat (solver; augment is 'auto' or a number).

struct BenchCase {
  GeneratorSpec gen;
  Algorithm algorithm = Algorithm::kAuto;
  std::optional<std::string> augment;
  int workers = 1;
  int repeat = 1;
};

/// Throws ParseError on unknown keys or malformed values.
std::vector<BenchCase> parse_bench_spec(std::string_view text);

/// Runs the cases one after another and writes one CSV row per case. The
/// seconds column is the fastest of `repeat` runs. `progress`, when given,
/// receives a line per finished case.
void run_bench(const std::vector<BenchCase>& cases, std::ostream& csv, std::ostream* progress = nullptr);

}  // namespace omuco
