#include "omuco/bench.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "omuco/rhs_enum.hpp"

namespace omuco {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

template <typename T>
T to_number(const std::string& tok, int line, const std::string& key) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    throw ParseError(line, "bad value '" + tok + "' for " + key);
  }
  return value;
}

void apply(BenchCase& c, const std::string& key, const std::string& v, int line) {
  if (key == "n") c.gen.n = to_number<int>(v, line, key);
  else if (key == "ktilde") c.gen.ktilde = to_number<int>(v, line, key);
  else if (key == "khat") c.gen.khat = to_number<int>(v, line, key);
  else if (key == "alpha") c.gen.alpha = to_number<int>(v, line, key);
  else if (key == "beta") c.gen.beta = to_number<int>(v, line, key);
  else if (key == "gamma") c.gen.gamma = to_number<int>(v, line, key);
  else if (key == "w") c.gen.w = v == "none" ? std::nullopt : std::optional<int>(to_number<int>(v, line, key));
  else if (key == "fmin") c.gen.fmin = to_number<std::int64_t>(v, line, key);
  else if (key == "fmax") c.gen.fmax = to_number<std::int64_t>(v, line, key);
  else if (key == "seed") c.gen.seed = to_number<std::uint64_t>(v, line, key);
  else if (key == "workers") c.workers = to_number<int>(v, line, key);
  else if (key == "repeat") c.repeat = std::max(1, to_number<int>(v, line, key));
  else if (key == "augment") c.augment = v == "none" ? std::nullopt : std::optional<std::string>(v);
  else if (key == "algorithm") {
    try {
      c.algorithm = algorithm_from_string(v);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, e.what());
    }
  } else {
    throw ParseError(line, "unknown key '" + key + "'");
  }
}

}  // namespace

std::vector<BenchCase> parse_bench_spec(std::string_view text) {
  std::vector<BenchCase> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::pair<std::string, std::vector<std::string>>> lists;
    for (std::string field; fields >> field;) {
      auto eq = field.find('=');
      if (eq == std::string::npos || eq == 0) throw ParseError(line, "expected key=value, got '" + field + "'");
      auto values = split(field.substr(eq + 1), ',');
      if (values.empty()) throw ParseError(line, "no value for " + field.substr(0, eq));
      lists.emplace_back(field.substr(0, eq), std::move(values));
    }
    if (lists.empty()) continue;

    std::vector<BenchCase> expanded{BenchCase{}};
    for (const auto& [key, values] : lists) {
      std::vector<BenchCase> next;
      for (const auto& base : expanded) {
        for (const auto& v : values) {
          BenchCase c = base;
          apply(c, key, v, line);
          next.push_back(std::move(c));
        }
      }
      expanded = std::move(next);
    }
    for (auto& c : expanded) {
      try {
        check_spec(c.gen);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

void run_bench(const std::vector<BenchCase>& cases, std::ostream& csv, std::ostream* progress) {
  csv << "n,ktilde,khat,alpha,beta,gamma,w,fmin,fmax,seed,algorithm,augment,workers,"
         "subproblems,rhs_count,feasible,candidates,nondominated,dominated_removed,seconds\n";
  for (const auto& c : cases) {
    const Instance inst = generate_instance(c.gen);
    SolverConfig cfg;
    cfg.algorithm = c.algorithm;
    cfg.workers = c.workers;
    if (c.augment) cfg.augmentation = *c.augment == "auto" ? default_augmentation(inst) : Rational::parse(*c.augment);

    ParetoResult res;
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < c.repeat; ++r) {
      res = solve(inst, cfg);
      best = std::min(best, res.stats.wall_seconds);
    }
    const auto& g = c.gen;
    csv << g.n << ',' << g.ktilde << ',' << g.khat << ',' << g.alpha << ',' << g.beta << ',' << g.gamma << ','
        << (g.w ? std::to_string(*g.w) : "") << ',' << g.fmin << ',' << g.fmax << ',' << g.seed << ','
        << to_string(c.algorithm) << ',' << c.augment.value_or("") << ',' << c.workers << ','
        << res.stats.subproblems << ',' << count_Ue(inst) << ',' << res.stats.feasible << ','
        << res.stats.candidates << ',' << res.size() << ',' << res.stats.dominated_removed << ','
        << std::setprecision(6) << best << '\n';
    if (progress) {
      *progress << "n=" << g.n << " seed=" << g.seed << " " << to_string(c.algorithm) << ": " << res.size()
                << " points in " << best << " s\n";
    }
  }
}

}  // namespace omuco
