#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "omuco/bench.hpp"
#include "omuco/greedy.hpp"
#include "omuco/io.hpp"
#include "omuco/selftest.hpp"
#include "omuco/solver.hpp"

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kInvalidInput = 1;
constexpr int kInternal = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct SolveArgs {
  std::string file;
  std::string algorithm = "auto";
  std::string augment;
  std::optional<int> cardinality;
  std::string format = "table";
  std::string out;
  int workers = 1;
  bool candidates = false;
  int limit = 20;
};

int run_solve(const SolveArgs& a, bool oracle) {
  omuco::Instance inst = omuco::parse_instance(read_file(a.file));
  omuco::SolverConfig cfg;
  cfg.algorithm = oracle ? omuco::Algorithm::kBrute : omuco::algorithm_from_string(a.algorithm);
  cfg.workers = a.workers;
  cfg.cardinality = a.cardinality;
  cfg.brute_force_limit = a.limit;
  if (a.cardinality) inst.cardinality = a.cardinality;
  if (!a.augment.empty()) {
    cfg.augmentation = a.augment == "auto" ? omuco::default_augmentation(inst) : omuco::Rational::parse(a.augment);
  }
  const auto format = omuco::format_from_string(a.format);
  omuco::ParetoResult res = omuco::solve(inst, cfg);

  std::string text;
  if (a.candidates) {
    text += "greedy candidates\n" + omuco::emit_candidates(omuco::greedy_candidates(inst), inst) + "\n";
  }
  text += omuco::emit_result(res, inst, format);
  write_output(a.out, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Pareto sets for problems with ordinal and sum objectives"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Compute the nondominated set of an instance file");
  solve->add_option("file", solve_args.file, "Instance file")->required();
  solve->add_option("--algorithm", solve_args.algorithm, "auto|epsilon|greedy|brute")
      ->check(CLI::IsMember({"auto", "epsilon", "greedy", "brute"}));
  solve->add_option("--augment", solve_args.augment, "Augmentation delta, or 'auto'");
  solve->add_option("--cardinality", solve_args.cardinality, "Select exactly w items");
  solve->add_option("--format", solve_args.format, "table|csv")->check(CLI::IsMember({"table", "csv"}));
  solve->add_option("--out", solve_args.out, "Output file (stdout if omitted)");
  solve->add_option("--workers", solve_args.workers, "Threads for the subproblem loop")->check(CLI::PositiveNumber);
  solve->add_flag("--candidates", solve_args.candidates, "Also print the greedy candidates before filtering");
  solve->add_option("--brute-limit", solve_args.limit, "Largest n for --algorithm brute");

  SolveArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Brute-force reference solution");
  oracle->add_option("file", oracle_args.file, "Instance file")->required();
  oracle->add_option("--cardinality", oracle_args.cardinality, "Select exactly w items");
  oracle->add_option("--format", oracle_args.format, "table|csv")->check(CLI::IsMember({"table", "csv"}));
  oracle->add_option("--out", oracle_args.out, "Output file (stdout if omitted)");
  oracle->add_option("--limit", oracle_args.limit, "Largest n accepted");

  omuco::GeneratorSpec gen_spec;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", gen_spec.n, "Number of items")->required();
  gen->add_option("--ktilde", gen_spec.ktilde, "Categories of the first ordinal objective");
  gen->add_option("--khat", gen_spec.khat, "Categories of the second ordinal objective");
  gen->add_option("--alpha", gen_spec.alpha, "Sense of the first ordinal objective")->required();
  gen->add_option("--beta", gen_spec.beta, "Sense of the second ordinal objective")->required();
  gen->add_option("--gamma", gen_spec.gamma, "Sense of the sum objective")->required();
  gen->add_option("--w", gen_spec.w, "Cardinality");
  gen->add_option("--fmin", gen_spec.fmin, "Smallest f value");
  gen->add_option("--fmax", gen_spec.fmax, "Largest f value");
  gen->add_option("--seed", gen_spec.seed, "Seed of the MT19937-64 generator")->required();
  gen->add_option("--out", gen_out, "Output file (stdout if omitted)");

  std::string bench_spec;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Run a benchmark spec and write CSV");
  bench->add_option("--spec", bench_spec, "Spec file")->required();
  bench->add_option("--out", bench_out, "CSV file (stdout if omitted)");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in regression checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*solve) return run_solve(solve_args, false);
    if (*oracle) return run_solve(oracle_args, true);
    if (*gen) {
      write_output(gen_out, omuco::generate(gen_spec));
      return kOk;
    }
    if (*bench) {
      auto cases = omuco::parse_bench_spec(read_file(bench_spec));
      std::ostringstream csv;
      omuco::run_bench(cases, csv, &std::cerr);
      write_output(bench_out, csv.str());
      return kOk;
    }
    if (*selftest) return omuco::run_selftest(std::cout) == 0 ? kOk : kInternal;
  } catch (const omuco::ParseError& e) {
    std::cerr << "invalid instance: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const omuco::InvalidInstance& e) {
    std::cerr << "invalid instance:\n";
    for (const auto& v : e.report().violations) std::cerr << "  " << v << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::length_error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::overflow_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::runtime_error& e) {
    // unreadable or unwritable files
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
