#include "omuco/io.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <random>
#include <sstream>

namespace omuco {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

struct Record {
  int line = 0;
  std::vector<std::string> tokens;
};

std::vector<Record> tokenize(std::string_view text) {
  std::vector<Record> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Record rec{line_no, {}};
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) rec.tokens.push_back(std::move(tok));
    if (!rec.tokens.empty()) out.push_back(std::move(rec));
    pos = end + 1;
  }
  return out;
}

int parse_int(const std::string& tok, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + tok + "'");
  }
  return value;
}

Sense parse_sense(const std::string& tok, int line, const char* what) {
  int v = parse_int(tok, line, what);
  if (v < -1 || v > 1) throw ParseError(line, std::string(what) + " must be -1, 0 or 1");
  return static_cast<Sense>(v);
}

std::optional<OrdinalObjective> parse_ordinal(const Record& rec, const char* key, Sense sense, int n) {
  const auto& t = rec.tokens;
  if (t.front() != key) throw ParseError(rec.line, std::string("expected '") + key + "' record, got '" + t.front() + "'");
  const bool none = t.size() == 1 || (t.size() == 2 && t[1] == "none");
  if (none) {
    if (sense != Sense::kAbsent) throw ParseError(rec.line, std::string(key) + " is none but its sense is nonzero");
    return std::nullopt;
  }
  if (sense == Sense::kAbsent) throw ParseError(rec.line, std::string(key) + " given but its sense is 0");
  if (t[1] != "K" || t.size() < 3) throw ParseError(rec.line, std::string("expected '") + key + " K <int> ...' or '" + key + " none'");
  OrdinalObjective obj;
  obj.categories = parse_int(t[2], rec.line, "K");
  if (obj.categories < 1) throw ParseError(rec.line, "K must be at least 1");
  if (t.size() - 3 != static_cast<std::size_t>(n)) {
    throw ParseError(rec.line, std::string(key) + " expects " + std::to_string(n) + " categories, got " +
                                   std::to_string(t.size() - 3));
  }
  for (std::size_t i = 3; i < t.size(); ++i) {
    int c = parse_int(t[i], rec.line, "category");
    if (c < 1 || c > obj.categories) {
      throw ParseError(rec.line, "category " + std::to_string(c) + " of item " + std::to_string(i - 2) +
                                     " is outside 1.." + std::to_string(obj.categories));
    }
    obj.assignment.push_back(c);
  }
  return obj;
}

std::string render_vector(const std::vector<Rational>& v, std::size_t from, std::size_t count) {
  std::string s = "(";
  for (std::size_t k = 0; k < count; ++k) {
    if (k) s += ',';
    s += v[from + k].to_string();
  }
  return s + ")";
}

std::string render_solution(const SolutionVector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += x.selected(i) ? '1' : '0';
  }
  return s + ")";
}

// Columns x | f | tilde | hat, each ordinal block as one vector.
std::string table(const Instance& inst, const std::vector<const SolutionVector*>& xs,
                  const std::vector<const OutcomeVector*>& zs, bool numbered) {
  const std::size_t kt = inst.alpha != Sense::kAbsent ? static_cast<std::size_t>(inst.tilde_categories()) : 0;
  const std::size_t kh = inst.beta != Sense::kAbsent ? static_cast<std::size_t>(inst.hat_categories()) : 0;
  const bool has_f = inst.gamma != Sense::kAbsent;

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  if (numbered) header.push_back("i");
  header.push_back("x");
  if (has_f) header.push_back("f");
  if (kt) header.push_back("tilde");
  if (kh) header.push_back("hat");
  rows.push_back(header);
  for (std::size_t r = 0; r < xs.size(); ++r) {
    const auto& v = zs[r]->values;
    std::vector<std::string> row;
    if (numbered) row.push_back(std::to_string(r + 1));
    row.push_back(render_solution(*xs[r]));
    if (has_f) row.push_back(v.back().to_string());
    if (kt) row.push_back(render_vector(v, 0, kt));
    if (kh) row.push_back(render_vector(v, kt, kh));
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += " | ";
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size(), ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const auto records = tokenize(text);
  auto need = [&](std::size_t idx, const char* what) -> const Record& {
    if (idx >= records.size()) throw ParseError(0, std::string("unexpected end of input, missing ") + what + " record");
    return records[idx];
  };

  const Record& magic = need(0, "header");
  if (magic.tokens.size() != 2 || magic.tokens[0] != "omuco") throw ParseError(magic.line, "expected header 'omuco 1'");
  if (magic.tokens[1] != "1") throw ParseError(magic.line, "unsupported format version '" + magic.tokens[1] + "'");

  const Record& params = need(1, "parameter");
  Instance inst;
  {
    const auto& t = params.tokens;
    if (t.size() % 2 != 0) throw ParseError(params.line, "parameters must come as key/value pairs");
    bool seen_n = false, seen_a = false, seen_b = false, seen_g = false;
    for (std::size_t i = 0; i < t.size(); i += 2) {
      const std::string& key = t[i];
      bool* seen = nullptr;
      if (key == "n") {
        seen = &seen_n;
        inst.n = parse_int(t[i + 1], params.line, "n");
        if (inst.n < 0) throw ParseError(params.line, "n must be non-negative");
      } else if (key == "alpha") {
        seen = &seen_a;
        inst.alpha = parse_sense(t[i + 1], params.line, "alpha");
      } else if (key == "beta") {
        seen = &seen_b;
        inst.beta = parse_sense(t[i + 1], params.line, "beta");
      } else if (key == "gamma") {
        seen = &seen_g;
        inst.gamma = parse_sense(t[i + 1], params.line, "gamma");
      } else if (key == "w") {
        if (inst.cardinality) throw ParseError(params.line, "w given twice");
        inst.cardinality = parse_int(t[i + 1], params.line, "w");
        continue;
      } else {
        throw ParseError(params.line, "unknown parameter '" + key + "'");
      }
      if (*seen) throw ParseError(params.line, key + " given twice");
      *seen = true;
    }
    if (!seen_n || !seen_a || !seen_b || !seen_g) {
      throw ParseError(params.line, "parameter record needs n, alpha, beta and gamma");
    }
    if (inst.cardinality && (*inst.cardinality < 0 || *inst.cardinality > inst.n)) {
      throw ParseError(params.line, "w must lie in 0..n");
    }
    if (inst.objective_count() == 0) throw ParseError(params.line, "all senses are 0");
  }

  inst.tilde = parse_ordinal(need(2, "tilde"), "tilde", inst.alpha, inst.n);
  inst.hat = parse_ordinal(need(3, "hat"), "hat", inst.beta, inst.n);

  const Record& frec = need(4, "f");
  {
    const auto& t = frec.tokens;
    if (t.front() != "f") throw ParseError(frec.line, "expected 'f' record, got '" + t.front() + "'");
    const bool none = (t.size() == 2 && t[1] == "none") || (t.size() == 1 && inst.gamma == Sense::kAbsent);
    if (none) {
      if (inst.gamma != Sense::kAbsent) throw ParseError(frec.line, "f is none but gamma is nonzero");
    } else {
      if (inst.gamma == Sense::kAbsent) throw ParseError(frec.line, "f given but gamma is 0");
      if (t.size() - 1 != static_cast<std::size_t>(inst.n)) {
        throw ParseError(frec.line, "f expects " + std::to_string(inst.n) + " values, got " + std::to_string(t.size() - 1));
      }
      std::vector<Rational> f;
      for (std::size_t i = 1; i < t.size(); ++i) {
        Rational v;
        try {
          v = Rational::parse(t[i]);
        } catch (const std::exception& e) {
          throw ParseError(frec.line, "bad value '" + t[i] + "' for f_" + std::to_string(i) + ": " + e.what());
        }
        if (v.sign() < 0) throw ParseError(frec.line, "f_" + std::to_string(i) + " is negative");
        f.push_back(v);
      }
      inst.f = std::move(f);
    }
  }
  if (records.size() > 5) throw ParseError(records[5].line, "unexpected record after f");

  ValidationReport report = validate(inst);
  if (!report.valid()) throw ParseError(params.line, report.violations.front());
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "omuco 1\n";
  out << "n " << inst.n << " alpha " << sign(inst.alpha) << " beta " << sign(inst.beta) << " gamma "
      << sign(inst.gamma);
  if (inst.cardinality) out << " w " << *inst.cardinality;
  out << '\n';
  auto ordinal = [&](const char* key, const std::optional<OrdinalObjective>& obj) {
    out << key;
    if (!obj) {
      out << " none\n";
      return;
    }
    out << " K " << obj->categories;
    for (int c : obj->assignment) out << ' ' << c;
    out << '\n';
  };
  ordinal("tilde", inst.tilde);
  ordinal("hat", inst.hat);
  out << 'f';
  if (!inst.f) {
    out << " none";
  } else {
    for (const auto& v : *inst.f) out << ' ' << v.to_string();
  }
  out << '\n';
  return out.str();
}

OutputFormat format_from_string(std::string_view name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "csv") return OutputFormat::kCsv;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

std::string emit_result(const ParetoResult& res, const Instance& inst, OutputFormat format) {
  std::ostringstream out;
  const auto& st = res.stats;
  if (format == OutputFormat::kCsv) {
    for (const auto& label : outcome_labels(inst)) out << label << ',';
    out << "solution\n";
    for (std::size_t r = 0; r < res.size(); ++r) {
      for (const auto& v : res.nondominated[r].values) out << v.to_string() << ',';
      out << res.representatives[r].to_string() << '\n';
    }
    if (res.size() == 0) out << "# no feasible solution\n";
    out << "# nondominated " << res.size() << '\n';
    out << "# subproblems " << st.subproblems << '\n';
    out << "# feasible " << st.feasible << '\n';
    out << "# candidates " << st.candidates << '\n';
    out << "# dominated_removed " << st.dominated_removed << '\n';
    out << "# duplicates_collapsed " << st.duplicates_collapsed << '\n';
    return out.str();
  }

  std::vector<const SolutionVector*> xs;
  std::vector<const OutcomeVector*> zs;
  for (std::size_t r = 0; r < res.size(); ++r) {
    xs.push_back(&res.representatives[r]);
    zs.push_back(&res.nondominated[r]);
  }
  out << table(inst, xs, zs, false);
  if (res.size() == 0) out << "(no feasible solution)\n";
  out << res.size() << " nondominated, " << st.subproblems << " subproblems, " << st.feasible << " feasible, "
      << st.candidates << " candidates, " << st.dominated_removed << " dominated, " << std::fixed
      << std::setprecision(3) << st.wall_seconds << " s\n";
  return out.str();
}

std::string emit_candidates(const std::vector<GreedyCandidate>& candidates, const Instance& inst) {
  std::vector<const SolutionVector*> xs;
  std::vector<const OutcomeVector*> zs;
  for (const auto& c : candidates) {
    xs.push_back(&c.solution);
    zs.push_back(&c.outcome);
  }
  return table(inst, xs, zs, true);
}

void check_spec(const GeneratorSpec& spec) {
  auto fail = [](const std::string& m) { throw std::invalid_argument(m); };
  if (spec.n < 0) fail("n must be non-negative");
  for (int s : {spec.alpha, spec.beta, spec.gamma}) {
    if (s < -1 || s > 1) fail("senses must be -1, 0 or 1");
  }
  if (spec.alpha == 0 && spec.beta == 0 && spec.gamma == 0) fail("all senses are 0");
  if (spec.alpha != 0 && spec.ktilde < 1) fail("ktilde must be at least 1 when alpha is nonzero");
  if (spec.beta != 0 && spec.khat < 1) fail("khat must be at least 1 when beta is nonzero");
  if (spec.gamma != 0 && (spec.fmin < 0 || spec.fmax < spec.fmin)) fail("f range must satisfy 0 <= fmin <= fmax");
  if (spec.w && (*spec.w < 0 || *spec.w > spec.n)) fail("w must lie in 0..n");
}

Instance generate_instance(const GeneratorSpec& spec) {
  check_spec(spec);
  std::mt19937_64 rng(spec.seed);
  Instance inst;
  inst.n = spec.n;
  inst.alpha = sense_from_int(spec.alpha);
  inst.beta = sense_from_int(spec.beta);
  inst.gamma = sense_from_int(spec.gamma);
  inst.cardinality = spec.w;
  auto draw_ordinal = [&](int k) {
    OrdinalObjective obj{k, {}};
    for (int i = 0; i < spec.n; ++i) obj.assignment.push_back(static_cast<int>(uniform_int(rng, 1, k)));
    return obj;
  };
  if (spec.alpha != 0) inst.tilde = draw_ordinal(spec.ktilde);
  if (spec.beta != 0) inst.hat = draw_ordinal(spec.khat);
  if (spec.gamma != 0) {
    std::vector<Rational> f;
    for (int i = 0; i < spec.n; ++i) f.emplace_back(uniform_int(rng, spec.fmin, spec.fmax));
    inst.f = std::move(f);
  }
  return inst;
}

std::string generate(const GeneratorSpec& spec) { return serialize_instance(generate_instance(spec)); }

}  // namespace omuco
