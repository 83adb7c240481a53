#include "sheafsem/cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "sheafsem/generators.hpp"
#include "sheafsem/problem.hpp"

namespace sheafsem {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kSemanticFailure = 1;
constexpr int kInputError = 2;

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) {
      throw Error(ErrorKind::Name, "cannot open '" + path + "'");
    }
    buffer << file.rdbuf();
  }
  return buffer.str();
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string::npos) comma = csv.size();
    std::string item = csv.substr(start, comma - start);
    if (!item.empty()) out.push_back(std::move(item));
    start = comma + 1;
  }
  return out;
}

std::string decimal4(const Rational& q) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4f", boost::rational_cast<double>(q));
  return buffer;
}

// The anaphor-variable assignment of a cover: every mapping pair that is not
// an identity embedding.
std::string assignment_string(const Cover& cover) {
  std::string out;
  for (const auto& leg : cover.legs()) {
    for (const auto& [from, to] : leg.varmap()) {
      if (from == to) continue;
      if (!out.empty()) out += ", ";
      out += from + " -> " + to;
    }
  }
  return out.empty() ? "(identity)" : out;
}

json literal_array(const std::set<Literal>& lits) {
  json arr = json::array();
  for (const auto& lit : lits) arr.push_back(to_string(lit));
  return arr;
}

struct CommandContext {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool machine = false;

  void emit(const json& doc) const { out << doc.dump(2) << "\n"; }
};

// Everything the anaphora pipeline shares between `covers` and `rank`.
struct PipelineInputs {
  Section antecedent;
  std::vector<Section> anaphors;
  std::vector<AnaphorSpec> specs;
  std::vector<Section> family;  // antecedent followed by the anaphors
};

PipelineInputs pipeline_inputs(const ProblemFile& file, const std::string& antecedent_name,
                               const std::string& anaphor_csv) {
  PipelineInputs inputs{file.section(antecedent_name).section, {}, {}, {}};
  for (const auto& name : split_names(anaphor_csv)) {
    inputs.anaphors.push_back(file.section(name).section);
  }
  if (inputs.anaphors.empty()) {
    throw Error(ErrorKind::IllFormed, "at least one anaphor section is required");
  }
  for (const auto& decl : file.anaphors) {
    bool relevant = false;
    for (const auto& anaphor : inputs.anaphors) {
      if (anaphor.context().vars.count(decl.var) > 0) relevant = true;
    }
    if (relevant) inputs.specs.push_back(decl.spec);
  }
  inputs.family.push_back(inputs.antecedent);
  inputs.family.insert(inputs.family.end(), inputs.anaphors.begin(), inputs.anaphors.end());
  return inputs;
}

int run_glue(const CommandContext& ctx, const ProblemFile& file, const std::string& cover_name,
             const std::string& section_csv, bool oracle, std::size_t max_bruteforce) {
  const CoverDecl& decl = file.cover(cover_name);
  std::vector<Section> sections;
  for (const auto& name : split_names(section_csv)) {
    sections.push_back(file.section(name).section);
  }

  GluingResult result = glue(decl.cover, sections);
  std::vector<Section> found;
  if (oracle) {
    found = all_gluings_bruteforce(decl.cover, sections, BruteForceOptions{max_bruteforce});
  }

  auto leg_name = [&decl](std::size_t i) {
    return i < decl.leg_names.size() ? decl.leg_names[i] : std::to_string(i);
  };

  if (ctx.machine) {
    json doc;
    doc["command"] = "glue";
    doc["cover"] = decl.name;
    if (const auto* glued = std::get_if<Glued>(&result)) {
      doc["outcome"] = "glued";
      doc["section"] = to_string(glued->section);
    } else if (const auto* clash = std::get_if<Clash>(&result)) {
      doc["outcome"] = "inconsistent";
      doc["clash"] = {to_string(clash->positive), to_string(clash->negative)};
    } else {
      const auto& mismatch = std::get<RestrictionMismatch>(result);
      doc["outcome"] = "restriction-mismatch";
      doc["leg"] = mismatch.leg;
      doc["leg_name"] = leg_name(mismatch.leg);
      doc["residue"] = literal_array(mismatch.residue);
      json residues = json::object();
      for (const auto& [leg, residue] : mismatch.all_residues) {
        residues[leg_name(leg)] = literal_array(residue);
      }
      doc["residues"] = residues;
    }
    if (oracle) {
      json arr = json::array();
      for (const auto& s : found) arr.push_back(to_string(s));
      doc["oracle_gluings"] = arr;
    }
    ctx.emit(doc);
  } else {
    if (const auto* glued = std::get_if<Glued>(&result)) {
      ctx.out << "gluing: " << to_string(glued->section) << "\n";
    } else if (const auto* clash = std::get_if<Clash>(&result)) {
      ctx.out << "no gluing: " << to_string(clash->positive) << " clashes with "
              << to_string(clash->negative) << "\n";
    } else {
      const auto& mismatch = std::get<RestrictionMismatch>(result);
      ctx.out << "no gluing: restriction mismatch, first on leg " << leg_name(mismatch.leg)
              << "\n";
      for (const auto& [leg, residue] : mismatch.all_residues) {
        ctx.out << "  leg " << leg_name(leg) << " residue: " << to_string(residue) << "\n";
      }
    }
    if (oracle) {
      ctx.out << "oracle found " << found.size() << " gluing(s)\n";
      for (const auto& s : found) ctx.out << "  " << to_string(s) << "\n";
    }
  }
  return std::holds_alternative<Glued>(result) ? kOk : kSemanticFailure;
}

int run_restrict(const CommandContext& ctx, const ProblemFile& file,
                 const std::string& morphism_name, const std::string& section_name) {
  const Morphism& m = file.morphism(morphism_name).morphism;
  Section restricted = restrict(m, file.section(section_name).section);
  if (ctx.machine) {
    json doc;
    doc["command"] = "restrict";
    doc["morphism"] = morphism_name;
    doc["section"] = section_name;
    doc["result"] = to_string(restricted);
    ctx.emit(doc);
  } else {
    ctx.out << to_string(restricted) << "\n";
  }
  return kOk;
}

int run_covers(const CommandContext& ctx, const ProblemFile& file,
               const std::string& antecedent_name, const std::string& anaphor_csv) {
  PipelineInputs inputs = pipeline_inputs(file, antecedent_name, anaphor_csv);
  std::vector<Cover> covers =
      enumerate_candidate_covers(inputs.antecedent, inputs.anaphors, inputs.specs);

  if (ctx.machine) {
    json doc;
    doc["command"] = "covers";
    json arr = json::array();
    for (const auto& cover : covers) {
      auto canonical = canonical_glue(cover, inputs.family);
      json entry;
      entry["assignment"] = assignment_string(cover);
      entry["gluing"] = to_string(std::get<Section>(canonical));
      arr.push_back(entry);
    }
    doc["covers"] = arr;
    ctx.emit(doc);
  } else {
    ctx.out << covers.size() << " candidate cover(s)\n";
    for (std::size_t i = 0; i < covers.size(); ++i) {
      auto canonical = canonical_glue(covers[i], inputs.family);
      ctx.out << "  " << (i + 1) << ". " << assignment_string(covers[i]) << "  gluing "
              << to_string(std::get<Section>(canonical)) << "\n";
    }
  }
  return covers.empty() ? kSemanticFailure : kOk;
}

int run_rank(const CommandContext& ctx, const ProblemFile& file,
             const std::string& antecedent_name, const std::string& anaphor_csv,
             const std::string& freq_path, bool strict) {
  PipelineInputs inputs = pipeline_inputs(file, antecedent_name, anaphor_csv);
  FrequencyTable table = parse_frequency_tsv(read_input(freq_path, ctx.in));

  std::vector<MergingPattern> patterns;
  for (const auto& decl : file.patterns) patterns.push_back(decl.pattern);
  for (const auto& [label, count] : table.counts()) {
    (void)count;
    bool used = false;
    for (const auto& pattern : patterns) {
      if (pattern.label == label) used = true;
    }
    if (!used) ctx.err << "warning: no pattern uses label '" << label << "'\n";
  }

  std::vector<Cover> covers =
      enumerate_candidate_covers(inputs.antecedent, inputs.anaphors, inputs.specs);
  if (covers.empty()) {
    ctx.err << "no admissible covers\n";
    return kSemanticFailure;
  }

  Resolution res = resolve(covers, inputs.family, patterns, table, strict);

  if (ctx.machine) {
    json doc;
    doc["command"] = "rank";
    json rows = json::array();
    for (const auto& row : res.rows) {
      Rational p(row.weight, res.total_weight);
      json entry;
      entry["assignment"] = assignment_string(row.cover);
      entry["gluing"] = to_string(row.gluing);
      entry["weight"] = row.weight;
      entry["probability"] = {{"num", p.numerator()},
                              {"den", p.denominator()},
                              {"decimal", decimal4(p)}};
      rows.push_back(entry);
    }
    doc["rows"] = rows;
    doc["total_weight"] = res.total_weight;
    // The distribution proper: covers with the same gluing pool their weight.
    json dist = json::array();
    for (const auto& [gluing, weight] : res.distribution.weights()) {
      dist.push_back({{"gluing", to_string(gluing)},
                      {"num", weight.numerator()},
                      {"den", weight.denominator()},
                      {"decimal", decimal4(weight)}});
    }
    doc["distribution"] = dist;
    json best = json::array();
    for (const auto& s : res.best) best.push_back(to_string(s));
    doc["best"] = best;
    doc["entropy_bits"] = entropy_bits(res.distribution);
    ctx.emit(doc);
  } else {
    for (std::size_t i = 0; i < res.rows.size(); ++i) {
      const auto& row = res.rows[i];
      Rational p(row.weight, res.total_weight);
      ctx.out << "  " << (i + 1) << ". " << assignment_string(row.cover) << "  " << row.weight
              << "/" << res.total_weight << " = " << decimal4(p) << "  gluing "
              << to_string(row.gluing) << "\n";
    }
    ctx.out << "total weight " << res.total_weight << "\n";
    ctx.out << "best:";
    for (const auto& s : res.best) ctx.out << " " << to_string(s);
    char entropy[32];
    std::snprintf(entropy, sizeof(entropy), "%.4f", res.entropy_bits);
    ctx.out << "\nentropy " << entropy << " bits\n";
  }
  return kOk;
}

int run_resolve(const CommandContext& ctx, const ProblemFile& file,
                const std::vector<std::string>& drs_names,
                const std::vector<std::string>& equation_args) {
  Drs merged = file.drs(drs_names.front()).drs;
  for (std::size_t i = 1; i < drs_names.size(); ++i) {
    merged = merge(merged, file.drs(drs_names[i]).drs);
  }

  std::vector<std::pair<Var, Var>> equations;
  for (const auto& arg : equation_args) {
    std::size_t eq = arg.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= arg.size()) {
      throw Error(ErrorKind::Syntax, "expected anaphor=antecedent, got '" + arg + "'");
    }
    equations.emplace_back(arg.substr(0, eq), arg.substr(eq + 1));
  }

  Drs resolved = resolve_by_equations(merged, equations);
  Section section = drs_to_section(resolved);

  if (ctx.machine) {
    json doc;
    doc["command"] = "resolve";
    doc["merged"] = to_string(merged);
    doc["resolved"] = to_string(resolved);
    doc["section"] = to_string(section);
    ctx.emit(doc);
  } else {
    ctx.out << "merged:   " << to_string(merged) << "\n";
    ctx.out << "resolved: " << to_string(resolved) << "\n";
    ctx.out << "section:  " << to_string(section) << "\n";
  }
  return kOk;
}

int run_laws_check(const CommandContext& ctx, std::uint64_t seed) {
  LawReport functor = gen::run_functor_law_suite();
  LawReport semiring = gen::run_semiring_axiom_suite(seed);

  if (ctx.machine) {
    json doc;
    doc["command"] = "laws-check";
    doc["functor_cases"] = functor.checked;
    doc["functor_violations"] = functor.violations;
    doc["semiring_cases"] = semiring.checked;
    doc["semiring_violations"] = semiring.violations;
    doc["seed"] = seed;
    ctx.emit(doc);
  } else {
    ctx.out << "functor laws: " << functor.checked << " cases, " << functor.violations.size()
            << " violation(s)\n";
    for (const auto& v : functor.violations) ctx.out << "  " << v;
    ctx.out << "semiring axioms: " << semiring.checked << " cases, " << semiring.violations.size()
            << " violation(s)\n";
    for (const auto& v : semiring.violations) ctx.out << "  " << v << "\n";
  }
  return functor.ok() && semiring.ok() ? kOk : kSemanticFailure;
}

// Error kinds that signal a well-posed problem without a solution, as
// opposed to unusable input.
bool is_semantic_failure(ErrorKind kind) {
  return kind == ErrorKind::Inconsistent || kind == ErrorKind::AllZero ||
         kind == ErrorKind::InconsistentCover || kind == ErrorKind::EmptySupport;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Sheaf-style discourse semantics: sections, gluing, anaphora ranking"};
  app.require_subcommand(1);

  CommandContext ctx{in, out, err, false};

  struct {
    std::string file;
    std::string cover;
    std::string sections;
    std::string morphism;
    std::string section;
    std::string antecedent;
    std::string anaphors;
    std::string freq;
    std::vector<std::string> drses;
    std::vector<std::string> equations;
    bool strict = true;
    bool oracle = false;
    std::size_t max_bruteforce = 20;
    std::uint64_t seed = 42;
  } opt;

  auto add_machine = [&ctx](CLI::App* cmd) {
    cmd->add_flag("--machine", ctx.machine, "emit one JSON document");
  };

  CLI::App* glue_cmd = app.add_subcommand("glue", "glue a family of sections along a cover");
  glue_cmd->add_option("file", opt.file, "problem file, - for stdin")->required();
  glue_cmd->add_option("--cover", opt.cover, "cover name")->required();
  glue_cmd->add_option("--sections", opt.sections, "comma-separated section names, one per leg")
      ->required();
  glue_cmd->add_flag("--oracle", opt.oracle, "also enumerate gluings by brute force");
  glue_cmd->add_option("--max-bruteforce", opt.max_bruteforce, "atom-slot bound for the oracle");
  add_machine(glue_cmd);

  CLI::App* restrict_cmd = app.add_subcommand("restrict", "restrict a section along a morphism");
  restrict_cmd->add_option("file", opt.file, "problem file, - for stdin")->required();
  restrict_cmd->add_option("--morphism", opt.morphism, "morphism name")->required();
  restrict_cmd->add_option("--section", opt.section, "section name")->required();
  add_machine(restrict_cmd);

  CLI::App* covers_cmd =
      app.add_subcommand("covers", "enumerate candidate covers for anaphora resolution");
  covers_cmd->add_option("file", opt.file, "problem file, - for stdin")->required();
  covers_cmd->add_option("--antecedent", opt.antecedent, "antecedent section name")->required();
  covers_cmd->add_option("--anaphors", opt.anaphors, "comma-separated anaphor section names")
      ->required();
  add_machine(covers_cmd);

  CLI::App* rank_cmd =
      app.add_subcommand("rank", "rank candidate resolutions by corpus frequencies");
  rank_cmd->add_option("file", opt.file, "problem file, - for stdin")->required();
  rank_cmd->add_option("--antecedent", opt.antecedent, "antecedent section name")->required();
  rank_cmd->add_option("--anaphors", opt.anaphors, "comma-separated anaphor section names")
      ->required();
  rank_cmd->add_option("--freq", opt.freq, "frequency table (TSV)")->required();
  rank_cmd->add_flag("--strict,!--no-strict", opt.strict,
                     "fail on assignments without a pattern count");
  add_machine(rank_cmd);

  CLI::App* resolve_cmd = app.add_subcommand("resolve", "merge DRSs and equate referents");
  resolve_cmd->add_option("file", opt.file, "problem file, - for stdin")->required();
  resolve_cmd->add_option("--drs", opt.drses, "DRS names to merge, in order")->required();
  resolve_cmd->add_option("--eq", opt.equations, "equations anaphor=antecedent, in order");
  add_machine(resolve_cmd);

  CLI::App* laws_cmd = app.add_subcommand("laws-check", "run the functor and semiring law suites");
  laws_cmd->add_option("--seed", opt.seed, "seed for the sampled values");
  add_machine(laws_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  if (laws_cmd->parsed()) return run_laws_check(ctx, opt.seed);

  // Reading and declaring the problem is the input phase: every failure
  // there is an input error, whatever its kind.
  ProblemFile file;
  try {
    file = parse_problem(read_input(opt.file, in));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (glue_cmd->parsed()) {
      return run_glue(ctx, file, opt.cover, opt.sections, opt.oracle, opt.max_bruteforce);
    }
    if (restrict_cmd->parsed()) return run_restrict(ctx, file, opt.morphism, opt.section);
    if (covers_cmd->parsed()) return run_covers(ctx, file, opt.antecedent, opt.anaphors);
    if (rank_cmd->parsed()) {
      return run_rank(ctx, file, opt.antecedent, opt.anaphors, opt.freq, opt.strict);
    }
    if (resolve_cmd->parsed()) return run_resolve(ctx, file, opt.drses, opt.equations);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_semantic_failure(e.kind()) ? kSemanticFailure : kInputError;
  }
  return kInputError;
}

}  // namespace sheafsem
