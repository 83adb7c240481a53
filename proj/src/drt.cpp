#include "sheafsem/drt.hpp"

#include <algorithm>
#include <sstream>

namespace sheafsem {

namespace {

Vocabulary occurring_vocabulary(const std::set<Literal>& conditions) {
  Vocabulary vocab;
  for (const auto& lit : conditions) vocab.add(lit.relation);
  return vocab;
}

}  // namespace

Drs::Drs(std::set<Var> referents, std::set<Literal> conditions)
    : referents_(std::move(referents)), conditions_(std::move(conditions)) {}

Drs Drs::make(std::set<Var> referents, std::set<Literal> conditions) {
  for (const auto& var : referents) {
    if (!is_valid_var_name(var)) {
      throw Error(ErrorKind::IllFormed, "invalid referent name '" + var + "'");
    }
  }
  for (const auto& lit : conditions) {
    for (const auto& arg : lit.args) {
      if (referents.count(arg) == 0) {
        throw Error(ErrorKind::IllFormed,
                    "condition " + to_string(lit) + " uses '" + arg + "', not a referent");
      }
    }
  }
  occurring_vocabulary(conditions);  // rejects one name with two arities
  if (auto clash = find_clash(conditions)) {
    throw Error(ErrorKind::Inconsistent, "complementary pair " + to_string(clash->first) +
                                             " and " + to_string(clash->second));
  }
  return Drs(std::move(referents), std::move(conditions));
}

std::string to_string(const Drs& k) {
  std::ostringstream os;
  os << "({";
  bool first = true;
  for (const auto& var : k.referents()) {
    if (!first) os << ", ";
    os << var;
    first = false;
  }
  os << "}, " << to_string(k.conditions()) << ')';
  return os.str();
}

Drs merge(const Drs& k1, const Drs& k2) {
  std::set<Var> taken = k1.referents();
  taken.insert(k2.referents().begin(), k2.referents().end());

  std::map<Var, Var> rename;
  for (const auto& var : k2.referents()) {
    if (k1.referents().count(var) == 0) {
      rename.emplace(var, var);
      continue;
    }
    Var fresh = var + "'";
    while (taken.count(fresh) > 0) fresh += "'";
    taken.insert(fresh);
    rename.emplace(var, fresh);
  }

  std::set<Var> referents = k1.referents();
  for (const auto& [from, to] : rename) {
    (void)from;
    referents.insert(to);
  }
  std::set<Literal> conditions = k1.conditions();
  for (const auto& lit : k2.conditions()) {
    std::vector<Var> args;
    args.reserve(lit.args.size());
    for (const auto& arg : lit.args) args.push_back(rename.at(arg));
    conditions.insert(Literal(lit.positive, lit.relation, std::move(args)));
  }
  return Drs::make(std::move(referents), std::move(conditions));
}

namespace {

bool extend_bijection(const std::vector<Var>& left, std::size_t next, std::map<Var, Var>& image,
                      std::set<Var>& used, const Drs& k1, const Drs& k2) {
  if (next == left.size()) {
    std::set<Literal> rewritten;
    for (const auto& lit : k1.conditions()) {
      std::vector<Var> args;
      args.reserve(lit.args.size());
      for (const auto& arg : lit.args) args.push_back(image.at(arg));
      rewritten.insert(Literal(lit.positive, lit.relation, std::move(args)));
    }
    return rewritten == k2.conditions();
  }
  for (const auto& candidate : k2.referents()) {
    if (used.count(candidate) > 0) continue;
    image[left[next]] = candidate;
    used.insert(candidate);
    if (extend_bijection(left, next + 1, image, used, k1, k2)) return true;
    used.erase(candidate);
    image.erase(left[next]);
  }
  return false;
}

}  // namespace

bool alpha_equivalent(const Drs& k1, const Drs& k2) {
  if (k1.referents().size() != k2.referents().size()) return false;
  if (k1.conditions().size() != k2.conditions().size()) return false;
  std::vector<Var> left(k1.referents().begin(), k1.referents().end());
  std::map<Var, Var> image;
  std::set<Var> used;
  return extend_bijection(left, 0, image, used, k1, k2);
}

Section drs_to_section(const Drs& k, const Vocabulary& extra_vocab) {
  Vocabulary vocab = Vocabulary::unite(occurring_vocabulary(k.conditions()), extra_vocab);
  return Section::make(Context(std::move(vocab), k.referents()), k.conditions());
}

Drs resolve_by_equations(const Drs& k, const std::vector<std::pair<Var, Var>>& equations) {
  for (const auto& [anaphor, antecedent] : equations) {
    if (k.referents().count(anaphor) == 0) {
      throw Error(ErrorKind::UnknownVariable, "'" + anaphor + "' is not a referent");
    }
    if (k.referents().count(antecedent) == 0) {
      throw Error(ErrorKind::UnknownVariable, "'" + antecedent + "' is not a referent");
    }
  }

  // Union-find oriented so the right-hand (antecedent) side stays the root.
  std::map<Var, Var> parent;
  for (const auto& var : k.referents()) parent.emplace(var, var);
  auto find = [&](Var var) {
    while (parent.at(var) != var) {
      parent[var] = parent.at(parent.at(var));
      var = parent.at(var);
    }
    return var;
  };
  for (const auto& [anaphor, antecedent] : equations) {
    Var left = find(anaphor);
    Var right = find(antecedent);
    if (left != right) parent[left] = right;
  }

  std::set<Var> referents;
  for (const auto& var : k.referents()) referents.insert(find(var));
  std::set<Literal> conditions;
  for (const auto& lit : k.conditions()) {
    std::vector<Var> args;
    args.reserve(lit.args.size());
    for (const auto& arg : lit.args) args.push_back(find(arg));
    conditions.insert(Literal(lit.positive, lit.relation, std::move(args)));
  }
  if (auto clash = find_clash(conditions)) {
    throw Error(ErrorKind::Inconsistent, "equating referents creates " + to_string(clash->first) +
                                             " against " + to_string(clash->second));
  }
  return Drs::make(std::move(referents), std::move(conditions));
}

namespace {

struct AnaphorAssignment {
  std::vector<Var> vars;                    // all anaphor variables, sorted
  std::vector<std::vector<Var>> choices;    // allowed antecedents per variable
};

AnaphorAssignment assignment_space(const Section& antecedent,
                                   const std::vector<Section>& anaphors,
                                   const std::vector<AnaphorSpec>& specs) {
  std::set<Var> anaphor_vars;
  for (const auto& anaphor : anaphors) {
    anaphor_vars.insert(anaphor.context().vars.begin(), anaphor.context().vars.end());
  }

  for (const auto& spec : specs) {
    for (const auto& var : spec.anaphor_vars) {
      if (anaphor_vars.count(var) == 0) {
        throw Error(ErrorKind::IllFormed, "anaphor spec mentions '" + var +
                                              "', which is not an anaphor variable");
      }
    }
    for (const auto& lit : spec.constraints) {
      for (const auto& arg : lit.args) {
        if (spec.anaphor_vars.count(arg) == 0) {
          throw Error(ErrorKind::IllFormed, "constraint " + to_string(lit) +
                                                " uses '" + arg + "' outside its anaphor variables");
        }
      }
    }
    if (spec.allowed) {
      for (const auto& var : *spec.allowed) {
        if (antecedent.context().vars.count(var) == 0) {
          throw Error(ErrorKind::UnknownVariable,
                      "allowed antecedent '" + var + "' is not an antecedent variable");
        }
      }
    }
  }

  AnaphorAssignment out;
  for (const auto& var : anaphor_vars) {
    std::set<Var> allowed = antecedent.context().vars;
    for (const auto& spec : specs) {
      if (spec.allowed && spec.anaphor_vars.count(var) > 0) {
        std::set<Var> narrowed;
        std::set_intersection(allowed.begin(), allowed.end(), spec.allowed->begin(),
                              spec.allowed->end(), std::inserter(narrowed, narrowed.end()));
        allowed = std::move(narrowed);
      }
    }
    out.vars.push_back(var);
    out.choices.emplace_back(allowed.begin(), allowed.end());
  }
  return out;
}

}  // namespace

std::vector<Cover> enumerate_candidate_covers(const Section& antecedent,
                                              const std::vector<Section>& anaphors,
                                              const std::vector<AnaphorSpec>& specs) {
  std::set<Var> seen = antecedent.context().vars;
  for (const auto& anaphor : anaphors) {
    for (const auto& var : anaphor.context().vars) {
      if (!seen.insert(var).second) {
        throw Error(ErrorKind::DisjointnessViolated,
                    "variable '" + var + "' occurs in more than one context");
      }
    }
  }

  AnaphorAssignment space = assignment_space(antecedent, anaphors, specs);
  for (const auto& choices : space.choices) {
    if (choices.empty()) return {};
  }

  Vocabulary target_vocab = antecedent.context().vocab;
  for (const auto& anaphor : anaphors) {
    target_vocab = Vocabulary::unite(target_vocab, anaphor.context().vocab);
  }
  Context target(target_vocab, antecedent.context().vars);

  std::vector<Cover> covers;
  std::vector<std::size_t> odometer(space.vars.size(), 0);
  while (true) {
    std::map<Var, Var> assignment;
    for (std::size_t i = 0; i < space.vars.size(); ++i) {
      assignment.emplace(space.vars[i], space.choices[i][odometer[i]]);
    }

    // Canonical union of the antecedent, the assigned anaphor literals and
    // the assigned constraint literals; a clash prunes this assignment.
    std::set<Literal> united = antecedent.literals();
    auto push_through = [&](const Literal& lit) {
      std::vector<Var> args;
      args.reserve(lit.args.size());
      for (const auto& arg : lit.args) args.push_back(assignment.at(arg));
      united.insert(Literal(lit.positive, lit.relation, std::move(args)));
    };
    for (const auto& anaphor : anaphors) {
      for (const auto& lit : anaphor.literals()) push_through(lit);
    }
    for (const auto& spec : specs) {
      for (const auto& lit : spec.constraints) push_through(lit);
    }

    if (is_consistent(united)) {
      std::vector<Morphism> legs;
      std::map<Var, Var> embed;
      for (const auto& var : antecedent.context().vars) embed.emplace(var, var);
      legs.push_back(Morphism::make(antecedent.context(), target, std::move(embed)));
      for (const auto& anaphor : anaphors) {
        std::map<Var, Var> varmap;
        for (const auto& var : anaphor.context().vars) varmap.emplace(var, assignment.at(var));
        legs.push_back(Morphism::make(anaphor.context(), target, std::move(varmap)));
      }
      covers.push_back(Cover::make(target, std::move(legs)));
    }

    std::size_t pos = space.vars.size();
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < space.choices[pos].size()) break;
      odometer[pos] = 0;
      if (pos == 0) return covers;
    }
    if (space.vars.empty()) return covers;
  }
}

}  // namespace sheafsem
