#include "sheafsem/presheaf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sheafsem {

Morphism::Morphism(Context source, Context target, std::map<Var, Var> varmap)
    : source_(std::move(source)), target_(std::move(target)), varmap_(std::move(varmap)) {}

Morphism Morphism::make(Context source, Context target, std::map<Var, Var> varmap) {
  if (!source.vocab.subset_of(target.vocab)) {
    throw Error(ErrorKind::TypeMismatch, "source vocabulary " + to_string(source.vocab) +
                                             " is not included in target vocabulary " +
                                             to_string(target.vocab));
  }
  for (const auto& var : source.vars) {
    auto it = varmap.find(var);
    if (it == varmap.end()) {
      throw Error(ErrorKind::IllFormed, "variable map is not total: '" + var + "' has no image");
    }
    if (target.vars.count(it->second) == 0) {
      throw Error(ErrorKind::IllFormed,
                  "image '" + it->second + "' of '" + var + "' is not a target variable");
    }
  }
  for (const auto& [var, image] : varmap) {
    (void)image;
    if (source.vars.count(var) == 0) {
      throw Error(ErrorKind::IllFormed, "variable map mentions '" + var + "' outside the source");
    }
  }
  return Morphism(std::move(source), std::move(target), std::move(varmap));
}

Morphism Morphism::identity(Context ctx) {
  std::map<Var, Var> varmap;
  for (const auto& var : ctx.vars) varmap.emplace(var, var);
  return Morphism(ctx, ctx, std::move(varmap));
}

const Var& Morphism::apply(const Var& var) const {
  auto it = varmap_.find(var);
  if (it == varmap_.end()) {
    throw Error(ErrorKind::UnknownVariable, "'" + var + "' is not in the morphism source");
  }
  return it->second;
}

std::vector<Var> Morphism::apply(const std::vector<Var>& args) const {
  std::vector<Var> out;
  out.reserve(args.size());
  for (const auto& arg : args) out.push_back(apply(arg));
  return out;
}

bool Morphism::injective() const {
  std::set<Var> images;
  for (const auto& [var, image] : varmap_) {
    (void)var;
    if (!images.insert(image).second) return false;
  }
  return true;
}

std::string to_string(const Morphism& m) {
  std::ostringstream os;
  os << to_string(m.source()) << " -> " << to_string(m.target()) << " {";
  bool first = true;
  for (const auto& [var, image] : m.varmap()) {
    if (!first) os << ", ";
    os << var << " -> " << image;
    first = false;
  }
  os << '}';
  return os.str();
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.target() != g.source()) {
    throw Error(ErrorKind::TypeMismatch, "morphisms do not chain: target of the inner is " +
                                             to_string(f.target()) + " but source of the outer is " +
                                             to_string(g.source()));
  }
  std::map<Var, Var> varmap;
  for (const auto& [var, mid] : f.varmap()) varmap.emplace(var, g.apply(mid));
  return Morphism::make(f.source(), g.target(), std::move(varmap));
}

namespace {

void append_tuples(const Context& ctx, const RelationSymbol& rel,
                   std::vector<Var>& prefix, std::vector<Literal>& out) {
  if (static_cast<int>(prefix.size()) == rel.arity) {
    out.push_back(Literal::pos(rel, prefix));
    return;
  }
  for (const auto& var : ctx.vars) {
    prefix.push_back(var);
    append_tuples(ctx, rel, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Literal> enumerate_atoms(const Context& ctx) {
  std::vector<Literal> out;
  for (const auto& rel : ctx.vocab.symbols()) {
    std::vector<Var> prefix;
    append_tuples(ctx, rel, prefix, out);
  }
  return out;
}

Section restrict(const Morphism& m, const Section& s) {
  if (s.context() != m.target()) {
    throw Error(ErrorKind::ContextMismatch,
                "section lives over " + to_string(s.context()) + ", not over the morphism target " +
                    to_string(m.target()));
  }
  std::set<Literal> lits;
  for (const auto& atom : enumerate_atoms(m.source())) {
    Literal image = Literal::pos(atom.relation, m.apply(atom.args));
    if (s.literals().count(image) > 0) lits.insert(atom);
    if (s.literals().count(image.complement()) > 0) lits.insert(atom.complement());
  }
  // The preimage of a consistent set is consistent, so this cannot throw.
  return Section::make(m.source(), std::move(lits));
}

LawReport check_functor_laws(const std::vector<FunctorLawCase>& cases) {
  for (const auto& c : cases) {
    if (c.inner.target() != c.outer.source()) {
      throw Error(ErrorKind::TypeMismatch, "case morphisms do not chain");
    }
    if (c.section.context() != c.outer.target()) {
      throw Error(ErrorKind::ContextMismatch, "case section does not live over the outer target");
    }
  }

  LawReport report;
  report.checked = cases.size();
  std::vector<std::string> slots(cases.size());

#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < static_cast<long long>(cases.size()); ++i) {
    const auto& c = cases[static_cast<std::size_t>(i)];
    std::ostringstream os;

    Section two_step = restrict(c.inner, restrict(c.outer, c.section));
    Section one_step = restrict(compose(c.outer, c.inner), c.section);
    if (two_step != one_step) {
      os << "composition law failed for " << to_string(c.outer) << " after " << to_string(c.inner)
         << " on " << to_string(c.section) << ": " << to_string(two_step)
         << " != " << to_string(one_step) << "\n";
    }
    Section via_id = restrict(Morphism::identity(c.section.context()), c.section);
    if (via_id != c.section) {
      os << "identity law failed on " << to_string(c.section) << "\n";
    }
    slots[static_cast<std::size_t>(i)] = os.str();
  }

  for (const auto& slot : slots) {
    if (!slot.empty()) report.violations.push_back(slot);
  }
  return report;
}

}  // namespace sheafsem
