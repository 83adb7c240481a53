#ifndef SHEAFSEM_TESTS_HELPERS_HPP
#define SHEAFSEM_TESTS_HELPERS_HPP

#include <initializer_list>
#include <utility>

#include "sheafsem/presheaf.hpp"

namespace th {

using namespace sheafsem;

inline Literal lit(const std::string& rel, std::vector<Var> args) {
  const int arity = static_cast<int>(args.size());
  return Literal::pos(RelationSymbol(rel, arity), std::move(args));
}

inline Literal neg(const std::string& rel, std::vector<Var> args) {
  const int arity = static_cast<int>(args.size());
  return Literal::neg(RelationSymbol(rel, arity), std::move(args));
}

inline Context ctx(std::initializer_list<std::pair<std::string, int>> rels, std::set<Var> vars) {
  Vocabulary vocab;
  for (const auto& [name, arity] : rels) vocab.add(RelationSymbol(name, arity));
  return Context(std::move(vocab), std::move(vars));
}

inline Section sec(const Context& c, std::set<Literal> lits) {
  return Section::make(c, std::move(lits));
}

inline Morphism mor(const Context& src, const Context& tgt, std::map<Var, Var> varmap) {
  return Morphism::make(src, tgt, std::move(varmap));
}

}  // namespace th

#endif
