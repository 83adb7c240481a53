#ifndef SHEAFSEM_LOGIC_HPP
#define SHEAFSEM_LOGIC_HPP

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sheafsem/error.hpp"

namespace sheafsem {

using Var = std::string;

// Identifier syntax. Relation names are plain identifiers; variables may
// additionally carry trailing primes, which the DRS merge uses to freshen
// clashing referents.
bool is_valid_relation_name(std::string_view name);
bool is_valid_var_name(std::string_view name);

struct RelationSymbol {
  std::string name;
  int arity = 1;

  RelationSymbol() = default;
  RelationSymbol(std::string name, int arity);

  auto operator<=>(const RelationSymbol&) const = default;
};

std::string to_string(const RelationSymbol& symbol);

// A finite set of relation symbols; a name determines its arity.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::initializer_list<RelationSymbol> symbols);

  void add(const RelationSymbol& symbol);
  bool contains(const RelationSymbol& symbol) const;
  std::optional<int> arity_of(std::string_view name) const;
  bool subset_of(const Vocabulary& other) const;
  std::size_t size() const { return arities_.size(); }
  bool empty() const { return arities_.empty(); }

  std::vector<RelationSymbol> symbols() const;

  // Union of vocabularies; a shared name must keep its arity.
  static Vocabulary unite(const Vocabulary& a, const Vocabulary& b);

  auto operator<=>(const Vocabulary&) const = default;

 private:
  std::map<std::string, int> arities_;
};

std::string to_string(const Vocabulary& vocab);

struct Context {
  Vocabulary vocab;
  std::set<Var> vars;

  Context() = default;
  Context(Vocabulary vocab, std::set<Var> vars);

  auto operator<=>(const Context&) const = default;
};

std::string to_string(const Context& ctx);

// A signed atomic formula over variables. Field order fixes the canonical
// literal ordering: relation, then arguments, then polarity.
struct Literal {
  RelationSymbol relation;
  std::vector<Var> args;
  bool positive = true;

  Literal() = default;
  Literal(bool positive, RelationSymbol relation, std::vector<Var> args);

  static Literal pos(RelationSymbol relation, std::vector<Var> args);
  static Literal neg(RelationSymbol relation, std::vector<Var> args);

  Literal complement() const;

  auto operator<=>(const Literal&) const = default;
};

std::string to_string(const Literal& lit);
std::string to_string(const std::set<Literal>& lits);

// True iff no atom occurs with both polarities on the same argument tuple.
bool is_consistent(const std::set<Literal>& lits);

// The complementary pair witnessing inconsistency, if any (positive first).
std::optional<std::pair<Literal, Literal>> find_clash(const std::set<Literal>& lits);

// Throws IllFormed unless the literal's relation and arguments live in ctx.
void check_well_formed(const Literal& lit, const Context& ctx);

// A consistent finite literal set over a context. In a relational language
// without constants, functions or equality, such a set is its own deductive
// closure within the literal fragment, so entailment is membership.
class Section {
 public:
  static Section make(Context ctx, std::set<Literal> lits);

  const Context& context() const { return ctx_; }
  const std::set<Literal>& literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }

  bool entails(const Literal& lit) const;

  std::string canonical_string() const;

  auto operator<=>(const Section&) const = default;

 private:
  Section(Context ctx, std::set<Literal> lits);

  Context ctx_;
  std::set<Literal> lits_;
};

inline Section make_section(Context ctx, std::set<Literal> lits) {
  return Section::make(std::move(ctx), std::move(lits));
}

std::string to_string(const Section& s);

}  // namespace sheafsem

#endif
