#include "sheafsem/logic.hpp"

#include <algorithm>
#include <sstream>

namespace sheafsem {

namespace {

bool is_ident_head(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_ident_tail(char c) {
  return is_ident_head(c) || (c >= '0' && c <= '9');
}

bool is_plain_identifier(std::string_view name) {
  if (name.empty() || !is_ident_head(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), is_ident_tail);
}

}  // namespace

bool is_valid_relation_name(std::string_view name) {
  return is_plain_identifier(name);
}

bool is_valid_var_name(std::string_view name) {
  // Trailing primes mark freshened referents: x, x', x''.
  std::size_t primes = 0;
  while (primes < name.size() && name[name.size() - 1 - primes] == '\'') ++primes;
  return primes < name.size() && is_plain_identifier(name.substr(0, name.size() - primes));
}

RelationSymbol::RelationSymbol(std::string name, int arity) : name(std::move(name)), arity(arity) {
  if (!is_valid_relation_name(this->name)) {
    throw Error(ErrorKind::IllFormed, "invalid relation name '" + this->name + "'");
  }
  if (arity < 1) {
    throw Error(ErrorKind::IllFormed,
                "relation '" + this->name + "' must have arity >= 1, got " + std::to_string(arity));
  }
}

std::string to_string(const RelationSymbol& symbol) {
  return symbol.name + "/" + std::to_string(symbol.arity);
}

Vocabulary::Vocabulary(std::initializer_list<RelationSymbol> symbols) {
  for (const auto& symbol : symbols) add(symbol);
}

void Vocabulary::add(const RelationSymbol& symbol) {
  auto [it, inserted] = arities_.emplace(symbol.name, symbol.arity);
  if (!inserted && it->second != symbol.arity) {
    throw Error(ErrorKind::Name, "relation '" + symbol.name + "' redeclared with arity " +
                                     std::to_string(symbol.arity) + " (was " +
                                     std::to_string(it->second) + ")");
  }
}

bool Vocabulary::contains(const RelationSymbol& symbol) const {
  auto it = arities_.find(symbol.name);
  return it != arities_.end() && it->second == symbol.arity;
}

std::optional<int> Vocabulary::arity_of(std::string_view name) const {
  auto it = arities_.find(std::string(name));
  if (it == arities_.end()) return std::nullopt;
  return it->second;
}

bool Vocabulary::subset_of(const Vocabulary& other) const {
  return std::all_of(arities_.begin(), arities_.end(), [&](const auto& entry) {
    auto arity = other.arity_of(entry.first);
    return arity && *arity == entry.second;
  });
}

std::vector<RelationSymbol> Vocabulary::symbols() const {
  std::vector<RelationSymbol> out;
  out.reserve(arities_.size());
  for (const auto& [name, arity] : arities_) out.push_back(RelationSymbol(name, arity));
  return out;
}

Vocabulary Vocabulary::unite(const Vocabulary& a, const Vocabulary& b) {
  Vocabulary out = a;
  for (const auto& symbol : b.symbols()) out.add(symbol);
  return out;
}

std::string to_string(const Vocabulary& vocab) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& symbol : vocab.symbols()) {
    if (!first) os << ", ";
    os << to_string(symbol);
    first = false;
  }
  os << '}';
  return os.str();
}

Context::Context(Vocabulary vocab, std::set<Var> vars)
    : vocab(std::move(vocab)), vars(std::move(vars)) {
  for (const auto& var : this->vars) {
    if (!is_valid_var_name(var)) {
      throw Error(ErrorKind::IllFormed, "invalid variable name '" + var + "'");
    }
  }
}

std::string to_string(const Context& ctx) {
  std::ostringstream os;
  os << '(' << to_string(ctx.vocab) << ", {";
  bool first = true;
  for (const auto& var : ctx.vars) {
    if (!first) os << ", ";
    os << var;
    first = false;
  }
  os << "})";
  return os.str();
}

Literal::Literal(bool positive, RelationSymbol relation, std::vector<Var> args)
    : relation(std::move(relation)), args(std::move(args)), positive(positive) {
  if (static_cast<int>(this->args.size()) != this->relation.arity) {
    throw Error(ErrorKind::IllFormed, "relation '" + this->relation.name + "' has arity " +
                                          std::to_string(this->relation.arity) + " but got " +
                                          std::to_string(this->args.size()) + " arguments");
  }
}

Literal Literal::pos(RelationSymbol relation, std::vector<Var> args) {
  return Literal(true, std::move(relation), std::move(args));
}

Literal Literal::neg(RelationSymbol relation, std::vector<Var> args) {
  return Literal(false, std::move(relation), std::move(args));
}

Literal Literal::complement() const {
  Literal out = *this;
  out.positive = !out.positive;
  return out;
}

std::string to_string(const Literal& lit) {
  std::ostringstream os;
  if (!lit.positive) os << '!';
  os << lit.relation.name << '(';
  for (std::size_t i = 0; i < lit.args.size(); ++i) {
    if (i > 0) os << ", ";
    os << lit.args[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(const std::set<Literal>& lits) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& lit : lits) {
    if (!first) os << "; ";
    os << to_string(lit);
    first = false;
  }
  os << '}';
  return os.str();
}

std::optional<std::pair<Literal, Literal>> find_clash(const std::set<Literal>& lits) {
  for (const auto& lit : lits) {
    if (!lit.positive) continue;
    auto neg = lit.complement();
    if (lits.count(neg) > 0) return std::make_pair(lit, neg);
  }
  return std::nullopt;
}

bool is_consistent(const std::set<Literal>& lits) {
  return !find_clash(lits).has_value();
}

void check_well_formed(const Literal& lit, const Context& ctx) {
  auto arity = ctx.vocab.arity_of(lit.relation.name);
  if (!arity) {
    throw Error(ErrorKind::IllFormed,
                "unknown relation '" + lit.relation.name + "' in " + to_string(ctx.vocab));
  }
  if (*arity != lit.relation.arity || *arity != static_cast<int>(lit.args.size())) {
    throw Error(ErrorKind::IllFormed, "relation '" + lit.relation.name + "' has arity " +
                                          std::to_string(*arity) + " but literal " +
                                          to_string(lit) + " disagrees");
  }
  for (const auto& arg : lit.args) {
    if (ctx.vars.count(arg) == 0) {
      throw Error(ErrorKind::IllFormed,
                  "unknown variable '" + arg + "' in literal " + to_string(lit));
    }
  }
}

Section::Section(Context ctx, std::set<Literal> lits)
    : ctx_(std::move(ctx)), lits_(std::move(lits)) {}

Section Section::make(Context ctx, std::set<Literal> lits) {
  for (const auto& lit : lits) check_well_formed(lit, ctx);
  if (auto clash = find_clash(lits)) {
    throw Error(ErrorKind::Inconsistent, "complementary pair " + to_string(clash->first) +
                                             " and " + to_string(clash->second));
  }
  return Section(std::move(ctx), std::move(lits));
}

bool Section::entails(const Literal& lit) const {
  check_well_formed(lit, ctx_);
  return lits_.count(lit) > 0;
}

std::string Section::canonical_string() const {
  return to_string(ctx_) + " " + to_string(lits_);
}

std::string to_string(const Section& s) {
  return to_string(s.literals());
}

}  // namespace sheafsem
