#ifndef SHEAFSEM_DRT_HPP
#define SHEAFSEM_DRT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "sheafsem/gluing.hpp"

namespace sheafsem {

// A basic discourse representation structure: discourse referents plus a
// consistent set of literal conditions over them.
class Drs {
 public:
  static Drs make(std::set<Var> referents, std::set<Literal> conditions);

  const std::set<Var>& referents() const { return referents_; }
  const std::set<Literal>& conditions() const { return conditions_; }

  auto operator<=>(const Drs&) const = default;

 private:
  Drs(std::set<Var> referents, std::set<Literal> conditions);

  std::set<Var> referents_;
  std::set<Literal> conditions_;
};

std::string to_string(const Drs& k);

// Disjoint union; referents of the right operand clashing with the left are
// freshened by appending primes until distinct.
Drs merge(const Drs& k1, const Drs& k2);

// True iff some referent bijection carries the conditions of one onto the
// conditions of the other.
bool alpha_equivalent(const Drs& k1, const Drs& k2);

// The section over (relations occurring in the conditions, the referents).
// extra_vocab widens the vocabulary beyond the occurring relations.
Section drs_to_section(const Drs& k, const Vocabulary& extra_vocab = {});

// Collapses referents by the equivalence closure of the given equations,
// keeping the right-hand (antecedent) element as representative. Fails with
// Inconsistent when rewriting creates a complementary pair.
Drs resolve_by_equations(const Drs& k, const std::vector<std::pair<Var, Var>>& equations);

// How one pronoun-like referent group may resolve: agreement constraints are
// literals whose consistency prunes candidate antecedents; an explicit
// allowed set narrows the antecedents considered at all.
struct AnaphorSpec {
  std::set<Var> anaphor_vars;
  std::set<Literal> constraints;
  std::optional<std::set<Var>> allowed;

  auto operator<=>(const AnaphorSpec&) const = default;
};

// Every cover whose first leg embeds the antecedent context identically and
// whose remaining legs send each anaphor variable to some antecedent
// variable, kept only when the canonical glue of the antecedent section, the
// anaphor sections and the constraint literals is consistent. Covers come
// out in lexicographic variable-map order.
std::vector<Cover> enumerate_candidate_covers(const Section& antecedent,
                                              const std::vector<Section>& anaphors,
                                              const std::vector<AnaphorSpec>& specs);

}  // namespace sheafsem

#endif
