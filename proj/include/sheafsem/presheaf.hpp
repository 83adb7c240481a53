#ifndef SHEAFSEM_PRESHEAF_HPP
#define SHEAFSEM_PRESHEAF_HPP

#include <map>
#include <vector>

#include "sheafsem/logic.hpp"
#include "sheafsem/report.hpp"

namespace sheafsem {

// A context morphism: a variable map together with an implicit vocabulary
// inclusion (source vocabulary must be a subset of the target's).
class Morphism {
 public:
  static Morphism make(Context source, Context target, std::map<Var, Var> varmap);
  static Morphism identity(Context ctx);

  const Context& source() const { return source_; }
  const Context& target() const { return target_; }
  const std::map<Var, Var>& varmap() const { return varmap_; }

  const Var& apply(const Var& var) const;
  std::vector<Var> apply(const std::vector<Var>& args) const;

  bool injective() const;

  auto operator<=>(const Morphism&) const = default;

 private:
  Morphism(Context source, Context target, std::map<Var, Var> varmap);

  Context source_;
  Context target_;
  std::map<Var, Var> varmap_;
};

std::string to_string(const Morphism& m);

// g after f; requires f.target == g.source.
Morphism compose(const Morphism& g, const Morphism& f);

// All atom slots of a context: every (relation, argument tuple) pair, in
// canonical order (relations by name, tuples lexicographically).
std::vector<Literal> enumerate_atoms(const Context& ctx);

// The contravariant restriction: the result contains exactly those literals
// over m.source whose image under m lies in s. Requires s.context == m.target.
Section restrict(const Morphism& m, const Section& s);

struct FunctorLawCase {
  Morphism outer;   // g : B -> C
  Morphism inner;   // f : A -> B
  Section section;  // over C
};

// Checks, per case, that restricting along a composite equals restricting in
// two steps, and that restriction along the identity is the identity.
LawReport check_functor_laws(const std::vector<FunctorLawCase>& cases);

}  // namespace sheafsem

#endif
