#ifndef SHEAFSEM_GENERATORS_HPP
#define SHEAFSEM_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sheafsem/drt.hpp"
#include "sheafsem/gluing.hpp"
#include "sheafsem/semiring.hpp"

namespace sheafsem::gen {

// Exhaustive functor-law sweep over a small fixed universe: all vocabulary
// chains over {P/1, Q/2}, all nonempty variable subsets of {a, b, c}, all
// composable morphism pairs, and a deterministic family of sections per
// target. Several hundred thousand cases.
LawReport run_functor_law_suite();

// Axiom checks for the boolean and rational semiring instances; the rational
// samples are drawn from the seed.
LawReport run_semiring_axiom_suite(std::uint64_t seed);

// A section over ctx with each atom slot independently absent, positive or
// negative; positive_bias shifts weight from negative to positive states.
Section random_section(std::mt19937_64& rng, const Context& ctx, bool positive_only = false);

struct CoverFamily {
  Cover cover;
  std::vector<Section> sections;
};

// A cover in which some leg maps surjectively onto the target variables and
// carries its full vocabulary, so every target atom is reachable from a leg.
// About half the instances derive their sections by restricting a random
// global section, which guarantees a gluing exists.
CoverFamily random_reachable_family(std::mt19937_64& rng);

// A cover whose legs have pairwise-disjoint vocabularies and injective
// variable maps, jointly covering the target.
CoverFamily random_disjoint_vocab_family(std::mt19937_64& rng);

struct MergeEquate {
  Drs antecedent;
  Drs anaphor;
  std::vector<std::pair<Var, Var>> equations;
};

// Two DRSs over disjoint referents and disjoint vocabularies, plus an
// injective assignment of some anaphor referents to antecedent referents.
MergeEquate random_merge_equate(std::mt19937_64& rng);

// The cover induced by a merge-and-equate instance: an identity leg for the
// antecedent and a leg sending equated referents to their antecedents.
CoverFamily induced_cover(const MergeEquate& instance);

}  // namespace sheafsem::gen

#endif
