#ifndef SHEAFSEM_GLUING_HPP
#define SHEAFSEM_GLUING_HPP

#include <cstddef>
#include <map>
#include <variant>
#include <vector>

#include "sheafsem/presheaf.hpp"

namespace sheafsem {

// A family of morphisms into one target context. Construction checks only
// that the family is nonempty and the legs agree on the target; the cover
// conditions (joint surjectivity, vocabulary cover) live in validate_cover.
class Cover {
 public:
  static Cover make(Context target, std::vector<Morphism> legs);

  const Context& target() const { return target_; }
  const std::vector<Morphism>& legs() const { return legs_; }
  std::size_t size() const { return legs_.size(); }

  auto operator<=>(const Cover&) const = default;

 private:
  Cover(Context target, std::vector<Morphism> legs);

  Context target_;
  std::vector<Morphism> legs_;
};

// Throws NotSurjective (listing uncovered variables) or VocabNotCovered
// (listing missing relations) when the cover conditions fail.
void validate_cover(const Cover& cover);

struct Glued {
  Section section;
};

struct Clash {
  Literal positive;
  Literal negative;
};

struct RestrictionMismatch {
  std::size_t leg = 0;                            // first failing leg
  std::set<Literal> residue;                      // symmetric difference there
  std::map<std::size_t, std::set<Literal>> all_residues;  // every failing leg
};

using GluingResult = std::variant<Glued, Clash, RestrictionMismatch>;

std::string to_string(const GluingResult& result);

// The pushforward union of all leg literals over the cover target, or the
// clashing pair when that union is inconsistent.
std::variant<Section, Clash> canonical_glue(const Cover& cover,
                                            const std::vector<Section>& sections);

// Glued(s) iff the canonical section s is consistent and restricts to every
// leg's input exactly; otherwise the clash or the per-leg residues.
GluingResult glue(const Cover& cover, const std::vector<Section>& sections);

struct BruteForceOptions {
  // Cap on the number of atom slots of the target context.
  std::size_t max_slots = 20;
};

// Exhaustively enumerates every consistent section supported on the cover's
// reachable atom slots (a gluing carries no literal invisible to every leg)
// and keeps those satisfying the gluing condition, in canonical order. Runs
// the slot-state kernel, parallelized with OpenMP when available.
std::vector<Section> all_gluings_bruteforce(const Cover& cover,
                                            const std::vector<Section>& sections,
                                            const BruteForceOptions& options = {});

// Serial reference for the kernel above: materializes each candidate through
// make_section and checks the gluing condition with restrict. Kept for
// testing and benchmarking against the kernel.
std::vector<Section> all_gluings_reference(const Cover& cover,
                                           const std::vector<Section>& sections,
                                           const BruteForceOptions& options = {});

}  // namespace sheafsem

#endif
