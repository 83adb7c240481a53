#include <algorithm>
#include <cstdint>

#include "sheafsem/gluing.hpp"

namespace sheafsem {

namespace {

// Slot states: 0 = absent, 1 = positive, 2 = negative.
constexpr std::uint64_t kStates = 3;
constexpr std::size_t kHardSlotCap = 40;  // 3^40 still fits in 64 bits

// The candidate space of a cover: the atom slots of its target that some leg
// can see. A gluing never carries a literal invisible to every leg, the way
// a section of a topological cover has no support outside the union of the
// opens; for targets with relations of arity two or more, variable
// surjectivity alone leaves slots unreached and uniqueness would fail on
// padding literals there.
struct SlotSpace {
  std::vector<Literal> atoms;            // reachable slots, canonical order
  std::map<Literal, std::size_t> index;  // positive atom -> slot
  std::vector<std::uint64_t> pow3;
};

SlotSpace make_slot_space(const Cover& cover, std::size_t max_slots) {
  std::set<Literal> reachable;
  for (const auto& leg : cover.legs()) {
    for (const auto& atom : enumerate_atoms(leg.source())) {
      reachable.insert(Literal::pos(atom.relation, leg.apply(atom.args)));
    }
  }

  SlotSpace space;
  space.atoms.assign(reachable.begin(), reachable.end());
  std::size_t n = space.atoms.size();
  if (n > max_slots || n > kHardSlotCap) {
    throw Error(ErrorKind::TooLarge, "cover reaches " + std::to_string(n) +
                                         " atom slots, above the bound of " +
                                         std::to_string(std::min(max_slots, kHardSlotCap)));
  }
  for (std::size_t i = 0; i < n; ++i) space.index.emplace(space.atoms[i], i);
  space.pow3.resize(n + 1);
  space.pow3[0] = 1;
  for (std::size_t i = 0; i < n; ++i) space.pow3[i + 1] = space.pow3[i] * kStates;
  return space;
}

int state_of(std::uint64_t candidate, const SlotSpace& space, std::size_t slot) {
  return static_cast<int>((candidate / space.pow3[slot]) % kStates);
}

// One leg's gluing condition, compiled against the slot space: the candidate
// digit at each image slot must equal the state the leg section prescribes
// for the corresponding source atom.
struct LegConstraints {
  std::vector<std::pair<std::size_t, int>> required;  // (target slot, state)
};

std::vector<LegConstraints> compile_legs(const Cover& cover,
                                         const std::vector<Section>& sections,
                                         const SlotSpace& space) {
  std::vector<LegConstraints> out;
  out.reserve(cover.size());
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const Morphism& leg = cover.legs()[i];
    LegConstraints constraints;
    for (const auto& atom : enumerate_atoms(leg.source())) {
      int state = 0;
      if (sections[i].literals().count(atom) > 0) state = 1;
      if (sections[i].literals().count(atom.complement()) > 0) state = 2;
      Literal image = Literal::pos(atom.relation, leg.apply(atom.args));
      constraints.required.emplace_back(space.index.at(image), state);
    }
    out.push_back(std::move(constraints));
  }
  return out;
}

Section decode(std::uint64_t candidate, const SlotSpace& space, const Context& ctx) {
  std::set<Literal> lits;
  for (std::size_t slot = 0; slot < space.atoms.size(); ++slot) {
    switch (state_of(candidate, space, slot)) {
      case 1: lits.insert(space.atoms[slot]); break;
      case 2: lits.insert(space.atoms[slot].complement()); break;
      default: break;
    }
  }
  return Section::make(ctx, std::move(lits));
}

std::vector<Section> sort_canonically(std::vector<Section> out) {
  std::sort(out.begin(), out.end(), [](const Section& a, const Section& b) {
    return a.canonical_string() < b.canonical_string();
  });
  return out;
}

}  // namespace

std::vector<Section> all_gluings_bruteforce(const Cover& cover,
                                            const std::vector<Section>& sections,
                                            const BruteForceOptions& options) {
  (void)canonical_glue(cover, sections);  // validates the cover and the family shape

  SlotSpace space = make_slot_space(cover, options.max_slots);
  auto legs = compile_legs(cover, sections, space);
  const auto total = static_cast<long long>(space.pow3[space.atoms.size()]);

  std::vector<std::uint64_t> matches;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
    for (long long candidate = 0; candidate < total; ++candidate) {
      bool passes = true;
      for (const auto& leg : legs) {
        for (const auto& [slot, state] : leg.required) {
          if (state_of(static_cast<std::uint64_t>(candidate), space, slot) != state) {
            passes = false;
            break;
          }
        }
        if (!passes) break;
      }
      if (passes) local.push_back(static_cast<std::uint64_t>(candidate));
    }
#pragma omp critical
    matches.insert(matches.end(), local.begin(), local.end());
  }
  std::sort(matches.begin(), matches.end());

  std::vector<Section> out;
  out.reserve(matches.size());
  for (auto candidate : matches) out.push_back(decode(candidate, space, cover.target()));
  return sort_canonically(std::move(out));
}

std::vector<Section> all_gluings_reference(const Cover& cover,
                                           const std::vector<Section>& sections,
                                           const BruteForceOptions& options) {
  (void)canonical_glue(cover, sections);

  SlotSpace space = make_slot_space(cover, options.max_slots);
  const std::uint64_t total = space.pow3[space.atoms.size()];

  std::vector<Section> out;
  for (std::uint64_t candidate = 0; candidate < total; ++candidate) {
    Section s = decode(candidate, space, cover.target());
    bool is_gluing = true;
    for (std::size_t i = 0; i < cover.size(); ++i) {
      if (restrict(cover.legs()[i], s) != sections[i]) {
        is_gluing = false;
        break;
      }
    }
    if (is_gluing) out.push_back(std::move(s));
  }
  return sort_canonically(std::move(out));
}

}  // namespace sheafsem
