#include "sheafsem/gluing.hpp"

#include <algorithm>
#include <sstream>

namespace sheafsem {

Cover::Cover(Context target, std::vector<Morphism> legs)
    : target_(std::move(target)), legs_(std::move(legs)) {}

Cover Cover::make(Context target, std::vector<Morphism> legs) {
  if (legs.empty()) {
    throw Error(ErrorKind::IllFormed, "a cover needs at least one leg");
  }
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (legs[i].target() != target) {
      throw Error(ErrorKind::ContextMismatch, "leg " + std::to_string(i) +
                                                  " targets " + to_string(legs[i].target()) +
                                                  ", not " + to_string(target));
    }
  }
  return Cover(std::move(target), std::move(legs));
}

void validate_cover(const Cover& cover) {
  std::set<Var> covered;
  Vocabulary vocab_union;
  for (const auto& leg : cover.legs()) {
    for (const auto& [var, image] : leg.varmap()) {
      (void)var;
      covered.insert(image);
    }
    vocab_union = Vocabulary::unite(vocab_union, leg.source().vocab);
  }

  std::vector<Var> uncovered;
  std::set_difference(cover.target().vars.begin(), cover.target().vars.end(), covered.begin(),
                      covered.end(), std::back_inserter(uncovered));
  if (!uncovered.empty()) {
    std::ostringstream os;
    os << "variables not reached by any leg:";
    for (const auto& var : uncovered) os << " " << var;
    throw Error(ErrorKind::NotSurjective, os.str());
  }

  std::vector<RelationSymbol> missing;
  for (const auto& rel : cover.target().vocab.symbols()) {
    if (!vocab_union.contains(rel)) missing.push_back(rel);
  }
  if (!missing.empty()) {
    std::ostringstream os;
    os << "relations not contributed by any leg:";
    for (const auto& rel : missing) os << " " << to_string(rel);
    throw Error(ErrorKind::VocabNotCovered, os.str());
  }
}

namespace {

void check_family(const Cover& cover, const std::vector<Section>& sections) {
  if (sections.size() != cover.size()) {
    throw Error(ErrorKind::LengthMismatch, "cover has " + std::to_string(cover.size()) +
                                               " legs but the family has " +
                                               std::to_string(sections.size()) + " sections");
  }
  for (std::size_t i = 0; i < sections.size(); ++i) {
    if (sections[i].context() != cover.legs()[i].source()) {
      throw Error(ErrorKind::ContextMismatch,
                  "section " + std::to_string(i) + " lives over " +
                      to_string(sections[i].context()) + ", not over leg source " +
                      to_string(cover.legs()[i].source()));
    }
  }
}

}  // namespace

std::variant<Section, Clash> canonical_glue(const Cover& cover,
                                            const std::vector<Section>& sections) {
  validate_cover(cover);
  check_family(cover, sections);
  std::set<Literal> pushed;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const Morphism& leg = cover.legs()[i];
    for (const auto& lit : sections[i].literals()) {
      pushed.insert(Literal(lit.positive, lit.relation, leg.apply(lit.args)));
    }
  }
  if (auto clash = find_clash(pushed)) {
    return Clash{clash->first, clash->second};
  }
  return Section::make(cover.target(), std::move(pushed));
}

GluingResult glue(const Cover& cover, const std::vector<Section>& sections) {
  auto canonical = canonical_glue(cover, sections);
  if (auto* clash = std::get_if<Clash>(&canonical)) return *clash;

  const Section& candidate = std::get<Section>(canonical);
  std::map<std::size_t, std::set<Literal>> residues;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    Section back = restrict(cover.legs()[i], candidate);
    std::set<Literal> residue;
    std::set_symmetric_difference(back.literals().begin(), back.literals().end(),
                                  sections[i].literals().begin(), sections[i].literals().end(),
                                  std::inserter(residue, residue.end()));
    if (!residue.empty()) residues.emplace(i, std::move(residue));
  }
  if (!residues.empty()) {
    auto first = residues.begin();
    return RestrictionMismatch{first->first, first->second, residues};
  }
  return Glued{candidate};
}

std::string to_string(const GluingResult& result) {
  if (const auto* glued = std::get_if<Glued>(&result)) {
    return "glued " + to_string(glued->section);
  }
  if (const auto* clash = std::get_if<Clash>(&result)) {
    return "inconsistent: " + to_string(clash->positive) + " clashes with " +
           to_string(clash->negative);
  }
  const auto& mismatch = std::get<RestrictionMismatch>(result);
  std::ostringstream os;
  os << "restriction mismatch on leg " << mismatch.leg << ", residue "
     << to_string(mismatch.residue);
  return os.str();
}

}  // namespace sheafsem
