#include "sheafsem/generators.hpp"

#include <algorithm>
#include <array>

#include "sheafsem/presheaf.hpp"

namespace sheafsem::gen {

namespace {

// Uniform pick without std::uniform_int_distribution, whose output is not
// pinned down across standard libraries.
std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

template <class T>
const T& pick_one(std::mt19937_64& rng, const std::vector<T>& items) {
  return items[pick(rng, items.size())];
}

std::vector<std::set<Var>> nonempty_subsets(const std::vector<Var>& universe) {
  std::vector<std::set<Var>> out;
  for (std::size_t bits = 1; bits < (1u << universe.size()); ++bits) {
    std::set<Var> subset;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (bits & (1u << i)) subset.insert(universe[i]);
    }
    out.push_back(std::move(subset));
  }
  return out;
}

// All maps from source vars into target vars, as odometer-indexed varmaps.
std::vector<std::map<Var, Var>> all_varmaps(const std::set<Var>& source,
                                            const std::set<Var>& target) {
  std::vector<Var> from(source.begin(), source.end());
  std::vector<Var> to(target.begin(), target.end());
  std::vector<std::map<Var, Var>> out;
  std::vector<std::size_t> odo(from.size(), 0);
  while (true) {
    std::map<Var, Var> varmap;
    for (std::size_t i = 0; i < from.size(); ++i) varmap.emplace(from[i], to[odo[i]]);
    out.push_back(std::move(varmap));
    std::size_t pos = from.size();
    while (pos > 0) {
      --pos;
      if (++odo[pos] < to.size()) break;
      odo[pos] = 0;
      if (pos == 0) return out;
    }
    if (from.empty()) return out;
  }
}

// Deterministic section family over a context: empty, all-positive,
// all-negative, and an alternating pattern.
std::vector<Section> section_family(const Context& ctx) {
  auto atoms = enumerate_atoms(ctx);
  std::set<Section> out;
  for (int pattern = 0; pattern < 4; ++pattern) {
    std::set<Literal> lits;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      int state = 0;
      switch (pattern) {
        case 1: state = 1; break;
        case 2: state = 2; break;
        case 3: state = static_cast<int>(i % 3); break;
        default: break;
      }
      if (state == 1) lits.insert(atoms[i]);
      if (state == 2) lits.insert(atoms[i].complement());
    }
    out.insert(Section::make(ctx, std::move(lits)));
  }
  return {out.begin(), out.end()};
}

}  // namespace

LawReport run_functor_law_suite() {
  const RelationSymbol p("P", 1);
  const RelationSymbol q("Q", 2);
  const auto var_sets = nonempty_subsets({"a", "b", "c"});

  // Vocabulary chains V1 <= V2 <= V3: each symbol joins at one of four
  // levels (never, only the last, the last two, all three).
  std::vector<std::array<Vocabulary, 3>> chains;
  for (int p_level = 0; p_level < 4; ++p_level) {
    for (int q_level = 0; q_level < 4; ++q_level) {
      std::array<Vocabulary, 3> chain;
      for (int stage = 0; stage < 3; ++stage) {
        if (p_level > 2 - stage) chain[stage].add(p);
        if (q_level > 2 - stage) chain[stage].add(q);
      }
      chains.push_back(std::move(chain));
    }
  }

  LawReport report;
  std::vector<FunctorLawCase> batch;
  constexpr std::size_t kBatch = 8192;
  auto flush = [&] {
    report.absorb(check_functor_laws(batch));
    batch.clear();
  };

  for (const auto& chain : chains) {
    for (const auto& x1 : var_sets) {
      Context c1(chain[0], x1);
      for (const auto& x2 : var_sets) {
        Context c2(chain[1], x2);
        auto inner_maps = all_varmaps(x1, x2);
        for (const auto& x3 : var_sets) {
          Context c3(chain[2], x3);
          auto outer_maps = all_varmaps(x2, x3);
          auto sections = section_family(c3);
          for (const auto& fm : inner_maps) {
            Morphism f = Morphism::make(c1, c2, fm);
            for (const auto& gm : outer_maps) {
              Morphism g = Morphism::make(c2, c3, gm);
              for (const auto& s : sections) {
                batch.push_back(FunctorLawCase{g, f, s});
                if (batch.size() >= kBatch) flush();
              }
            }
          }
        }
      }
    }
  }
  flush();
  return report;
}

LawReport run_semiring_axiom_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LawReport report = check_semiring_axioms<BoolSemiring>({false, true});

  std::vector<Rational> samples = {Rational(0), Rational(1)};
  while (samples.size() < 10) {
    samples.emplace_back(static_cast<long long>(pick(rng, 12)),
                         static_cast<long long>(pick(rng, 11)) + 1);
  }
  report.absorb(check_semiring_axioms<RationalSemiring>(samples));
  return report;
}

Section random_section(std::mt19937_64& rng, const Context& ctx, bool positive_only) {
  std::set<Literal> lits;
  for (const auto& atom : enumerate_atoms(ctx)) {
    switch (pick(rng, 4)) {
      case 0: lits.insert(atom); break;
      case 1:
        if (positive_only) break;
        lits.insert(atom.complement());
        break;
      default: break;  // absent
    }
  }
  return Section::make(ctx, std::move(lits));
}

namespace {

std::vector<Var> fresh_vars(const std::string& stem, std::size_t n) {
  std::vector<Var> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

Vocabulary random_target_vocab(std::mt19937_64& rng) {
  const std::vector<RelationSymbol> pool = {
      RelationSymbol("R", 1), RelationSymbol("S", 1), RelationSymbol("T", 2)};
  Vocabulary vocab;
  std::size_t mask = 1 + pick(rng, (1u << pool.size()) - 1);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (mask & (1u << i)) vocab.add(pool[i]);
  }
  return vocab;
}

}  // namespace

CoverFamily random_reachable_family(std::mt19937_64& rng) {
  std::vector<Var> target_vars_list = fresh_vars("z", 1 + pick(rng, 2));
  std::set<Var> target_vars(target_vars_list.begin(), target_vars_list.end());
  Context target(random_target_vocab(rng), target_vars);

  std::vector<Morphism> legs;

  // The reachability leg: full vocabulary, variable map onto all of the
  // target's variables.
  std::size_t full_arity = target_vars_list.size() + pick(rng, 2);
  std::vector<Var> full_vars = fresh_vars("x", full_arity);
  std::map<Var, Var> full_map;
  for (std::size_t i = 0; i < full_vars.size(); ++i) {
    full_map.emplace(full_vars[i], i < target_vars_list.size()
                                       ? target_vars_list[i]
                                       : pick_one(rng, target_vars_list));
  }
  Context full_source(target.vocab, std::set<Var>(full_vars.begin(), full_vars.end()));
  legs.push_back(Morphism::make(full_source, target, full_map));

  std::size_t extra = pick(rng, 3);
  for (std::size_t e = 0; e < extra; ++e) {
    std::vector<Var> vars = fresh_vars("y" + std::to_string(e), 1 + pick(rng, 2));
    std::map<Var, Var> varmap;
    for (const auto& var : vars) varmap.emplace(var, pick_one(rng, target_vars_list));
    Vocabulary vocab;
    for (const auto& rel : target.vocab.symbols()) {
      if (pick(rng, 2) == 0) vocab.add(rel);
    }
    Context source(vocab, std::set<Var>(vars.begin(), vars.end()));
    legs.push_back(Morphism::make(source, target, varmap));
  }
  Cover cover = Cover::make(target, std::move(legs));

  std::vector<Section> sections;
  if (pick(rng, 2) == 0) {
    // Sections restricted from a random global section: a gluing exists.
    Section global = random_section(rng, target);
    for (const auto& leg : cover.legs()) sections.push_back(restrict(leg, global));
  } else {
    for (const auto& leg : cover.legs()) sections.push_back(random_section(rng, leg.source()));
  }
  return CoverFamily{std::move(cover), std::move(sections)};
}

CoverFamily random_disjoint_vocab_family(std::mt19937_64& rng) {
  // Two target variables keep the atom-slot space small: legs reach only
  // part of it, and the unreached slots multiply the gluing count the
  // brute-force enumerations have to return.
  std::vector<Var> target_vars_list = fresh_vars("p", 1 + pick(rng, 2));
  std::set<Var> target_vars(target_vars_list.begin(), target_vars_list.end());
  Vocabulary target_vocab = random_target_vocab(rng);
  Context target(target_vocab, target_vars);

  auto symbols = target_vocab.symbols();
  std::size_t leg_count = 1 + pick(rng, 3);

  // Partition the vocabulary over the legs and hand every target variable to
  // at least one leg; within a leg the variable map is a bijection onto its
  // image subset.
  std::vector<Vocabulary> leg_vocabs(leg_count);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    leg_vocabs[i < leg_count ? i : pick(rng, leg_count)].add(symbols[i]);
  }
  std::vector<std::set<Var>> leg_images(leg_count);
  for (std::size_t i = 0; i < target_vars_list.size(); ++i) {
    leg_images[i % leg_count].insert(target_vars_list[i]);
  }
  for (auto& image : leg_images) {
    for (const auto& var : target_vars_list) {
      if (pick(rng, 3) == 0) image.insert(var);
    }
    if (image.empty()) image.insert(pick_one(rng, target_vars_list));
  }

  std::vector<Morphism> legs;
  std::vector<Section> sections;
  for (std::size_t i = 0; i < leg_count; ++i) {
    std::vector<Var> source_vars = fresh_vars("q" + std::to_string(i), leg_images[i].size());
    std::map<Var, Var> varmap;
    auto image_it = leg_images[i].begin();
    for (const auto& var : source_vars) varmap.emplace(var, *image_it++);
    Context source(leg_vocabs[i], std::set<Var>(source_vars.begin(), source_vars.end()));
    legs.push_back(Morphism::make(source, target, std::move(varmap)));
    sections.push_back(random_section(rng, legs.back().source(), pick(rng, 5) < 3));
  }
  return CoverFamily{Cover::make(target, std::move(legs)), std::move(sections)};
}

MergeEquate random_merge_equate(std::mt19937_64& rng) {
  auto random_drs = [&rng](const std::string& var_stem, const std::string& rel_stem) {
    std::vector<Var> vars = fresh_vars(var_stem, 1 + pick(rng, 2));
    Vocabulary vocab;
    vocab.add(RelationSymbol(rel_stem + "1", 1));
    if (pick(rng, 2) == 0) vocab.add(RelationSymbol(rel_stem + "2", 2));
    Context ctx(vocab, std::set<Var>(vars.begin(), vars.end()));
    Section s = random_section(rng, ctx);
    return Drs::make(ctx.vars, s.literals());
  };

  MergeEquate out{random_drs("m", "A"), random_drs("n", "B"), {}};

  std::vector<Var> antecedents(out.antecedent.referents().begin(),
                               out.antecedent.referents().end());
  std::vector<Var> anaphors(out.anaphor.referents().begin(), out.anaphor.referents().end());
  std::shuffle(antecedents.begin(), antecedents.end(), rng);
  std::size_t how_many = pick(rng, std::min(antecedents.size(), anaphors.size()) + 1);
  for (std::size_t i = 0; i < how_many; ++i) {
    out.equations.emplace_back(anaphors[i], antecedents[i]);
  }
  return out;
}

CoverFamily induced_cover(const MergeEquate& instance) {
  Section left = drs_to_section(instance.antecedent);
  Section right = drs_to_section(instance.anaphor);

  std::map<Var, Var> equate;
  for (const auto& [anaphor, antecedent] : instance.equations) {
    equate.emplace(anaphor, antecedent);
  }

  std::set<Var> target_vars = left.context().vars;
  for (const auto& var : right.context().vars) {
    if (equate.count(var) == 0) target_vars.insert(var);
  }
  Context target(Vocabulary::unite(left.context().vocab, right.context().vocab),
                 std::move(target_vars));

  std::map<Var, Var> left_map;
  for (const auto& var : left.context().vars) left_map.emplace(var, var);
  std::map<Var, Var> right_map;
  for (const auto& var : right.context().vars) {
    auto it = equate.find(var);
    right_map.emplace(var, it == equate.end() ? var : it->second);
  }

  std::vector<Morphism> legs;
  legs.push_back(Morphism::make(left.context(), target, std::move(left_map)));
  legs.push_back(Morphism::make(right.context(), target, std::move(right_map)));
  return CoverFamily{Cover::make(std::move(target), std::move(legs)), {left, right}};
}

}  // namespace sheafsem::gen
