// Times the OpenMP brute-force gluing kernel against the serial reference
// implementation on growing targets and checks they agree.

#include <chrono>
#include <iostream>

#include "sheafsem/generators.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace sheafsem;

namespace {

struct Instance {
  Cover cover;
  std::vector<Section> sections;
  std::size_t slots;
};

// Two disjoint-vocabulary legs over a target with `unary` one-place
// relations and one two-place relation, sections drawn from a global
// section so a gluing exists.
Instance sized_instance(std::size_t vars, std::size_t unary) {
  std::mt19937_64 rng(7);
  Vocabulary vocab;
  for (std::size_t i = 0; i < unary; ++i) {
    vocab.add(RelationSymbol("R" + std::to_string(i), 1));
  }
  vocab.add(RelationSymbol("T", 2));

  std::set<Var> target_vars;
  std::vector<Var> var_list;
  for (std::size_t i = 0; i < vars; ++i) {
    var_list.push_back("z" + std::to_string(i));
    target_vars.insert(var_list.back());
  }
  Context target(vocab, target_vars);

  std::map<Var, Var> identity;
  for (const auto& var : target_vars) identity.emplace(var, var);

  Vocabulary left_vocab;
  Vocabulary right_vocab;
  auto symbols = vocab.symbols();
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    (i % 2 == 0 ? left_vocab : right_vocab).add(symbols[i]);
  }

  std::vector<Morphism> legs;
  legs.push_back(Morphism::make(Context(left_vocab, target_vars), target, identity));
  legs.push_back(Morphism::make(Context(right_vocab, target_vars), target, identity));
  Cover cover = Cover::make(target, std::move(legs));

  Section global = gen::random_section(rng, target);
  std::vector<Section> sections;
  for (const auto& leg : cover.legs()) sections.push_back(restrict(leg, global));

  std::size_t slots = enumerate_atoms(target).size();
  return Instance{std::move(cover), std::move(sections), slots};
}

template <class F>
double time_ms(F&& run) {
  auto t0 = std::chrono::steady_clock::now();
  run();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP not enabled\n";
#endif
  std::cout << "slots  candidates  reference-ms  kernel-ms  speedup  agree\n";

  for (std::size_t vars = 2; vars <= 3; ++vars) {
    for (std::size_t unary = 1; unary <= 4; ++unary) {
      Instance instance = sized_instance(vars, unary);
      if (instance.slots > 14) continue;

      BruteForceOptions options{instance.slots};
      std::vector<Section> reference;
      std::vector<Section> kernel;
      double ref_ms =
          time_ms([&] { reference = all_gluings_reference(instance.cover, instance.sections, options); });
      double ker_ms =
          time_ms([&] { kernel = all_gluings_bruteforce(instance.cover, instance.sections, options); });

      double candidates = 1.0;
      for (std::size_t i = 0; i < instance.slots; ++i) candidates *= 3.0;
      std::printf("%5zu  %10.0f  %12.2f  %9.2f  %7.2f  %s\n", instance.slots, candidates, ref_ms,
                  ker_ms, ref_ms / (ker_ms > 0 ? ker_ms : 1e-9),
                  reference == kernel ? "yes" : "NO");
    }
  }
  return 0;
}
