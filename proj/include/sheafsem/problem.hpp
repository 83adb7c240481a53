#ifndef SHEAFSEM_PROBLEM_HPP
#define SHEAFSEM_PROBLEM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sheafsem/drt.hpp"
#include "sheafsem/rank.hpp"

namespace sheafsem {

// Declarations of the line-oriented problem DSL. Each declaration remembers
// its source line; equality ignores it.

struct VocabDecl {
  std::string name;
  Vocabulary vocab;
  int line = 0;
  bool operator==(const VocabDecl& o) const { return name == o.name && vocab == o.vocab; }
};

struct ContextDecl {
  std::string name;
  std::string vocab_name;
  Context context;
  int line = 0;
  bool operator==(const ContextDecl& o) const {
    return name == o.name && vocab_name == o.vocab_name && context == o.context;
  }
};

struct SectionDecl {
  std::string name;
  std::string context_name;
  Section section;
  int line = 0;
  bool operator==(const SectionDecl& o) const {
    return name == o.name && context_name == o.context_name && section == o.section;
  }
};

struct MorphismDecl {
  std::string name;
  std::string source_name;
  std::string target_name;
  Morphism morphism;
  int line = 0;
  bool operator==(const MorphismDecl& o) const {
    return name == o.name && source_name == o.source_name && target_name == o.target_name &&
           morphism == o.morphism;
  }
};

struct CoverDecl {
  std::string name;
  std::string target_name;
  std::vector<std::string> leg_names;
  Cover cover;
  int line = 0;
  bool operator==(const CoverDecl& o) const {
    return name == o.name && target_name == o.target_name && leg_names == o.leg_names &&
           cover == o.cover;
  }
};

struct DrsDecl {
  std::string name;
  Drs drs;
  int line = 0;
  bool operator==(const DrsDecl& o) const { return name == o.name && drs == o.drs; }
};

struct AnaphorDecl {
  Var var;
  AnaphorSpec spec;
  int line = 0;
  bool operator==(const AnaphorDecl& o) const { return var == o.var && spec == o.spec; }
};

struct PatternDecl {
  MergingPattern pattern;
  int line = 0;
  bool operator==(const PatternDecl& o) const { return pattern == o.pattern; }
};

struct ProblemFile {
  std::vector<VocabDecl> vocabs;
  std::vector<ContextDecl> contexts;
  std::vector<SectionDecl> sections;
  std::vector<MorphismDecl> morphisms;
  std::vector<CoverDecl> covers;
  std::vector<DrsDecl> drses;
  std::vector<AnaphorDecl> anaphors;
  std::vector<PatternDecl> patterns;

  const VocabDecl& vocab(std::string_view name) const;
  const ContextDecl& context(std::string_view name) const;
  const SectionDecl& section(std::string_view name) const;
  const MorphismDecl& morphism(std::string_view name) const;
  const CoverDecl& cover(std::string_view name) const;
  const DrsDecl& drs(std::string_view name) const;

  bool operator==(const ProblemFile&) const = default;
};

ProblemFile parse_problem(std::string_view text);

// Canonical textual form; parsing it back yields an equal ProblemFile.
std::string serialize_problem(const ProblemFile& file);

// Two tab-separated columns, label and base-10 count; '#' starts a comment.
FrequencyTable parse_frequency_tsv(std::string_view text);

}  // namespace sheafsem

#endif
