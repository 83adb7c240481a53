#ifndef SHEAFSEM_RANK_HPP
#define SHEAFSEM_RANK_HPP

#include <map>
#include <string>
#include <vector>

#include "sheafsem/distribution.hpp"
#include "sheafsem/gluing.hpp"

namespace sheafsem {

// One possible merging of an anaphor referent into an antecedent referent,
// labeled by the lemma pair whose corpus count weights it.
struct MergingPattern {
  Var anaphor_var;
  Var antecedent_var;
  std::string label;

  auto operator<=>(const MergingPattern&) const = default;
};

// Corpus counts per pattern label. In strict mode a missing label is an
// error; otherwise it counts as zero.
class FrequencyTable {
 public:
  FrequencyTable() = default;
  explicit FrequencyTable(std::map<std::string, long long> counts);

  void set(const std::string& label, long long count);
  bool has(const std::string& label) const;
  long long count(const std::string& label, bool strict) const;
  const std::map<std::string, long long>& counts() const { return counts_; }

 private:
  std::map<std::string, long long> counts_;
};

// Sum of the counts of the cover's component mergings: for each anaphor
// variable the cover assigns, the count of the unique pattern matching that
// assignment.
long long event_weight(const Cover& cover, const std::vector<MergingPattern>& patterns,
                       const FrequencyTable& table, bool strict = true);

using GluingDistribution = Distribution<RationalSemiring, Section>;

// Weights each cover's canonical gluing by its event weight; covers whose
// gluings coincide pool their weight.
GluingDistribution distribution_over_gluings(const std::vector<Cover>& covers,
                                             const std::vector<Section>& sections,
                                             const std::vector<MergingPattern>& patterns,
                                             const FrequencyTable& table, bool strict = true);

struct Resolution {
  std::vector<Section> best;       // argmax, canonical order
  GluingDistribution distribution;
  double entropy_bits = 0.0;

  // Presentation rows, one per input cover, in input order.
  struct Row {
    Cover cover;
    Section gluing;
    long long weight = 0;
  };
  std::vector<Row> rows;
  long long total_weight = 0;
};

Resolution resolve(const std::vector<Cover>& covers, const std::vector<Section>& sections,
                   const std::vector<MergingPattern>& patterns, const FrequencyTable& table,
                   bool strict = true);

}  // namespace sheafsem

#endif
