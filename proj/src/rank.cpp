#include "sheafsem/rank.hpp"

#include <algorithm>

namespace sheafsem {

FrequencyTable::FrequencyTable(std::map<std::string, long long> counts)
    : counts_(std::move(counts)) {
  for (const auto& [label, count] : counts_) {
    if (count < 0) {
      throw Error(ErrorKind::IllFormed, "negative count for pattern '" + label + "'");
    }
  }
}

void FrequencyTable::set(const std::string& label, long long count) {
  if (count < 0) {
    throw Error(ErrorKind::IllFormed, "negative count for pattern '" + label + "'");
  }
  counts_[label] = count;
}

bool FrequencyTable::has(const std::string& label) const {
  return counts_.count(label) > 0;
}

long long FrequencyTable::count(const std::string& label, bool strict) const {
  auto it = counts_.find(label);
  if (it != counts_.end()) return it->second;
  if (strict) {
    throw Error(ErrorKind::MissingPattern, "no corpus count for pattern '" + label + "'");
  }
  return 0;
}

long long event_weight(const Cover& cover, const std::vector<MergingPattern>& patterns,
                       const FrequencyTable& table, bool strict) {
  // The anaphor variables of the cover are those its legs map away from
  // themselves; each must match exactly one pattern under its assigned
  // antecedent.
  std::map<Var, Var> assignment;
  for (const auto& leg : cover.legs()) {
    for (const auto& [var, image] : leg.varmap()) {
      if (var != image) assignment.emplace(var, image);
    }
  }

  long long sum = 0;
  for (const auto& [var, image] : assignment) {
    const MergingPattern* match = nullptr;
    for (const auto& pattern : patterns) {
      if (pattern.anaphor_var != var || pattern.antecedent_var != image) continue;
      if (match != nullptr) {
        throw Error(ErrorKind::IllFormed, "pattern for '" + var + " -> " + image +
                                              "' is not unique");
      }
      match = &pattern;
    }
    if (match == nullptr) {
      if (strict) {
        throw Error(ErrorKind::MissingPattern,
                    "no merging pattern for '" + var + " -> " + image + "'");
      }
      continue;
    }
    sum += table.count(match->label, strict);
  }
  return sum;
}

namespace {

std::vector<std::pair<Section, long long>> weighted_gluings(
    const std::vector<Cover>& covers, const std::vector<Section>& sections,
    const std::vector<MergingPattern>& patterns, const FrequencyTable& table, bool strict) {
  std::vector<std::pair<Section, long long>> out;
  out.reserve(covers.size());
  for (const auto& cover : covers) {
    auto canonical = canonical_glue(cover, sections);
    if (const auto* clash = std::get_if<Clash>(&canonical)) {
      throw Error(ErrorKind::InconsistentCover,
                  "a candidate cover has no consistent gluing: " + to_string(clash->positive) +
                      " clashes with " + to_string(clash->negative));
    }
    out.emplace_back(std::get<Section>(canonical), event_weight(cover, patterns, table, strict));
  }
  return out;
}

}  // namespace

GluingDistribution distribution_over_gluings(const std::vector<Cover>& covers,
                                             const std::vector<Section>& sections,
                                             const std::vector<MergingPattern>& patterns,
                                             const FrequencyTable& table, bool strict) {
  std::map<Section, Rational> raw;
  for (auto& [gluing, weight] : weighted_gluings(covers, sections, patterns, table, strict)) {
    raw[gluing] += Rational(weight);
  }
  return GluingDistribution::from_weights(raw);
}

Resolution resolve(const std::vector<Cover>& covers, const std::vector<Section>& sections,
                   const std::vector<MergingPattern>& patterns, const FrequencyTable& table,
                   bool strict) {
  Resolution out;
  std::map<Section, Rational> raw;
  auto weighted = weighted_gluings(covers, sections, patterns, table, strict);
  for (std::size_t i = 0; i < covers.size(); ++i) {
    auto& [gluing, weight] = weighted[i];
    raw[gluing] += Rational(weight);
    out.total_weight += weight;
    out.rows.push_back(Resolution::Row{covers[i], std::move(gluing), weight});
  }
  out.distribution = GluingDistribution::from_weights(raw);
  out.best = argmax(out.distribution);
  std::sort(out.best.begin(), out.best.end(), [](const Section& a, const Section& b) {
    return a.canonical_string() < b.canonical_string();
  });
  out.entropy_bits = entropy_bits(out.distribution);
  return out;
}

}  // namespace sheafsem
