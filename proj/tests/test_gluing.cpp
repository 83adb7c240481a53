#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sheafsem/generators.hpp"

using namespace th;

namespace {

struct NamedFamily {
  Cover cover;
  std::vector<Section> sections;
};

// "John sleeps. He snores." — two unary sections glued at one referent.
NamedFamily sleep_snore() {
  Context target = ctx({{"John", 1}, {"sleeps", 1}, {"snores", 1}}, {"z"});
  Context left = ctx({{"John", 1}, {"sleeps", 1}}, {"x"});
  Context right = ctx({{"snores", 1}}, {"y"});
  Cover cover = Cover::make(
      target, {mor(left, target, {{"x", "z"}}), mor(right, target, {{"y", "z"}})});
  return {cover,
          {sec(left, {lit("John", {"x"}), lit("sleeps", {"x"})}), sec(right, {lit("snores", {"y"})})}};
}

// "John beats his donkey": three sections, one binary relation pair.
NamedFamily donkey_owner() {
  Context target = ctx({{"John", 1}, {"donkey", 1}, {"owns", 2}, {"beats", 2}}, {"a", "b"});
  Context c1 = ctx({{"John", 1}}, {"x"});
  Context c2 = ctx({{"donkey", 1}}, {"y"});
  Context c3 = ctx({{"owns", 2}, {"beats", 2}}, {"u", "v"});
  Cover cover = Cover::make(target, {mor(c1, target, {{"x", "a"}}), mor(c2, target, {{"y", "b"}}),
                                     mor(c3, target, {{"u", "a"}, {"v", "b"}})});
  return {cover,
          {sec(c1, {lit("John", {"x"})}), sec(c2, {lit("donkey", {"y"})}),
           sec(c3, {lit("owns", {"u", "v"}), lit("beats", {"u", "v"})})}};
}

// Overlapping vocabularies with crossed placements: no gluing exists.
NamedFamily crossed_pair() {
  Context target = ctx({{"R", 1}, {"S", 1}}, {"z", "w"});
  Context c1 = ctx({{"R", 1}, {"S", 1}}, {"x", "u"});
  Context c2 = ctx({{"R", 1}, {"S", 1}}, {"y", "v"});
  Cover cover = Cover::make(target, {mor(c1, target, {{"x", "z"}, {"u", "w"}}),
                                     mor(c2, target, {{"y", "z"}, {"v", "w"}})});
  return {cover, {sec(c1, {lit("R", {"x"}), lit("S", {"u"})}),
                  sec(c2, {lit("S", {"y"}), lit("R", {"v"})})}};
}

// "John owns a donkey. It is grey." with the agreement literal !Man.
NamedFamily grey_donkey(bool merge_men) {
  Context target = ctx({{"John", 1}, {"Man", 1}, {"donkey", 1}, {"grey", 1}}, {"a", "b"});
  Context c1 = ctx({{"John", 1}, {"Man", 1}}, {"x"});
  Context c2 = ctx({{"donkey", 1}, {"Man", 1}}, {"y"});
  Context c3 = ctx({{"grey", 1}}, {"z"});
  Var y_image = merge_men ? "a" : "b";
  Cover cover =
      Cover::make(target, {mor(c1, target, {{"x", "a"}}), mor(c2, target, {{"y", y_image}}),
                           mor(c3, target, {{"z", "b"}})});
  return {cover, {sec(c1, {lit("John", {"x"}), lit("Man", {"x"})}),
                  sec(c2, {lit("donkey", {"y"}), neg("Man", {"y"})}),
                  sec(c3, {lit("grey", {"z"})})}};
}

}  // namespace

TEST_SUITE("gluing") {

TEST_CASE("cover validation reports what is missing") {
  Context target = ctx({{"R", 1}, {"S", 1}}, {"z", "w"});
  Context c1 = ctx({{"R", 1}, {"S", 1}}, {"x", "u"});
  Context c2 = ctx({{"R", 1}, {"S", 1}}, {"y", "v"});

  CHECK_NOTHROW(validate_cover(Cover::make(
      target, {mor(c1, target, {{"x", "z"}, {"u", "w"}}), mor(c2, target, {{"y", "z"}, {"v", "w"}})})));
  CHECK_NOTHROW(validate_cover(Cover::make(target, {Morphism::identity(target)})));

  Context just_x = ctx({{"R", 1}, {"S", 1}}, {"x"});
  Cover partial = Cover::make(target, {mor(just_x, target, {{"x", "z"}})});
  CHECK_THROWS_WITH_AS(validate_cover(partial), doctest::Contains("w"), Error);

  Context r_only = ctx({{"R", 1}}, {"x", "u"});
  Cover thin = Cover::make(target, {mor(r_only, target, {{"x", "z"}, {"u", "w"}})});
  try {
    validate_cover(thin);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::VocabNotCovered);
  }
}

TEST_CASE("covers need at least one leg") {
  Context target = ctx({{"R", 1}}, {"z"});
  CHECK_THROWS_AS(Cover::make(target, {}), Error);
}

TEST_CASE("the empty context is covered by one leg from itself") {
  Context empty = ctx({}, {});
  Cover cover = Cover::make(empty, {Morphism::identity(empty)});
  CHECK_NOTHROW(validate_cover(cover));
  Section nothing = sec(empty, {});
  GluingResult result = glue(cover, {nothing});
  CHECK(std::get<Glued>(result).section == nothing);
  CHECK(all_gluings_bruteforce(cover, {nothing}) == std::vector<Section>{nothing});
}

TEST_CASE("canonical glue is the pushforward union") {
  auto [cover, sections] = sleep_snore();
  auto result = canonical_glue(cover, sections);
  CHECK(std::get<Section>(result) ==
        sec(cover.target(), {lit("John", {"z"}), lit("sleeps", {"z"}), lit("snores", {"z"})}));
}

TEST_CASE("the crossed pair has a consistent canonical union that is no gluing") {
  auto [cover, sections] = crossed_pair();
  auto canonical = canonical_glue(cover, sections);
  CHECK(std::get<Section>(canonical) ==
        sec(cover.target(),
            {lit("R", {"z"}), lit("S", {"z"}), lit("S", {"w"}), lit("R", {"w"})}));

  GluingResult result = glue(cover, sections);
  auto& mismatch = std::get<RestrictionMismatch>(result);
  CHECK(mismatch.leg == 0);
  CHECK(mismatch.residue == std::set<Literal>{lit("S", {"x"}), lit("R", {"u"})});
  CHECK(mismatch.all_residues.size() == 2);  // both legs fail here
}

TEST_CASE("merging a man and a non-man clashes on the agreement literal") {
  auto [cover, sections] = grey_donkey(true);
  auto canonical = canonical_glue(cover, sections);
  auto& clash = std::get<Clash>(canonical);
  CHECK(clash.positive == lit("Man", {"a"}));
  CHECK(clash.negative == neg("Man", {"a"}));

  GluingResult result = glue(cover, sections);
  CHECK(std::holds_alternative<Clash>(result));
}

TEST_CASE("the donkey family has its unique four-literal gluing") {
  auto [cover, sections] = donkey_owner();
  GluingResult result = glue(cover, sections);
  Section expected = sec(cover.target(), {lit("John", {"a"}), lit("donkey", {"b"}),
                                          lit("owns", {"a", "b"}), lit("beats", {"a", "b"})});
  CHECK(std::get<Glued>(result).section == expected);

  auto found = all_gluings_bruteforce(cover, sections);
  REQUIRE(found.size() == 1);
  CHECK(found.front() == expected);
}

TEST_CASE("keeping the men apart admits the five-literal gluing") {
  auto [cover, sections] = grey_donkey(false);
  GluingResult result = glue(cover, sections);
  CHECK(std::get<Glued>(result).section ==
        sec(cover.target(), {lit("John", {"a"}), lit("Man", {"a"}), lit("donkey", {"b"}),
                             neg("Man", {"b"}), lit("grey", {"b"})}));
}

TEST_CASE("the brute-force enumeration agrees with the worked examples") {
  auto one = sleep_snore();
  auto found = all_gluings_bruteforce(one.cover, one.sections);
  REQUIRE(found.size() == 1);
  CHECK(found.front() == sec(one.cover.target(), {lit("John", {"z"}), lit("sleeps", {"z"}),
                                                  lit("snores", {"z"})}));

  auto crossed = crossed_pair();
  CHECK(all_gluings_bruteforce(crossed.cover, crossed.sections).empty());

  Context c = ctx({{"R", 1}, {"T", 2}}, {"a", "b"});
  std::mt19937_64 rng(41);
  Section s = gen::random_section(rng, c);
  Cover identity_cover = Cover::make(c, {Morphism::identity(c)});
  auto self = all_gluings_bruteforce(identity_cover, {s});
  REQUIRE(self.size() == 1);
  CHECK(self.front() == s);
}

TEST_CASE("the kernel and the serial reference enumerate the same gluings") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 60; ++i) {
    auto family = gen::random_reachable_family(rng);
    auto kernel = all_gluings_bruteforce(family.cover, family.sections);
    auto reference = all_gluings_reference(family.cover, family.sections);
    REQUIRE(kernel == reference);
  }
  for (int i = 0; i < 60; ++i) {
    auto family = gen::random_disjoint_vocab_family(rng);
    REQUIRE(all_gluings_bruteforce(family.cover, family.sections) ==
            all_gluings_reference(family.cover, family.sections));
  }
}

TEST_CASE("gluings are unique and match glue when they exist") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 300; ++i) {
    auto family = gen::random_reachable_family(rng);
    auto found = all_gluings_bruteforce(family.cover, family.sections);
    REQUIRE(found.size() <= 1);
    GluingResult result = glue(family.cover, family.sections);
    if (found.size() == 1) {
      CHECK(std::get<Glued>(result).section == found.front());
    } else {
      CHECK_FALSE(std::holds_alternative<Glued>(result));
    }
  }
}

TEST_CASE("disjoint vocabularies with injective legs cannot fail the restriction check") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 300; ++i) {
    auto family = gen::random_disjoint_vocab_family(rng);
    for (const auto& leg : family.cover.legs()) REQUIRE(leg.injective());
    auto canonical = canonical_glue(family.cover, family.sections);
    GluingResult result = glue(family.cover, family.sections);
    if (std::holds_alternative<Section>(canonical)) {
      CHECK(std::holds_alternative<Glued>(result));
    } else {
      CHECK(std::holds_alternative<Clash>(result));
    }
  }
}

TEST_CASE("a glued result restricts back to every input section") {
  std::mt19937_64 rng(45);
  int glued_seen = 0;
  for (int i = 0; i < 200; ++i) {
    auto family = gen::random_reachable_family(rng);
    GluingResult result = glue(family.cover, family.sections);
    if (const auto* glued = std::get_if<Glued>(&result)) {
      ++glued_seen;
      for (std::size_t leg = 0; leg < family.cover.size(); ++leg) {
        CHECK(restrict(family.cover.legs()[leg], glued->section) == family.sections[leg]);
      }
    }
  }
  CHECK(glued_seen > 20);
}

TEST_CASE("the enumeration bound is a configuration knob") {
  Context big = ctx({{"T", 2}}, {"a", "b", "c"});  // 9 slots
  Cover cover = Cover::make(big, {Morphism::identity(big)});
  Section s = sec(big, {});
  CHECK_THROWS_AS(all_gluings_bruteforce(cover, {s}, BruteForceOptions{8}), Error);
  try {
    all_gluings_bruteforce(cover, {s}, BruteForceOptions{8});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
  auto found = all_gluings_bruteforce(cover, {s}, BruteForceOptions{9});
  REQUIRE(found.size() == 1);
  CHECK(found.front() == s);
}

TEST_CASE("family shape errors are reported before enumeration") {
  auto [cover, sections] = sleep_snore();
  std::vector<Section> short_family = {sections[0]};
  CHECK_THROWS_AS(glue(cover, short_family), Error);
  std::vector<Section> swapped = {sections[1], sections[0]};
  CHECK_THROWS_AS(glue(cover, swapped), Error);
}

}  // TEST_SUITE
