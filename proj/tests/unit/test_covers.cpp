#include "doctest.h"

#include "pqs/covers.hpp"
#include "pqs/error.hpp"

#include <map>

using namespace pqs;

namespace {

const CharacterTable& T() { return *builtin_character_table(); }
const FiniteGroup& G() { return T().group(); }

std::map<std::string, int> as_multiset(const std::vector<Constituent>& parts) {
  std::map<std::string, int> m;
  for (const auto& c : parts) m[render_label(T().label(c.irreducible))] += c.multiplicity;
  return m;
}

std::map<std::string, int> expected(std::initializer_list<std::pair<const char*, int>> terms) {
  std::map<std::string, int> m;
  for (const auto& [label, mult] : terms) m[render_label(parse_label(label))] += mult;
  return m;
}

// Counts cosets x<g> with x^-1 h x in <g>, for every branch, without using classes.
int brute_fixed_points(const CoverDescriptor& c, int h) {
  int total = 0;
  for (const auto& b : c.branches) {
    auto sub = G().cyclic_subgroup(c.group->index(b.gen));
    std::vector<bool> seen(G().size(), false);
    for (int x = 0; x < G().size(); ++x) {
      if (seen[x]) continue;
      for (int s : sub) seen[G().mul(x, s)] = true;
      int conj = G().mul(G().mul(G().inv(x), h), x);
      if (std::find(sub.begin(), sub.end(), conj) != sub.end()) ++total;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("builtin descriptors carry the expected generators") {
  auto c1 = builtin_cover_c1();
  REQUIRE(c1.branches.size() == 3);
  CHECK(c1.branches[0].gen == GElem{0, 1, 1, 0});
  CHECK(c1.branches[1].gen == GElem{2, 0, 2, 2});
  CHECK(c1.branches[2].gen == GElem{1, 1, 0, 1});
  auto c2 = builtin_cover_c2();
  REQUIRE(c2.branches.size() == 4);
  CHECK(c2.branches[0].gen == GElem{1, 1, 0, 0});
  CHECK(c2.branches[1].gen == GElem{1, 0, 1, 0});
  CHECK(c2.branches[2].gen == GElem{0, 0, 1, 1});
  CHECK(c2.branches[3].gen == GElem{0, 1, 1, 2});
  std::vector<int> orders;
  for (const auto& b : c1.branches) orders.push_back(b.m);
  CHECK(orders == std::vector<int>{6, 3, 6});
  orders.clear();
  for (const auto& b : c2.branches) orders.push_back(b.m);
  CHECK(orders == std::vector<int>{2, 3, 3, 6});
  CHECK(cover_from_json(cover_to_json(c2)).branches.size() == 4);
}

TEST_CASE("validation") {
  auto v1 = validate_cover(builtin_cover_c1());
  CHECK(v1.ok);
  CHECK(v1.orbit_lengths == std::vector<int>{9, 18, 9});
  CHECK(v1.spherical_realization.size() == 3);
  auto v2 = validate_cover(builtin_cover_c2());
  CHECK(v2.ok);
  CHECK(v2.orbit_lengths == std::vector<int>{27, 18, 18, 9});

  // The realization really is a product-one generating system of conjugates.
  for (const auto& [cover, v] : {std::pair{builtin_cover_c1(), v1}, std::pair{builtin_cover_c2(), v2}}) {
    int prod = G().identity();
    for (std::size_t k = 0; k < v.spherical_realization.size(); ++k) {
      int x = v.spherical_realization[k];
      prod = G().mul(prod, x);
      CHECK(G().class_of(x) == G().class_of(cover.group->index(cover.branches[k].gen)));
    }
    CHECK(prod == G().identity());
    CHECK(G().generated_subgroup(v.spherical_realization).size() == 54);
  }

  auto bad = builtin_cover_c1();
  bad.branches[1].gen = GElem{};
  bad.branches[1].m = 1;
  auto vb = validate_cover(bad);
  CHECK_FALSE(vb.ok);
  REQUIRE_FALSE(vb.errors.empty());
  CHECK(vb.errors[0].find("trivial stabilizer generator") != std::string::npos);
  CHECK(vb.errors[0].find("p2") != std::string::npos);

  auto wrong_len = builtin_cover_c1();
  wrong_len.branches[0].declared_orbit_length = 18;
  CHECK_FALSE(validate_cover(wrong_len).ok);

  // All three generators of order 3 in Z3^2 x <sigma> cannot generate G.
  auto abelian = builtin_cover_c1();
  abelian.branches = {{"a", {1, 0, 0, 0}, 3, {}}, {"b", {2, 0, 1, 0}, 3, {}}, {"c", {0, 0, 2, 0}, 3, {}}};
  auto va = validate_cover(abelian);
  CHECK_FALSE(va.ok);
  CHECK_THROWS_AS(genus_rh(abelian), Error);
}

TEST_CASE("genus") {
  CHECK(genus_rh(builtin_cover_c1()) == 10);
  CHECK(genus_rh(builtin_cover_c2()) == 19);
  CoverDescriptor line;
  line.name = "P1";
  line.group = builtin_group();
  CHECK_THROWS_AS(genus_rh(line), Error);  // nontrivial group needs branching
}

TEST_CASE("riemann-hurwitz from raw data") {
  CHECK(riemann_hurwitz_genus(1, {}) == 0);
  CHECK(riemann_hurwitz_genus(54, {6, 3, 6}) == 10);
  CHECK(riemann_hurwitz_genus(54, {2, 3, 3, 6}) == 19);
  CHECK(riemann_hurwitz_genus(2, {2, 2}) == 0);
  CHECK_THROWS_AS(riemann_hurwitz_genus(2, {2}), Error);  // genus 1/2
  CHECK_THROWS_AS(riemann_hurwitz_genus(54, {}), Error);  // negative
}

TEST_CASE("fixed points") {
  auto c1 = builtin_cover_c1();
  auto c2 = builtin_cover_c2();
  for (int h = 0; h < G().size(); ++h) {
    if (h == G().identity()) continue;
    CHECK(fixed_point_count(c1, h) == brute_fixed_points(c1, h));
    CHECK(fixed_point_count(c2, h) == brute_fixed_points(c2, h));
    if (G().order(h) == 2) {
      CHECK(fixed_point_count(c1, h) == 6);
      CHECK(fixed_point_count(c2, h) == 12);
    }
  }
  CHECK(fixed_point_count(c1, c1.group->index({0, 0, 1, 1})) == brute_fixed_points(c1, c1.group->index({0, 0, 1, 1})));
  CHECK_THROWS_AS(fixed_point_count(c1, G().identity()), Error);
  // 3 conjugate involutions each fixing 6 points: 18 points with even stabilizer.
  int even = 0;
  for (const auto& b : c1.branches)
    if (b.m % 2 == 0) even += 54 / b.m;
  CHECK(even == 18);
}

TEST_CASE("chevalley-weil") {
  auto c1 = builtin_cover_c1();
  auto c2 = builtin_cover_c2();
  CHECK(chevalley_weil(c1, T().by_label(parse_label("ε1²·ε2²"))) == 1);
  CHECK(chevalley_weil(c2, T().by_label(parse_label("μ·ε2²"))) == 2);
  CHECK(chevalley_weil(c1, T()[0]) == 0);
}

TEST_CASE("canonical characters") {
  auto k1 = canonical_character(builtin_cover_c1(), T());
  CHECK(as_multiset(k1.parts) == expected({{"ε1²·ε2²", 1},
                                           {"sgn·ε1·ε2", 1},
                                           {"sgn·ε2", 1},
                                           {"sgn·ε1", 1},
                                           {"μ·ε1·ε2", 1},
                                           {"μ·ε1²·ε2", 1},
                                           {"μ·ε1·ε2²", 1}}));
  CHECK(k1.character.dim(G()) == 10);
  auto k2 = canonical_character(builtin_cover_c2(), T());
  CHECK(as_multiset(k2.parts) == expected({{"sgn·ε1²·ε2", 1},
                                           {"sgn·ε1²·ε2²", 1},
                                           {"sgn·ε1·ε2", 1},
                                           {"sgn·ε1", 1},
                                           {"sgn·ε2²", 1},
                                           {"μ·ε1", 1},
                                           {"μ·ε2", 1},
                                           {"μ·ε2²", 2},
                                           {"sgn·ε1²", 1},
                                           {"ε1²", 1},
                                           {"μ·ε1²", 1},
                                           {"μ·ε1·ε2", 1}}));
  CHECK(k2.character.dim(G()) == 19);
}

TEST_CASE("the other local rotation gives the conjugate characters") {
  for (const auto& cover : {builtin_cover_c1(), builtin_cover_c2()}) {
    auto inv = canonical_character(cover, T(), LocalRotation::inverse);
    auto dir = canonical_character(cover, T(), LocalRotation::direct);
    CHECK(dir.character.same_values(inv.character.conj()));
    CHECK_FALSE(dir.character.same_values(inv.character));
  }
}
