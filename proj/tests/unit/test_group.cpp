#include "doctest.h"

#include "pqs/error.hpp"
#include "pqs/group.hpp"

#include <algorithm>
#include <set>

using namespace pqs;

namespace {

const BuiltinGroup& G() { return *builtin_group(); }

int idx(int i, int j, int a, int b) { return G().index(GElem::make(i, j, a, b)); }

}  // namespace

TEST_CASE("multiplication law") {
  CHECK(g_mul({0, 1, 0, 0}, {1, 0, 0, 0}) == GElem{2, 1, 0, 0});
  CHECK(g_order({0, 1, 1, 0}) == 6);
  CHECK(g_inv({1, 0, 1, 1}) == GElem{2, 0, 2, 2});
  CHECK(GElem::make(-1, 3, 4, -2) == GElem{2, 1, 1, 1});
  // tau sigma tau^-1 = sigma^2
  GElem t{0, 1, 0, 0}, s{1, 0, 0, 0};
  CHECK(g_mul(g_mul(t, s), g_inv(t)) == GElem{2, 0, 0, 0});
  CHECK(to_string({2, 1, 1, 2}) == "(σ²τ,(1,2))");
  CHECK(to_string({}) == "(Id,(0,0))");
  int q[] = {1, 1, 0, 2};
  CHECK(gelem_from_quadruple(q) == GElem{1, 1, 0, 2});
  int bad[] = {1, 1, 0};
  CHECK_THROWS_AS(gelem_from_quadruple(bad), Error);
}

TEST_CASE("cayley table agrees with the concrete law") {
  const FiniteGroup& g = G().group();
  REQUIRE(g.size() == 54);
  for (int x = 0; x < 54; ++x)
    for (int y = 0; y < 54; ++y) CHECK(G().elem(g.mul(x, y)) == g_mul(G().elem(x), G().elem(y)));
  for (int x = 0; x < 54; ++x) {
    CHECK(54 % g.order(x) == 0);
    CHECK(g.order(x) == g_order(G().elem(x)));
  }
}

TEST_CASE("conjugacy classes") {
  const FiniteGroup& g = G().group();
  CHECK(g.classes().size() == 27);
  const auto& cls = g.classes()[g.class_of(G().tau())];
  std::set<int> expect = {idx(0, 1, 0, 0), idx(1, 1, 0, 0), idx(2, 1, 0, 0)};
  CHECK(std::set<int>(cls.begin(), cls.end()) == expect);
  CHECK(g.classes()[g.class_of(g.identity())].size() == 1);
  int involutions = 0;
  for (int x = 0; x < 54; ++x)
    if (g.order(x) == 2) {
      ++involutions;
      CHECK(g.class_of(x) == g.class_of(G().tau()));
    }
  CHECK(involutions == 3);
  // Brute-force oracle: x ~ y iff some z conjugates x to y.
  for (int x = 0; x < 54; ++x)
    for (int y = 0; y < 54; ++y) {
      bool conj = false;
      for (int z = 0; z < 54 && !conj; ++z) conj = g.conjugate(x, z) == y;
      CHECK(conj == (g.class_of(x) == g.class_of(y)));
    }
}

TEST_CASE("finite group validation rejects bad tables") {
  // Z2 with a broken table.
  CHECK_THROWS_AS(FiniteGroup({"e", "x"}, {0, 1, 1, 1}), Error);
  CHECK_THROWS_AS(FiniteGroup({"e", "x"}, {0, 1, 1, 2}), Error);
  FiniteGroup z2({"e", "x"}, {0, 1, 1, 0});
  CHECK(z2.order(1) == 2);
}

TEST_CASE("subgroups") {
  const FiniteGroup& g = G().group();
  CHECK(g.cyclic_subgroup(idx(0, 1, 1, 0)).size() == 6);
  auto gens = G().generators();
  CHECK(g.generated_subgroup(gens).size() == 54);
  int two[] = {G().sigma(), G().e1()};
  CHECK(g.generated_subgroup(two).size() == 9);
}

TEST_CASE("automorphism enumeration") {
  const FiniteGroup& g = G().group();
  auto all = enumerate_automorphisms(G());
  CHECK(all.size() == 288);  // |Aut(S3)| * |GL(2,3)| = 6 * 48
  std::set<std::vector<int>> distinct;
  for (const auto& a : all) {
    distinct.insert(a.image);
    CHECK(is_automorphism(g, a.image));
  }
  CHECK(distinct.size() == 288);
  CHECK(std::find(all.begin(), all.end(), identity_automorphism(g)) != all.end());
  auto gens = G().generators();
  CHECK(enumerate_automorphisms_serial(g, gens) == all);
  for (const auto& psi : surface_automorphisms(G())) CHECK(std::find(all.begin(), all.end(), psi) != all.end());
}

TEST_CASE("surface automorphisms") {
  const FiniteGroup& g = G().group();
  auto psi = surface_automorphisms(G());
  CHECK(psi[0] == identity_automorphism(g));
  for (int k = 0; k < 4; ++k) {
    CHECK(is_automorphism(g, psi[k].image));
    for (int l = k + 1; l < 4; ++l) CHECK_FALSE(psi[k] == psi[l]);
  }
  // Psi2: sigma -> sigma, tau -> tau sigma, e1 -> e2, e2 -> 2 e1
  CHECK(psi[1].apply(G().sigma()) == G().sigma());
  CHECK(psi[1].apply(G().tau()) == g.mul(G().tau(), G().sigma()));
  CHECK(psi[1].apply(G().e1()) == G().e2());
  CHECK(psi[1].apply(G().e2()) == idx(0, 0, 2, 0));
  CHECK(psi[2].apply(G().sigma()) == idx(2, 0, 0, 0));
  // Orders and classes are preserved.
  for (const auto& a : psi)
    for (int x = 0; x < 54; ++x) CHECK(g.order(a.apply(x)) == g.order(x));
}

TEST_CASE("automorphism from data checks its input") {
  // e1 -> 0 is not injective.
  CHECK_THROWS_AS(automorphism_from_data(G(), {1, 0, 0, 0}, {0, 1, 0, 0}, {{{0, 0}, {0, 1}}}), Error);
  // tau -> sigma has the wrong order.
  CHECK_THROWS_AS(automorphism_from_data(G(), {1, 0, 0, 0}, {1, 0, 0, 0}, {{{1, 0}, {0, 1}}}), Error);
  auto rows = automorphism_from_data(G(), {1, 0, 0, 0}, {1, 1, 0, 0}, {{{0, 1}, {2, 0}}});
  auto cols = automorphism_from_data_columns(G(), {1, 0, 0, 0}, {1, 1, 0, 0}, {{{0, 1}, {2, 0}}});
  CHECK(rows.apply(G().e1()) == G().e2());
  CHECK(cols.apply(G().e1()) == idx(0, 0, 0, 2));
}

TEST_CASE("composition and inverses") {
  const FiniteGroup& g = G().group();
  auto all = enumerate_automorphisms(G());
  for (std::size_t k = 0; k < all.size(); k += 17) {
    const auto& a = all[k];
    CHECK(compose(a, a.inverse()) == identity_automorphism(g));
    auto imgs = generator_images(G(), a);
    CHECK(automorphism_from_generator_images(G(), imgs) == a);
  }
  auto inner = inner_automorphism(g, G().tau());
  CHECK(inner.apply(G().sigma()) == idx(2, 0, 0, 0));
  CHECK(is_automorphism(g, inner.image));
}
