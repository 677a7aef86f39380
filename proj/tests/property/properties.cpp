// Property suite: invariants checked exhaustively or over seeded random samples.
#include "doctest.h"

#include "pqs/chars.hpp"
#include "pqs/covers.hpp"
#include "pqs/forms.hpp"
#include "pqs/intersect.hpp"
#include "pqs/prodquot.hpp"

#include <random>

using namespace pqs;

namespace {

const CharacterTable& T() { return *builtin_character_table(); }
const FiniteGroup& G() { return T().group(); }
const BuiltinGroup& BG() { return T().builtin(); }

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

Cyclotomic random_cyc(std::mt19937& rng, int order) {
  std::vector<Rational> c;
  for (int k = 0; k < CyclotomicField::get(order).degree(); ++k) c.push_back(random_rational(rng));
  return Cyclotomic(order, c);
}

const std::vector<GroupAutomorphism>& automorphisms() {
  static const auto all = enumerate_automorphisms(BG());
  return all;
}

}  // namespace

TEST_CASE("field axioms over Q(zeta_N)") {
  std::mt19937 rng(20240601);
  for (int order : {3, 4, 6, 12}) {
    Cyclotomic zero(0, order), one(1, order);
    for (int trial = 0; trial < 200; ++trial) {
      Cyclotomic a = random_cyc(rng, order), b = random_cyc(rng, order), c = random_cyc(rng, order);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == one);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK(Cyclotomic::parse(a.to_string(), order) == a);
    }
  }
  for (int trial = 0; trial < 500; ++trial) {
    Rational q = random_rational(rng);
    CHECK(Rational::parse(q.to_string()) == q);
  }
}

TEST_CASE("group associativity and inverses") {
  const int n = G().size();
  for (int x = 0; x < n; ++x) {
    CHECK(G().mul(x, G().inv(x)) == G().identity());
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) REQUIRE(G().mul(G().mul(x, y), z) == G().mul(x, G().mul(y, z)));
  }
}

TEST_CASE("characters are class functions") {
  for (std::size_t k = 0; k < T().size(); ++k)
    for (int g = 0; g < G().size(); ++g)
      for (int x = 0; x < G().size(); ++x) REQUIRE(T()[k](G().mul(G().mul(x, g), G().inv(x))) == T()[k](g));
}

TEST_CASE("row orthogonality (27 x 27)") {
  REQUIRE(T().size() == 27);
  for (std::size_t i = 0; i < T().size(); ++i)
    for (std::size_t j = 0; j < T().size(); ++j)
      CHECK(inner_product(G(), T()[i], T()[j]) == Rational(i == j ? 1 : 0));
}

TEST_CASE("column orthogonality") {
  for (int g = 0; g < G().size(); ++g)
    for (int h = 0; h < G().size(); ++h) {
      Cyclotomic s(0);
      for (const auto& chi : T().irreducibles()) s += chi(g) * chi(h).conj();
      int want = G().class_of(g) == G().class_of(h) ? G().centralizer_order(g) : 0;
      REQUIRE(s == Cyclotomic(want));
    }
}

TEST_CASE("form representations are homomorphisms on all 54^2 pairs") {
  for (Curve c : {Curve::C1, Curve::C2}) {
    const FormRepresentation& rep = FormRepresentation::builtin(c);
    CHECK(!verify_homomorphism(rep));
    CHECK(!verify_homomorphism_serial(rep));
  }
}

TEST_CASE("isotypic projectors are complete, idempotent and orthogonal") {
  for (Curve c : {Curve::C1, Curve::C2}) {
    const FormRepresentation& rep = FormRepresentation::builtin(c);
    const std::size_t d = rep.space().dim();
    std::vector<CycMatrix> ps;
    CycMatrix sum(d, d);
    for (const auto& chi : T().irreducibles()) {
      ps.push_back(isotypic_projector(rep, chi));
      sum += ps.back();
    }
    CHECK(sum == CycMatrix::identity(d));
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (ps[i].is_zero()) continue;
      CHECK(ps[i] * ps[i] == ps[i]);
      for (std::size_t j = 0; j < ps.size(); ++j)
        if (i != j) CHECK((ps[i] * ps[j]).is_zero());
      // rank = dim chi * multiplicity
      int mult = chevalley_weil(c == Curve::C1 ? builtin_cover_c1() : builtin_cover_c2(), T()[i]);
      CHECK(ps[i].rank() == static_cast<std::size_t>(T()[i].dim(G()) * mult));
    }
  }
}

TEST_CASE("fixed points are conjugation invariant and match the coset count") {
  for (const auto& cover : {builtin_cover_c1(), builtin_cover_c2()}) {
    for (int h = 0; h < G().size(); ++h) {
      if (h == G().identity()) continue;
      int f = fixed_point_count(cover, h);
      for (int x = 0; x < G().size(); ++x) REQUIRE(fixed_point_count(cover, G().mul(G().mul(x, h), G().inv(x))) == f);
      // h fixes the coset x<g> iff x^-1 h x lies in <g>.
      int cosets = 0;
      for (const auto& b : cover.branches) {
        auto sub = G().cyclic_subgroup(BG().index(b.gen));
        int hits = 0;
        for (int x = 0; x < G().size(); ++x) {
          int y = G().mul(G().mul(G().inv(x), h), x);
          if (std::find(sub.begin(), sub.end(), y) != sub.end()) ++hits;
        }
        cosets += hits / static_cast<int>(sub.size());
      }
      CHECK(f == cosets);
    }
  }
}

TEST_CASE("invariant 2-forms have dimension p_g for every automorphism") {
  const auto& r1 = FormRepresentation::builtin(Curve::C1);
  const auto& r2 = FormRepresentation::builtin(Curve::C2);
  auto k1 = canonical_character(builtin_cover_c1(), T()).character;
  auto k2 = canonical_character(builtin_cover_c2(), T()).character;
  const auto& autos = automorphisms();
  REQUIRE(autos.size() == 288);
  std::vector<int> dims(autos.size()), pgs(autos.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < autos.size(); ++k) {
    dims[k] = static_cast<int>(invariant_tensors(r1, r2, autos[k]).size());
    pgs[k] = pg_routes(k1, k2, autos[k], T()).direct;
  }
  for (std::size_t k = 0; k < autos.size(); ++k) CHECK_MESSAGE(dims[k] == pgs[k], "automorphism " << k);
}

TEST_CASE("conjugate automorphisms give the same surface data") {
  auto c1 = builtin_cover_c1(), c2 = builtin_cover_c2();
  auto k1 = canonical_character(c1, T()).character;
  auto k2 = canonical_character(c2, T()).character;
  // Z3^2 is central, so conjugation by sigma and tau generates Inn(G).
  const int inner_gens[] = {BG().index({1, 0, 0, 0}), BG().index({0, 1, 0, 0})};
  for (const auto& psi : automorphisms()) {
    SurfaceSpec base{"base", c1, c2, psi, LambdaRegime::generic};
    auto p = singularity_profile(base);
    for (int g = 0; g < G().size(); ++g) {
      SurfaceSpec twisted = base;
      twisted.psi = compose(inner_automorphism(G(), g), psi);
      auto q = singularity_profile(twisted);
      REQUIRE(q.only_nodes == p.only_nodes);
      REQUIRE(q.node_count == p.node_count);
    }
    int pg = pg_routes(k1, k2, psi, T()).direct;
    for (int g : inner_gens) REQUIRE(pg_routes(k1, k2, compose(inner_automorphism(G(), g), psi), T()).direct == pg);
  }
}

TEST_CASE("parallel kernels agree with the serial references") {
  const std::vector<int> gens = {BG().index({1, 0, 0, 0}), BG().index({0, 1, 0, 0}), BG().index({0, 0, 1, 0}),
                                 BG().index({0, 0, 0, 1})};
  CHECK(enumerate_automorphisms(G(), gens) == enumerate_automorphisms_serial(G(), gens));
  for (Curve c : {Curve::C1, Curve::C2}) {
    auto a = FormRepresentation::build(c), b = FormRepresentation::build_serial(c);
    for (std::size_t g = 0; g < a.size(); ++g) REQUIRE(a[g] == b[g]);
  }
  auto par = scan_automorphisms(builtin_cover_c1(), builtin_cover_c2());
  auto ser = scan_automorphisms_serial(builtin_cover_c1(), builtin_cover_c2());
  REQUIRE(par.rows.size() == ser.rows.size());
  for (std::size_t k = 0; k < par.rows.size(); ++k) {
    CHECK(par.rows[k].images == ser.rows[k].images);
    CHECK(par.rows[k].p_g == ser.rows[k].p_g);
    CHECK(par.rows[k].node_count == ser.rows[k].node_count);
  }
  CHECK(par.only_nodes == ser.only_nodes);
}

TEST_CASE("computed degrees respect the Beauville bound") {
  for (int k = 1; k <= 4; ++k)
    for (LambdaRegime l : {LambdaRegime::generic, LambdaRegime::zero}) {
      SurfaceSpec s = builtin_surface(k, l);
      auto inv = surface_invariants(s);
      auto r = canonical_degree(s);
      CHECK(Rational(r.degree) <= beauville_bound(inv.p_g, inv.q));
      CHECK(r.degree <= 36);
      CHECK(r.degree * 54 == r.m_hat_squared);
    }
}
