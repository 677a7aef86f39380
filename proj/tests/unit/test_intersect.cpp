#include "doctest.h"

#include "pqs/error.hpp"
#include "pqs/intersect.hpp"

#include <algorithm>

using namespace pqs;

namespace {

// Samuel multiplicity of a monomial ideal in k[[x, y]] containing pure powers:
// twice the area below its Newton polygon.
Rational monomial_multiplicity(std::vector<std::pair<int, int>> exps) {
  std::sort(exps.begin(), exps.end());
  std::vector<std::pair<int, int>> hull;
  for (auto p : exps) {
    if (!hull.empty() && hull.back().first == p.first) continue;  // keep the lowest y per x
    while (hull.size() >= 2) {
      auto [x1, y1] = hull[hull.size() - 2];
      auto [x2, y2] = hull.back();
      long cross = long(x2 - x1) * (p.second - y1) - long(y2 - y1) * (p.first - x1);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    if (hull.empty() || p.second < hull.back().second) hull.push_back(p);
  }
  Rational twice_area = 0;
  for (std::size_t k = 1; k < hull.size(); ++k)
    twice_area += Rational(hull[k].first - hull[k - 1].first) * Rational(hull[k].second + hull[k - 1].second);
  return twice_area;
}

Rational model_multiplicity(const LocalModel& m) {
  // H = {x = 0}, K = {y = 0}: D1 = x^a, D2 = y^b, D3 = x^c y^d.
  return monomial_multiplicity({{m.a, 0}, {0, m.b}, {m.c, m.d}});
}

SurfaceSpec spec(int k, LambdaRegime l = LambdaRegime::generic) { return builtin_surface(k, l); }

}  // namespace

TEST_CASE("numerical classes") {
  CHECK(pair(classes::F, classes::G) == 81);
  CHECK(pair(classes::Delta, classes::Delta) == 324);
  CHECK(pair(classes::Q, classes::F) == 162);
  NumClass t = classes::F * 2 + classes::G * 2 + classes::G3;
  CHECK(pair(t, t) == 1296);
  CHECK(builtin_components().size() == 11);
}

TEST_CASE("base-point correction on the certificate models") {
  CHECK(base_point_correction({2, 2, 4, 0}) == 4);
  CHECK(base_point_correction({2, 1, 1, 2}) == 2);
  CHECK(base_point_correction({1, 1, 0, 2}) == 1);
  CHECK(base_point_correction({2, 1, 0, 1}) == 2);
  CHECK(base_point_correction({2, 1, 4, 0}) == 2);
  CHECK(base_point_correction({2, 2, 2, 0}) == 4);
  CHECK(base_point_correction({2, 1, 1, 1}) == 2);
}

TEST_CASE("base-point correction rejects inapplicable models") {
  CHECK_THROWS_WITH_AS(base_point_correction({2, 0, 1, 0}), doctest::Contains("inapplicable"), Error);
  CHECK_THROWS_AS(base_point_correction({1, 2, 3, 3}), Error);  // b > a
  CHECK_THROWS_AS(base_point_correction({3, 2, 1, 1}), Error);  // 1 + 1*1 < 3, d < b
  CHECK_THROWS_AS(base_point_correction({2, 2, 0, 0}), Error);
  CHECK(!base_point_correction_applies({0, 0, 1, 1}));
}

TEST_CASE("base-point correction equals the multiplicity of the monomial base ideal") {
  int applicable = 0;
  for (int a = 1; a <= 7; ++a)
    for (int b = 1; b <= a; ++b)
      for (int c = 0; c <= 8; ++c)
        for (int d = 0; d <= 8; ++d) {
          LocalModel m{a, b, c, d};
          if (!base_point_correction_applies(m)) continue;
          ++applicable;
          CHECK_MESSAGE(Rational(base_point_correction(m)) == model_multiplicity(m),
                        a << "," << b << "," << c << "," << d);
        }
  CHECK(applicable > 500);
  CHECK(model_multiplicity({3, 2, 1, 1}) < Rational(6));
}

TEST_CASE("builtin certificates validate") {
  const char* names[] = {"surface1", "surface2_generic", "surface2_lambda0", "surface3_generic", "surface3_lambda0",
                         "surface4"};
  for (const char* n : names) {
    Certificate c = builtin_certificate(n);
    auto v = validate_certificate(c, 1296, 54);
    INFO(n);
    for (const auto& e : v.errors) INFO(e);
    CHECK(v.ok);
    CHECK(v.pairs.size() == 3);
    CHECK(std::any_of(v.pairs.begin(), v.pairs.end(), [](const PairCheck& p) { return !p.skipped; }));
    for (const auto& d : c.divisors) CHECK(divisor_class(c, d) == NumClass{36, 18});
  }
}

TEST_CASE("certificate json round trip") {
  Certificate c = builtin_certificate("surface2_lambda0");
  auto j = certificate_to_json(c);
  Certificate back = certificate_from_json(j);
  CHECK(certificate_to_json(back) == j);
  CHECK(back.families.size() == 5);
  CHECK(back.families[4].roles == std::array<int, 3>{1, 0, 2});

  j["components"] = {{"E", {9, 9}}};
  CHECK(certificate_from_json(j).components.at("E") == NumClass{9, 9});
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json{{"name", "x"}}), Error);
}

TEST_CASE("canonical degrees") {
  CHECK(t_squared(spec(1)) == 1296);
  CHECK(canonical_degree(spec(1)).degree == 18);
  CHECK(canonical_degree(spec(1, LambdaRegime::zero)).degree == 18);
  CHECK(canonical_degree(spec(2)).degree == 15);
  CHECK(canonical_degree(spec(2, LambdaRegime::zero)).degree == 13);
  CHECK(canonical_degree(spec(3)).degree == 18);
  CHECK(canonical_degree(spec(4)).degree == 12);

  auto r = canonical_degree(spec(2, LambdaRegime::zero));
  CHECK(r.total_correction == 594);
  CHECK(r.m_hat_squared == 702);
  CHECK(r.beauville_bound == Rational(36));
}

TEST_CASE("surface 3 at lambda = 0 from its local base ideal") {
  // Base ideal (t^2, s^2) at the 54 extra points gives a correction of 4 each.
  auto r = canonical_degree(spec(3, LambdaRegime::zero));
  CHECK(r.total_correction == 540);
  CHECK(r.degree == 14);
  CHECK(model_multiplicity({2, 2, 2, 0}) == Rational(4));
}

TEST_CASE("invalid certificates") {
  Certificate c = builtin_certificate("surface1");
  Certificate bad = c;
  bad.divisors[2]["F3"] = 1;
  auto v = validate_certificate(bad, 1296, 54);
  CHECK(!v.ok);

  bad = c;
  bad.families[0].locus = {"F0", "G0"};
  CHECK(!validate_certificate(bad, 1296, 54).ok);

  bad = c;
  bad.families[0].count = 400;
  CHECK(!validate_certificate(bad, 1296, 54).ok);

  bad = c;
  bad.families[0].count = 324;  // correction 1296
  bad.families[0].locus.clear();
  CHECK_THROWS_WITH_AS(canonical_degree(spec(1), bad), doctest::Contains("pencil"), Error);

  bad = c;
  bad.families[0].count = 28;  // M^2 = 1184, not a multiple of 54
  CHECK(!validate_certificate(bad, 1296, 54).ok);

  bad = c;
  bad.divisors[0]["X"] = 1;
  CHECK(!validate_certificate(bad, 1296, 54).ok);
}

TEST_CASE("Beauville bound") {
  CHECK(beauville_bound(3, 0) == Rational(36));
  CHECK(beauville_bound(4, 0) == Rational(45, 2));
  CHECK(beauville_bound(3, 1) == Rational(27));
  CHECK_THROWS_AS(beauville_bound(2, 0), Error);
  for (int k = 1; k <= 4; ++k) {
    auto r = canonical_degree(spec(k));
    CHECK(Rational(r.degree) <= r.beauville_bound);
    CHECK(r.degree <= 36);
  }
}

TEST_CASE("extra base points of surface 3 at lambda = 0") {
  // On F2 the ratio u = x1/x0 is a cube root of 1, with 3 choices of x3; on G3
  // the ratio r = y1/y0 solves r^6 - 2 lambda r^3 + 1 = 0, with 3 choices of y2.
  // DeltaPrime passes through such a point iff r^2 + u = 0.
  auto z = [](int k) {
    Cyclotomic out(1, 12);
    for (int i = 0; i < k; ++i) out *= Cyclotomic(12, CyclotomicField::get(12).power(1));
    return out;
  };
  auto on_g3 = [&](const Cyclotomic& r, const Rational& lambda) {
    Cyclotomic r3 = r * r * r;
    return (r3 * r3 - Cyclotomic(lambda * 2, 12) * r3 + Cyclotomic(1, 12)).is_zero();
  };
  for (Rational lambda : {Rational(0), Rational(2), Rational(1, 3), Rational(-5)}) {
    int pairs = 0;
    for (int k = 0; k < 3; ++k)
      for (int m = 0; m < 12; ++m) {
        Cyclotomic u = z(4 * k), r = z(m);
        if ((r * r + u).is_zero() && on_g3(r, lambda)) ++pairs;
      }
    CHECK(pairs * 9 == (lambda == Rational(0) ? 54 : 0));
  }
  // Any solution of r^2 = -u has r^6 = -1, so r lies in mu_12.
  for (int k = 0; k < 3; ++k)
    for (int m = 0; m < 12; ++m)
      if ((z(2 * m) + z(4 * k)).is_zero()) CHECK((z(6 * m) + Cyclotomic(1, 12)).is_zero());
}
