#include "doctest.h"

#include "pqs/cyclotomic.hpp"
#include "pqs/matrix.hpp"
#include "pqs/rational.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace pqs;

namespace {

Cyclotomic z3() { return root_of_unity(3, 1); }

// Floating-point image under zeta_N -> exp(2 pi i / N).
std::complex<double> numeric(const Cyclotomic& c) {
  std::complex<double> s = 0;
  const double t = 2 * std::numbers::pi / c.order();
  for (std::size_t k = 0; k < c.coords().size(); ++k) {
    const auto& q = c.coords()[k];
    double v = q.numerator().convert_to<double>() / q.denominator().convert_to<double>();
    s += v * std::polar(1.0, t * static_cast<double>(k));
  }
  return s;
}

Cyclotomic random_cyc(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  const int d = CyclotomicField::get(order).degree();
  std::vector<Rational> c;
  for (int k = 0; k < d; ++k) c.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
  return Cyclotomic(order, c);
}

}  // namespace

TEST_CASE("rational lowest terms") {
  Rational r(BigInt(6), BigInt(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational::parse(" 12/-8 ") == Rational(BigInt(-3), BigInt(2)));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS(Rational::parse("1/x"));
}

TEST_CASE("rational big integers do not overflow") {
  Rational x(1);
  for (int k = 0; k < 40; ++k) x *= Rational(BigInt(1) << 40, BigInt(54));
  CHECK(x.sign() > 0);
  Rational y = x;
  for (int k = 0; k < 40; ++k) y /= Rational(BigInt(1) << 40, BigInt(54));
  CHECK(y == Rational(1));
}

TEST_CASE("cyclotomic arithmetic") {
  CHECK(z3() + root_of_unity(3, 2) == Cyclotomic(-1));
  CHECK(z3() * root_of_unity(3, 2) == Cyclotomic(1));
  Cyclotomic u = Cyclotomic(1) - z3();
  CHECK(u / u == Cyclotomic(1));
  CHECK(CyclotomicField::get(3).degree() == 2);
  CHECK_THROWS_AS(u / Cyclotomic(0), std::domain_error);
  CHECK_THROWS_AS(root_of_unity(3, 1) + root_of_unity(6, 1), std::invalid_argument);
}

TEST_CASE("conjugation") {
  CHECK(z3().conj() == root_of_unity(3, 2));
  CHECK(Cyclotomic(5).conj() == Cyclotomic(5));
  Cyclotomic x = Cyclotomic(1) + Cyclotomic(2) * z3();
  CHECK(x.conj() == Cyclotomic(1) + Cyclotomic(2) * root_of_unity(3, 2));
  CHECK(x.conj() == Cyclotomic::parse("-1 - 2*z3"));
}

TEST_CASE("roots of unity") {
  CHECK(root_of_unity(3, 0) == Cyclotomic(1));
  CHECK(root_of_unity(3, 4) == z3());
  CHECK(root_of_unity(3, 2) == Cyclotomic::parse("-1 - z3"));
  CHECK(root_of_unity(3, -1) == root_of_unity(3, 2));
  CHECK(root_of_unity(1, 5) == Cyclotomic(Rational(1), 1));
  CHECK_THROWS_AS(root_of_unity(0, 1), std::invalid_argument);
  for (int n : {1, 2, 4, 5, 6, 9, 12, 18}) {
    Cyclotomic s(Rational(0), n);
    for (int k = 0; k < n; ++k) s += root_of_unity(n, k);
    CHECK(s == Cyclotomic(Rational(n == 1 ? 1 : 0), n));
  }
}

TEST_CASE("rendering and parsing") {
  CHECK(Cyclotomic(-1).to_string() == "-1");
  CHECK(Cyclotomic::parse("-1 - z3").to_string() == "-1 - z3");
  CHECK((Cyclotomic(Rational(BigInt(1), BigInt(2))) * z3()).to_string() == "1/2*z3");
  CHECK(root_of_unity(12, 5).to_string() == "-z12 + z12^3");
  CHECK(Cyclotomic::parse("z12^5").order() == 12);
  CHECK(Cyclotomic::parse("z12^5") == root_of_unity(12, 5));
  CHECK(Cyclotomic(0).to_string() == "0");
  for (const char* text : {"-1 - z3", "1/2*z3", "-7/3 + 4*z3", "-z12 + z12^3"})
    CHECK(Cyclotomic::parse(text, 12).to_string() == text);
  CHECK_THROWS(Cyclotomic::parse(""));
  CHECK_THROWS(Cyclotomic::parse("z3 + z4"));
  CHECK_THROWS(Cyclotomic::parse("2 z3"));
}

TEST_CASE("embedding into a larger field") {
  Cyclotomic x = Cyclotomic::parse("2 - 3/5*z3");
  Cyclotomic y = x.embed(12);
  CHECK(y.order() == 12);
  CHECK(std::abs(numeric(x) - numeric(y)) < 1e-12);
  CHECK(z3().embed(12) == root_of_unity(12, 4));
  CHECK_THROWS_AS(z3().embed(4), std::invalid_argument);
}

TEST_CASE("floating point oracle agrees with exact arithmetic") {
  std::mt19937 rng(7);
  for (int n : {3, 4, 5, 6, 12}) {
    for (int t = 0; t < 30; ++t) {
      Cyclotomic a = random_cyc(rng, n), b = random_cyc(rng, n);
      CHECK(std::abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-9);
      CHECK(std::abs(numeric(a + b) - (numeric(a) + numeric(b))) < 1e-9);
      CHECK(std::abs(numeric(a.conj()) - std::conj(numeric(a))) < 1e-9);
      if (!b.is_zero()) CHECK(std::abs(numeric(a / b) - numeric(a) / numeric(b)) < 1e-9);
    }
  }
}

TEST_CASE("matrix basics") {
  CycMatrix m(2, 2);
  m(0, 1) = z3();
  m(1, 0) = Cyclotomic(1);
  CHECK(m.is_monomial());
  CycMatrix sq = m * m;
  CHECK(sq(0, 0) == z3());
  CHECK(sq(1, 1) == z3());
  CHECK((m * m * m * m * m * m) == CycMatrix::identity(2));
  CHECK(m.trace() == Cyclotomic(0));
  CHECK(m.rank() == 2);
  std::vector<std::vector<Cyclotomic>> rows = {{Cyclotomic(1), z3()}, {Cyclotomic(2), Cyclotomic(2) * z3()}};
  CHECK(span_basis(rows).size() == 1);
  CHECK(in_span(rows, {Cyclotomic(3), Cyclotomic(3) * z3()}));
  CHECK_FALSE(in_span(rows, {Cyclotomic(1), Cyclotomic(0)}));
}
