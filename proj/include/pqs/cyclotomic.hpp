#pragma once

#include "pqs/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pqs {

/// Q(zeta_N) presented as Q[x]/Phi_N(x) with the power basis 1, z, ..., z^(phi(N)-1).
/// Instances are interned and live for the whole program.
class CyclotomicField {
 public:
  /// Throws std::invalid_argument for N < 1.
  static const CyclotomicField& get(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }
  /// Coordinates of z^k (k taken mod N) in the power basis.
  const std::vector<Rational>& power(int k) const;

 private:
  explicit CyclotomicField(int order);

  int order_;
  int degree_;
  std::vector<std::vector<Rational>> powers_;  // z^k for k in [0, 2N)
};

inline constexpr int kDefaultOrder = 3;

/// Exact element of Q(zeta_N), stored in canonical coordinates so equality is
/// coefficient comparison. Default field is Q(zeta_3).
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(const Rational& r, int order = kDefaultOrder);  // NOLINT(google-explicit-constructor)
  Cyclotomic(std::int64_t n, int order = kDefaultOrder) : Cyclotomic(Rational(n), order) {}  // NOLINT
  /// Throws std::invalid_argument when coords.size() != phi(order).
  Cyclotomic(int order, std::vector<Rational> coords);

  int order() const { return field_->order(); }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error if not rational.
  Rational to_rational() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Complex conjugate: z^k -> z^(N-k).
  Cyclotomic conj() const;
  /// Throws std::domain_error for zero.
  Cyclotomic inverse() const;
  /// Image under the inclusion Q(zeta_N) -> Q(zeta_L); L must be a multiple of N.
  Cyclotomic embed(int larger_order) const;

  /// Renders e.g. "-1 - z3", "1/2*z3", "z12^5".
  std::string to_string() const;
  /// Inverse of to_string. Terms without a "zN" factor are placed in Q(zeta_order).
  static Cyclotomic parse(std::string_view text, int order = kDefaultOrder);

 private:
  void require_same_field(const Cyclotomic& o, const char* op) const;

  const CyclotomicField* field_;
  std::vector<Rational> c_;
};

/// zeta_N^k in canonical form.
Cyclotomic root_of_unity(int order, int k);

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

}  // namespace pqs
