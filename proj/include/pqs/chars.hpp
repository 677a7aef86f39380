#pragma once

#include "pqs/cyclotomic.hpp"
#include "pqs/group.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace pqs {

/// Class function on a finite group, stored per element.
struct Character {
  std::vector<Cyclotomic> values;
  std::string label;

  const Cyclotomic& operator()(int g) const { return values[g]; }
  /// Value at the identity as an integer; throws Error if it is not one.
  int dim(const FiniteGroup& g) const;

  friend Character operator*(const Character& x, const Character& y);
  friend Character operator+(const Character& x, const Character& y);
  Character scaled(const Rational& s) const;
  Character conj() const;
  /// Pointwise equality of values (labels ignored).
  bool same_values(const Character& o) const { return values == o.values; }
};

/// Which S3 irreducible forms the first tensor factor.
enum class S3Irrep { trivial, sign, standard };

struct IrrepLabel {
  S3Irrep s3 = S3Irrep::trivial;
  int p = 0;  // exponent of eps1
  int q = 0;  // exponent of eps2
  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

/// "sgn·ε1²·ε2", "μ", "1", "ε1²".
std::string render_label(const IrrepLabel& l);
/// Accepts render_label output and the ASCII spelling "sgn*e1^2*e2" / "mu*e2".
IrrepLabel parse_label(const std::string& text);

/// The 27 irreducible characters of S3 x Z3^2, ordered (s3, p, q) lexicographically.
class CharacterTable {
 public:
  explicit CharacterTable(std::shared_ptr<const BuiltinGroup> g);

  const BuiltinGroup& builtin() const { return *g_; }
  const FiniteGroup& group() const { return g_->group(); }
  std::size_t size() const { return irr_.size(); }
  const Character& operator[](std::size_t k) const { return irr_[k]; }
  const std::vector<Character>& irreducibles() const { return irr_; }
  const IrrepLabel& label(std::size_t k) const { return labels_[k]; }
  std::size_t index_of(const IrrepLabel& l) const;
  const Character& by_label(const IrrepLabel& l) const { return irr_[index_of(l)]; }
  std::size_t trivial_index() const { return 0; }
  /// Index of the irreducible with identical values; throws Error if none.
  std::size_t identify(const Character& chi) const;

  Character regular() const;

 private:
  std::shared_ptr<const BuiltinGroup> g_;
  std::vector<Character> irr_;
  std::vector<IrrepLabel> labels_;
};

/// Shared table for the builtin group.
std::shared_ptr<const CharacterTable> builtin_character_table();

/// (1/|G|) sum chi(g) conj(psi(g)); throws Error if the value is not rational.
Rational inner_product(const FiniteGroup& g, const Character& chi, const Character& psi);

/// (twist eta psi)(g) = eta(psi^-1(g))
Character twist(const Character& eta, const GroupAutomorphism& psi);

/// Multiplicities N_alpha of the eigenvalue zeta_m^alpha of rho(g), m = order(g),
/// recovered by Fourier inversion over the cyclic group <g>.
struct EigenvalueProfile {
  int order = 1;
  std::vector<int> mult;
};

/// Throws Error if some N_alpha is not a nonnegative integer.
EigenvalueProfile eigenvalue_profile(const FiniteGroup& g, const Character& chi, int elem);

struct Constituent {
  std::size_t irreducible;
  int multiplicity;
};

/// f = sum m_chi chi. Throws Error naming the irreducible whose multiplicity
/// is not a nonnegative integer.
std::vector<Constituent> decompose(const CharacterTable& table, const Character& f);

/// Sum of constituents as a class function.
Character compose_character(const CharacterTable& table, const std::vector<Constituent>& parts);

/// "ε1²·ε2² + sgn·ε1·ε2 + 2μ·ε2²"
std::string render_decomposition(const CharacterTable& table, const std::vector<Constituent>& parts);
/// Inverse of render_decomposition; repeated labels are merged and the result
/// is sorted by irreducible index.
std::vector<Constituent> parse_decomposition(const CharacterTable& table, const std::string& text);

}  // namespace pqs
