#pragma once

#include "pqs/chars.hpp"
#include "pqs/group.hpp"
#include "pqs/matrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pqs {

enum class Curve { C1, C2 };

std::string to_string(Curve c);

/// Index (alpha, beta, gamma) of the 1-form u^alpha v^(beta-2) t^(gamma-2) du.
struct FormIndex {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  friend bool operator==(const FormIndex&, const FormIndex&) = default;
};

/// Sections of O(2) on C1 (x0..x3, weight 1) or O(4) on C2 (y0..y3, weights
/// 1,1,1,2), identified with holomorphic 1-forms. The C2 basis drops the three
/// monomials divisible by y2^3, which reduce via y2^3 = y0^3 + y1^3.
class MonomialSpace {
 public:
  static const MonomialSpace& get(Curve c);

  Curve curve() const { return curve_; }
  std::size_t dim() const { return basis_.size(); }
  int degree() const { return degree_; }
  const std::array<int, 4>& weights() const { return weights_; }
  const std::vector<FormIndex>& basis() const { return basis_; }
  const std::vector<FormIndex>& excluded() const { return excluded_; }

  std::optional<std::size_t> find(const FormIndex& f) const;
  /// Throws Error("forms", ...) if f is not a basis index.
  std::size_t index(const FormIndex& f) const;
  /// Exponents of (x0, x1, x2, x3) or (y0, .., y3).
  std::array<int, 4> monomial(const FormIndex& f) const;
  /// Whether f has nonnegative exponents of the right weighted degree.
  bool is_monomial_index(const FormIndex& f) const;
  /// Coordinates of f in the basis, applying the curve relation when needed.
  std::vector<Cyclotomic> reduce(const FormIndex& f) const;

  /// "ω_{011}" or "ω′_{010}".
  std::string render_form(const FormIndex& f) const;
  /// "x0x1", "y2²y3", "1" for the empty monomial.
  std::string render_monomial(const FormIndex& f) const;

 private:
  explicit MonomialSpace(Curve c);

  Curve curve_;
  int degree_;
  std::array<int, 4> weights_;
  std::vector<FormIndex> basis_;
  std::vector<FormIndex> excluded_;
};

/// Closed-form action of g on a basis form: returns (target index, coefficient).
std::pair<FormIndex, Cyclotomic> closed_form_action(Curve c, const GElem& g, const FormIndex& f);

/// Matrix of g acting on the basis (column = source). Throws Error if a target
/// leaves the basis.
CycMatrix action_matrix(Curve c, const GElem& g);

/// phi(h) sends a point to X with X_k = sign_k zeta3^exp_k x_source_k.
struct CoordinateImage {
  int source;
  int zeta_exp;
  int sign;
};
std::array<CoordinateImage, 4> coordinate_action(Curve c, const GElem& h);

/// Same matrix computed by pulling back u^alpha v^(beta-2) t^(gamma-2) du along
/// phi(g^-1) in affine coordinates.
CycMatrix action_matrix_by_substitution(Curve c, const GElem& g);

/// The 54 action matrices of one curve, indexed like the builtin group.
class FormRepresentation {
 public:
  /// Builds with OpenMP when available.
  static FormRepresentation build(Curve c);
  static FormRepresentation build_serial(Curve c);
  /// Shared instance for each curve.
  static const FormRepresentation& builtin(Curve c);

  Curve curve() const { return curve_; }
  const MonomialSpace& space() const { return MonomialSpace::get(curve_); }
  const CycMatrix& operator[](int g) const { return mats_[g]; }
  CycMatrix& mutable_matrix(int g) { return mats_[g]; }
  std::size_t size() const { return mats_.size(); }
  /// Trace at every element.
  Character character() const;

 private:
  Curve curve_ = Curve::C1;
  std::vector<CycMatrix> mats_;
};

/// First pair (g, h), lexicographically, with M(gh) != M(g) M(h); nullopt if none.
std::optional<std::pair<int, int>> verify_homomorphism(const FormRepresentation& rep);
std::optional<std::pair<int, int>> verify_homomorphism_serial(const FormRepresentation& rep);

/// (dim chi / |G|) sum conj(chi(g)) M(g).
CycMatrix isotypic_projector(const FormRepresentation& rep, const Character& chi);

/// A span listed in the known decompositions, with its irreducible.
struct IsotypicSpan {
  IrrepLabel label;
  std::vector<std::vector<Cyclotomic>> vectors;
  std::string text;
};
/// Reference decompositions: 7 spans for C1, 13 for C2.
std::vector<IsotypicSpan> known_isotypic_spans(Curve c);

/// Element of H^0(Omega^1_C1) (x) H^0(Omega^1_C2); coordinate r * dim2 + s.
struct TensorForm {
  std::vector<Cyclotomic> coeffs;
  bool is_zero() const;
};

/// Six-index term coef * ω_{jklmrs}.
struct TensorTerm {
  Cyclotomic coef;
  FormIndex left;
  FormIndex right;
};

/// "ω_{100021}" (also "w_{...}" or just the six digits).
TensorTerm parse_six_index(const std::string& text, const Cyclotomic& coef = Cyclotomic(1));
/// Accepts "z3*ω_{010020} - ω_{110220}"; coefficients may be parenthesized.
std::vector<TensorTerm> parse_tensor_terms(const std::string& text);
TensorForm to_tensor(const std::vector<TensorTerm>& terms);
/// Six-index rendering of the unreduced terms.
std::string render_terms(const std::vector<TensorTerm>& terms);
/// Product of quadric and quartic monomials: "x0x1y2²y3".
std::string render_terms_as_monomials(const std::vector<TensorTerm>& terms);
/// Rendering of a reduced tensor in six-index notation, in basis order.
std::string render_tensor(const TensorForm& t);

/// M1(g) (x) M2(psi(g)) applied to t.
TensorForm act_on_tensor(const FormRepresentation& r1, const FormRepresentation& r2,
                         const GroupAutomorphism& psi, int g, const TensorForm& t);

/// Echelon basis of the fixed space of g -> M1(g) (x) M2(psi(g)), obtained by
/// averaging over G applied to one basis tensor per orbit.
std::vector<TensorForm> invariant_tensors(const FormRepresentation& r1, const FormRepresentation& r2,
                                          const GroupAutomorphism& psi);
/// Builtin representations; throws Error("forms", ...) unless the dimension
/// equals expected_dim.
std::vector<TensorForm> invariant_tensors(const GroupAutomorphism& psi, int expected_dim);

struct BasisCheck {
  bool ok = false;
  std::string reason;               // empty when ok
  std::optional<std::size_t> form;  // first non-invariant claimed form
  std::optional<int> witness;       // group element moving it
  std::size_t rank = 0;
  std::size_t invariant_dim = 0;
};

BasisCheck check_table_basis(const GroupAutomorphism& psi, const std::vector<std::vector<TensorTerm>>& claimed);

}  // namespace pqs
