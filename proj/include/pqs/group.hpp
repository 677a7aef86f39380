#pragma once

#include <array>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace pqs {

/// Element (sigma^i tau^j, a e1 + b e2) of S3 x Z3^2.
struct GElem {
  int i = 0;  // rotation exponent, mod 3
  int j = 0;  // reflection exponent, mod 2
  int a = 0;  // e1 coordinate, mod 3
  int b = 0;  // e2 coordinate, mod 3

  /// Reduces every component into its canonical range.
  static GElem make(int i, int j, int a, int b);

  friend bool operator==(const GElem&, const GElem&) = default;
};

GElem g_mul(const GElem& x, const GElem& y);
GElem g_inv(const GElem& x);
int g_order(const GElem& x);

/// "(σ²τ,(1,2))", "(Id,(0,0))".
std::string to_string(const GElem& g);
/// Throws Error when the array is not a quadruple.
GElem gelem_from_quadruple(std::span<const int> q);

/// Finite group given by its Cayley table. Elements are indices 0..n-1.
class FiniteGroup {
 public:
  /// Verifies closure, the identity, inverses and (exhaustively) associativity;
  /// throws Error("group", ...) on failure.
  FiniteGroup(std::vector<std::string> labels, std::vector<int> cayley);

  int size() const { return n_; }
  int identity() const { return identity_; }
  int mul(int x, int y) const { return table_[x * n_ + y]; }
  int inv(int x) const { return inverse_[x]; }
  int order(int x) const { return order_[x]; }
  int pow(int x, int k) const;
  /// g x g^-1
  int conjugate(int x, int g) const { return mul(mul(g, x), inv(g)); }
  const std::string& label(int x) const { return labels_[x]; }

  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int x) const { return class_of_[x]; }
  int centralizer_order(int x) const { return n_ / static_cast<int>(classes_[class_of_[x]].size()); }

  /// Elements of the subgroup generated by gens (sorted).
  std::vector<int> generated_subgroup(std::span<const int> gens) const;
  std::vector<int> cyclic_subgroup(int g) const;

 private:
  int n_;
  int identity_ = -1;
  std::vector<std::string> labels_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> order_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

/// S3 x Z3^2 with its concrete (i,j,a,b) coordinates. Index order is
/// lexicographic in (i, j, a, b).
class BuiltinGroup {
 public:
  BuiltinGroup();

  const FiniteGroup& group() const { return group_; }
  int size() const { return group_.size(); }
  const GElem& elem(int idx) const { return elems_[idx]; }
  int index(const GElem& g) const;

  int sigma() const { return index({1, 0, 0, 0}); }
  int tau() const { return index({0, 1, 0, 0}); }
  int e1() const { return index({0, 0, 1, 0}); }
  int e2() const { return index({0, 0, 0, 1}); }
  /// sigma, tau, e1, e2
  std::array<int, 4> generators() const { return {sigma(), tau(), e1(), e2()}; }

 private:
  std::vector<GElem> elems_;
  FiniteGroup group_;
};

/// Shared immutable instance.
std::shared_ptr<const BuiltinGroup> builtin_group();

/// Automorphism as a permutation of element indices.
struct GroupAutomorphism {
  std::vector<int> image;

  int apply(int g) const { return image[g]; }
  GroupAutomorphism inverse() const;
  friend bool operator==(const GroupAutomorphism&, const GroupAutomorphism&) = default;
};

/// (psi o phi)(g) = psi(phi(g))
GroupAutomorphism compose(const GroupAutomorphism& psi, const GroupAutomorphism& phi);
GroupAutomorphism identity_automorphism(const FiniteGroup& g);
/// Inner automorphism x -> g x g^-1.
GroupAutomorphism inner_automorphism(const FiniteGroup& grp, int g);

/// Bijective and multiplicative on all pairs.
bool is_automorphism(const FiniteGroup& g, std::span<const int> image);

/// Extends generator images to a map on the whole group using shortest words in
/// the generators; returns an empty image when the words give inconsistent
/// values or the map is not an automorphism.
GroupAutomorphism extend_from_generators(const FiniteGroup& g, std::span<const int> gens,
                                         std::span<const int> images);

/// Every automorphism exactly once, ordered by the tuple of generator images.
/// Candidates are order-preserving assignments of the generators.
std::vector<GroupAutomorphism> enumerate_automorphisms(const FiniteGroup& g, std::span<const int> gens);
/// Single-threaded reference for enumerate_automorphisms (same output order).
std::vector<GroupAutomorphism> enumerate_automorphisms_serial(const FiniteGroup& g, std::span<const int> gens);
std::vector<GroupAutomorphism> enumerate_automorphisms(const BuiltinGroup& g);

/// Automorphism of S3 x Z3^2 given by images of sigma and tau and a 2x2 matrix
/// over Z3 acting on rows: e1 -> m[0][0] e1 + m[0][1] e2, e2 -> m[1][0] e1 + m[1][1] e2.
GroupAutomorphism automorphism_from_data(const BuiltinGroup& g, const GElem& sigma_image,
                                         const GElem& tau_image, const std::array<std::array<int, 2>, 2>& m);
/// Same with the matrix acting on columns (e1 -> first column). Kept to
/// document the rejected reading of the matrix convention.
GroupAutomorphism automorphism_from_data_columns(const BuiltinGroup& g, const GElem& sigma_image,
                                                 const GElem& tau_image,
                                                 const std::array<std::array<int, 2>, 2>& m);

/// The four twisting automorphisms of the construction, Psi_1..Psi_4.
std::array<GroupAutomorphism, 4> surface_automorphisms(const BuiltinGroup& g);

/// Images of sigma, tau, e1, e2.
std::array<GElem, 4> generator_images(const BuiltinGroup& g, const GroupAutomorphism& psi);
GroupAutomorphism automorphism_from_generator_images(const BuiltinGroup& g, const std::array<GElem, 4>& images);

}  // namespace pqs
