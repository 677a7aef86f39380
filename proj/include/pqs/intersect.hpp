#pragma once

#include "pqs/prodquot.hpp"

#include "json.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pqs {

/// h (C1 x pt) + v (pt x C2) in the numerical group of C1 x C2.
struct NumClass {
  int h = 0;
  int v = 0;

  constexpr NumClass operator+(const NumClass& o) const { return {h + o.h, v + o.v}; }
  constexpr NumClass operator*(int k) const { return {h * k, v * k}; }
  friend constexpr bool operator==(const NumClass&, const NumClass&) = default;
};

constexpr int pair(const NumClass& a, const NumClass& b) { return a.h * b.v + b.h * a.v; }

namespace classes {
inline constexpr NumClass F{0, 9};      // {x_j = 0}, every j
inline constexpr NumClass G{9, 0};      // {y_k = 0}, k = 0, 1, 2
inline constexpr NumClass G3{18, 0};    // {y_3 = 0}
inline constexpr NumClass Delta{18, 9};  // sections of O(1) x O(2)
inline constexpr NumClass Q{18, 18};     // sections of O(2) x O(2)
}  // namespace classes

static_assert(pair(classes::F, classes::G) == 81);
static_assert(pair(classes::F, classes::G3) == 162);
static_assert(pair(classes::Delta, classes::G) == 81);
static_assert(pair(classes::F, classes::F) == 0 && pair(classes::G, classes::G3) == 0);

/// Builtin components: F0..F3, G0..G3, Delta, DeltaPrime, Q.
const std::map<std::string, NumClass>& builtin_components();

/// Component name -> multiplicity.
using Divisor = std::map<std::string, int>;

std::string render_divisor(const Divisor& d);

/// Local model of a base point: D1 = aH, D2 = bK, D3 = cH + dK with H, K
/// transversal smooth germs.
struct LocalModel {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
};

/// Self-intersection drop a*b of the mobile part after resolving one base point
/// with this local model. Requires a, b > 0, c + d > 0, b <= a and either d >= b
/// or c + (a div b) d >= a; throws Error("intersect", "... inapplicable ...") otherwise.
int base_point_correction(const LocalModel& m);
/// Whether base_point_correction accepts m.
bool base_point_correction_applies(const LocalModel& m);

struct BaseLocusFamily {
  std::string label;
  int count = 0;
  LocalModel model;
  /// roles[0], roles[1], roles[2]: which certificate divisor plays aH, bK, cH + dK.
  std::array<int, 3> roles{0, 1, 2};
  /// Components whose common points make up the family.
  std::vector<std::string> locus;
  std::string note;
};

struct Certificate {
  std::string name;
  std::map<std::string, NumClass> components;  // builtin plus certificate-local
  std::vector<Divisor> divisors;               // three members of |T|
  std::vector<BaseLocusFamily> families;
};

/// {"name", "components"?: {name: [h, v]}, "divisors": [{comp: mult}],
///  "families": [{"label", "count", "model": [a,b,c,d], "roles"?, "locus"?, "note"?}]}
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json certificate_to_json(const Certificate& c);

/// data/certificates/<name>.json
Certificate builtin_certificate(const std::string& name);
/// Name of the builtin certificate for surface k in the given regime.
std::string builtin_certificate_name(int k, LambdaRegime lambda);

/// Class of a divisor; throws Error on an unknown component.
NumClass divisor_class(const Certificate& cert, const Divisor& d);

/// |G| K^2
int t_squared(int group_order, int k_squared);
int t_squared(const SurfaceSpec& spec);

struct PairCheck {
  int i = 0;
  int j = 0;
  bool skipped = false;  // divisors share a component
  int local_sum = 0;
  int numerical = 0;
};

struct CertificateValidation {
  bool ok = true;
  std::vector<std::string> errors;
  std::vector<PairCheck> pairs;
  int total_correction = 0;
  int m_hat_squared = 0;
};

/// (i) every local model is applicable and every family lies on all three
/// divisors, (ii) each divisor has the class of T with self-intersection
/// T^2, (iii) for divisors without common components the local intersections
/// summed over the families do not exceed the numerical intersection, (iv)
/// T^2 - total correction is positive and divisible by |G|.
CertificateValidation validate_certificate(const Certificate& cert, int t_sq, int group_order);

/// 9 + (27 - 9q)/(p_g - 2), the maximal degree of a canonical map onto a
/// surface; requires p_g > 2.
Rational beauville_bound(int p_g, int q);

struct DegreeReport {
  int t_squared = 0;
  int total_correction = 0;
  int m_hat_squared = 0;
  int degree = 0;
  Rational beauville_bound;
};

/// Throws Error("intersect", ...) on an invalid certificate, a nonpositive
/// M^2 ("composed with a pencil") or a degree above the Beauville bound.
DegreeReport canonical_degree(const SurfaceSpec& spec, const Certificate& cert);
/// Uses builtin_certificate for the spec's family and lambda regime; spec.name
/// must be surface1..surface4.
DegreeReport canonical_degree(const SurfaceSpec& spec);

}  // namespace pqs
