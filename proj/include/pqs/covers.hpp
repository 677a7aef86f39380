#pragma once

#include "pqs/chars.hpp"
#include "pqs/group.hpp"

#include "json.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pqs {

/// One branch point of a G-cover of the line: the stabilizer of a chosen
/// preimage is the cyclic group generated by gen.
struct BranchDatum {
  std::string label;
  GElem gen;
  int m = 1;                                // declared order of gen
  std::optional<int> declared_orbit_length;  // |G| / m when present
};

/// Combinatorial avatar of a G-cover of P^1.
struct CoverDescriptor {
  std::string name;
  std::shared_ptr<const BuiltinGroup> group;
  std::vector<BranchDatum> branches;
};

/// {"name", "group": "S3xZ3^2", "branches": [{"label", "gen": [i,j,a,b], "order", "orbit_length"?}]}
/// Throws Error("covers", ...) on malformed input. "order" defaults to the order of gen.
CoverDescriptor cover_from_json(const nlohmann::json& j);
nlohmann::json cover_to_json(const CoverDescriptor& c);

/// Loads data/covers/<name>.json from the embedded data ("c1", "c2").
CoverDescriptor builtin_cover(const std::string& name);
/// Cover with generators (tau,(1,0)), (sigma^2,(2,2)), (sigma tau,(0,1)).
CoverDescriptor builtin_cover_c1();
/// Cover with generators (sigma tau,0), (sigma,(1,0)), (Id,(1,1)), (tau,(1,2)).
CoverDescriptor builtin_cover_c2();

struct CoverValidation {
  bool ok = true;
  std::vector<int> orbit_lengths;
  /// Conjugates of the generators with product one that generate G (empty if none).
  std::vector<int> spherical_realization;
  std::vector<std::string> errors;
};

/// Checks declared orders, orbit lengths, and searches all tuples of conjugates
/// of the generators for a product-one generating system.
CoverValidation validate_cover(const CoverDescriptor& c);
/// Throws Error("covers", ...) with the collected messages when invalid.
void require_valid(const CoverDescriptor& c);

/// Riemann-Hurwitz over a rational quotient: 1 + (n/2)(-2 + sum (1 - 1/m_i)).
/// Throws Error on a non-integral or negative genus.
int riemann_hurwitz_genus(int group_order, const std::vector<int>& branch_orders);
/// Validates c, then applies riemann_hurwitz_genus.
int genus_rh(const CoverDescriptor& c);

/// Number of points fixed by h. Uses the class-size identity
/// sum_i |C_G(h)| |h^G ∩ <g_i>| / |<g_i>|. Throws Error for h = identity.
int fixed_point_count(const CoverDescriptor& c, int h);

/// Orientation of the local rotation at a branch point.
enum class LocalRotation {
  /// N_alpha counts the eigenvalue zeta_m^(-alpha) of rho(gen). Reproduces the
  /// canonical characters of the builtin covers; used throughout.
  inverse,
  /// N_alpha counts zeta_m^alpha. Gives the conjugate characters.
  direct,
};

/// Multiplicity of the irreducible chi in H^0(Omega^1). Throws Error when the
/// formula does not produce a nonnegative integer.
int chevalley_weil(const CoverDescriptor& c, const Character& chi,
                   LocalRotation rot = LocalRotation::inverse);

struct CanonicalCharacter {
  std::vector<Constituent> parts;
  Character character;
};

CanonicalCharacter canonical_character(const CoverDescriptor& c, const CharacterTable& table,
                                       LocalRotation rot = LocalRotation::inverse);

}  // namespace pqs
