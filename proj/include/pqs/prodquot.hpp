#pragma once

#include "pqs/covers.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pqs {

/// lambda outside {-1, 0, 1} versus lambda = 0.
enum class LambdaRegime { generic, zero };

std::string to_string(LambdaRegime r);
/// "generic" or "zero"; throws Error otherwise.
LambdaRegime parse_lambda(const std::string& text);

/// (C1 x C2)/G with G acting by phi1 x (phi2 o psi).
struct SurfaceSpec {
  std::string name;
  CoverDescriptor c1;
  CoverDescriptor c2;
  GroupAutomorphism psi;
  LambdaRegime lambda = LambdaRegime::generic;
};

/// Builtin family k in 1..4 (psi = Psi_k). Throws Error for other k.
SurfaceSpec builtin_surface(int k, LambdaRegime lambda = LambdaRegime::generic);

/// Throws Error if psi is not an automorphism or the covers use different groups.
void require_valid(const SurfaceSpec& spec);

/// fix(C1, h) * fix(C2, psi(h)). Throws Error for the identity.
int product_fixed_points(const SurfaceSpec& spec, int h);

struct SingularityProfile {
  bool only_nodes = true;
  /// Sum over involutions of their product fixed points divided by |G|/2.
  Rational node_count;
  int involution_fixed_points = 0;
  /// Elements of order > 2 with fixed points on the product.
  std::vector<int> offending_elements;
};

SingularityProfile singularity_profile(const SurfaceSpec& spec);

struct SurfaceInvariants {
  int g1 = 0;
  int g2 = 0;
  int k_squared = 0;
  Rational chi;
  int p_g = 0;
  int q = 0;
  int nodes = 0;
};

/// Nodes contribute 3/2 each to 12 chi. Throws Error unless the profile is only-nodes.
SurfaceInvariants surface_invariants(const SurfaceSpec& spec);

struct PgRoutes {
  int via_irreducibles = 0;  // sum over eta != 1 of <chi1, eta><chi2, conj(eta_psi)>
  int direct = 0;            // <chi1 (chi2 o psi), 1>
};

/// Both routes; throws Error if they disagree or are not nonnegative integers.
PgRoutes pg_routes(const Character& chi1, const Character& chi2, const GroupAutomorphism& psi,
                   const CharacterTable& table);
int pg_by_characters(const SurfaceSpec& spec);

struct ScanRow {
  std::size_t index = 0;  // position in enumerate_automorphisms
  std::array<GElem, 4> images;  // of sigma, tau, e1, e2
  bool only_nodes = false;
  Rational node_count;
  int p_g = 0;
  std::optional<int> k_squared;  // only-nodes rows only
};

struct ScanReport {
  std::vector<ScanRow> rows;
  std::vector<std::size_t> only_nodes;  // row indices
  /// Row index of Psi_1..Psi_4 in the enumeration.
  std::array<std::size_t, 4> surface_rows{};
};

/// One row per automorphism of G, in enumeration order. Parallel over automorphisms.
ScanReport scan_automorphisms(const CoverDescriptor& c1, const CoverDescriptor& c2);
/// Single-threaded reference with identical output.
ScanReport scan_automorphisms_serial(const CoverDescriptor& c1, const CoverDescriptor& c2);

}  // namespace pqs
