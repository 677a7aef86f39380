#include "pqs/prodquot.hpp"

#include "pqs/error.hpp"

#include <algorithm>

namespace pqs {

std::string to_string(LambdaRegime r) { return r == LambdaRegime::zero ? "zero" : "generic"; }

LambdaRegime parse_lambda(const std::string& text) {
  if (text == "generic") return LambdaRegime::generic;
  if (text == "zero" || text == "0") return LambdaRegime::zero;
  throw Error("prodquot", "unknown lambda regime '" + text + "' (expected generic or zero)");
}

SurfaceSpec builtin_surface(int k, LambdaRegime lambda) {
  if (k < 1 || k > 4) throw Error("prodquot", "no builtin surface " + std::to_string(k));
  SurfaceSpec s;
  s.c1 = builtin_cover_c1();
  s.c2 = builtin_cover_c2();
  s.psi = surface_automorphisms(*s.c1.group)[k - 1];
  s.lambda = lambda;
  s.name = "surface" + std::to_string(k);
  return s;
}

void require_valid(const SurfaceSpec& spec) {
  if (spec.c1.group != spec.c2.group && spec.c1.group->size() != spec.c2.group->size())
    throw Error("prodquot", spec.name + ": covers use different groups");
  const FiniteGroup& g = spec.c1.group->group();
  if (static_cast<int>(spec.psi.image.size()) != g.size() || !is_automorphism(g, spec.psi.image))
    throw Error("prodquot", spec.name + ": psi is not an automorphism of G");
}

int product_fixed_points(const SurfaceSpec& spec, int h) {
  if (h == spec.c1.group->group().identity())
    throw Error("prodquot", "product_fixed_points: the identity fixes every point");
  return fixed_point_count(spec.c1, h) * fixed_point_count(spec.c2, spec.psi.apply(h));
}

namespace {

std::vector<int> fixed_table(const CoverDescriptor& c) {
  const FiniteGroup& g = c.group->group();
  std::vector<int> t(g.size(), 0);
  for (int h = 0; h < g.size(); ++h)
    if (h != g.identity()) t[h] = fixed_point_count(c, h);
  return t;
}

SingularityProfile profile_from_tables(const FiniteGroup& g, const std::vector<int>& fix1,
                                       const std::vector<int>& fix2, const GroupAutomorphism& psi) {
  SingularityProfile p;
  for (int h = 0; h < g.size(); ++h) {
    if (h == g.identity()) continue;
    int n = fix1[h] * fix2[psi.apply(h)];
    if (n == 0) continue;
    if (g.order(h) == 2)
      p.involution_fixed_points += n;
    else
      p.offending_elements.push_back(h);
  }
  p.only_nodes = p.offending_elements.empty();
  // Each node has stabilizer of order 2, so its orbit has |G|/2 points.
  p.node_count = Rational(p.involution_fixed_points) / Rational(g.size() / 2);
  return p;
}

}  // namespace

SingularityProfile singularity_profile(const SurfaceSpec& spec) {
  require_valid(spec);
  return profile_from_tables(spec.c1.group->group(), fixed_table(spec.c1), fixed_table(spec.c2), spec.psi);
}

SurfaceInvariants surface_invariants(const SurfaceSpec& spec) {
  SingularityProfile p = singularity_profile(spec);
  if (!p.only_nodes)
    throw Error("prodquot", spec.name + ": singularities other than nodes; only the node basket is supported");
  if (!p.node_count.is_integer())
    throw Error("prodquot", spec.name + ": node count " + p.node_count.to_string() + " is not an integer");
  SurfaceInvariants inv;
  inv.g1 = genus_rh(spec.c1);
  inv.g2 = genus_rh(spec.c2);
  inv.nodes = static_cast<int>(p.node_count.to_int64());
  const int n = spec.c1.group->size();
  const int prod = (inv.g1 - 1) * (inv.g2 - 1);
  if ((8 * prod) % n != 0) throw Error("prodquot", spec.name + ": K^2 is not an integer");
  inv.k_squared = 8 * prod / n;
  inv.chi = Rational(prod, n) + Rational(inv.nodes) * Rational(3, 2) / Rational(12);
  if (!inv.chi.is_integer()) throw Error("prodquot", spec.name + ": chi(O) = " + inv.chi.to_string());
  inv.q = 0;
  inv.p_g = static_cast<int>(inv.chi.to_int64()) - 1 + inv.q;
  return inv;
}

namespace {

int as_count(const Rational& r, const char* what) {
  if (!r.is_integer() || r.sign() < 0)
    throw Error("prodquot", std::string(what) + " gives p_g = " + r.to_string());
  return static_cast<int>(r.to_int64());
}

}  // namespace

PgRoutes pg_routes(const Character& chi1, const Character& chi2, const GroupAutomorphism& psi,
                   const CharacterTable& table) {
  const FiniteGroup& g = table.group();
  Rational sum = 0;
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (k == table.trivial_index()) continue;
    const Character& eta = table[k];
    Rational a = inner_product(g, chi1, eta);
    if (a.is_zero()) continue;
    sum += a * inner_product(g, chi2, twist(eta, psi).conj());
  }
  Character pulled;
  pulled.label = chi2.label + "∘Ψ";
  for (int x = 0; x < g.size(); ++x) pulled.values.push_back(chi2(psi.apply(x)));
  Rational direct = inner_product(g, chi1 * pulled, table[table.trivial_index()]);
  PgRoutes r{as_count(sum, "the sum over irreducibles"), as_count(direct, "the direct inner product")};
  if (r.via_irreducibles != r.direct)
    throw Error("prodquot", "p_g routes disagree: " + std::to_string(r.via_irreducibles) + " vs " +
                                std::to_string(r.direct));
  return r;
}

int pg_by_characters(const SurfaceSpec& spec) {
  require_valid(spec);
  const CharacterTable& table = *builtin_character_table();
  auto k1 = canonical_character(spec.c1, table);
  auto k2 = canonical_character(spec.c2, table);
  return pg_routes(k1.character, k2.character, spec.psi, table).direct;
}

namespace {

struct ScanInputs {
  const BuiltinGroup* bg;
  std::vector<GroupAutomorphism> autos;
  std::vector<int> fix1, fix2;
  Character chi1, chi2;
  std::array<GroupAutomorphism, 4> surface;
  int k_squared = 0;
};

ScanInputs scan_inputs(const CoverDescriptor& c1, const CoverDescriptor& c2) {
  require_valid(c1);
  require_valid(c2);
  ScanInputs in;
  in.bg = c1.group.get();
  in.autos = enumerate_automorphisms(*in.bg);
  in.fix1 = fixed_table(c1);
  in.fix2 = fixed_table(c2);
  const CharacterTable& table = *builtin_character_table();
  in.chi1 = canonical_character(c1, table).character;
  in.chi2 = canonical_character(c2, table).character;
  in.surface = surface_automorphisms(*in.bg);
  const int prod = (genus_rh(c1) - 1) * (genus_rh(c2) - 1);
  in.k_squared = 8 * prod / in.bg->size();
  return in;
}

ScanRow scan_row(const ScanInputs& in, std::size_t k) {
  const GroupAutomorphism& psi = in.autos[k];
  ScanRow row;
  row.index = k;
  row.images = generator_images(*in.bg, psi);
  SingularityProfile p = profile_from_tables(in.bg->group(), in.fix1, in.fix2, psi);
  row.only_nodes = p.only_nodes;
  row.node_count = p.node_count;
  row.p_g = pg_routes(in.chi1, in.chi2, psi, *builtin_character_table()).direct;
  if (row.only_nodes) row.k_squared = in.k_squared;
  return row;
}

ScanReport summarize(const ScanInputs& in, std::vector<ScanRow> rows) {
  ScanReport rep;
  rep.rows = std::move(rows);
  for (const auto& r : rep.rows)
    if (r.only_nodes) rep.only_nodes.push_back(r.index);
  for (int s = 0; s < 4; ++s) {
    auto it = std::find(in.autos.begin(), in.autos.end(), in.surface[s]);
    if (it == in.autos.end()) throw Error("prodquot", "Psi_" + std::to_string(s + 1) + " missing from enumeration");
    rep.surface_rows[s] = static_cast<std::size_t>(it - in.autos.begin());
  }
  return rep;
}

}  // namespace

ScanReport scan_automorphisms(const CoverDescriptor& c1, const CoverDescriptor& c2) {
  ScanInputs in = scan_inputs(c1, c2);
  const auto n = static_cast<long long>(in.autos.size());
  std::vector<ScanRow> rows(in.autos.size());
  std::vector<std::string> errors(in.autos.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long long k = 0; k < n; ++k) {
    // Exceptions must not escape the parallel region.
    try {
      rows[k] = scan_row(in, static_cast<std::size_t>(k));
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw Error("prodquot", "scan failed: " + e);
  return summarize(in, std::move(rows));
}

ScanReport scan_automorphisms_serial(const CoverDescriptor& c1, const CoverDescriptor& c2) {
  ScanInputs in = scan_inputs(c1, c2);
  std::vector<ScanRow> rows;
  for (std::size_t k = 0; k < in.autos.size(); ++k) rows.push_back(scan_row(in, k));
  return summarize(in, std::move(rows));
}

}  // namespace pqs
