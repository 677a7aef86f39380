#include "pqs/covers.hpp"

#include "pqs/builtin_data.hpp"
#include "pqs/error.hpp"

#include <algorithm>

namespace pqs {

CoverDescriptor cover_from_json(const nlohmann::json& j) {
  try {
    CoverDescriptor c;
    c.name = j.at("name").get<std::string>();
    std::string group = j.value("group", "S3xZ3^2");
    if (group != "S3xZ3^2") throw Error("covers", "unsupported group '" + group + "'");
    c.group = builtin_group();
    for (const auto& b : j.at("branches")) {
      BranchDatum d;
      d.label = b.at("label").get<std::string>();
      auto q = b.at("gen").get<std::vector<int>>();
      d.gen = gelem_from_quadruple(q);
      d.m = b.contains("order") ? b.at("order").get<int>() : g_order(d.gen);
      if (b.contains("orbit_length")) d.declared_orbit_length = b.at("orbit_length").get<int>();
      c.branches.push_back(d);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error("covers", std::string("malformed cover description: ") + e.what());
  }
}

nlohmann::json cover_to_json(const CoverDescriptor& c) {
  nlohmann::json j;
  j["name"] = c.name;
  j["group"] = "S3xZ3^2";
  j["branches"] = nlohmann::json::array();
  for (const auto& b : c.branches) {
    nlohmann::json d = {{"label", b.label}, {"gen", {b.gen.i, b.gen.j, b.gen.a, b.gen.b}}, {"order", b.m}};
    if (b.declared_orbit_length) d["orbit_length"] = *b.declared_orbit_length;
    j["branches"].push_back(d);
  }
  return j;
}

CoverDescriptor builtin_cover(const std::string& name) {
  std::string text(embedded_file("covers/" + name + ".json"));
  return cover_from_json(nlohmann::json::parse(text));
}

CoverDescriptor builtin_cover_c1() { return builtin_cover("c1"); }
CoverDescriptor builtin_cover_c2() { return builtin_cover("c2"); }

CoverValidation validate_cover(const CoverDescriptor& c) {
  CoverValidation v;
  const FiniteGroup& g = c.group->group();
  auto fail = [&](const std::string& msg) {
    v.ok = false;
    v.errors.push_back(c.name + ": " + msg);
  };
  std::vector<int> gens;
  for (const auto& b : c.branches) {
    int idx = c.group->index(b.gen);
    gens.push_back(idx);
    int ord = g.order(idx);
    int len = g.size() / ord;
    v.orbit_lengths.push_back(len);
    if (ord == 1) fail("branch " + b.label + ": trivial stabilizer generator");
    if (b.m != ord)
      fail("branch " + b.label + ": declared order " + std::to_string(b.m) + " but " + to_string(b.gen) +
           " has order " + std::to_string(ord));
    if (b.declared_orbit_length && *b.declared_orbit_length != len)
      fail("branch " + b.label + ": declared orbit length " + std::to_string(*b.declared_orbit_length) +
           " but |G|/m = " + std::to_string(len));
  }
  if (!v.ok) return v;

  // Exhaustive search over conjugates; the last slot is forced by product one.
  std::vector<const std::vector<int>*> cls;
  for (int x : gens) cls.push_back(&g.classes()[g.class_of(x)]);
  std::vector<int> pick(gens.size());
  bool found = false;
  auto search = [&](auto&& self, std::size_t slot, int prefix) -> void {
    if (found) return;
    if (slot + 1 == gens.size()) {
      int last = g.inv(prefix);
      if (g.class_of(last) != g.class_of(gens[slot])) return;
      pick[slot] = last;
      if (static_cast<int>(g.generated_subgroup(pick).size()) == g.size()) {
        found = true;
        v.spherical_realization = pick;
      }
      return;
    }
    for (int x : *cls[slot]) {
      pick[slot] = x;
      self(self, slot + 1, g.mul(prefix, x));
      if (found) return;
    }
  };
  if (gens.empty()) {
    if (g.size() != 1) fail("no branch points but the group is nontrivial");
  } else {
    search(search, 0, g.identity());
    if (!found) fail("no tuple of conjugates of the generators has product one and generates G");
  }
  return v;
}

void require_valid(const CoverDescriptor& c) {
  CoverValidation v = validate_cover(c);
  if (v.ok) return;
  std::string msg;
  for (const auto& e : v.errors) msg += (msg.empty() ? "" : "; ") + e;
  throw Error("covers", msg);
}

int riemann_hurwitz_genus(int group_order, const std::vector<int>& branch_orders) {
  Rational s = -2;
  for (int m : branch_orders) {
    if (m < 1) throw Error("covers", "branch order must be positive");
    s += Rational(1) - Rational(1, m);
  }
  Rational genus = Rational(1) + Rational(group_order, 2) * s;
  if (!genus.is_integer() || genus.sign() < 0)
    throw Error("covers", "Riemann-Hurwitz gives genus " + genus.to_string());
  return static_cast<int>(genus.to_int64());
}

int genus_rh(const CoverDescriptor& c) {
  require_valid(c);
  std::vector<int> orders;
  for (const auto& b : c.branches) orders.push_back(b.m);
  try {
    return riemann_hurwitz_genus(c.group->size(), orders);
  } catch (const Error& e) {
    throw Error("covers", c.name + ": " + e.what());
  }
}

int fixed_point_count(const CoverDescriptor& c, int h) {
  const FiniteGroup& g = c.group->group();
  if (h == g.identity()) throw Error("covers", "fixed_point_count: the identity fixes every point");
  const auto& cls = g.classes()[g.class_of(h)];
  int total = 0;
  for (const auto& b : c.branches) {
    std::vector<int> sub = g.cyclic_subgroup(c.group->index(b.gen));
    int meet = 0;
    for (int x : sub)
      if (std::binary_search(cls.begin(), cls.end(), x)) ++meet;
    int num = g.centralizer_order(h) * meet;
    if (num % static_cast<int>(sub.size()) != 0)
      throw Error("covers", "non-integral fixed-point count at branch " + b.label);
    total += num / static_cast<int>(sub.size());
  }
  return total;
}

int chevalley_weil(const CoverDescriptor& c, const Character& chi, LocalRotation rot) {
  const FiniteGroup& g = c.group->group();
  const int dim = chi.dim(g);
  bool trivial = true;
  for (const auto& v : chi.values)
    if (!(v == Cyclotomic(1))) trivial = false;
  if (trivial) return 0;  // quotient genus 0
  Rational mult = -dim;
  for (const auto& b : c.branches) {
    int gen = c.group->index(b.gen);
    EigenvalueProfile prof = eigenvalue_profile(g, chi, gen);
    const int m = prof.order;
    for (int alpha = 1; alpha < m; ++alpha) {
      int slot = rot == LocalRotation::inverse ? (m - alpha) % m : alpha;
      mult += Rational(prof.mult[slot]) * (Rational(1) - Rational(alpha, m));
    }
  }
  if (!mult.is_integer() || mult.sign() < 0)
    throw Error("covers", c.name + ": Chevalley-Weil multiplicity of " + chi.label + " is " + mult.to_string() +
                              " (wrong local rotation convention?)");
  return static_cast<int>(mult.to_int64());
}

CanonicalCharacter canonical_character(const CoverDescriptor& c, const CharacterTable& table, LocalRotation rot) {
  require_valid(c);
  CanonicalCharacter out;
  for (std::size_t k = 0; k < table.size(); ++k) {
    int m = chevalley_weil(c, table[k], rot);
    if (m > 0) out.parts.push_back({k, m});
  }
  out.character = compose_character(table, out.parts);
  out.character.label = "χ_can(" + c.name + ")";
  int genus = genus_rh(c);
  if (out.character.dim(table.group()) != genus)
    throw Error("covers", c.name + ": canonical character has degree " +
                              std::to_string(out.character.dim(table.group())) + " but genus is " +
                              std::to_string(genus));
  return out;
}

}  // namespace pqs
