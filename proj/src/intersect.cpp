#include "pqs/intersect.hpp"

#include "pqs/builtin_data.hpp"
#include "pqs/error.hpp"

#include <algorithm>

namespace pqs {

const std::map<std::string, NumClass>& builtin_components() {
  static const std::map<std::string, NumClass> table = {
      {"F0", classes::F},     {"F1", classes::F},     {"F2", classes::F},          {"F3", classes::F},
      {"G0", classes::G},     {"G1", classes::G},     {"G2", classes::G},          {"G3", classes::G3},
      {"Delta", classes::Delta}, {"DeltaPrime", classes::Delta}, {"Q", classes::Q},
  };
  return table;
}

std::string render_divisor(const Divisor& d) {
  std::string out;
  for (const auto& [name, mult] : d) {
    if (mult == 0) continue;
    if (!out.empty()) out += " + ";
    if (mult != 1) out += std::to_string(mult);
    out += name;
  }
  return out.empty() ? "0" : out;
}

bool base_point_correction_applies(const LocalModel& m) {
  if (m.a <= 0 || m.b <= 0 || m.c < 0 || m.d < 0 || m.c + m.d == 0) return false;
  if (m.b > m.a) return false;
  if (m.d >= m.b) return true;
  return m.c + (m.a / m.b) * m.d >= m.a;
}

int base_point_correction(const LocalModel& m) {
  if (!base_point_correction_applies(m))
    throw Error("intersect", "base-point correction inapplicable to (a,b,c,d) = (" + std::to_string(m.a) + "," +
                                 std::to_string(m.b) + "," + std::to_string(m.c) + "," + std::to_string(m.d) + ")");
  return m.a * m.b;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    Certificate c;
    c.name = j.at("name").get<std::string>();
    c.components = builtin_components();
    if (j.contains("components"))
      for (const auto& [name, hv] : j.at("components").items()) {
        auto v = hv.get<std::vector<int>>();
        if (v.size() != 2) throw Error("intersect", "component " + name + " needs [h, v]");
        c.components[name] = {v[0], v[1]};
      }
    for (const auto& d : j.at("divisors")) c.divisors.push_back(d.get<Divisor>());
    for (const auto& f : j.at("families")) {
      BaseLocusFamily fam;
      fam.label = f.at("label").get<std::string>();
      fam.count = f.at("count").get<int>();
      auto m = f.at("model").get<std::vector<int>>();
      if (m.size() != 4) throw Error("intersect", "family " + fam.label + " needs model [a, b, c, d]");
      fam.model = {m[0], m[1], m[2], m[3]};
      if (f.contains("roles")) fam.roles = f.at("roles").get<std::array<int, 3>>();
      if (f.contains("locus")) fam.locus = f.at("locus").get<std::vector<std::string>>();
      fam.note = f.value("note", "");
      c.families.push_back(fam);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error("intersect", std::string("malformed certificate: ") + e.what());
  }
}

nlohmann::json certificate_to_json(const Certificate& c) {
  nlohmann::json j;
  j["name"] = c.name;
  nlohmann::json extra = nlohmann::json::object();
  const auto& builtin = builtin_components();
  for (const auto& [name, cls] : c.components) {
    auto it = builtin.find(name);
    if (it == builtin.end() || !(it->second == cls)) extra[name] = {cls.h, cls.v};
  }
  if (!extra.empty()) j["components"] = extra;
  j["divisors"] = c.divisors;
  j["families"] = nlohmann::json::array();
  for (const auto& f : c.families) {
    nlohmann::json fj = {{"label", f.label},
                         {"count", f.count},
                         {"model", {f.model.a, f.model.b, f.model.c, f.model.d}},
                         {"roles", f.roles}};
    if (!f.locus.empty()) fj["locus"] = f.locus;
    if (!f.note.empty()) fj["note"] = f.note;
    j["families"].push_back(fj);
  }
  return j;
}

Certificate builtin_certificate(const std::string& name) {
  std::string text(embedded_file("certificates/" + name + ".json"));
  return certificate_from_json(nlohmann::json::parse(text));
}

std::string builtin_certificate_name(int k, LambdaRegime lambda) {
  switch (k) {
    case 1: return "surface1";
    case 2: return lambda == LambdaRegime::zero ? "surface2_lambda0" : "surface2_generic";
    case 3: return lambda == LambdaRegime::zero ? "surface3_lambda0" : "surface3_generic";
    case 4: return "surface4";
    default: throw Error("intersect", "no builtin certificate for surface " + std::to_string(k));
  }
}

NumClass divisor_class(const Certificate& cert, const Divisor& d) {
  NumClass total;
  for (const auto& [name, mult] : d) {
    auto it = cert.components.find(name);
    if (it == cert.components.end()) throw Error("intersect", cert.name + ": unknown component '" + name + "'");
    if (mult < 0) throw Error("intersect", cert.name + ": negative multiplicity of " + name);
    total = total + it->second * mult;
  }
  return total;
}

int t_squared(int group_order, int k_squared) { return group_order * k_squared; }

int t_squared(const SurfaceSpec& spec) {
  return t_squared(spec.c1.group->size(), surface_invariants(spec).k_squared);
}

namespace {

bool share_component(const Divisor& x, const Divisor& y) {
  for (const auto& [name, mult] : x)
    if (mult > 0) {
      auto it = y.find(name);
      if (it != y.end() && it->second > 0) return true;
    }
  return false;
}

// Local divisor xH + yK as (x, y), per certificate divisor.
std::array<std::array<int, 2>, 3> local_divisors(const BaseLocusFamily& f) {
  std::array<std::array<int, 2>, 3> loc{};
  loc[f.roles[0]] = {f.model.a, 0};
  loc[f.roles[1]] = {0, f.model.b};
  loc[f.roles[2]] = {f.model.c, f.model.d};
  return loc;
}

}  // namespace

CertificateValidation validate_certificate(const Certificate& cert, int t_sq, int group_order) {
  CertificateValidation v;
  auto fail = [&](const std::string& msg) {
    v.ok = false;
    v.errors.push_back(cert.name + ": " + msg);
  };
  if (cert.divisors.size() != 3) {
    fail("expected three divisors, got " + std::to_string(cert.divisors.size()));
    return v;
  }

  // (i)
  for (const auto& f : cert.families) {
    auto roles = f.roles;
    std::sort(roles.begin(), roles.end());
    if (roles != std::array<int, 3>{0, 1, 2}) fail("family " + f.label + ": roles must permute 0, 1, 2");
    if (f.count <= 0) fail("family " + f.label + ": count must be positive");
    if (!base_point_correction_applies(f.model))
      fail("family " + f.label + ": base-point correction inapplicable to its local model");
    for (std::size_t k = 0; k < 3 && !f.locus.empty(); ++k) {
      bool on = std::any_of(f.locus.begin(), f.locus.end(), [&](const std::string& c) {
        auto it = cert.divisors[k].find(c);
        return it != cert.divisors[k].end() && it->second > 0;
      });
      if (!on) fail("family " + f.label + ": locus is not contained in divisor " + std::to_string(k + 1));
    }
    for (std::size_t x = 0; x < f.locus.size(); ++x)
      for (std::size_t y = x + 1; y < f.locus.size(); ++y) {
        auto cx = cert.components.find(f.locus[x]), cy = cert.components.find(f.locus[y]);
        if (cx == cert.components.end() || cy == cert.components.end()) {
          fail("family " + f.label + ": unknown locus component");
          continue;
        }
        int n = pair(cx->second, cy->second);
        if (f.count > n)
          fail("family " + f.label + ": " + std::to_string(f.count) + " points exceed " + f.locus[x] + "·" +
               f.locus[y] + " = " + std::to_string(n));
      }
  }

  // (ii)
  std::vector<NumClass> cls;
  try {
    for (const auto& d : cert.divisors) cls.push_back(divisor_class(cert, d));
  } catch (const Error& e) {
    fail(e.what());
    return v;
  }
  for (std::size_t k = 0; k < 3; ++k) {
    if (pair(cls[k], cls[k]) != t_sq)
      fail("divisor " + std::to_string(k + 1) + " (" + render_divisor(cert.divisors[k]) + ") has self-intersection " +
           std::to_string(pair(cls[k], cls[k])) + ", expected " + std::to_string(t_sq));
    if (!(cls[k] == cls[0])) fail("divisor " + std::to_string(k + 1) + " is not numerically equivalent to divisor 1");
  }

  // (iii)
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      PairCheck pc{i, j, share_component(cert.divisors[i], cert.divisors[j]), 0, pair(cls[i], cls[j])};
      if (!pc.skipped) {
        for (const auto& f : cert.families) {
          auto loc = local_divisors(f);
          pc.local_sum += f.count * (loc[i][0] * loc[j][1] + loc[i][1] * loc[j][0]);
        }
        if (pc.local_sum > pc.numerical)
          fail("divisors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + ": base points account for " +
               std::to_string(pc.local_sum) + " > " + std::to_string(pc.numerical));
      }
      v.pairs.push_back(pc);
    }

  // (iv)
  for (const auto& f : cert.families)
    if (base_point_correction_applies(f.model)) v.total_correction += f.count * base_point_correction(f.model);
  v.m_hat_squared = t_sq - v.total_correction;
  if (v.m_hat_squared <= 0)
    fail("T^2 - correction = " + std::to_string(v.m_hat_squared) + " is not positive: composed with a pencil");
  else if (v.m_hat_squared % group_order != 0)
    fail("T^2 - correction = " + std::to_string(v.m_hat_squared) + " is not divisible by " +
         std::to_string(group_order));
  return v;
}

Rational beauville_bound(int p_g, int q) {
  if (p_g <= 2) throw Error("intersect", "the degree bound needs p_g > 2");
  return Rational(9) + Rational(27 - 9 * q) / Rational(p_g - 2);
}

DegreeReport canonical_degree(const SurfaceSpec& spec, const Certificate& cert) {
  SurfaceInvariants inv = surface_invariants(spec);
  const int n = spec.c1.group->size();
  DegreeReport r;
  r.t_squared = t_squared(n, inv.k_squared);
  CertificateValidation v = validate_certificate(cert, r.t_squared, n);
  r.total_correction = v.total_correction;
  r.m_hat_squared = v.m_hat_squared;
  if (r.m_hat_squared <= 0)
    throw Error("intersect", spec.name + ": M^2 = " + std::to_string(r.m_hat_squared) +
                                 ", the canonical map is composed with a pencil");
  if (!v.ok) {
    std::string msg;
    for (const auto& e : v.errors) msg += (msg.empty() ? "" : "; ") + e;
    throw Error("intersect", "invalid certificate: " + msg);
  }
  r.degree = r.m_hat_squared / n;
  if (inv.p_g > 2) {
    r.beauville_bound = beauville_bound(inv.p_g, inv.q);
    if (Rational(r.degree) > r.beauville_bound)
      throw Error("intersect", spec.name + ": degree " + std::to_string(r.degree) + " exceeds the bound " +
                                   r.beauville_bound.to_string());
  }
  return r;
}

DegreeReport canonical_degree(const SurfaceSpec& spec) {
  for (int k = 1; k <= 4; ++k)
    if (spec.name == "surface" + std::to_string(k))
      return canonical_degree(spec, builtin_certificate(builtin_certificate_name(k, spec.lambda)));
  throw Error("intersect", "no builtin certificate for '" + spec.name + "'");
}

}  // namespace pqs
