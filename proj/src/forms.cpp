#include "pqs/forms.hpp"

#include "pqs/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace pqs {

std::string to_string(Curve c) { return c == Curve::C1 ? "C1" : "C2"; }

namespace {

int mod(int x, int m) {
  int r = x % m;
  return r < 0 ? r + m : r;
}

Cyclotomic signed_zeta(int sign, int exp) {
  Cyclotomic z = root_of_unity(3, exp);
  return sign < 0 ? -z : z;
}

std::string index_digits(const FormIndex& f) {
  return std::to_string(f.alpha) + std::to_string(f.beta) + std::to_string(f.gamma);
}

const char* superscript(int e) {
  switch (e) {
    case 2: return "²";
    case 3: return "³";
    case 4: return "⁴";
    default: return "";
  }
}

}  // namespace

MonomialSpace::MonomialSpace(Curve c) : curve_(c) {
  if (c == Curve::C1) {
    degree_ = 2;
    weights_ = {1, 1, 1, 1};
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int g = 0; g <= 2; ++g)
          if (a + b + g <= 2) basis_.push_back({a, b, g});
  } else {
    degree_ = 4;
    weights_ = {1, 1, 1, 2};
    excluded_ = {{0, 3, 0}, {1, 3, 0}, {0, 4, 0}};
    for (int g = 0; g <= 2; ++g)
      for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
          FormIndex f{a, b, g};
          if (a + b + 2 * g > 4) continue;
          if (std::find(excluded_.begin(), excluded_.end(), f) != excluded_.end()) continue;
          basis_.push_back(f);
        }
  }
}

const MonomialSpace& MonomialSpace::get(Curve c) {
  static const MonomialSpace c1(Curve::C1);
  static const MonomialSpace c2(Curve::C2);
  return c == Curve::C1 ? c1 : c2;
}

std::optional<std::size_t> MonomialSpace::find(const FormIndex& f) const {
  auto it = std::find(basis_.begin(), basis_.end(), f);
  if (it == basis_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

std::size_t MonomialSpace::index(const FormIndex& f) const {
  if (auto k = find(f)) return *k;
  throw Error("forms", render_form(f) + " is not a basis form of " + to_string(curve_));
}

std::array<int, 4> MonomialSpace::monomial(const FormIndex& f) const {
  return {degree_ - f.alpha - f.beta - weights_[3] * f.gamma, f.alpha, f.beta, f.gamma};
}

bool MonomialSpace::is_monomial_index(const FormIndex& f) const {
  auto m = monomial(f);
  return std::all_of(m.begin(), m.end(), [](int e) { return e >= 0; });
}

std::vector<Cyclotomic> MonomialSpace::reduce(const FormIndex& f) const {
  if (!is_monomial_index(f))
    throw Error("forms", render_form(f) + " is not a monomial of degree " + std::to_string(degree_));
  std::vector<Cyclotomic> v(dim(), Cyclotomic(0));
  if (auto k = find(f)) {
    v[*k] = Cyclotomic(1);
    return v;
  }
  // Only C2 has excluded monomials; each contains y2^3 = y0^3 + y1^3.
  auto a = reduce({f.alpha, f.beta - 3, f.gamma});
  auto b = reduce({f.alpha + 3, f.beta - 3, f.gamma});
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a[k] + b[k];
  return v;
}

std::string MonomialSpace::render_form(const FormIndex& f) const {
  return std::string(curve_ == Curve::C1 ? "ω" : "ω′") + "_{" + index_digits(f) + "}";
}

std::string MonomialSpace::render_monomial(const FormIndex& f) const {
  auto m = monomial(f);
  const char var = curve_ == Curve::C1 ? 'x' : 'y';
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (m[k] == 0) continue;
    out += var + std::to_string(k);
    if (m[k] > 1) out += m[k] <= 4 ? superscript(m[k]) : "^" + std::to_string(m[k]);
  }
  return out.empty() ? "1" : out;
}

std::pair<FormIndex, Cyclotomic> closed_form_action(Curve c, const GElem& g, const FormIndex& f) {
  const auto [al, be, ga] = f;
  if (c == Curve::C1) {
    int al2 = al - (2 * al + be + ga - 2) * g.j;
    int sign = mod(g.j * (be - 1), 2) ? -1 : 1;
    int e = g.a * (be - 2) + g.b * (ga - 2) + (al2 + 2 * be + 2 * ga - 7) * g.i;
    return {{al2, be, ga}, signed_zeta(sign, e)};
  }
  int al2 = al - (2 * al + be + 2 * ga - 4) * g.j;
  int sign = g.j ? -1 : 1;
  int e = g.a * (2 * be + ga) + g.b * (be + ga - 4) + (al2 + 2 * be + ga + 1) * g.i;
  return {{al2, be, ga}, signed_zeta(sign, e)};
}

CycMatrix action_matrix(Curve c, const GElem& g) {
  const MonomialSpace& sp = MonomialSpace::get(c);
  CycMatrix m(sp.dim(), sp.dim());
  for (std::size_t col = 0; col < sp.dim(); ++col) {
    auto [target, coef] = closed_form_action(c, g, sp.basis()[col]);
    auto row = sp.find(target);
    if (!row)
      throw Error("forms", to_string(g) + " sends " + sp.render_form(sp.basis()[col]) + " to " +
                               sp.render_form(target) + ", outside the basis");
    m(*row, col) = coef;
  }
  return m;
}

std::array<CoordinateImage, 4> coordinate_action(Curve c, const GElem& h) {
  const int j1 = (h.j + 1) % 2;
  if (c == Curve::C1)
    return {{{h.j, h.i, 1}, {j1, 0, 1}, {2, 2 * h.a + 2 * h.i, h.j ? -1 : 1}, {3, 2 * h.b + 2 * h.i, 1}}};
  return {{{h.j, h.i, 1}, {j1, 0, 1}, {2, h.a + 2 * h.b + 2 * h.i, 1}, {3, 2 * h.a + 2 * h.b + h.i, 1}}};
}

namespace {

// Unit sign * zeta3^exp raised to an integer power.
struct Unit {
  int sign = 1;
  int exp = 0;
  Unit pow(int n) const { return {(n % 2 != 0) ? sign : 1, exp * n}; }
  Unit operator*(const Unit& o) const { return {sign * o.sign, exp + o.exp}; }
};

// Pulls u^alpha v^(beta-2) t^(gamma-2) du back along the map X = phi(h) x.
std::pair<FormIndex, Cyclotomic> pullback(Curve c, const GElem& h, const FormIndex& f) {
  const auto& w = MonomialSpace::get(c).weights();
  const auto tab = coordinate_action(c, h);
  // Laurent exponents over (u, v, t) of the affine coordinate x_m / x_0^(w_m).
  auto aff = [](int m) {
    std::array<int, 3> e{0, 0, 0};
    if (m > 0) e[m - 1] = 1;
    return e;
  };
  const std::array<int, 3> n{f.alpha, f.beta - 2, f.gamma - 2};
  Unit total;
  std::array<int, 3> res{0, 0, 0};
  Unit ucoef;
  std::array<int, 3> ulau{};
  for (int k = 1; k <= 3; ++k) {
    // X_k / X_0^w_k = (c_k / c_0^w_k) aff(pi k) / aff(pi 0)^w_k
    Unit ck{tab[k].sign * tab[0].sign, tab[k].zeta_exp - w[k] * tab[0].zeta_exp};
    if (w[k] % 2 == 0) ck.sign = tab[k].sign;
    std::array<int, 3> lau = aff(tab[k].source);
    auto base = aff(tab[0].source);
    for (int r = 0; r < 3; ++r) lau[r] -= w[k] * base[r];
    total = total * ck.pow(n[k - 1]);
    for (int r = 0; r < 3; ++r) res[r] += n[k - 1] * lau[r];
    if (k == 1) {
      ucoef = ck;
      ulau = lau;
    }
  }
  if (ulau[1] != 0 || ulau[2] != 0) throw Error("forms", "substitution mixes u with v or t");
  // du' = c e u^(e-1) du
  const int e = ulau[0];
  total = total * ucoef;
  if (e < 0) total.sign = -total.sign;
  if (e != 1 && e != -1) throw Error("forms", "substitution is not invertible in u");
  res[0] += e - 1;
  return {{res[0], res[1] + 2, res[2] + 2}, signed_zeta(total.sign, total.exp)};
}

}  // namespace

CycMatrix action_matrix_by_substitution(Curve c, const GElem& g) {
  const MonomialSpace& sp = MonomialSpace::get(c);
  const GElem h = g_inv(g);
  CycMatrix m(sp.dim(), sp.dim());
  for (std::size_t col = 0; col < sp.dim(); ++col) {
    auto [target, coef] = pullback(c, h, sp.basis()[col]);
    if (!sp.is_monomial_index(target))
      throw Error("forms", "pullback of " + sp.render_form(sp.basis()[col]) + " by " + to_string(g) +
                               " is not a regular form");
    auto v = sp.reduce(target);
    for (std::size_t row = 0; row < sp.dim(); ++row)
      if (!v[row].is_zero()) m(row, col) += coef * v[row];
  }
  return m;
}

FormRepresentation FormRepresentation::build(Curve c) {
  FormRepresentation r;
  r.curve_ = c;
  const BuiltinGroup& bg = *builtin_group();
  const int n = bg.size();
  r.mats_.resize(n);
  std::vector<std::string> errors(n);
#pragma omp parallel for schedule(static)
  for (int g = 0; g < n; ++g) {
    try {
      r.mats_[g] = action_matrix(c, bg.elem(g));
    } catch (const std::exception& e) {
      errors[g] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw Error("forms", e);
  return r;
}

FormRepresentation FormRepresentation::build_serial(Curve c) {
  FormRepresentation r;
  r.curve_ = c;
  const BuiltinGroup& bg = *builtin_group();
  for (int g = 0; g < bg.size(); ++g) r.mats_.push_back(action_matrix(c, bg.elem(g)));
  return r;
}

const FormRepresentation& FormRepresentation::builtin(Curve c) {
  static const FormRepresentation r1 = build(Curve::C1);
  static const FormRepresentation r2 = build(Curve::C2);
  return c == Curve::C1 ? r1 : r2;
}

Character FormRepresentation::character() const {
  Character chi;
  chi.label = "tr(" + to_string(curve_) + ")";
  for (const auto& m : mats_) chi.values.push_back(m.trace());
  return chi;
}

namespace {

// Nonzero entries of each row; products of the mostly monomial matrices then
// cost a few cyclotomic multiplications instead of a dense n^3 pass.
using SparseRows = std::vector<std::vector<std::pair<std::size_t, Cyclotomic>>>;

SparseRows sparse_rows(const CycMatrix& m) {
  SparseRows rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) rows[i].emplace_back(j, m(i, j));
  return rows;
}

bool product_matches(const SparseRows& x, const SparseRows& y, const SparseRows& target) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::map<std::size_t, Cyclotomic> acc;
    for (const auto& [k, xik] : x[i])
      for (const auto& [j, ykj] : y[k]) {
        auto [it, fresh] = acc.try_emplace(j, xik * ykj);
        if (!fresh) it->second += xik * ykj;
      }
    std::erase_if(acc, [](const auto& e) { return e.second.is_zero(); });
    if (acc.size() != target[i].size()) return false;
    for (const auto& [j, v] : target[i]) {
      auto it = acc.find(j);
      if (it == acc.end() || !(it->second == v)) return false;
    }
  }
  return true;
}

std::vector<SparseRows> sparse_representation(const FormRepresentation& rep) {
  std::vector<SparseRows> out;
  for (std::size_t g = 0; g < rep.size(); ++g) out.push_back(sparse_rows(rep[g]));
  return out;
}

std::optional<int> first_bad_h(const std::vector<SparseRows>& m, const FiniteGroup& g, int x) {
  for (int y = 0; y < g.size(); ++y)
    if (!product_matches(m[x], m[y], m[g.mul(x, y)])) return y;
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<int, int>> verify_homomorphism(const FormRepresentation& rep) {
  const FiniteGroup& g = builtin_group()->group();
  const auto m = sparse_representation(rep);
  std::vector<std::optional<int>> bad(g.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int x = 0; x < g.size(); ++x) bad[x] = first_bad_h(m, g, x);
  for (int x = 0; x < g.size(); ++x)
    if (bad[x]) return std::pair{x, *bad[x]};
  return std::nullopt;
}

std::optional<std::pair<int, int>> verify_homomorphism_serial(const FormRepresentation& rep) {
  const FiniteGroup& g = builtin_group()->group();
  const auto m = sparse_representation(rep);
  for (int x = 0; x < g.size(); ++x)
    if (auto y = first_bad_h(m, g, x)) return std::pair{x, *y};
  return std::nullopt;
}

CycMatrix isotypic_projector(const FormRepresentation& rep, const Character& chi) {
  const FiniteGroup& g = builtin_group()->group();
  const std::size_t d = rep.space().dim();
  CycMatrix p(d, d);
  for (int x = 0; x < g.size(); ++x) {
    CycMatrix term = rep[x];
    term *= chi(x).conj();
    p += term;
  }
  p *= Cyclotomic(Rational(chi.dim(g), g.size()));
  return p;
}

std::vector<IsotypicSpan> known_isotypic_spans(Curve c) {
  const MonomialSpace& sp = MonomialSpace::get(c);
  auto vec = [&](FormIndex f) { return sp.reduce(f); };
  auto span = [&](const char* label, std::vector<FormIndex> forms) {
    IsotypicSpan s;
    s.label = parse_label(label);
    for (const auto& f : forms) {
      s.vectors.push_back(vec(f));
      s.text += (s.text.empty() ? "" : ", ") + sp.render_form(f);
    }
    s.text = "⟨" + s.text + "⟩_" + render_label(s.label);
    return s;
  };
  auto combo = [&](const char* label, FormIndex f1, FormIndex f2, int sign) {
    IsotypicSpan s;
    s.label = parse_label(label);
    auto a = vec(f1), b = vec(f2);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += Cyclotomic(sign) * b[k];
    s.vectors.push_back(a);
    s.text = "⟨" + sp.render_form(f1) + (sign > 0 ? "+" : "-") + sp.render_form(f2) + "⟩_" + render_label(s.label);
    return s;
  };
  if (c == Curve::C1)
    return {span("ε1²·ε2²", {{0, 1, 1}}),
            span("sgn·ε1·ε2", {{1, 0, 0}}),
            span("sgn·ε2", {{0, 2, 0}}),
            span("sgn·ε1", {{0, 0, 2}}),
            span("μ·ε1·ε2", {{0, 0, 0}, {2, 0, 0}}),
            span("μ·ε1²·ε2", {{0, 1, 0}, {1, 1, 0}}),
            span("μ·ε1·ε2²", {{0, 0, 1}, {1, 0, 1}})};
  return {span("sgn·ε1²·ε2", {{0, 0, 2}}),
          span("sgn·ε1²·ε2²", {{0, 2, 1}}),
          span("sgn·ε1·ε2", {{1, 2, 0}}),
          span("sgn·ε1", {{1, 0, 1}}),
          span("sgn·ε2²", {{2, 0, 0}}),
          span("μ·ε1", {{0, 0, 1}, {2, 0, 1}}),
          span("μ·ε2", {{0, 1, 1}, {1, 1, 1}}),
          span("μ·ε2²", {{0, 0, 0}, {4, 0, 0}}),
          span("μ·ε2²", {{1, 0, 0}, {3, 0, 0}}),
          combo("sgn·ε1²", {0, 1, 0}, {3, 1, 0}, 1),
          combo("ε1²", {0, 1, 0}, {3, 1, 0}, -1),
          span("μ·ε1²", {{1, 1, 0}, {2, 1, 0}}),
          span("μ·ε1·ε2", {{2, 2, 0}, {0, 2, 0}})};
}

bool TensorForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

TensorTerm parse_six_index(const std::string& text, const Cyclotomic& coef) {
  std::string s = trim(text);
  for (const char* prefix : {"ω_{", "w_{", "ω_", "w_"})
    if (s.rfind(prefix, 0) == 0) {
      s = s.substr(std::string(prefix).size());
      break;
    }
  if (!s.empty() && s.back() == '}') s.pop_back();
  if (s.size() != 6 || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw Error("forms", "bad six-index form '" + text + "'");
  TensorTerm t{coef, {s[0] - '0', s[1] - '0', s[2] - '0'}, {s[3] - '0', s[4] - '0', s[5] - '0'}};
  if (!MonomialSpace::get(Curve::C1).is_monomial_index(t.left) ||
      !MonomialSpace::get(Curve::C2).is_monomial_index(t.right))
    throw Error("forms", "'" + text + "' does not name a 2-form");
  return t;
}

std::vector<TensorTerm> parse_tensor_terms(const std::string& text) {
  std::vector<TensorTerm> out;
  std::vector<std::pair<int, std::string>> pieces;  // sign, body
  int depth = 0;
  int sign = 1;
  std::string cur;
  auto flush = [&] {
    if (!trim(cur).empty()) pieces.emplace_back(sign, trim(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-') && !trim(cur).empty() && trim(cur).back() != '*') {
      flush();
      sign = ch == '-' ? -1 : 1;
      continue;
    }
    if (depth == 0 && (ch == '+' || ch == '-') && trim(cur).empty()) {
      sign = ch == '-' ? -1 : 1;
      continue;
    }
    cur += ch;
  }
  flush();
  if (pieces.empty()) throw Error("forms", "empty 2-form expression");
  for (const auto& [sg, body] : pieces) {
    auto star = body.rfind('*');
    Cyclotomic coef(1);
    std::string form = body;
    if (star != std::string::npos) {
      std::string c = trim(body.substr(0, star));
      if (c.size() >= 2 && c.front() == '(' && c.back() == ')') c = c.substr(1, c.size() - 2);
      try {
        coef = Cyclotomic::parse(c);
      } catch (const std::exception& e) {
        throw Error("forms", "bad coefficient '" + c + "' in '" + text + "'");
      }
      form = body.substr(star + 1);
    }
    out.push_back(parse_six_index(form, sg < 0 ? -coef : coef));
  }
  return out;
}

TensorForm to_tensor(const std::vector<TensorTerm>& terms) {
  const MonomialSpace& s1 = MonomialSpace::get(Curve::C1);
  const MonomialSpace& s2 = MonomialSpace::get(Curve::C2);
  TensorForm t;
  t.coeffs.assign(s1.dim() * s2.dim(), Cyclotomic(0));
  for (const auto& term : terms) {
    std::size_t r = s1.index(term.left);
    auto v = s2.reduce(term.right);
    for (std::size_t s = 0; s < v.size(); ++s)
      if (!v[s].is_zero()) t.coeffs[r * s2.dim() + s] += term.coef * v[s];
  }
  return t;
}

namespace {

// Leading " + " / " - " handling for coefficient rendering.
std::string join_terms(const std::vector<std::pair<Cyclotomic, std::string>>& terms) {
  std::string out;
  for (const auto& [coef, body] : terms) {
    std::string c = coef.to_string();
    bool single = c.find(" + ") == std::string::npos && c.find(" - ") == std::string::npos;
    bool neg = single && c[0] == '-';
    if (neg) c = c.substr(1);
    std::string factor;
    if (!single) factor = "(" + c + ")*";
    else if (c != "1") factor = c + "*";
    if (out.empty())
      out = (neg ? "-" : "") + factor + body;
    else
      out += (neg ? " - " : " + ") + factor + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string render_terms(const std::vector<TensorTerm>& terms) {
  std::vector<std::pair<Cyclotomic, std::string>> parts;
  for (const auto& t : terms) parts.emplace_back(t.coef, "ω_{" + index_digits(t.left) + index_digits(t.right) + "}");
  return join_terms(parts);
}

std::string render_terms_as_monomials(const std::vector<TensorTerm>& terms) {
  const MonomialSpace& s1 = MonomialSpace::get(Curve::C1);
  const MonomialSpace& s2 = MonomialSpace::get(Curve::C2);
  std::vector<std::pair<Cyclotomic, std::string>> parts;
  for (const auto& t : terms) {
    std::string x = s1.render_monomial(t.left), y = s2.render_monomial(t.right);
    if (x == "1") x.clear();
    if (y == "1") y.clear();
    std::string m = x + y;
    parts.emplace_back(t.coef, m.empty() ? "1" : m);
  }
  return join_terms(parts);
}

std::string render_tensor(const TensorForm& t) {
  const MonomialSpace& s1 = MonomialSpace::get(Curve::C1);
  const MonomialSpace& s2 = MonomialSpace::get(Curve::C2);
  std::vector<TensorTerm> terms;
  for (std::size_t k = 0; k < t.coeffs.size(); ++k)
    if (!t.coeffs[k].is_zero())
      terms.push_back({t.coeffs[k], s1.basis()[k / s2.dim()], s2.basis()[k % s2.dim()]});
  return render_terms(terms);
}

TensorForm act_on_tensor(const FormRepresentation& r1, const FormRepresentation& r2, const GroupAutomorphism& psi,
                         int g, const TensorForm& t) {
  const CycMatrix& m1 = r1[g];
  const CycMatrix& m2 = r2[psi.apply(g)];
  const std::size_t d1 = m1.rows(), d2 = m2.rows();
  TensorForm out;
  out.coeffs.assign(d1 * d2, Cyclotomic(0));
  for (std::size_t k = 0; k < t.coeffs.size(); ++k) {
    if (t.coeffs[k].is_zero()) continue;
    const std::size_t r = k / d2, s = k % d2;
    for (std::size_t r2 = 0; r2 < d1; ++r2) {
      if (m1(r2, r).is_zero()) continue;
      Cyclotomic a = t.coeffs[k] * m1(r2, r);
      for (std::size_t s2 = 0; s2 < d2; ++s2)
        if (!m2(s2, s).is_zero()) out.coeffs[r2 * d2 + s2] += a * m2(s2, s);
    }
  }
  return out;
}

namespace {

// Column k of a monomial matrix as (row, entry).
struct MonomialColumns {
  std::vector<std::size_t> row;
  std::vector<Cyclotomic> entry;
};

MonomialColumns monomial_columns(const CycMatrix& m) {
  MonomialColumns mc;
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) {
        mc.row.push_back(r);
        mc.entry.push_back(m(r, c));
        break;
      }
  return mc;
}

std::vector<Cyclotomic> average_dense(const FormRepresentation& r1, const FormRepresentation& r2,
                                      const GroupAutomorphism& psi, std::size_t k, std::size_t dim) {
  TensorForm e;
  e.coeffs.assign(dim, Cyclotomic(0));
  e.coeffs[k] = Cyclotomic(1);
  std::vector<Cyclotomic> avg(dim, Cyclotomic(0));
  for (int g = 0; g < static_cast<int>(r1.size()); ++g) {
    TensorForm ge = act_on_tensor(r1, r2, psi, g, e);
    for (std::size_t j = 0; j < dim; ++j)
      if (!ge.coeffs[j].is_zero()) avg[j] += ge.coeffs[j];
  }
  return avg;
}

}  // namespace

std::vector<TensorForm> invariant_tensors(const FormRepresentation& r1, const FormRepresentation& r2,
                                          const GroupAutomorphism& psi) {
  const int n = static_cast<int>(r1.size());
  const std::size_t d2 = r2.space().dim();
  const std::size_t dim = r1.space().dim() * d2;
  bool monomial = true;
  for (int g = 0; g < n && monomial; ++g) monomial = r1[g].is_monomial() && r2[g].is_monomial();
  std::vector<MonomialColumns> c1, c2;
  if (monomial)
    for (int g = 0; g < n; ++g) {
      c1.push_back(monomial_columns(r1[g]));
      c2.push_back(monomial_columns(r2[psi.apply(g)]));
    }
  std::vector<bool> covered(dim, false);
  std::vector<std::vector<Cyclotomic>> averages;
  for (std::size_t k = 0; k < dim; ++k) {
    if (covered[k]) continue;
    std::vector<Cyclotomic> avg;
    if (monomial) {
      // g e_k is a multiple of a single basis tensor, and the average of g e_k
      // is a multiple of the average of e_k, so each orbit is visited once.
      avg.assign(dim, Cyclotomic(0));
      const std::size_t r = k / d2, s = k % d2;
      for (int g = 0; g < n; ++g) {
        std::size_t j = c1[g].row[r] * d2 + c2[g].row[s];
        avg[j] += c1[g].entry[r] * c2[g].entry[s];
        covered[j] = true;
      }
    } else {
      avg = average_dense(r1, r2, psi, k, dim);
    }
    bool nonzero = std::any_of(avg.begin(), avg.end(), [](const Cyclotomic& c) { return !c.is_zero(); });
    if (nonzero) {
      for (auto& c : avg)
        if (!c.is_zero()) c /= Cyclotomic(n);
      averages.push_back(std::move(avg));
    }
  }
  std::vector<TensorForm> basis;
  for (auto& v : span_basis(std::move(averages))) basis.push_back({std::move(v)});
  return basis;
}

std::vector<TensorForm> invariant_tensors(const GroupAutomorphism& psi, int expected_dim) {
  auto basis = invariant_tensors(FormRepresentation::builtin(Curve::C1), FormRepresentation::builtin(Curve::C2), psi);
  if (static_cast<int>(basis.size()) != expected_dim)
    throw Error("forms", "invariant 2-forms have dimension " + std::to_string(basis.size()) +
                             " but the characters predict " + std::to_string(expected_dim));
  return basis;
}

BasisCheck check_table_basis(const GroupAutomorphism& psi, const std::vector<std::vector<TensorTerm>>& claimed) {
  const auto& r1 = FormRepresentation::builtin(Curve::C1);
  const auto& r2 = FormRepresentation::builtin(Curve::C2);
  const BuiltinGroup& bg = *builtin_group();
  BasisCheck out;
  std::vector<std::vector<Cyclotomic>> vectors;
  for (std::size_t k = 0; k < claimed.size(); ++k) {
    TensorForm t = to_tensor(claimed[k]);
    if (t.is_zero()) {
      out.form = k;
      out.reason = "claimed form " + render_terms(claimed[k]) + " is zero";
      return out;
    }
    for (int g = 0; g < bg.size(); ++g) {
      if (!(act_on_tensor(r1, r2, psi, g, t).coeffs == t.coeffs)) {
        out.form = k;
        out.witness = g;
        out.reason = render_terms(claimed[k]) + " is not invariant: moved by " + to_string(bg.elem(g));
        return out;
      }
    }
    vectors.push_back(t.coeffs);
  }
  out.rank = span_basis(vectors).size();
  out.invariant_dim = invariant_tensors(r1, r2, psi).size();
  if (out.rank < out.invariant_dim) {
    out.reason = "rank " + std::to_string(out.rank) + " < " + std::to_string(out.invariant_dim);
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace pqs
