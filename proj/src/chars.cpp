#include "pqs/chars.hpp"

#include "pqs/error.hpp"

#include <cctype>
#include <map>
#include <numeric>

namespace pqs {

int Character::dim(const FiniteGroup& g) const {
  const Cyclotomic& v = values[g.identity()];
  if (!v.is_rational() || !v.to_rational().is_integer())
    throw Error("chars", "character " + label + " has non-integral degree " + v.to_string());
  return static_cast<int>(v.to_rational().to_int64());
}

Character operator*(const Character& x, const Character& y) {
  Character r;
  r.values.reserve(x.values.size());
  for (std::size_t k = 0; k < x.values.size(); ++k) r.values.push_back(x.values[k] * y.values[k]);
  r.label = x.label + "·" + y.label;
  return r;
}

Character operator+(const Character& x, const Character& y) {
  Character r;
  r.values.reserve(x.values.size());
  for (std::size_t k = 0; k < x.values.size(); ++k) r.values.push_back(x.values[k] + y.values[k]);
  r.label = x.label + " + " + y.label;
  return r;
}

Character Character::scaled(const Rational& s) const {
  Character r = *this;
  for (auto& v : r.values) v *= Cyclotomic(s, v.order());
  return r;
}

Character Character::conj() const {
  Character r;
  r.label = "conj(" + label + ")";
  for (const auto& v : values) r.values.push_back(v.conj());
  return r;
}

namespace {

const char* superscript(int e) {
  switch (e) {
    case 2: return "²";
    case 3: return "³";
    case 4: return "⁴";
    default: return "";
  }
}

}  // namespace

std::string render_label(const IrrepLabel& l) {
  std::string out;
  auto append = [&](const std::string& s) { out += out.empty() ? s : "·" + s; };
  if (l.s3 == S3Irrep::sign) append("sgn");
  if (l.s3 == S3Irrep::standard) append("μ");
  if (l.p) append(std::string("ε1") + superscript(l.p));
  if (l.q) append(std::string("ε2") + superscript(l.q));
  return out.empty() ? "1" : out;
}

IrrepLabel parse_label(const std::string& text) {
  IrrepLabel l;
  std::string s;
  // Normalise the Unicode spelling to ASCII.
  for (std::size_t k = 0; k < text.size();) {
    auto match = [&](const char* tok) {
      std::string t(tok);
      if (text.compare(k, t.size(), t) == 0) {
        k += t.size();
        return true;
      }
      return false;
    };
    if (match("·")) s += '*';
    else if (match("μ")) s += "mu";
    else if (match("ε")) s += 'e';
    else if (match("²")) s += "^2";
    else if (match(" ")) {}
    else s += text[k++];
  }
  if (s == "1") return l;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('*', start);
    std::string tok = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (tok == "sgn") l.s3 = S3Irrep::sign;
    else if (tok == "mu") l.s3 = S3Irrep::standard;
    else if (tok == "e1") l.p = 1;
    else if (tok == "e1^2") l.p = 2;
    else if (tok == "e2") l.q = 1;
    else if (tok == "e2^2") l.q = 2;
    else throw Error("chars", "unknown character label '" + text + "'");
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return l;
}

CharacterTable::CharacterTable(std::shared_ptr<const BuiltinGroup> g) : g_(std::move(g)) {
  const int n = g_->size();
  for (S3Irrep s3 : {S3Irrep::trivial, S3Irrep::sign, S3Irrep::standard})
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) {
        IrrepLabel lab{s3, p, q};
        Character chi;
        chi.label = render_label(lab);
        for (int x = 0; x < n; ++x) {
          const GElem& e = g_->elem(x);
          Rational s3val = 1;
          if (s3 == S3Irrep::sign) s3val = e.j == 0 ? 1 : -1;
          // mu = (chi_reg - sgn - 1) / 2 on S3
          if (s3 == S3Irrep::standard) s3val = e.j == 1 ? 0 : (e.i == 0 ? 2 : -1);
          chi.values.push_back(Cyclotomic(s3val) * root_of_unity(3, p * e.a + q * e.b));
        }
        irr_.push_back(std::move(chi));
        labels_.push_back(lab);
      }
}

std::size_t CharacterTable::index_of(const IrrepLabel& l) const {
  for (std::size_t k = 0; k < labels_.size(); ++k)
    if (labels_[k] == l) return k;
  throw Error("chars", "no irreducible labelled " + render_label(l));
}

std::size_t CharacterTable::identify(const Character& chi) const {
  for (std::size_t k = 0; k < irr_.size(); ++k)
    if (irr_[k].same_values(chi)) return k;
  throw Error("chars", "character " + chi.label + " is not irreducible");
}

Character CharacterTable::regular() const {
  Character r;
  r.label = "χ_reg";
  for (int x = 0; x < g_->size(); ++x) r.values.push_back(Cyclotomic(x == group().identity() ? g_->size() : 0));
  return r;
}

std::shared_ptr<const CharacterTable> builtin_character_table() {
  static const auto t = std::make_shared<const CharacterTable>(builtin_group());
  return t;
}

Rational inner_product(const FiniteGroup& g, const Character& chi, const Character& psi) {
  Cyclotomic s(Rational(0), chi.values.front().order());
  for (int x = 0; x < g.size(); ++x) s += chi(x) * psi(x).conj();
  s /= Cyclotomic(Rational(g.size()), s.order());
  if (!s.is_rational())
    throw Error("chars", "inner product <" + chi.label + ", " + psi.label + "> = " + s.to_string() + " is not rational");
  return s.to_rational();
}

Character twist(const Character& eta, const GroupAutomorphism& psi) {
  Character r;
  r.label = eta.label + "_Ψ";
  r.values.resize(eta.values.size());
  // r(g) = eta(psi^-1(g))  <=>  r(psi(h)) = eta(h)
  for (std::size_t h = 0; h < eta.values.size(); ++h) r.values[psi.apply(static_cast<int>(h))] = eta.values[h];
  return r;
}

EigenvalueProfile eigenvalue_profile(const FiniteGroup& g, const Character& chi, int elem) {
  EigenvalueProfile prof;
  const int m = g.order(elem);
  prof.order = m;
  const int base = chi.values.front().order();
  const int big = std::lcm(base, m);
  const int step = big / m;
  for (int alpha = 0; alpha < m; ++alpha) {
    Cyclotomic s(Rational(0), big);
    for (int k = 0; k < m; ++k) s += chi(g.pow(elem, k)).embed(big) * root_of_unity(big, -alpha * k * step);
    s /= Cyclotomic(Rational(m), big);
    if (!s.is_rational() || !s.to_rational().is_integer() || s.to_rational().sign() < 0)
      throw Error("chars", "eigenvalue multiplicity N_" + std::to_string(alpha) + " of " + chi.label + " at " +
                               g.label(elem) + " is " + s.to_string() + ", not a nonnegative integer");
    prof.mult.push_back(static_cast<int>(s.to_rational().to_int64()));
  }
  return prof;
}

std::vector<Constituent> decompose(const CharacterTable& table, const Character& f) {
  std::vector<Constituent> out;
  Character residual = f;
  for (std::size_t k = 0; k < table.size(); ++k) {
    Rational m = inner_product(table.group(), f, table[k]);
    if (!m.is_integer() || m.sign() < 0)
      throw Error("chars", "multiplicity of " + table[k].label + " in " + f.label + " is " + m.to_string() +
                               ", not a nonnegative integer");
    int mi = static_cast<int>(m.to_int64());
    if (mi == 0) continue;
    out.push_back({k, mi});
    for (std::size_t x = 0; x < residual.values.size(); ++x)
      residual.values[x] -= table[k].values[x] * Cyclotomic(m);
  }
  for (const auto& v : residual.values)
    if (!v.is_zero()) throw Error("chars", f.label + " is not a class function");
  return out;
}

Character compose_character(const CharacterTable& table, const std::vector<Constituent>& parts) {
  Character r;
  r.values.assign(table.group().size(), Cyclotomic(0));
  for (const auto& c : parts)
    for (std::size_t x = 0; x < r.values.size(); ++x)
      r.values[x] += table[c.irreducible].values[x] * Cyclotomic(c.multiplicity);
  r.label = render_decomposition(table, parts);
  return r;
}

std::string render_decomposition(const CharacterTable& table, const std::vector<Constituent>& parts) {
  std::string out;
  for (const auto& c : parts) {
    if (!out.empty()) out += " + ";
    if (c.multiplicity != 1) out += std::to_string(c.multiplicity);
    out += render_label(table.label(c.irreducible));
  }
  return out.empty() ? "0" : out;
}

std::vector<Constituent> parse_decomposition(const CharacterTable& table, const std::string& text) {
  std::map<std::size_t, int> mult;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find('+', start);
    std::string term = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    auto first = term.find_first_not_of(' ');
    auto last = term.find_last_not_of(' ');
    if (first == std::string::npos) throw Error("chars", "empty term in '" + text + "'");
    term = term.substr(first, last - first + 1);
    int m = 1;
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
    if (digits > 0 && digits < term.size()) {
      m = std::stoi(term.substr(0, digits));
      term = term.substr(digits);
    }
    if (term != "0") mult[table.index_of(parse_label(term))] += m;
    if (end == std::string::npos) break;
    start = end + 1;
  }
  std::vector<Constituent> out;
  for (auto [k, m] : mult)
    if (m != 0) out.push_back({k, m});
  return out;
}

}  // namespace pqs
