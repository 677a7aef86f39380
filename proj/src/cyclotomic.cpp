#include "pqs/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace pqs {

namespace {

using Poly = std::vector<Rational>;  // coefficient of x^k at index k

void trim_poly(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Exact division; the remainder must vanish.
Poly poly_div_exact(Poly num, const Poly& den) {
  trim_poly(num);
  Poly q(num.size() - den.size() + 1);
  const Rational& lead = den.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = num[k + den.size() - 1] / lead;
    q[k] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  trim_poly(num);
  if (!num.empty()) throw std::logic_error("cyclotomic polynomial division left a remainder");
  return q;
}

Poly cyclotomic_polynomial(int n) {
  Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
  return p;
}

}  // namespace

CyclotomicField::CyclotomicField(int order) : order_(order) {
  Poly phi = cyclotomic_polynomial(order);
  degree_ = static_cast<int>(phi.size()) - 1;
  // Rewrite x^deg = -(phi_0 + ... + phi_{deg-1} x^{deg-1}) (phi is monic).
  powers_.reserve(2 * order);
  Poly cur(degree_);
  cur[0] = 1;
  for (int k = 0; k < 2 * order; ++k) {
    powers_.push_back(cur);
    Rational top = cur[degree_ - 1];
    for (int j = degree_ - 1; j > 0; --j) cur[j] = cur[j - 1] - top * phi[j];
    cur[0] = -top * phi[0];
  }
}

const CyclotomicField& CyclotomicField::get(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  if (order == kDefaultOrder) {
    static const CyclotomicField q3(kDefaultOrder);
    return q3;
  }
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[order];
  if (!slot) slot.reset(new CyclotomicField(order));
  return *slot;
}

const std::vector<Rational>& CyclotomicField::power(int k) const {
  k %= order_;
  if (k < 0) k += order_;
  return powers_[k];
}

Cyclotomic::Cyclotomic(const Rational& r, int order)
    : field_(&CyclotomicField::get(order)), c_(field_->degree()) {
  c_[0] = r;
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coords)
    : field_(&CyclotomicField::get(order)), c_(std::move(coords)) {
  if (static_cast<int>(c_.size()) != field_->degree())
    throw std::invalid_argument("cyclotomic coordinate vector has wrong length for Q(zeta_" +
                                std::to_string(order) + ")");
}

void Cyclotomic::require_same_field(const Cyclotomic& o, const char* op) const {
  if (field_ != o.field_)
    throw std::invalid_argument(std::string("cyclotomic ") + op + " with mismatched orders " +
                                std::to_string(order()) + " and " + std::to_string(o.order()));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return false;
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic " + to_string() + " is not rational");
  return c_[0];
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  require_same_field(o, "add");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  require_same_field(o, "sub");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  require_same_field(o, "mul");
  const int d = field_->degree();
  std::vector<Rational> r(d);
  for (int i = 0; i < d; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (o.c_[j].is_zero()) continue;
      Rational p = c_[i] * o.c_[j];
      if (i + j < d) {
        r[i + j] += p;
      } else {
        const auto& red = field_->power(i + j);
        for (int k = 0; k < d; ++k)
          if (!red[k].is_zero()) r[k] += p * red[k];
      }
    }
  }
  c_ = std::move(r);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
  require_same_field(o, "div");
  if (o.is_zero()) throw std::domain_error("cyclotomic division by zero");
  if (o.is_rational()) {
    const Rational& q = o.c_[0];
    for (auto& x : c_) x /= q;
    return *this;
  }
  return *this *= o.inverse();
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.field_ == b.field_ && a.c_ == b.c_;
}

Cyclotomic Cyclotomic::conj() const {
  const int n = order();
  std::vector<Rational> r(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    const auto& img = field_->power(n - static_cast<int>(k));
    for (std::size_t j = 0; j < r.size(); ++j)
      if (!img[j].is_zero()) r[j] += c_[k] * img[j];
  }
  return Cyclotomic(n, std::move(r));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic");
  const int d = field_->degree();
  // Solve (this * z^k coordinates as columns) x = e_0.
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  for (int k = 0; k < d; ++k) {
    std::vector<Rational> zk(d);
    zk[k] = 1;
    Cyclotomic col = *this * Cyclotomic(order(), std::move(zk));
    for (int r = 0; r < d; ++r) m[r][k] = col.c_[r];
  }
  m[0][d] = 1;
  for (int col = 0; col < d; ++col) {
    int piv = col;
    while (m[piv][col].is_zero()) ++piv;  // nonsingular: a nonzero field element
    std::swap(m[piv], m[col]);
    Rational inv = Rational(1) / m[col][col];
    for (int j = col; j <= d; ++j) m[col][j] *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (int j = col; j <= d; ++j) m[r][j] -= f * m[col][j];
    }
  }
  std::vector<Rational> x(d);
  for (int r = 0; r < d; ++r) x[r] = m[r][d];
  return Cyclotomic(order(), std::move(x));
}

Cyclotomic Cyclotomic::embed(int larger_order) const {
  if (larger_order % order() != 0)
    throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(order()) + ") into Q(zeta_" +
                                std::to_string(larger_order) + ")");
  const int step = larger_order / order();
  Cyclotomic r(Rational(0), larger_order);
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) r += Cyclotomic(c_[k], larger_order) * root_of_unity(larger_order, step * static_cast<int>(k));
  return r;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  const std::string z = "z" + std::to_string(order());
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    std::string term;
    if (k == 0) {
      term = mag.to_string();
    } else {
      std::string zk = k == 1 ? z : z + "^" + std::to_string(k);
      term = mag == Rational(1) ? zk : mag.to_string() + "*" + zk;
    }
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

namespace {

struct Term {
  Rational coef;
  int order = 0;  // 0: no z factor
  int power = 0;
};

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_small_int(std::string_view s, std::string_view whole) {
  s = strip(s);
  if (s.empty()) throw std::invalid_argument("bad cyclotomic literal '" + std::string(whole) + "'");
  int v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("bad cyclotomic literal '" + std::string(whole) + "'");
    v = v * 10 + (ch - '0');
  }
  return v;
}

Term parse_term(std::string_view s, std::string_view whole) {
  Term t;
  s = strip(s);
  auto zpos = s.find('z');
  if (zpos == std::string_view::npos) {
    t.coef = Rational::parse(s);
    return t;
  }
  std::string_view coef = strip(s.substr(0, zpos));
  if (coef.empty()) {
    t.coef = 1;
  } else {
    if (coef.back() != '*') throw std::invalid_argument("bad cyclotomic literal '" + std::string(whole) + "'");
    t.coef = Rational::parse(coef.substr(0, coef.size() - 1));
  }
  std::string_view rest = s.substr(zpos + 1);
  auto caret = rest.find('^');
  t.order = parse_small_int(rest.substr(0, caret), whole);
  t.power = caret == std::string_view::npos ? 1 : parse_small_int(rest.substr(caret + 1), whole);
  if (t.order < 1) throw std::invalid_argument("bad cyclotomic literal '" + std::string(whole) + "'");
  return t;
}

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text, int order) {
  std::vector<Term> terms;
  std::string_view s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty cyclotomic literal");
  bool neg = false;
  std::size_t start = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    start = 1;
  }
  for (std::size_t k = start; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == '+' || s[k] == '-') {
      Term t = parse_term(s.substr(start, k - start), text);
      if (neg) t.coef = -t.coef;
      terms.push_back(t);
      if (k < s.size()) {
        neg = s[k] == '-';
        start = k + 1;
      }
    }
  }
  int n = 0;
  for (const auto& t : terms) {
    if (t.order == 0) continue;
    if (n != 0 && n != t.order)
      throw std::invalid_argument("cyclotomic literal '" + std::string(text) + "' mixes orders");
    n = t.order;
  }
  if (n == 0) n = order;
  Cyclotomic r(Rational(0), n);
  for (const auto& t : terms)
    r += Cyclotomic(t.coef, n) * root_of_unity(n, t.order == 0 ? 0 : t.power);
  return r;
}

Cyclotomic root_of_unity(int order, int k) {
  const auto& f = CyclotomicField::get(order);
  return Cyclotomic(order, f.power(k));
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

}  // namespace pqs
