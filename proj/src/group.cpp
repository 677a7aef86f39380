#include "pqs/group.hpp"

#include "pqs/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pqs {

namespace {

int mod(int x, int m) {
  int r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

GElem GElem::make(int i, int j, int a, int b) { return {mod(i, 3), mod(j, 2), mod(a, 3), mod(b, 3)}; }

GElem g_mul(const GElem& x, const GElem& y) {
  // tau sigma tau^-1 = sigma^2, so sigma^i tau^j sigma^i' = sigma^(i + (-1)^j i') tau^j.
  int sign = x.j == 0 ? 1 : -1;
  return GElem::make(x.i + sign * y.i, x.j + y.j, x.a + y.a, x.b + y.b);
}

GElem g_inv(const GElem& x) {
  // (sigma^i tau)^-1 = sigma^i tau; (sigma^i)^-1 = sigma^-i.
  int i = x.j == 0 ? -x.i : x.i;
  return GElem::make(i, x.j, -x.a, -x.b);
}

int g_order(const GElem& x) {
  GElem y = x;
  int n = 1;
  while (!(y == GElem{})) {
    y = g_mul(y, x);
    ++n;
  }
  return n;
}

std::string to_string(const GElem& g) {
  std::string s3;
  if (g.i == 1) s3 = "σ";
  if (g.i == 2) s3 = "σ²";
  if (g.j == 1) s3 += "τ";
  if (s3.empty()) s3 = "Id";
  return "(" + s3 + ",(" + std::to_string(g.a) + "," + std::to_string(g.b) + "))";
}

GElem gelem_from_quadruple(std::span<const int> q) {
  if (q.size() != 4) throw Error("group", "group element needs 4 components (i, j, a, b), got " + std::to_string(q.size()));
  return GElem::make(q[0], q[1], q[2], q[3]);
}

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<int> cayley)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)), table_(std::move(cayley)) {
  if (n_ == 0 || static_cast<int>(table_.size()) != n_ * n_) throw Error("group", "Cayley table has wrong size");
  for (int v : table_)
    if (v < 0 || v >= n_) throw Error("group", "Cayley table not closed");
  for (int e = 0; e < n_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw Error("group", "Cayley table has no identity");
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      for (int z = 0; z < n_; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          throw Error("group", "Cayley table not associative at (" + labels_[x] + ", " + labels_[y] + ", " +
                                   labels_[z] + ")");
  inverse_.assign(n_, -1);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (mul(x, y) == identity_) inverse_[x] = y;
  for (int x = 0; x < n_; ++x)
    if (inverse_[x] < 0) throw Error("group", "element " + labels_[x] + " has no inverse");
  order_.assign(n_, 0);
  for (int x = 0; x < n_; ++x) {
    int y = x, k = 1;
    while (y != identity_) {
      y = mul(y, x);
      ++k;
    }
    order_[x] = k;
  }
  class_of_.assign(n_, -1);
  for (int x = 0; x < n_; ++x) {
    if (class_of_[x] >= 0) continue;
    std::vector<int> cls;
    for (int g = 0; g < n_; ++g) {
      int c = conjugate(x, g);
      if (class_of_[c] < 0) {
        class_of_[c] = static_cast<int>(classes_.size());
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

int FiniteGroup::pow(int x, int k) const {
  k = mod(k, order_[x]);
  int r = identity_;
  for (int s = 0; s < k; ++s) r = mul(r, x);
  return r;
}

std::vector<int> FiniteGroup::generated_subgroup(std::span<const int> gens) const {
  std::vector<char> seen(n_, 0);
  std::deque<int> todo{identity_};
  seen[identity_] = 1;
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    for (int g : gens) {
      int y = mul(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        todo.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

std::vector<int> FiniteGroup::cyclic_subgroup(int g) const {
  int gens[] = {g};
  return generated_subgroup(gens);
}

BuiltinGroup::BuiltinGroup()
    : elems_([] {
        std::vector<GElem> e;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 2; ++j)
            for (int a = 0; a < 3; ++a)
              for (int b = 0; b < 3; ++b) e.push_back({i, j, a, b});
        return e;
      }()),
      group_([this] {
        std::vector<std::string> labels;
        for (const auto& g : elems_) labels.push_back(to_string(g));
        return labels;
      }(),
             [this] {
               std::vector<int> t;
               t.reserve(elems_.size() * elems_.size());
               for (const auto& x : elems_)
                 for (const auto& y : elems_) t.push_back(index(g_mul(x, y)));
               return t;
             }()) {}

int BuiltinGroup::index(const GElem& g) const {
  GElem r = GElem::make(g.i, g.j, g.a, g.b);
  return ((r.i * 2 + r.j) * 3 + r.a) * 3 + r.b;
}

std::shared_ptr<const BuiltinGroup> builtin_group() {
  static const auto g = std::make_shared<const BuiltinGroup>();
  return g;
}

GroupAutomorphism GroupAutomorphism::inverse() const {
  GroupAutomorphism r;
  r.image.assign(image.size(), -1);
  for (std::size_t k = 0; k < image.size(); ++k) r.image[image[k]] = static_cast<int>(k);
  return r;
}

GroupAutomorphism compose(const GroupAutomorphism& psi, const GroupAutomorphism& phi) {
  GroupAutomorphism r;
  r.image.resize(phi.image.size());
  for (std::size_t k = 0; k < phi.image.size(); ++k) r.image[k] = psi.image[phi.image[k]];
  return r;
}

GroupAutomorphism identity_automorphism(const FiniteGroup& g) {
  GroupAutomorphism r;
  r.image.resize(g.size());
  std::iota(r.image.begin(), r.image.end(), 0);
  return r;
}

GroupAutomorphism inner_automorphism(const FiniteGroup& grp, int g) {
  GroupAutomorphism r;
  r.image.resize(grp.size());
  for (int x = 0; x < grp.size(); ++x) r.image[x] = grp.conjugate(x, g);
  return r;
}

bool is_automorphism(const FiniteGroup& g, std::span<const int> image) {
  const int n = g.size();
  if (static_cast<int>(image.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int v : image) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (image[g.mul(x, y)] != g.mul(image[x], image[y])) return false;
  return true;
}

namespace {

// BFS spanning tree over generator right-multiplication: parent[y] = (x, k) with y = x * gens[k].
struct WordTree {
  std::vector<int> order;   // BFS order, identity first
  std::vector<int> parent;  // -1 for identity
  std::vector<int> via;     // generator slot
};

WordTree word_tree(const FiniteGroup& g, std::span<const int> gens) {
  WordTree t;
  t.parent.assign(g.size(), -2);
  t.via.assign(g.size(), -1);
  std::deque<int> todo{g.identity()};
  t.parent[g.identity()] = -1;
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    t.order.push_back(x);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = g.mul(x, gens[k]);
      if (t.parent[y] == -2) {
        t.parent[y] = x;
        t.via[y] = static_cast<int>(k);
        todo.push_back(y);
      }
    }
  }
  return t;
}

bool try_extend(const FiniteGroup& g, const WordTree& tree, std::span<const int> images, std::vector<int>& out) {
  if (static_cast<int>(tree.order.size()) != g.size()) return false;  // gens do not generate
  out.assign(g.size(), -1);
  out[g.identity()] = g.identity();
  for (std::size_t k = 1; k < tree.order.size(); ++k) {
    int y = tree.order[k];
    out[y] = g.mul(out[tree.parent[y]], images[tree.via[y]]);
  }
  return is_automorphism(g, out);
}

struct CandidateSpace {
  std::vector<std::vector<int>> options;  // per generator, same-order elements
  long long total = 1;

  std::vector<int> decode(long long flat) const {
    std::vector<int> pick(options.size());
    for (std::size_t k = options.size(); k-- > 0;) {
      auto n = static_cast<long long>(options[k].size());
      pick[k] = options[k][flat % n];
      flat /= n;
    }
    return pick;
  }
};

CandidateSpace candidates(const FiniteGroup& g, std::span<const int> gens) {
  CandidateSpace s;
  for (int gen : gens) {
    std::vector<int> opts;
    for (int x = 0; x < g.size(); ++x)
      if (g.order(x) == g.order(gen)) opts.push_back(x);
    s.total *= static_cast<long long>(opts.size());
    s.options.push_back(std::move(opts));
  }
  return s;
}

}  // namespace

GroupAutomorphism extend_from_generators(const FiniteGroup& g, std::span<const int> gens,
                                         std::span<const int> images) {
  GroupAutomorphism r;
  if (gens.size() != images.size()) return r;
  WordTree tree = word_tree(g, gens);
  if (!try_extend(g, tree, images, r.image)) r.image.clear();
  return r;
}

std::vector<GroupAutomorphism> enumerate_automorphisms_serial(const FiniteGroup& g, std::span<const int> gens) {
  WordTree tree = word_tree(g, gens);
  CandidateSpace space = candidates(g, gens);
  std::vector<GroupAutomorphism> out;
  std::vector<int> image;
  for (long long flat = 0; flat < space.total; ++flat) {
    std::vector<int> pick = space.decode(flat);
    if (try_extend(g, tree, pick, image)) out.push_back({image});
  }
  return out;
}

std::vector<GroupAutomorphism> enumerate_automorphisms(const FiniteGroup& g, std::span<const int> gens) {
  WordTree tree = word_tree(g, gens);
  CandidateSpace space = candidates(g, gens);
  std::vector<std::vector<int>> found(static_cast<std::size_t>(space.total));
#pragma omp parallel for schedule(dynamic, 256)
  for (long long flat = 0; flat < space.total; ++flat) {
    std::vector<int> pick = space.decode(flat);
    std::vector<int> image;
    if (try_extend(g, tree, pick, image)) found[flat] = std::move(image);
  }
  std::vector<GroupAutomorphism> out;
  for (auto& f : found)
    if (!f.empty()) out.push_back({std::move(f)});
  return out;
}

std::vector<GroupAutomorphism> enumerate_automorphisms(const BuiltinGroup& g) {
  auto gens = g.generators();
  return enumerate_automorphisms(g.group(), gens);
}

namespace {

GroupAutomorphism from_images(const BuiltinGroup& g, const std::array<GElem, 4>& images) {
  auto gens = g.generators();
  std::array<int, 4> img{};
  for (int k = 0; k < 4; ++k) img[k] = g.index(images[k]);
  GroupAutomorphism psi = extend_from_generators(g.group(), gens, img);
  if (psi.image.empty())
    throw Error("group", "generator images " + to_string(images[0]) + ", " + to_string(images[1]) + ", " +
                             to_string(images[2]) + ", " + to_string(images[3]) + " do not define an automorphism");
  return psi;
}

}  // namespace

GroupAutomorphism automorphism_from_data(const BuiltinGroup& g, const GElem& sigma_image, const GElem& tau_image,
                                         const std::array<std::array<int, 2>, 2>& m) {
  return from_images(g, {sigma_image, tau_image, GElem::make(0, 0, m[0][0], m[0][1]),
                         GElem::make(0, 0, m[1][0], m[1][1])});
}

GroupAutomorphism automorphism_from_data_columns(const BuiltinGroup& g, const GElem& sigma_image,
                                                 const GElem& tau_image,
                                                 const std::array<std::array<int, 2>, 2>& m) {
  return from_images(g, {sigma_image, tau_image, GElem::make(0, 0, m[0][0], m[1][0]),
                         GElem::make(0, 0, m[0][1], m[1][1])});
}

std::array<GroupAutomorphism, 4> surface_automorphisms(const BuiltinGroup& g) {
  const GElem sigma{1, 0, 0, 0}, sigma2{2, 0, 0, 0}, tau{0, 1, 0, 0};
  const GElem tau_sigma = g_mul(tau, sigma);
  return {identity_automorphism(g.group()),
          automorphism_from_data(g, sigma, tau_sigma, {{{0, 1}, {2, 0}}}),
          automorphism_from_data(g, sigma2, tau, {{{0, 2}, {1, 0}}}),
          automorphism_from_data(g, sigma2, tau, {{{0, 2}, {2, 0}}})};
}

std::array<GElem, 4> generator_images(const BuiltinGroup& g, const GroupAutomorphism& psi) {
  auto gens = g.generators();
  std::array<GElem, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = g.elem(psi.apply(gens[k]));
  return out;
}

GroupAutomorphism automorphism_from_generator_images(const BuiltinGroup& g, const std::array<GElem, 4>& images) {
  return from_images(g, images);
}

}  // namespace pqs
