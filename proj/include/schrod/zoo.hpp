#pragma once

// Built-in finite groups and Hopf algebras: group algebras, their duals,
// Taft algebras and Sweedler's four-dimensional algebra.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "schrod/hopf.hpp"

namespace schrod {

struct FiniteGroup {
  std::string name;
  size_t order = 0;
  std::vector<std::string> labels;
  std::vector<uint32_t> table;  // table[g*order+h] = g h
  std::vector<uint32_t> inverse;
  uint32_t identity = 0;

  uint32_t mul(uint32_t g, uint32_t h) const { return table[g * order + h]; }
  uint32_t inv(uint32_t g) const { return inverse[g]; }
  uint32_t pow(uint32_t g, int64_t e) const {
    if (e < 0) return pow(inv(g), -e);
    uint32_t r = identity;
    for (int64_t i = 0; i < e; ++i) r = mul(r, g);
    return r;
  }
  size_t element_order(uint32_t g) const {
    size_t k = 1;
    for (uint32_t x = g; x != identity; x = mul(x, g)) ++k;
    return k;
  }
};

namespace detail {

// Builds a group from an element list and a multiplication closure; the
// identity is located and moved to index 0.
template <class T>
FiniteGroup make_group(const std::string& name, std::vector<T> elems, const std::function<T(const T&, const T&)>& op,
                       const std::function<std::string(const T&)>& label) {
  FiniteGroup G;
  G.name = name;
  G.order = elems.size();
  std::map<T, uint32_t> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<uint32_t>(i);
  G.table.resize(G.order * G.order);
  for (size_t i = 0; i < G.order; ++i)
    for (size_t j = 0; j < G.order; ++j) {
      auto it = index.find(op(elems[i], elems[j]));
      if (it == index.end()) fail(ErrorKind::InvalidAlgebra, name + " is not closed");
      G.table[i * G.order + j] = it->second;
    }
  for (auto& e : elems) G.labels.push_back(label(e));
  G.identity = static_cast<uint32_t>(G.order);
  for (uint32_t i = 0; i < G.order; ++i) {
    bool is_id = true;
    for (uint32_t j = 0; j < G.order && is_id; ++j) is_id = G.mul(i, j) == j;
    if (is_id) G.identity = i;
  }
  if (G.identity == G.order) fail(ErrorKind::InvalidAlgebra, name + " has no identity");
  G.inverse.resize(G.order);
  for (uint32_t i = 0; i < G.order; ++i)
    for (uint32_t j = 0; j < G.order; ++j)
      if (G.mul(i, j) == G.identity) G.inverse[i] = j;
  return G;
}

inline std::string power_label(const std::string& base, size_t k) {
  if (k == 0) return "";
  return k == 1 ? base : base + "^" + std::to_string(k);
}

}  // namespace detail

inline FiniteGroup cyclic_group(size_t n) {
  if (n < 1) fail(ErrorKind::BadParameter, "cyclic group order must be positive");
  std::vector<size_t> el(n);
  std::iota(el.begin(), el.end(), 0);
  return detail::make_group<size_t>(
      "C" + std::to_string(n), el, [n](const size_t& a, const size_t& b) { return (a + b) % n; },
      [](const size_t& a) { return a == 0 ? std::string("e") : detail::power_label("a", a); });
}

// Dihedral group of order 2n, elements r^i s^j with s r s = r^{-1}.
inline FiniteGroup dihedral_group(size_t n) {
  if (n < 2) fail(ErrorKind::BadParameter, "dihedral group needs n >= 2");
  using P = std::pair<size_t, size_t>;
  std::vector<P> el;
  for (size_t j = 0; j < 2; ++j)
    for (size_t i = 0; i < n; ++i) el.push_back({i, j});
  return detail::make_group<P>(
      "D" + std::to_string(n), el,
      [n](const P& a, const P& b) {
        size_t i = a.second == 0 ? (a.first + b.first) % n : (a.first + n - b.first) % n;
        return P{i, (a.second + b.second) % 2};
      },
      [](const P& a) {
        std::string s = detail::power_label("r", a.first) + (a.second ? "s" : "");
        return s.empty() ? std::string("e") : s;
      });
}

// Symmetric group on n <= 4 letters; permutations composed right to left.
inline FiniteGroup symmetric_group(size_t n) {
  if (n < 1 || n > 4) fail(ErrorKind::BadParameter, "symmetric group supported for n <= 4");
  using P = std::vector<int>;
  P p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<P> el;
  do el.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return detail::make_group<P>(
      "S" + std::to_string(n), el,
      [](const P& a, const P& b) {
        P c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<size_t>(b[i])];
        return c;
      },
      [](const P& a) {
        std::string s = "[";
        for (int x : a) s += std::to_string(x + 1);
        return s + "]";
      });
}

inline FiniteGroup quaternion_group() {
  // elements (sign, unit) with unit in {1,i,j,k}
  using P = std::pair<int, int>;
  static const int tbl[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  std::vector<P> el;
  for (int s : {1, -1})
    for (int u = 0; u < 4; ++u) el.push_back({s, u});
  return detail::make_group<P>(
      "Q8", el,
      [](const P& a, const P& b) {
        const int* r = tbl[a.second][b.second];
        return P{a.first * b.first * r[0], r[1]};
      },
      [](const P& a) {
        static const char* names[] = {"1", "i", "j", "k"};
        return std::string(a.first < 0 ? "-" : "") + names[a.second];
      });
}

inline FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b) {
  using P = std::pair<uint32_t, uint32_t>;
  std::vector<P> el;
  for (uint32_t i = 0; i < a.order; ++i)
    for (uint32_t j = 0; j < b.order; ++j) el.push_back({i, j});
  return detail::make_group<P>(
      a.name + "x" + b.name, el, [&](const P& x, const P& y) { return P{a.mul(x.first, y.first), b.mul(x.second, y.second)}; },
      [&](const P& x) { return "(" + a.labels[x.first] + "," + b.labels[x.second] + ")"; });
}

// Parses group names such as C6, D4, S3, Q8 and products like C2xC3.
inline FiniteGroup parse_group(const std::string& spec) {
  auto x = spec.find('x');
  if (x != std::string::npos) return product_group(parse_group(spec.substr(0, x)), parse_group(spec.substr(x + 1)));
  if (spec == "Q8") return quaternion_group();
  if (spec.size() >= 2) {
    size_t n = 0;
    try {
      size_t pos = 0;
      n = std::stoul(spec.substr(1), &pos);
      if (pos != spec.size() - 1) n = 0;
    } catch (...) {
      n = 0;
    }
    if (n > 0) {
      if (spec[0] == 'C') return cyclic_group(n);
      if (spec[0] == 'D') return dihedral_group(n);
      if (spec[0] == 'S') return symmetric_group(n);
    }
  }
  fail(ErrorKind::UnsupportedSpec, "unknown group '" + spec + "'");
}

// k[G]: grouplike basis.
inline HopfPtr group_algebra(const FiniteGroup& G, Field f = Field::rationals()) {
  HopfAlgebra A;
  A.name = "k[" + G.name + "]";
  A.field = f;
  A.dim = G.order;
  A.basis = G.labels;
  A.mult.assign(A.dim * A.dim, {});
  for (uint32_t g = 0; g < G.order; ++g)
    for (uint32_t h = 0; h < G.order; ++h) A.mult[g * A.dim + h].push_back({G.mul(g, h), Scalar::one(f)});
  A.unit = unit_vec(f, A.dim, G.identity);
  A.comult.assign(A.dim, {});
  for (uint32_t g = 0; g < G.order; ++g) A.comult[g].push_back({g, g, Scalar::one(f)});
  A.counit = Vec(A.dim, Scalar::one(f));
  A.antipode = Matrix(f, A.dim, A.dim);
  for (uint32_t g = 0; g < G.order; ++g) A.antipode(G.inv(g), g) = Scalar::one(f);
  return finalize(std::move(A));
}

// k^G: basis of point masses delta_g.
inline HopfPtr dual_group_algebra(const FiniteGroup& G, Field f = Field::rationals()) {
  HopfAlgebra A;
  A.name = "k^" + G.name;
  A.field = f;
  A.dim = G.order;
  for (const auto& l : G.labels) A.basis.push_back("d(" + l + ")");
  A.mult.assign(A.dim * A.dim, {});
  for (uint32_t g = 0; g < G.order; ++g) A.mult[g * A.dim + g].push_back({g, Scalar::one(f)});
  A.unit = Vec(A.dim, Scalar::one(f));
  A.comult.assign(A.dim, {});
  for (uint32_t h = 0; h < G.order; ++h)
    for (uint32_t k = 0; k < G.order; ++k) A.comult[G.mul(h, k)].push_back({h, k, Scalar::one(f)});
  A.counit = unit_vec(f, A.dim, G.identity);
  A.antipode = Matrix(f, A.dim, A.dim);
  for (uint32_t g = 0; g < G.order; ++g) A.antipode(G.inv(g), g) = Scalar::one(f);
  return finalize(std::move(A));
}

// Matrix of the algebra map k[G] -> k[H] induced by a map of group elements.
inline Matrix group_algebra_map(const FiniteGroup& G, const FiniteGroup& H, const std::vector<uint32_t>& images,
                                Field f = Field::rationals()) {
  if (images.size() != G.order) fail(ErrorKind::DimensionMismatch, "group map length");
  Matrix m(f, H.order, G.order);
  for (uint32_t g = 0; g < G.order; ++g) m(images[g], g) = Scalar::one(f);
  return m;
}

// Taft algebra T_n(omega): basis g^i x^j (index j*n+i), g^n = 1, x^n = 0,
// x g = omega g x, g grouplike and x (1, g)-skew primitive.
inline HopfPtr taft(size_t n, const Scalar& omega) {
  if (n < 2) fail(ErrorKind::BadParameter, "Taft algebra needs n >= 2");
  const Field f = omega.field();
  {
    Scalar p = Scalar::one(f);
    for (size_t k = 1; k <= n; ++k) {
      p *= omega;
      if (p.is_one() && k < n) fail(ErrorKind::RootOrderMismatch, "omega has order " + std::to_string(k));
    }
    if (!p.is_one()) fail(ErrorKind::RootOrderMismatch, "omega^n != 1");
  }
  const size_t d = n * n;
  auto idx = [n](size_t i, size_t j) { return static_cast<uint32_t>(j * n + i); };
  HopfAlgebra A;
  A.name = n == 2 && omega == Scalar(f, -1) && f == Field::rationals() ? "sweedler" : "taft" + std::to_string(n);
  A.field = f;
  A.dim = d;
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) {
      std::string s = detail::power_label("g", i) + detail::power_label("x", j);
      A.basis.push_back(s.empty() ? "1" : s);
    }
  std::vector<Scalar> om(n, Scalar::one(f));
  for (size_t k = 1; k < n; ++k) om[k] = om[k - 1] * omega;
  A.mult.assign(d * d, {});
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l)
        for (size_t k = 0; k < n; ++k) {
          if (j + l >= n) continue;
          A.mult[idx(i, j) * d + idx(k, l)].push_back({idx((i + k) % n, j + l), om[(j * k) % n]});
        }
  A.unit = unit_vec(f, d, 0);
  A.counit = zero_vec(f, d);
  for (size_t i = 0; i < n; ++i) A.counit[idx(i, 0)] = Scalar::one(f);
  // Coproduct and antipode are extended multiplicatively from the generators.
  A.comult.assign(d, {});
  A.antipode = Matrix(f, d, d);
  HopfAlgebra alg = A;  // multiplication only
  alg.comult.assign(d, {});
  Vec g = basis_vec(alg, idx(1, 0)), x = basis_vec(alg, idx(0, 1));
  Vec gi = basis_vec(alg, idx(n - 1, 0));
  TensorElem dg = tensor_of({g, g});
  TensorElem dx = tensor_of({A.unit, x});
  for (const auto& [k, c] : tensor_of({x, g})) tensor_add(dx, k, c);
  Vec sg = gi, sx = scale(Scalar(f, -1), multiply(alg, x, gi));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) {
      TensorElem t = tensor_of({A.unit, A.unit});
      Vec s = A.unit;
      for (size_t a = 0; a < i; ++a) t = tensor_multiply(alg, t, dg);
      for (size_t b = 0; b < j; ++b) t = tensor_multiply(alg, t, dx);
      for (size_t b = 0; b < j; ++b) s = multiply(alg, s, sx);
      for (size_t a = 0; a < i; ++a) s = multiply(alg, s, sg);
      for (const auto& [k, c] : t) A.comult[idx(i, j)].push_back({k[0], k[1], c});
      A.antipode.set_column(idx(i, j), s);
    }
  A.generators = {g, x};
  return finalize(std::move(A));
}

inline HopfPtr sweedler() { return taft(2, Scalar(Field::rationals(), -1)); }

}  // namespace schrod
