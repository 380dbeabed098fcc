#pragma once

// Finite-dimensional Hopf algebras given by structure tensors in a fixed
// basis, together with axiom validation, the dual, the op/cop variants,
// integrals and the semisimplicity predicates.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schrod/error.hpp"
#include "schrod/field.hpp"
#include "schrod/matrix.hpp"

namespace schrod {

struct Term {
  uint32_t index;
  Scalar coef;
};
using Sparse = std::vector<Term>;

struct CoTerm {
  uint32_t left;
  uint32_t right;
  Scalar coef;
};

struct HopfAlgebra {
  std::string name;
  Field field;
  size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<Sparse> mult;                  // slot i*dim+j holds e_i e_j
  Vec unit;                                  // 1 in the basis
  std::vector<std::vector<CoTerm>> comult;   // Delta(e_i)
  Vec counit;                                // eps(e_i)
  Matrix antipode;                           // column j is S(e_j)
  std::optional<Matrix> antipode_inv;        // filled by finalize when S is invertible
  // Optional algebra generators. When present, every basis element must be a
  // linear combination of products of generators; large algebras use them to
  // reduce the multiplicativity checks to (generator, basis) pairs.
  std::vector<Vec> generators;

  const Sparse& product(size_t i, size_t j) const { return mult[i * dim + j]; }
  const Matrix& s_inv() const {
    if (!antipode_inv) fail(ErrorKind::SingularMatrix, "antipode of " + name + " is not invertible");
    return *antipode_inv;
  }
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

// Checks tensor shapes and caches S^{-1}; the result is immutable.
inline HopfPtr finalize(HopfAlgebra a) {
  const size_t d = a.dim;
  auto bad = [&](const std::string& what) { fail(ErrorKind::DimensionMismatch, a.name + ": " + what); };
  if (a.basis.empty()) {
    for (size_t i = 0; i < d; ++i) a.basis.push_back("e" + std::to_string(i));
  }
  if (a.basis.size() != d) bad("basis label count");
  if (a.mult.size() != d * d) bad("multiplication table size");
  if (a.unit.size() != d) bad("unit length");
  if (a.comult.size() != d) bad("comultiplication table size");
  if (a.counit.size() != d) bad("counit length");
  if (a.antipode.rows() != d || a.antipode.cols() != d) bad("antipode shape");
  for (const auto& sp : a.mult)
    for (const auto& t : sp)
      if (t.index >= d) bad("multiplication index out of range");
  for (const auto& row : a.comult)
    for (const auto& t : row)
      if (t.left >= d || t.right >= d) bad("comultiplication index out of range");
  for (const auto& g : a.generators)
    if (g.size() != d) bad("generator length");
  if (is_invertible(a.antipode)) a.antipode_inv = invert(a.antipode);
  return std::make_shared<const HopfAlgebra>(std::move(a));
}

// ---------------------------------------------------------------------------
// Element-level operations

// Dense accumulator with a touched list, reused across many small sums.
class Accum {
 public:
  Accum(Field f, size_t n) : field_(f), vals_(n, Scalar(f)), mark_(n, 0) {}
  void add(size_t i, const Scalar& a) {
    touch(i);
    vals_[i] += a;
  }
  void add(size_t i, const Scalar& a, const Scalar& b) {
    touch(i);
    vals_[i].add_mul(a, b);
  }
  const Scalar& get(size_t i) const { return vals_[i]; }
  const std::vector<size_t>& touched() const { return touched_; }
  size_t size() const { return vals_.size(); }
  void clear() {
    for (size_t i : touched_) {
      vals_[i] = Scalar(field_);
      mark_[i] = 0;
    }
    touched_.clear();
  }
  Vec dense() const { return vals_; }
  Sparse sparse() const {
    Sparse s;
    std::vector<size_t> idx = touched_;
    std::sort(idx.begin(), idx.end());
    for (size_t i : idx)
      if (!vals_[i].is_zero()) s.push_back({static_cast<uint32_t>(i), vals_[i]});
    return s;
  }
  // Index of the first entry where the two accumulators differ, or npos.
  static size_t first_difference(const Accum& a, const Accum& b) {
    for (size_t i : a.touched_)
      if (a.vals_[i] != b.vals_[i]) return i;
    for (size_t i : b.touched_)
      if (a.vals_[i] != b.vals_[i]) return i;
    return static_cast<size_t>(-1);
  }

 private:
  void touch(size_t i) {
    if (!mark_[i]) {
      mark_[i] = 1;
      touched_.push_back(i);
    }
  }
  Field field_;
  Vec vals_;
  std::vector<char> mark_;
  std::vector<size_t> touched_;
};

inline Sparse to_sparse(const Vec& v) {
  Sparse s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.push_back({static_cast<uint32_t>(i), v[i]});
  return s;
}
inline Vec to_dense(Field f, size_t n, const Sparse& s) {
  Vec v = zero_vec(f, n);
  for (const auto& t : s) v[t.index] += t.coef;
  return v;
}

inline Vec basis_vec(const HopfAlgebra& A, size_t i) { return unit_vec(A.field, A.dim, i); }

inline Vec multiply(const HopfAlgebra& A, const Vec& x, const Vec& y) {
  if (x.size() != A.dim || y.size() != A.dim) fail(ErrorKind::DimensionMismatch, "multiply: element length");
  Vec r = zero_vec(A.field, A.dim);
  for (size_t i = 0; i < A.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < A.dim; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& t : A.product(i, j)) r[t.index].add_mul(c, t.coef);
    }
  }
  return r;
}

inline Vec power(const HopfAlgebra& A, const Vec& x, int64_t e) {
  if (e < 0) fail(ErrorKind::BadParameter, "negative power");
  Vec r = A.unit;
  for (int64_t i = 0; i < e; ++i) r = multiply(A, r, x);
  return r;
}

inline Vec apply_antipode(const HopfAlgebra& A, const Vec& x) { return A.antipode * x; }
inline Vec apply_antipode_inv(const HopfAlgebra& A, const Vec& x) { return A.s_inv() * x; }

inline Scalar counit_of(const HopfAlgebra& A, const Vec& x) {
  Scalar s(A.field);
  for (size_t i = 0; i < A.dim; ++i)
    if (!x[i].is_zero()) s.add_mul(A.counit[i], x[i]);
  return s;
}

// <p, a> for p in the dual basis coordinates and a in A.
inline Scalar pairing(const Vec& p, const Vec& a) {
  if (p.size() != a.size()) fail(ErrorKind::DimensionMismatch, "pairing lengths");
  Scalar s(a.empty() ? Field() : a[0].field());
  for (size_t i = 0; i < p.size(); ++i)
    if (!p[i].is_zero() && !a[i].is_zero()) s.add_mul(p[i], a[i]);
  return s;
}

// Left multiplication by e_i as a matrix (column j = e_i e_j).
inline Matrix left_mult_matrix(const HopfAlgebra& A, const Vec& x) {
  Matrix m(A.field, A.dim, A.dim);
  for (size_t j = 0; j < A.dim; ++j) m.set_column(j, multiply(A, x, basis_vec(A, j)));
  return m;
}
inline Matrix right_mult_matrix(const HopfAlgebra& A, const Vec& x) {
  Matrix m(A.field, A.dim, A.dim);
  for (size_t j = 0; j < A.dim; ++j) m.set_column(j, multiply(A, basis_vec(A, j), x));
  return m;
}

// Elements of tensor powers, keyed by the tuple of basis indices.
using Legs = std::vector<uint32_t>;
using TensorElem = std::map<Legs, Scalar>;

inline void tensor_add(TensorElem& t, const Legs& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = t.find(k);
  if (it == t.end()) {
    t.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

// Iterated coproduct of a basis element into `legs` tensor factors,
// splitting the first factor at each step: (Delta (x) id ...) ... Delta.
inline std::vector<std::pair<Legs, Scalar>> iterated_coproduct(const HopfAlgebra& A, size_t i, int legs) {
  TensorElem cur;
  cur.emplace(Legs{static_cast<uint32_t>(i)}, Scalar::one(A.field));
  for (int step = 1; step < legs; ++step) {
    TensorElem next;
    for (const auto& [k, c] : cur) {
      for (const auto& t : A.comult[k[0]]) {
        Legs nk;
        nk.reserve(k.size() + 1);
        nk.push_back(t.left);
        nk.push_back(t.right);
        nk.insert(nk.end(), k.begin() + 1, k.end());
        tensor_add(next, nk, c * t.coef);
      }
    }
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

inline TensorElem comultiply(const HopfAlgebra& A, const Vec& x) {
  TensorElem t;
  for (size_t i = 0; i < A.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& c : A.comult[i]) tensor_add(t, {c.left, c.right}, x[i] * c.coef);
  }
  return t;
}

// Factor-wise product of two elements of A^{(x) k}.
inline TensorElem tensor_multiply(const HopfAlgebra& A, const TensorElem& x, const TensorElem& y) {
  TensorElem out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      // expand the product of the factors one leg at a time
      std::vector<std::pair<Legs, Scalar>> partial{{Legs{}, cx * cy}};
      for (size_t leg = 0; leg < kx.size(); ++leg) {
        std::vector<std::pair<Legs, Scalar>> next;
        for (const auto& [pk, pc] : partial)
          for (const auto& t : A.product(kx[leg], ky[leg])) {
            Legs nk = pk;
            nk.push_back(t.index);
            next.emplace_back(std::move(nk), pc * t.coef);
          }
        partial = std::move(next);
      }
      for (const auto& [k, c] : partial) tensor_add(out, k, c);
    }
  return out;
}

inline TensorElem tensor_of(const std::vector<Vec>& factors) {
  TensorElem t;
  std::vector<std::pair<Legs, Scalar>> partial{{Legs{}, Scalar::one(factors.at(0)[0].field())}};
  for (const auto& f : factors) {
    std::vector<std::pair<Legs, Scalar>> next;
    for (const auto& [pk, pc] : partial)
      for (size_t i = 0; i < f.size(); ++i) {
        if (f[i].is_zero()) continue;
        Legs nk = pk;
        nk.push_back(static_cast<uint32_t>(i));
        next.emplace_back(std::move(nk), pc * f[i]);
      }
    partial = std::move(next);
  }
  for (const auto& [k, c] : partial) tensor_add(t, k, c);
  return t;
}

inline std::string tensor_str(const HopfAlgebra& A, const TensorElem& t) {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : t) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    for (size_t i = 0; i < k.size(); ++i) s += (i ? "(x)" : " ") + A.basis[k[i]];
  }
  return s;
}

inline std::string elem_str(const HopfAlgebra& A, const Vec& x) {
  std::string s;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + x[i].str() + ")" + A.basis[i];
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// Validation

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string witness;  // first failing instance, empty on success
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const AxiomCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  std::string summary() const {
    std::string s;
    for (const auto& c : checks) {
      s += (c.passed ? "  ok   " : "  FAIL ") + c.name;
      if (!c.passed) s += "  [" + c.witness + "]";
      s += "\n";
    }
    return s;
  }
};

namespace detail {

inline constexpr size_t kFullCheckDim = 36;

// Elements x for which multiplicativity/associativity in the first slot is
// checked: all basis vectors, or the declared generators for large algebras.
inline std::vector<Vec> first_slot_elements(const HopfAlgebra& A) {
  std::vector<Vec> xs;
  if (A.dim > kFullCheckDim && !A.generators.empty()) return A.generators;
  for (size_t i = 0; i < A.dim; ++i) xs.push_back(basis_vec(A, i));
  return xs;
}

inline void add_product(const HopfAlgebra& A, Accum& acc, const Vec& x, size_t j, const Scalar& scale) {
  for (size_t i = 0; i < A.dim; ++i) {
    if (x[i].is_zero()) continue;
    Scalar c = x[i] * scale;
    for (const auto& t : A.product(i, j)) acc.add(t.index, c, t.coef);
  }
}

}  // namespace detail

inline ValidationReport validate_hopf(const HopfAlgebra& A) {
  const size_t d = A.dim;
  const Field f = A.field;
  if (A.mult.size() != d * d || A.comult.size() != d || A.unit.size() != d || A.counit.size() != d ||
      A.antipode.rows() != d || A.antipode.cols() != d)
    fail(ErrorKind::DimensionMismatch, "structure tensors of " + A.name + " have inconsistent shapes");
  ValidationReport rep;
  auto record = [&](const std::string& name, std::string witness) {
    rep.checks.push_back({name, witness.empty(), std::move(witness)});
  };
  const std::vector<Vec> firsts = detail::first_slot_elements(A);
  auto label = [&](const Vec& x) { return elem_str(A, x); };

  // associativity: (x e_j) e_k == x (e_j e_k)
  {
    std::string w;
    Accum lhs(f, d), rhs(f, d), xy(f, d);
    for (const Vec& x : firsts) {
      for (size_t j = 0; j < d && w.empty(); ++j) {
        xy.clear();
        detail::add_product(A, xy, x, j, Scalar::one(f));
        Vec xyv = xy.dense();
        for (size_t k = 0; k < d; ++k) {
          lhs.clear();
          rhs.clear();
          detail::add_product(A, lhs, xyv, k, Scalar::one(f));
          for (const auto& t : A.product(j, k)) detail::add_product(A, rhs, x, t.index, t.coef);
          if (Accum::first_difference(lhs, rhs) != static_cast<size_t>(-1)) {
            w = "(" + label(x) + ")*" + A.basis[j] + "*" + A.basis[k];
            break;
          }
        }
      }
      if (!w.empty()) break;
    }
    record("associativity", w);
  }
  // unit
  {
    std::string w;
    for (size_t j = 0; j < d && w.empty(); ++j) {
      Vec e = basis_vec(A, j);
      if (multiply(A, A.unit, e) != e || multiply(A, e, A.unit) != e) w = A.basis[j];
    }
    record("unit", w);
  }
  // coassociativity
  {
    std::string w;
    for (size_t i = 0; i < d && w.empty(); ++i) {
      TensorElem l, r;
      for (const auto& t : A.comult[i]) {
        for (const auto& u : A.comult[t.left]) tensor_add(l, {u.left, u.right, t.right}, t.coef * u.coef);
        for (const auto& u : A.comult[t.right]) tensor_add(r, {t.left, u.left, u.right}, t.coef * u.coef);
      }
      if (l != r) w = A.basis[i];
    }
    record("coassociativity", w);
  }
  // counit
  {
    std::string w;
    for (size_t i = 0; i < d && w.empty(); ++i) {
      Vec l = zero_vec(f, d), r = zero_vec(f, d);
      for (const auto& t : A.comult[i]) {
        l[t.right].add_mul(A.counit[t.left], t.coef);
        r[t.left].add_mul(A.counit[t.right], t.coef);
      }
      Vec e = basis_vec(A, i);
      if (l != e || r != e) w = A.basis[i];
    }
    record("counit", w);
  }
  // comultiplication is an algebra map
  {
    std::string w;
    TensorElem one_one = tensor_of({A.unit, A.unit});
    if (comultiply(A, A.unit) != one_one) w = "Delta(1)";
    std::vector<TensorElem> deltas(d);
    for (size_t j = 0; j < d; ++j) deltas[j] = comultiply(A, basis_vec(A, j));
    for (const Vec& x : firsts) {
      if (!w.empty()) break;
      TensorElem dx = comultiply(A, x);
      for (size_t j = 0; j < d; ++j) {
        Accum xy(f, d);
        detail::add_product(A, xy, x, j, Scalar::one(f));
        if (comultiply(A, xy.dense()) != tensor_multiply(A, dx, deltas[j])) {
          w = "Delta((" + label(x) + ")*" + A.basis[j] + ")";
          break;
        }
      }
    }
    record("comultiplication multiplicative", w);
  }
  // counit is an algebra map
  {
    std::string w;
    if (!counit_of(A, A.unit).is_one()) w = "eps(1)";
    for (size_t i = 0; i < d && w.empty(); ++i)
      for (size_t j = 0; j < d; ++j) {
        Scalar e(f);
        for (const auto& t : A.product(i, j)) e.add_mul(A.counit[t.index], t.coef);
        if (e != A.counit[i] * A.counit[j]) {
          w = "eps(" + A.basis[i] + "*" + A.basis[j] + ")";
          break;
        }
      }
    record("counit multiplicative", w);
  }
  // antipode
  {
    std::string w;
    for (size_t i = 0; i < d && w.empty(); ++i) {
      Vec l = zero_vec(f, d), r = zero_vec(f, d);
      for (const auto& t : A.comult[i]) {
        Vec sl = A.antipode.column(t.left), sr = A.antipode.column(t.right);
        axpy(l, t.coef, multiply(A, sl, basis_vec(A, t.right)));
        axpy(r, t.coef, multiply(A, basis_vec(A, t.left), sr));
      }
      Vec target = scale(A.counit[i], A.unit);
      if (l != target || r != target) w = A.basis[i];
    }
    record("antipode", w);
  }
  record("antipode invertible", A.antipode_inv ? "" : "S is singular");
  return rep;
}

// Validates f : A -> B (matrix B.dim x A.dim) as a Hopf algebra map.
inline ValidationReport check_hopf_map(const Matrix& fm, const HopfAlgebra& A, const HopfAlgebra& B) {
  if (fm.rows() != B.dim || fm.cols() != A.dim) fail(ErrorKind::DimensionMismatch, "Hopf map shape");
  ValidationReport rep;
  auto record = [&](const std::string& name, std::string witness) {
    rep.checks.push_back({name, witness.empty(), std::move(witness)});
  };
  std::vector<Vec> img(A.dim);
  for (size_t i = 0; i < A.dim; ++i) img[i] = fm.column(i);
  record("unital", fm * A.unit == B.unit ? "" : "f(1)");
  {
    std::string w;
    for (size_t i = 0; i < A.dim && w.empty(); ++i)
      for (size_t j = 0; j < A.dim; ++j)
        if (fm * to_dense(A.field, A.dim, A.product(i, j)) != multiply(B, img[i], img[j])) {
          w = A.basis[i] + "*" + A.basis[j];
          break;
        }
    record("multiplicative", w);
  }
  {
    std::string w;
    for (size_t i = 0; i < A.dim && w.empty(); ++i) {
      TensorElem lhs;
      for (const auto& t : A.comult[i]) {
        TensorElem part = tensor_of({img[t.left], img[t.right]});
        for (const auto& [k, c] : part) tensor_add(lhs, k, c * t.coef);
      }
      if (lhs != comultiply(B, img[i])) w = "Delta(" + A.basis[i] + ")";
    }
    record("comultiplicative", w);
  }
  {
    std::string w;
    for (size_t i = 0; i < A.dim && w.empty(); ++i)
      if (counit_of(B, img[i]) != A.counit[i]) w = A.basis[i];
    record("counital", w);
  }
  record("antipode", fm * A.antipode == B.antipode * fm ? "" : "f S != S f");
  return rep;
}

// ---------------------------------------------------------------------------
// Dual and structural variants

inline HopfPtr dual(const HopfAlgebra& A) {
  const size_t d = A.dim;
  HopfAlgebra D;
  D.name = "dual(" + A.name + ")";
  D.field = A.field;
  D.dim = d;
  for (const auto& b : A.basis) D.basis.push_back(b + "*");
  D.mult.assign(d * d, {});
  {
    std::vector<std::map<uint32_t, Scalar>> tmp(d * d);
    for (size_t k = 0; k < d; ++k)
      for (const auto& t : A.comult[k]) {
        auto& slot = tmp[t.left * d + t.right];
        auto it = slot.find(static_cast<uint32_t>(k));
        if (it == slot.end())
          slot.emplace(static_cast<uint32_t>(k), t.coef);
        else
          it->second += t.coef;
      }
    for (size_t s = 0; s < d * d; ++s)
      for (const auto& [k, c] : tmp[s])
        if (!c.is_zero()) D.mult[s].push_back({k, c});
  }
  D.unit = A.counit;
  D.counit = A.unit;
  D.comult.assign(d, {});
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      for (const auto& t : A.product(i, j))
        D.comult[t.index].push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(j), t.coef});
  D.antipode = A.antipode.transpose();
  return finalize(std::move(D));
}

inline HopfPtr op_variant(const HopfAlgebra& A) {
  HopfAlgebra B = A;
  B.name = A.name + "^op";
  for (size_t i = 0; i < A.dim; ++i)
    for (size_t j = 0; j < A.dim; ++j) B.mult[i * A.dim + j] = A.product(j, i);
  B.antipode = A.s_inv();
  B.antipode_inv.reset();
  return finalize(std::move(B));
}

inline HopfPtr cop_variant(const HopfAlgebra& A) {
  HopfAlgebra B = A;
  B.name = A.name + "^cop";
  for (auto& row : B.comult)
    for (auto& t : row) std::swap(t.left, t.right);
  B.antipode = A.s_inv();
  B.antipode_inv.reset();
  return finalize(std::move(B));
}

inline Matrix antipode_inverse(const HopfAlgebra& A) { return A.s_inv(); }

// ---------------------------------------------------------------------------
// Integrals and predicates

struct Integrals {
  Vec left_integral;            // Lambda in A with a Lambda = eps(a) Lambda
  Vec right_cointegral;         // lambda in A* with lambda p = p(1) lambda
  Vec modular_function;         // alpha in A* with Lambda a = alpha(a) Lambda
  Vec distinguished_grouplike;  // g in A with p lambda = <p, g> lambda
  Scalar pairing;               // <lambda, Lambda> after normalisation
};

namespace detail {

inline Vec one_dim_kernel(const Matrix& stacked, const std::string& what) {
  auto ns = nullspace(stacked);
  if (ns.size() != 1)
    fail(ErrorKind::IntegralSpaceNotOneDimensional, what + " space has dimension " + std::to_string(ns.size()));
  Vec v = ns[0];
  for (const auto& s : v)
    if (!s.is_zero()) return scale(s.inverse(), v);
  return v;
}

// Stacks (L_i - c_i I) for every basis element into one tall matrix.
inline Matrix stacked_eigen_system(const std::vector<Matrix>& ops, const Vec& eig) {
  size_t d = ops.empty() ? 0 : ops[0].rows();
  Field f = ops.empty() ? Field() : ops[0].field();
  Matrix m(f, ops.size() * d, d);
  for (size_t i = 0; i < ops.size(); ++i)
    for (size_t r = 0; r < d; ++r)
      for (size_t c = 0; c < d; ++c) {
        Scalar v = ops[i](r, c);
        if (r == c) v -= eig[i];
        m(i * d + r, c) = v;
      }
  return m;
}

// Returns s with x = s y, given y != 0; throws if x is not a multiple of y.
inline Scalar ratio(const Vec& x, const Vec& y) {
  for (size_t k = 0; k < y.size(); ++k) {
    if (y[k].is_zero()) continue;
    Scalar s = x[k] / y[k];
    if (x != scale(s, y)) fail(ErrorKind::InvalidAlgebra, "integral is not an eigenvector");
    return s;
  }
  fail(ErrorKind::InvalidAlgebra, "zero integral");
}

}  // namespace detail

inline Integrals integrals(const HopfAlgebra& A) {
  const size_t d = A.dim;
  Integrals out;
  std::vector<Matrix> left(d);
  for (size_t i = 0; i < d; ++i) left[i] = left_mult_matrix(A, basis_vec(A, i));
  out.left_integral = detail::one_dim_kernel(detail::stacked_eigen_system(left, A.counit), "left integral");

  HopfPtr B = dual(A);
  std::vector<Matrix> right(d);
  for (size_t i = 0; i < d; ++i) right[i] = right_mult_matrix(*B, basis_vec(*B, i));
  out.right_cointegral = detail::one_dim_kernel(detail::stacked_eigen_system(right, B->counit), "right cointegral");

  out.modular_function = zero_vec(A.field, d);
  for (size_t i = 0; i < d; ++i)
    out.modular_function[i] = detail::ratio(multiply(A, out.left_integral, basis_vec(A, i)), out.left_integral);
  out.distinguished_grouplike = zero_vec(A.field, d);
  for (size_t i = 0; i < d; ++i)
    out.distinguished_grouplike[i] =
        detail::ratio(multiply(*B, basis_vec(*B, i), out.right_cointegral), out.right_cointegral);

  out.pairing = pairing(out.right_cointegral, out.left_integral);
  if (!out.pairing.is_zero()) {
    out.right_cointegral = scale(out.pairing.inverse(), out.right_cointegral);
    out.pairing = Scalar::one(A.field);
  }
  return out;
}

inline bool is_unimodular(const HopfAlgebra& A) { return integrals(A).modular_function == A.counit; }
inline bool is_semisimple(const HopfAlgebra& A) { return !counit_of(A, integrals(A).left_integral).is_zero(); }
inline bool is_cosemisimple(const HopfAlgebra& A) {
  return !pairing(integrals(A).right_cointegral, A.unit).is_zero();
}

inline Scalar trace_s_squared(const HopfAlgebra& A) { return (A.antipode * A.antipode).trace(); }

}  // namespace schrod
