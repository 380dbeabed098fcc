#pragma once

// Finite-dimensional modules over a Hopf algebra, stored as one action
// matrix per basis element. Besides the constructions on D(A)-modules this
// header has a hom-space solver used to look for isomorphisms.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "schrod/double.hpp"

namespace schrod {

struct Module {
  HopfPtr algebra;
  std::string name;
  size_t dim = 0;
  std::vector<Matrix> action;  // action[i] = rho(e_i)
};

// Right A-comodule: rho(m) = sum_k coaction[k] m (x) e_k.
struct Comodule {
  HopfPtr algebra;
  std::string name;
  size_t dim = 0;
  std::vector<Matrix> coaction;
};

inline Matrix act(const Module& M, const Vec& h) {
  if (h.size() != M.algebra->dim) fail(ErrorKind::DimensionMismatch, "element length");
  Matrix r(M.algebra->field, M.dim, M.dim);
  for (size_t i = 0; i < h.size(); ++i) r.add_scaled(h[i], M.action[i]);
  return r;
}

namespace detail {

inline bool same_algebra(const HopfAlgebra& a, const HopfAlgebra& b) {
  if (&a == &b) return true;
  if (a.dim != b.dim || a.field != b.field) return false;
  for (size_t s = 0; s < a.mult.size(); ++s)
    if (to_dense(a.field, a.dim, a.mult[s]) != to_dense(b.field, b.dim, b.mult[s])) return false;
  return a.unit == b.unit;
}

inline void require_same_algebra(const Module& M, const Module& N) {
  if (!same_algebra(*M.algebra, *N.algebra))
    fail(ErrorKind::AlgebraMismatch, M.name + " and " + N.name + " are modules over different algebras");
}

// Elements whose actions determine a module map: generators if declared.
inline std::vector<Vec> determining_elements(const HopfAlgebra& H) {
  if (!H.generators.empty()) return H.generators;
  std::vector<Vec> xs;
  for (size_t i = 0; i < H.dim; ++i) xs.push_back(basis_vec(H, i));
  return xs;
}

}  // namespace detail

inline ValidationReport validate_module(const Module& M) {
  const HopfAlgebra& H = *M.algebra;
  if (M.action.size() != H.dim) fail(ErrorKind::DimensionMismatch, "action list length");
  for (const auto& a : M.action)
    if (a.rows() != M.dim || a.cols() != M.dim) fail(ErrorKind::DimensionMismatch, "action matrix shape");
  ValidationReport rep;
  rep.checks.push_back({"unit acts as identity", act(M, H.unit).is_identity(), ""});
  if (!rep.checks.back().passed) rep.checks.back().witness = "rho(1) != I";
  std::string w;
  for (const Vec& x : detail::first_slot_elements(H)) {
    Matrix rx = act(M, x);
    for (size_t j = 0; j < H.dim && w.empty(); ++j) {
      Vec xy = multiply(H, x, basis_vec(H, j));
      if (rx * M.action[j] != act(M, xy)) w = "rho(" + elem_str(H, x) + ") rho(" + H.basis[j] + ")";
    }
    if (!w.empty()) break;
  }
  rep.checks.push_back({"action is multiplicative", w.empty(), w});
  return rep;
}

// ---------------------------------------------------------------------------
// Canonical modules

inline Module trivial_module(HopfPtr A) {
  Module M{A, "trivial", 1, {}};
  for (size_t i = 0; i < A->dim; ++i) {
    Matrix m(A->field, 1, 1);
    m(0, 0) = A->counit[i];
    M.action.push_back(m);
  }
  return M;
}

inline Module regular_module(HopfPtr A) {
  Module M{A, "regular", A->dim, {}};
  for (size_t i = 0; i < A->dim; ++i) M.action.push_back(left_mult_matrix(*A, basis_vec(*A, i)));
  return M;
}

// a > c = sum a1 c S(a2)
inline Matrix adjoint_action_matrix(const HopfAlgebra& A, size_t i) {
  Matrix m(A.field, A.dim, A.dim);
  for (size_t c = 0; c < A.dim; ++c) {
    Vec col = zero_vec(A.field, A.dim);
    for (const auto& t : A.comult[i])
      axpy(col, t.coef, multiply(A, multiply(A, basis_vec(A, t.left), basis_vec(A, c)), A.antipode.column(t.right)));
    m.set_column(c, col);
  }
  return m;
}

inline Module adjoint_module(HopfPtr A) {
  Module M{A, "adjoint", A->dim, {}};
  for (size_t i = 0; i < A->dim; ++i) M.action.push_back(adjoint_action_matrix(*A, i));
  return M;
}

namespace detail {

inline const HopfPtr& base_of(const QuasitriangularData& Q) {
  if (!Q.base) fail(ErrorKind::InvalidAlgebra, "quasitriangular data is not a Drinfeld double");
  return Q.base;
}

// c <- q = sum <q, c1> c2 for q = e_i* o S^{-1}, as a matrix on A.
inline Matrix hook_by_sinv_dual(const HopfAlgebra& A, size_t i) {
  const Matrix& Si = A.s_inv();
  Matrix m(A.field, A.dim, A.dim);
  for (size_t c = 0; c < A.dim; ++c)
    for (const auto& t : A.comult[c])
      if (!Si(i, t.left).is_zero()) m(t.right, c).add_mul(Si(i, t.left), t.coef);
  return m;
}

}  // namespace detail

// The Schrodinger module: D(A) acting on A by (p # a) . b = (a > b) <- S^{-1}(p).
inline Module schrodinger(const QuasitriangularData& Q) {
  const HopfAlgebra& A = *detail::base_of(Q);
  const size_t d = A.dim;
  std::vector<Matrix> ad(d), hook(d);
  for (size_t j = 0; j < d; ++j) ad[j] = adjoint_action_matrix(A, j);
  for (size_t i = 0; i < d; ++i) hook[i] = detail::hook_by_sinv_dual(A, i);
  Module M{Q.H, "schrodinger", d, {}};
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) M.action.push_back(hook[i] * ad[j]);
  return M;
}

// The dual Schrodinger module: D(A) acting on A* by
// (p # a) . q = (a -> q) <| S^{-1}(p), with a -> q = sum q1 <q2, a> and
// q <| p = sum S(p1) q p2.
inline Module dual_schrodinger(const QuasitriangularData& Q) {
  const HopfAlgebra& A = *detail::base_of(Q);
  const size_t d = A.dim;
  HopfPtr B = dual(A);
  const Matrix& Si = A.s_inv();
  std::vector<Matrix> harpoon(d), radj(d);
  for (size_t j = 0; j < d; ++j) {
    Matrix m(A.field, d, d);
    for (size_t k = 0; k < d; ++k)
      for (const auto& t : B->comult[k])
        if (t.right == j) m(t.left, k) += t.coef;
    harpoon[j] = m;
  }
  for (size_t i = 0; i < d; ++i) {
    Matrix m(A.field, d, d);
    for (size_t mm = 0; mm < d; ++mm) {
      const Scalar& pm = Si(i, mm);
      if (pm.is_zero()) continue;
      for (const auto& t : B->comult[mm]) {
        Vec sp1 = B->antipode.column(t.left);
        for (size_t q = 0; q < d; ++q) {
          Vec col = multiply(*B, multiply(*B, sp1, basis_vec(*B, q)), basis_vec(*B, t.right));
          for (size_t r = 0; r < d; ++r)
            if (!col[r].is_zero()) m(r, q).add_mul(pm * t.coef, col[r]);
        }
      }
    }
    radj[i] = m;
  }
  Module M{Q.H, "dual-schrodinger", d, {}};
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) M.action.push_back(radj[i] * harpoon[j]);
  return M;
}

// ---------------------------------------------------------------------------
// Tensor products, duals, restriction and pullback

inline Module tensor(const Module& M, const Module& N) {
  detail::require_same_algebra(M, N);
  const HopfAlgebra& H = *M.algebra;
  Module T{M.algebra, "(" + M.name + ")(x)(" + N.name + ")", M.dim * N.dim, {}};
  for (size_t i = 0; i < H.dim; ++i) {
    Matrix m(H.field, T.dim, T.dim);
    for (const auto& t : H.comult[i]) m.add_scaled(t.coef, kron(M.action[t.left], N.action[t.right]));
    T.action.push_back(m);
  }
  return T;
}

// Left dual: (h . f)(x) = f(S(h) x), i.e. rho*(h) = rho(S h)^T in the dual basis.
inline Module dual_module(const Module& M) {
  const HopfAlgebra& H = *M.algebra;
  Module D{M.algebra, "(" + M.name + ")*", M.dim, {}};
  for (size_t i = 0; i < H.dim; ++i) D.action.push_back(act(M, H.antipode.column(i)).transpose());
  return D;
}

// Pullback along an algebra map f : B -> M.algebra (matrix M.algebra.dim x B.dim).
inline Module pullback(const Matrix& fm, HopfPtr B, const Module& M) {
  const HopfAlgebra& H = *M.algebra;
  if (fm.rows() != H.dim || fm.cols() != B->dim) fail(ErrorKind::DimensionMismatch, "pullback map shape");
  if (fm * B->unit != H.unit) fail(ErrorKind::NotAlgebraMap, "map is not unital");
  for (size_t i = 0; i < B->dim; ++i)
    for (size_t j = 0; j < B->dim; ++j)
      if (fm * to_dense(B->field, B->dim, B->product(i, j)) != multiply(H, fm.column(i), fm.column(j)))
        fail(ErrorKind::NotAlgebraMap, "map is not multiplicative at " + B->basis[i] + "*" + B->basis[j]);
  Module P{B, "pullback(" + M.name + ")", M.dim, {}};
  for (size_t i = 0; i < B->dim; ++i) P.action.push_back(act(M, fm.column(i)));
  return P;
}

// R_A(M): the A-module obtained through a -> eps # a.
inline Module restrict_to_base(const QuasitriangularData& Q, const Module& M) {
  HopfPtr A = detail::base_of(Q);
  Module R{A, "R_A(" + M.name + ")", M.dim, {}};
  for (const auto& [alpha, beta] : Q.R) R.action.push_back(act(M, alpha));
  return R;
}

// R^A(M): the right A-comodule with m0 (x) m1 = sum_k (e_k* # 1) m (x) e_k.
inline Comodule comodule_of(const QuasitriangularData& Q, const Module& M) {
  HopfPtr A = detail::base_of(Q);
  Comodule C{A, "R^A(" + M.name + ")", M.dim, {}};
  for (const auto& [alpha, beta] : Q.R) C.coaction.push_back(act(M, beta));
  return C;
}

inline Comodule trivial_comodule(HopfPtr A) {
  Comodule C{A, "trivial", 1, {}};
  for (size_t k = 0; k < A->dim; ++k) {
    Matrix m(A->field, 1, 1);
    m(0, 0) = A->unit[k];
    C.coaction.push_back(m);
  }
  return C;
}

inline Comodule regular_comodule(HopfPtr A) {
  Comodule C{A, "regular", A->dim, {}};
  for (size_t k = 0; k < A->dim; ++k) C.coaction.emplace_back(A->field, A->dim, A->dim);
  for (size_t a = 0; a < A->dim; ++a)
    for (const auto& t : A->comult[a]) C.coaction[t.right](t.left, a) += t.coef;
  return C;
}

inline ValidationReport validate_comodule(const Comodule& C) {
  const HopfAlgebra& A = *C.algebra;
  ValidationReport rep;
  Matrix counit_sum(A.field, C.dim, C.dim);
  for (size_t k = 0; k < A.dim; ++k) counit_sum.add_scaled(A.counit[k], C.coaction[k]);
  rep.checks.push_back({"counit", counit_sum.is_identity(), counit_sum.is_identity() ? "" : "(id (x) eps) rho != id"});
  std::string w;
  std::vector<Matrix> rhs(A.dim * A.dim, Matrix(A.field, C.dim, C.dim));
  for (size_t m = 0; m < A.dim; ++m)
    for (const auto& t : A.comult[m]) rhs[t.left * A.dim + t.right].add_scaled(t.coef, C.coaction[m]);
  for (size_t l = 0; l < A.dim && w.empty(); ++l)
    for (size_t k = 0; k < A.dim; ++k)
      if (C.coaction[l] * C.coaction[k] != rhs[l * A.dim + k]) {
        w = "legs " + A.basis[l] + "," + A.basis[k];
        break;
      }
  rep.checks.push_back({"coassociativity", w.empty(), w});
  return rep;
}

// V (x) M as a comodule with v (x) m -> v0 (x) m0 (x) m1 v1.
inline Comodule tensor_comodule(const Comodule& V, const Comodule& M) {
  const HopfAlgebra& A = *V.algebra;
  Comodule T{V.algebra, "(" + V.name + ")(x)(" + M.name + ")", V.dim * M.dim, {}};
  for (size_t k = 0; k < A.dim; ++k) T.coaction.emplace_back(A.field, T.dim, T.dim);
  for (size_t a = 0; a < A.dim; ++a)
    for (size_t b = 0; b < A.dim; ++b) {
      const Sparse& p = A.product(a, b);
      if (p.empty()) continue;
      Matrix kr = kron(V.coaction[b], M.coaction[a]);
      for (const auto& t : p) T.coaction[t.index].add_scaled(t.coef, kr);
    }
  return T;
}

// Yetter-Drinfeld data (A-action, coaction) as a D(A)-module:
// (p # a) . m = sum <p, (a m)1> (a m)0.
inline Module yd_module(const QuasitriangularData& Q, const std::vector<Matrix>& a_action,
                        const std::vector<Matrix>& coaction, const std::string& name) {
  const HopfAlgebra& A = *detail::base_of(Q);
  const size_t d = A.dim;
  Module M{Q.H, name, a_action.at(0).rows(), {}};
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) M.action.push_back(coaction[i] * a_action[j]);
  return M;
}

// ---------------------------------------------------------------------------
// Induction from A-modules and A-comodules

// I_A(V) on V (x) A (index v*d + a):
// (p # h).(v (x) a) = sum <p, h5 a2 S^{-1}(h1)> (h3 . v) (x) (h4 a1 S^{-1}(h2)).
inline Module induced_module(const QuasitriangularData& Q, const Module& V) {
  const HopfAlgebra& A = *detail::base_of(Q);
  if (!detail::same_algebra(*V.algebra, A)) fail(ErrorKind::AlgebraMismatch, "I_A needs an A-module");
  const size_t d = A.dim, n = V.dim, dim = n * d;
  const Field f = A.field;
  const Matrix& Si = A.s_inv();
  Module M{Q.H, "I_A(" + V.name + ")", dim, std::vector<Matrix>(d * d, Matrix(f, dim, dim))};
  for (size_t j = 0; j < d; ++j) {
    auto legs5 = iterated_coproduct(A, j, 5);
    for (const auto& [h, c] : legs5) {
      Vec sinv_h1 = Si.column(h[0]), sinv_h2 = Si.column(h[1]);
      const Matrix& rho3 = V.action[h[2]];
      for (size_t a = 0; a < d; ++a)
        for (const auto& at : A.comult[a]) {
          Vec X = multiply(A, multiply(A, basis_vec(A, h[4]), basis_vec(A, at.right)), sinv_h1);
          Vec Y = multiply(A, multiply(A, basis_vec(A, h[3]), basis_vec(A, at.left)), sinv_h2);
          Scalar w = c * at.coef;
          for (size_t i = 0; i < d; ++i) {
            if (X[i].is_zero()) continue;
            Matrix& target = M.action[i * d + j];
            Scalar wi = w * X[i];
            for (size_t v = 0; v < n; ++v)
              for (size_t v2 = 0; v2 < n; ++v2) {
                if (rho3(v2, v).is_zero()) continue;
                Scalar wv = wi * rho3(v2, v);
                for (size_t y = 0; y < d; ++y)
                  if (!Y[y].is_zero()) target(v2 * d + y, v * d + a).add_mul(wv, Y[y]);
              }
          }
        }
    }
  }
  return M;
}

// I^A(N) on A (x) N (index a*n + nu): h.(a (x) n) = ha (x) n and
// rho(h (x) n) = sum (h2 (x) n0) (x) h3 n1 S^{-1}(h1).
inline Module coinduced_module(const QuasitriangularData& Q, const Comodule& N) {
  const HopfAlgebra& A = *detail::base_of(Q);
  const size_t d = A.dim, n = N.dim, dim = d * n;
  const Field f = A.field;
  const Matrix& Si = A.s_inv();
  std::vector<Matrix> a_action, coaction(d, Matrix(f, dim, dim));
  Matrix idn = Matrix::identity(f, n);
  for (size_t j = 0; j < d; ++j) a_action.push_back(kron(left_mult_matrix(A, basis_vec(A, j)), idn));
  for (size_t h = 0; h < d; ++h)
    for (const auto& [legs, c] : iterated_coproduct(A, h, 3)) {
      Vec sinv_h1 = Si.column(legs[0]);
      for (size_t l = 0; l < d; ++l) {
        Vec w = multiply(A, multiply(A, basis_vec(A, legs[2]), basis_vec(A, l)), sinv_h1);
        for (size_t k = 0; k < d; ++k) {
          if (w[k].is_zero()) continue;
          Scalar s = c * w[k];
          for (size_t nu = 0; nu < n; ++nu)
            for (size_t nu2 = 0; nu2 < n; ++nu2)
              if (!N.coaction[l](nu2, nu).is_zero())
                coaction[k](legs[1] * n + nu2, h * n + nu).add_mul(s, N.coaction[l](nu2, nu));
        }
      }
    }
  return yd_module(Q, a_action, coaction, "I^A(" + N.name + ")");
}

// I^A(k) realised on A with a -> a2 (x) a3 S^{-1}(a1).
inline Module coinduced_trivial(const QuasitriangularData& Q) {
  Module M = coinduced_module(Q, trivial_comodule(detail::base_of(Q)));
  M.name = "I^A(k)";
  return M;
}

// Schr(A) -> I_A(k), a -> 1 (x) S^{-1}(a).
inline Matrix schrodinger_to_induced(const HopfAlgebra& A) { return A.s_inv(); }

// Dual Schr(A) -> I^A(k)*, q -> S^{-1}(q) (x) 1.
inline Matrix dual_schrodinger_to_dual_coinduced(const HopfAlgebra& A) { return A.s_inv().transpose(); }

// I_A(V) (x) M -> I_A(V (x) R_A(M)), v (x) a (x) m -> sum v (x) m0 (x) m1 a.
inline Matrix induced_tensor_map(const QuasitriangularData& Q, size_t vdim, const Module& M) {
  const HopfAlgebra& A = *detail::base_of(Q);
  const size_t d = A.dim, m = M.dim;
  Comodule C = comodule_of(Q, M);
  Matrix T(A.field, vdim * d * m, vdim * m * d);
  for (size_t v = 0; v < vdim; ++v)
    for (size_t a = 0; a < d; ++a)
      for (size_t mu = 0; mu < m; ++mu)
        for (size_t k = 0; k < d; ++k) {
          const Sparse& p = A.product(k, a);
          for (size_t mu2 = 0; mu2 < m; ++mu2) {
            const Scalar& c = C.coaction[k](mu2, mu);
            if (c.is_zero()) continue;
            for (const auto& t : p) T((v * m + mu2) * d + t.index, (v * d + a) * m + mu).add_mul(c, t.coef);
          }
        }
  return T;
}

// I^A(N (x) R^A(M)) -> I^A(N) (x) M, a (x) n (x) m -> sum a1 (x) n (x) a2 m.
inline Matrix coinduced_tensor_map(const QuasitriangularData& Q, size_t ndim, const Module& M) {
  const HopfAlgebra& A = *detail::base_of(Q);
  const size_t d = A.dim, m = M.dim;
  Module RA = restrict_to_base(Q, M);
  Matrix T(A.field, d * ndim * m, d * ndim * m);
  for (size_t a = 0; a < d; ++a)
    for (const auto& t : A.comult[a])
      for (size_t nu = 0; nu < ndim; ++nu)
        for (size_t mu = 0; mu < m; ++mu)
          for (size_t mu2 = 0; mu2 < m; ++mu2) {
            const Scalar& c = RA.action[t.right](mu2, mu);
            if (!c.is_zero()) T((t.left * ndim + nu) * m + mu2, (a * ndim + nu) * m + mu).add_mul(t.coef, c);
          }
  return T;
}

// ---------------------------------------------------------------------------
// Hom spaces and isomorphisms

inline bool is_intertwiner(const Matrix& T, const Module& M, const Module& N) {
  detail::require_same_algebra(M, N);
  if (T.rows() != N.dim || T.cols() != M.dim) return false;
  for (const Vec& x : detail::determining_elements(*M.algebra))
    if (T * act(M, x) != act(N, x) * T) return false;
  return true;
}

inline bool is_isomorphism(const Matrix& T, const Module& M, const Module& N) {
  return is_invertible(T) && is_intertwiner(T, M, N);
}

// Basis of Hom_H(M, N), computed by restricting the solution space one
// generator at a time.
inline std::vector<Matrix> hom_basis(const Module& M, const Module& N) {
  detail::require_same_algebra(M, N);
  const Field f = M.algebra->field;
  const size_t m = M.dim, n = N.dim, nm = n * m;
  std::vector<Vec> xs = detail::determining_elements(*M.algebra);
  std::vector<Vec> sol;  // current basis of vec(T), index r*m + c
  bool first = true;
  for (const Vec& x : xs) {
    Matrix A = act(M, x), B = act(N, x);
    if (first) {
      // full constraint matrix on all nm unknowns
      Matrix C(f, nm, nm);
      for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < m; ++c) {
          size_t row = r * m + c;
          for (size_t k = 0; k < m; ++k)
            if (!A(k, c).is_zero()) C(row, r * m + k) += A(k, c);
          for (size_t k = 0; k < n; ++k)
            if (!B(r, k).is_zero()) C(row, k * m + c) -= B(r, k);
        }
      sol = nullspace(C);
      first = false;
    } else {
      if (sol.empty()) break;
      Matrix K(f, nm, sol.size());
      for (size_t s = 0; s < sol.size(); ++s) {
        Matrix T(f, n, m);
        for (size_t r = 0; r < n; ++r)
          for (size_t c = 0; c < m; ++c) T(r, c) = sol[s][r * m + c];
        Matrix D = T * A - B * T;
        for (size_t r = 0; r < n; ++r)
          for (size_t c = 0; c < m; ++c) K(r * m + c, s) = D(r, c);
      }
      std::vector<Vec> next;
      for (const Vec& coeffs : nullspace(K)) {
        Vec v = zero_vec(f, nm);
        for (size_t s = 0; s < sol.size(); ++s) axpy(v, coeffs[s], sol[s]);
        next.push_back(std::move(v));
      }
      sol = std::move(next);
    }
  }
  if (first) {  // no constraints at all
    for (size_t i = 0; i < nm; ++i) sol.push_back(unit_vec(f, nm, i));
  }
  std::vector<Matrix> out;
  for (const Vec& v : sol) {
    Matrix T(f, n, m);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < m; ++c) T(r, c) = v[r * m + c];
    out.push_back(std::move(T));
  }
  return out;
}

enum class IsoSearch { Found, DimensionMismatch, HomTrivial, BudgetExhausted };

inline std::string to_string(IsoSearch s) {
  switch (s) {
    case IsoSearch::Found: return "found";
    case IsoSearch::DimensionMismatch: return "dimension mismatch";
    case IsoSearch::HomTrivial: return "hom space trivial";
    case IsoSearch::BudgetExhausted: return "budget exhausted";
  }
  return "?";
}

struct IsoResult {
  IsoSearch status = IsoSearch::BudgetExhausted;
  std::optional<Matrix> iso;
  size_t hom_dim = 0;
  size_t tried = 0;
};

// Searches small-integer combinations of a hom-space basis for an invertible
// intertwiner: the all-ones combination, then {0,..,3}^k in odometer order
// (10^4 tuples at most), then 100 seeded random tuples with entries in [-9, 9].
inline IsoResult find_iso(const Module& M, const Module& N) {
  detail::require_same_algebra(M, N);
  IsoResult res;
  if (M.dim != N.dim) {
    res.status = IsoSearch::DimensionMismatch;
    return res;
  }
  std::vector<Matrix> basis = hom_basis(M, N);
  res.hom_dim = basis.size();
  if (basis.empty()) {
    res.status = IsoSearch::HomTrivial;
    return res;
  }
  const Field f = M.algebra->field;
  const size_t k = basis.size();
  auto attempt = [&](const std::vector<int>& coeffs) -> bool {
    ++res.tried;
    Matrix T(f, N.dim, M.dim);
    bool nonzero = false;
    for (size_t i = 0; i < k; ++i)
      if (coeffs[i] != 0) {
        T.add_scaled(Scalar(f, coeffs[i]), basis[i]);
        nonzero = true;
      }
    if (!nonzero || !is_invertible(T)) return false;
    res.iso = std::move(T);
    res.status = IsoSearch::Found;
    return true;
  };
  if (attempt(std::vector<int>(k, 1))) return res;
  std::vector<int> digits(k, 0);
  for (size_t budget = 1; budget < 10000; ++budget) {
    size_t pos = 0;
    while (pos < k && digits[pos] == 3) digits[pos++] = 0;
    if (pos == k) break;
    ++digits[pos];
    if (attempt(digits)) return res;
  }
  std::mt19937 rng(20130705);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int t = 0; t < 100; ++t) {
    std::vector<int> c(k);
    for (auto& x : c) x = dist(rng);
    if (attempt(c)) return res;
  }
  res.status = IsoSearch::BudgetExhausted;
  return res;
}

}  // namespace schrod
