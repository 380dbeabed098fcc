#pragma once

// The Drinfeld double D(A) = A*^cop (x) A with its canonical universal
// R-matrix, the Drinfeld element, and the isomorphisms D(f) and phi_A.
//
// Basis: e_i* # e_j has index i*d + j. The R-matrix is kept as its factor
// list R = sum_j alpha_j (x) beta_j with alpha_j = eps # e_j, beta_j = e_j* # 1.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "schrod/hopf.hpp"

namespace schrod {

using RFactors = std::vector<std::pair<Vec, Vec>>;

struct QuasitriangularData {
  HopfPtr H;
  HopfPtr base;  // A, when H = D(A)
  RFactors R;
  Vec u, u_inv, s_u, z;
};
using QtPtr = std::shared_ptr<const QuasitriangularData>;

inline size_t double_index(size_t d, size_t i, size_t j) { return i * d + j; }

// R-bar = R_21^{-1} = sum_j beta_j (x) S(alpha_j), the universal R-matrix of
// the reverse braiding.
inline RFactors reversed_factors(const HopfAlgebra& H, const RFactors& R) {
  RFactors out;
  for (const auto& [a, b] : R) out.emplace_back(b, apply_antipode(H, a));
  return out;
}

struct DrinfeldElements {
  Vec u, u_inv, s_u, z;
};

// u = sum S(b) a and u^{-1} = sum b S^2(a) for R = sum a (x) b.
inline DrinfeldElements drinfeld_elements(const HopfAlgebra& H, const RFactors& R) {
  DrinfeldElements e;
  e.u = zero_vec(H.field, H.dim);
  e.u_inv = zero_vec(H.field, H.dim);
  Matrix s2 = H.antipode * H.antipode;
  for (const auto& [a, b] : R) {
    e.u = add(e.u, multiply(H, apply_antipode(H, b), a));
    e.u_inv = add(e.u_inv, multiply(H, b, s2 * a));
  }
  if (multiply(H, e.u, e.u_inv) != H.unit || multiply(H, e.u_inv, e.u) != H.unit)
    fail(ErrorKind::InverseCheckFailed, "u * u^{-1} != 1 in " + H.name);
  e.s_u = apply_antipode(H, e.u);
  e.z = multiply(H, e.u, e.s_u);
  return e;
}

namespace detail {

inline TensorElem factor_sum(const std::vector<std::vector<Vec>>& terms) {
  TensorElem t;
  for (const auto& factors : terms)
    for (const auto& [k, c] : tensor_of(factors)) tensor_add(t, k, c);
  return t;
}

// Delta applied to one leg of a tensor element.
inline TensorElem comultiply_leg(const HopfAlgebra& H, const TensorElem& t, size_t leg) {
  TensorElem out;
  for (const auto& [k, c] : t)
    for (const auto& ct : H.comult[k[leg]]) {
      Legs nk;
      for (size_t i = 0; i < k.size(); ++i) {
        if (i == leg) {
          nk.push_back(ct.left);
          nk.push_back(ct.right);
        } else {
          nk.push_back(k[i]);
        }
      }
      tensor_add(out, nk, c * ct.coef);
    }
  return out;
}

inline TensorElem swap_legs(const TensorElem& t) {
  TensorElem out;
  for (const auto& [k, c] : t) tensor_add(out, {k[1], k[0]}, c);
  return out;
}

}  // namespace detail

inline TensorElem r_tensor(const RFactors& R) {
  std::vector<std::vector<Vec>> terms;
  for (const auto& [a, b] : R) terms.push_back({a, b});
  return detail::factor_sum(terms);
}

// R_21 R = Delta(u^{-1}) (u (x) u).
inline bool ribbon_identity_holds(const HopfAlgebra& H, const RFactors& R, const DrinfeldElements& e) {
  std::vector<std::vector<Vec>> terms;
  for (const auto& [a1, b1] : R)
    for (const auto& [a2, b2] : R) terms.push_back({multiply(H, b1, a2), multiply(H, a1, b2)});
  TensorElem lhs = detail::factor_sum(terms);
  TensorElem rhs = tensor_multiply(H, comultiply(H, e.u_inv), tensor_of({e.u, e.u}));
  return lhs == rhs;
}

inline ValidationReport validate_qt(const HopfAlgebra& H, const RFactors& R) {
  ValidationReport rep;
  auto record = [&](const std::string& name, std::string witness) {
    rep.checks.push_back({name, witness.empty(), std::move(witness)});
  };
  const Field f = H.field;
  TensorElem r = r_tensor(R);
  RFactors rinv_f;
  for (const auto& [a, b] : R) rinv_f.emplace_back(apply_antipode(H, a), b);
  TensorElem rinv = r_tensor(rinv_f);
  TensorElem one_one = tensor_of({H.unit, H.unit});
  record("R invertible with inverse (S (x) id)R",
         tensor_multiply(H, r, rinv) == one_one && tensor_multiply(H, rinv, r) == one_one ? "" : "R R^{-1} != 1");
  {
    std::string w;
    std::vector<Vec> xs = detail::first_slot_elements(H);
    for (const Vec& x : xs) {
      TensorElem dx = comultiply(H, x);
      if (tensor_multiply(H, detail::swap_legs(dx), r) != tensor_multiply(H, r, dx)) {
        w = elem_str(H, x);
        break;
      }
    }
    record("Delta^cop(x) R = R Delta(x)", w);
  }
  {
    std::vector<std::vector<Vec>> terms;
    for (const auto& [a1, b1] : R)
      for (const auto& [a2, b2] : R) terms.push_back({a1, a2, multiply(H, b1, b2)});
    TensorElem lhs;
    for (const auto& [a, b] : R)
      for (const auto& [k, c] : detail::comultiply_leg(H, tensor_of({a, b}), 0)) tensor_add(lhs, k, c);
    record("(Delta (x) id)R = R13 R23", lhs == detail::factor_sum(terms) ? "" : "mismatch");
  }
  {
    std::vector<std::vector<Vec>> terms;
    for (const auto& [a1, b1] : R)
      for (const auto& [a2, b2] : R) terms.push_back({multiply(H, a1, a2), b2, b1});
    TensorElem lhs;
    for (const auto& [a, b] : R)
      for (const auto& [k, c] : detail::comultiply_leg(H, tensor_of({a, b}), 1)) tensor_add(lhs, k, c);
    record("(id (x) Delta)R = R13 R12", lhs == detail::factor_sum(terms) ? "" : "mismatch");
  }
  {
    // R12 R13 R23 = sum a_i a_j (x) b_i a_k (x) b_j b_k
    // R23 R13 R12 = sum a_j a_i (x) a_k b_i (x) b_k b_j
    std::vector<std::vector<Vec>> lt, rt;
    for (const auto& [ai, bi] : R)
      for (const auto& [aj, bj] : R)
        for (const auto& [ak, bk] : R) {
          lt.push_back({multiply(H, ai, aj), multiply(H, bi, ak), multiply(H, bj, bk)});
          rt.push_back({multiply(H, aj, ai), multiply(H, ak, bi), multiply(H, bk, bj)});
        }
    record("Yang-Baxter", detail::factor_sum(lt) == detail::factor_sum(rt) ? "" : "mismatch");
  }
  (void)f;
  return rep;
}

inline ValidationReport validate_qt(const QuasitriangularData& Q) { return validate_qt(*Q.H, Q.R); }

// ---------------------------------------------------------------------------
// Construction

inline QtPtr build_double(HopfPtr Aptr) {
  const HopfAlgebra& A = *Aptr;
  const size_t d = A.dim, D = d * d;
  const Field f = A.field;
  const Matrix& S = A.antipode;
  const Matrix& Si = A.s_inv();
  HopfPtr Astar = dual(A);

  // coef3[(x*d + z)*d + k] lists (y, <e_k*, e_x e_y e_z>)
  std::vector<std::vector<std::pair<uint32_t, Scalar>>> coef3(d * d * d);
  for (size_t x = 0; x < d; ++x)
    for (size_t y = 0; y < d; ++y) {
      for (const auto& t1 : A.product(x, y))
        for (size_t z = 0; z < d; ++z)
          for (const auto& t2 : A.product(t1.index, z)) {
            auto& slot = coef3[(x * d + z) * d + t2.index];
            Scalar c = t1.coef * t2.coef;
            if (!slot.empty() && slot.back().first == y)
              slot.back().second += c;
            else
              slot.emplace_back(static_cast<uint32_t>(y), c);
          }
    }
  std::vector<std::vector<std::pair<Legs, Scalar>>> delta2(d);
  for (size_t j = 0; j < d; ++j) delta2[j] = iterated_coproduct(A, j, 3);

  HopfAlgebra H;
  H.name = "D(" + A.name + ")";
  H.field = f;
  H.dim = D;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) H.basis.push_back(A.basis[i] + "*#" + A.basis[j]);

  // (e_i* # e_j)(e_k* # e_l) = sum <p'1, S^{-1}(a3)> <p'3, a1> e_i* p'2 # a2 e_l
  H.mult.assign(D * D, {});
  Accum acc(f, D);
  for (size_t j = 0; j < d; ++j)
    for (size_t k = 0; k < d; ++k) {
      std::map<std::pair<uint32_t, uint32_t>, Scalar> weights;  // (y, j2) -> w
      for (const auto& [legs, c] : delta2[j]) {
        uint32_t j1 = legs[0], j2 = legs[1], j3 = legs[2];
        for (size_t x = 0; x < d; ++x) {
          const Scalar& sx = Si(x, j3);
          if (sx.is_zero()) continue;
          for (const auto& [y, tc] : coef3[(x * d + j1) * d + k]) {
            Scalar w = c * sx * tc;
            auto key = std::make_pair(y, j2);
            auto it = weights.find(key);
            if (it == weights.end())
              weights.emplace(key, w);
            else
              it->second += w;
          }
        }
      }
      for (size_t i = 0; i < d; ++i)
        for (size_t l = 0; l < d; ++l) {
          acc.clear();
          for (const auto& [key, w] : weights) {
            if (w.is_zero()) continue;
            const auto& [y, j2] = key;
            for (const auto& pm : Astar->product(i, y))
              for (const auto& an : A.product(j2, l)) acc.add(pm.index * d + an.index, w * pm.coef, an.coef);
          }
          H.mult[(i * d + j) * D + (k * d + l)] = acc.sparse();
        }
    }

  H.unit = zero_vec(f, D);
  H.counit = zero_vec(f, D);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      H.unit[i * d + j] = A.counit[i] * A.unit[j];
      H.counit[i * d + j] = A.unit[i] * A.counit[j];
    }

  // A*^cop (x) A as a coalgebra
  H.comult.assign(D, {});
  for (size_t i = 0; i < d; ++i)
    for (const auto& pt : Astar->comult[i])
      for (size_t j = 0; j < d; ++j)
        for (const auto& at : A.comult[j])
          H.comult[i * d + j].push_back(
              {static_cast<uint32_t>(pt.right * d + at.left), static_cast<uint32_t>(pt.left * d + at.right), pt.coef * at.coef});

  // S(p # a) = sum <p1, a3> <S^{-1}(p3), a1> S^{-1}(p2) # S(a2)
  H.antipode = Matrix(f, D, D);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      acc.clear();
      for (const auto& [legs, c] : delta2[j]) {
        uint32_t j1 = legs[0], j2 = legs[1], j3 = legs[2];
        for (size_t z = 0; z < d; ++z) {
          const Scalar& sz = Si(z, j1);
          if (sz.is_zero()) continue;
          for (const auto& [y, tc] : coef3[(j3 * d + z) * d + i]) {
            Scalar w = c * sz * tc;
            for (size_t m = 0; m < d; ++m) {
              if (Si(y, m).is_zero()) continue;
              Scalar wm = w * Si(y, m);
              for (size_t n = 0; n < d; ++n)
                if (!S(n, j2).is_zero()) acc.add(m * d + n, wm, S(n, j2));
            }
          }
        }
      }
      for (const auto& t : acc.sparse()) H.antipode(t.index, i * d + j) = t.coef;
    }

  auto Q = std::make_shared<QuasitriangularData>();
  Q->base = Aptr;
  for (size_t j = 0; j < d; ++j) {
    Vec alpha = zero_vec(f, D), beta = zero_vec(f, D);
    for (size_t i = 0; i < d; ++i) alpha[i * d + j] = A.counit[i];
    for (size_t l = 0; l < d; ++l) beta[j * d + l] = A.unit[l];
    Q->R.emplace_back(alpha, beta);
    H.generators.push_back(alpha);
  }
  for (size_t j = 0; j < d; ++j) H.generators.push_back(Q->R[j].second);
  Q->H = finalize(std::move(H));
  DrinfeldElements e = drinfeld_elements(*Q->H, Q->R);
  if (!ribbon_identity_holds(*Q->H, Q->R, e))
    fail(ErrorKind::InverseCheckFailed, "R21 R != Delta(u^{-1})(u (x) u) in " + Q->H->name);
  Q->u = e.u;
  Q->u_inv = e.u_inv;
  Q->s_u = e.s_u;
  Q->z = e.z;
  return Q;
}

// ---------------------------------------------------------------------------
// Structural isomorphisms

// D(f) = (f^{-1})^* (x) f for a Hopf algebra isomorphism f : A -> B.
inline Matrix double_of_iso(const Matrix& fm, const HopfAlgebra& A, const HopfAlgebra& B) {
  if (!is_invertible(fm)) fail(ErrorKind::NotHopfMap, "map is not invertible");
  ValidationReport rep = check_hopf_map(fm, A, B);
  if (!rep.ok()) fail(ErrorKind::NotHopfMap, "not a Hopf algebra map:\n" + rep.summary());
  return kron(invert(fm).transpose(), fm);
}

// phi_A(p # a) = (iota(1) # p)(iota(a) # eps) as a map D(A) -> D(A*)^cop,
// where DAstar = D(A*) has basis iota(e_i) # e_j*.
inline Matrix phi_iso(const HopfAlgebra& A, const HopfAlgebra& DAstar) {
  const size_t d = A.dim, D = d * d;
  if (DAstar.dim != D) fail(ErrorKind::DimensionMismatch, "phi_iso: codomain dimension");
  Matrix phi(A.field, D, D);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Vec left = zero_vec(A.field, D), right = zero_vec(A.field, D);
      for (size_t a = 0; a < d; ++a) left[a * d + i] = A.unit[a];
      for (size_t b = 0; b < d; ++b) right[j * d + b] = A.counit[b];
      phi.set_column(i * d + j, multiply(DAstar, left, right));
    }
  return phi;
}

// Checks that phi is a Hopf isomorphism D(A) -> D(A*)^cop; throws otherwise.
inline void verify_phi_iso(const Matrix& phi, const HopfAlgebra& DA, const HopfAlgebra& DAstar) {
  if (!is_invertible(phi)) fail(ErrorKind::NotIsomorphism, "phi_A is singular");
  HopfPtr target = cop_variant(DAstar);
  ValidationReport rep = check_hopf_map(phi, DA, *target);
  if (!rep.ok()) fail(ErrorKind::NotIsomorphism, "phi_A is not a Hopf map onto D(A*)^cop:\n" + rep.summary());
}

}  // namespace schrod
