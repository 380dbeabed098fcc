#pragma once

// Braid words, the braid group action on tensor powers of a module over a
// quasitriangular Hopf algebra, categorical partial braided traces and the
// braided dimensions built from them.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schrod/module.hpp"

namespace schrod {

struct BraidWord {
  size_t strands = 1;
  std::vector<int> letters;  // +i is sigma_i, -i its inverse

  std::string str() const {
    std::string s = std::to_string(strands) + ":";
    for (int l : letters) s += " " + std::to_string(l);
    return s;
  }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline void check_letters(const BraidWord& b) {
  if (b.strands < 1) fail(ErrorKind::ParseError, "a braid needs at least one strand");
  for (int l : b.letters) {
    if (l == 0) fail(ErrorKind::ZeroLetter, "letter 0 in " + b.str());
    if (static_cast<size_t>(std::abs(l)) + 1 > b.strands)
      fail(ErrorKind::LetterOutOfRange, "letter " + std::to_string(l) + " needs more than " +
                                            std::to_string(b.strands) + " strands");
  }
}

// Grammar: <strands> ":" <letters>, letters separated by spaces or commas.
inline BraidWord parse_braid(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) fail(ErrorKind::ParseError, "missing ':' in braid \"" + text + "\"");
  auto parse_int = [&](const std::string& tok) -> long {
    size_t pos = 0;
    if (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) pos = 1;
    if (pos == tok.size()) fail(ErrorKind::ParseError, "bad integer \"" + tok + "\"");
    for (size_t i = pos; i < tok.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(tok[i]))) fail(ErrorKind::ParseError, "bad integer \"" + tok + "\"");
    if (tok.size() > 9) fail(ErrorKind::ParseError, "integer too large \"" + tok + "\"");
    return std::strtol(tok.c_str(), nullptr, 10);
  };
  auto trim = [](std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(i);
  };
  std::string head = trim(text.substr(0, colon));
  if (head.empty() || head[0] == '-' || head[0] == '+') fail(ErrorKind::ParseError, "bad strand count \"" + head + "\"");
  long n = parse_int(head);
  if (n < 1) fail(ErrorKind::ParseError, "strand count must be positive");
  BraidWord b;
  b.strands = static_cast<size_t>(n);
  std::string tok;
  auto flush = [&] {
    if (!tok.empty()) b.letters.push_back(static_cast<int>(parse_int(tok)));
    tok.clear();
  };
  for (size_t i = colon + 1; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') flush();
    else tok += ch;
  }
  flush();
  check_letters(b);
  return b;
}

// t_{p,q} = (sigma_1 ... sigma_{p-1})^q
inline BraidWord torus_braid(int p, int q) {
  if (p < 2) fail(ErrorKind::BadParameter, "torus braid needs p >= 2");
  BraidWord b;
  b.strands = static_cast<size_t>(p);
  for (int k = 0; k < std::abs(q); ++k)
    for (int i = 1; i < p; ++i) b.letters.push_back(i);
  if (q < 0) {
    std::reverse(b.letters.begin(), b.letters.end());
    for (int& l : b.letters) l = -l;
  }
  return b;
}

enum class Side { Left, Right };
enum class Orientation { Standard, Reversed };

inline std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }
inline std::string to_string(Orientation o) { return o == Orientation::Standard ? "standard" : "reversed"; }

// The braiding data in use: the R-matrix (R or R-bar) and its Drinfeld element.
struct Braiding {
  HopfPtr H;
  RFactors R;
  Vec u, u_inv;
  Orientation orientation = Orientation::Standard;
};

inline Braiding make_braiding(const QuasitriangularData& Q, Orientation o = Orientation::Standard) {
  Braiding b{Q.H, Q.R, Q.u, Q.u_inv, o};
  if (o == Orientation::Reversed) {
    b.R = reversed_factors(*Q.H, Q.R);
    DrinfeldElements e = drinfeld_elements(*Q.H, b.R);
    b.u = e.u;
    b.u_inv = e.u_inv;
  }
  return b;
}

// c_{M,N}(m (x) n) = tau(R . (m (x) n)), a matrix N(x)M <- M(x)N.
inline Matrix braiding_map(const Braiding& B, const Module& M, const Module& N) {
  detail::require_same_algebra(M, N);
  const size_t m = M.dim, n = N.dim;
  Matrix Rm(B.H->field, m * n, m * n);
  for (const auto& [a, b] : B.R) Rm = Rm + kron(act(M, a), act(N, b));
  Matrix tau(B.H->field, n * m, m * n);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) tau(j * m + i, i * n + j) = Scalar::one(B.H->field);
  return tau * Rm;
}

// c^{-1}_{M,N} : N (x) M -> M (x) N, built from R^{-1} = (S (x) id)R.
inline Matrix braiding_inverse_map(const Braiding& B, const Module& M, const Module& N) {
  detail::require_same_algebra(M, N);
  const size_t m = M.dim, n = N.dim;
  Matrix Rinv(B.H->field, m * n, m * n);
  for (const auto& [a, b] : B.R) Rinv = Rinv + kron(act(M, apply_antipode(*B.H, a)), act(N, b));
  Matrix tau(B.H->field, m * n, n * m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) tau(i * n + j, j * m + i) = Scalar::one(B.H->field);
  Matrix inv = Rinv * tau;
  if (!(inv * braiding_map(B, M, N)).is_identity())
    fail(ErrorKind::InverseCheckFailed, "braiding inverse check failed");
  return inv;
}

namespace detail {

// Column-major sparse form of a square local operator.
struct SparseOp {
  size_t n = 0;
  std::vector<std::vector<std::pair<size_t, Scalar>>> cols;

  explicit SparseOp(const Matrix& m) : n(m.rows()), cols(m.cols()) {
    for (size_t c = 0; c < m.cols(); ++c)
      for (size_t r = 0; r < m.rows(); ++r)
        if (!m(r, c).is_zero()) cols[c].emplace_back(r, m(r, c));
  }
};

// Applies a (d^2 x d^2) operator to strands i, i+1 (1-based) of v in V^{(x) n}.
inline Vec apply_pair(const SparseOp& op, size_t d, size_t n, size_t i, const Vec& v, Field f) {
  const size_t pair = d * d, inner = int_pow(d, n - i - 1), outer = int_pow(d, i - 1);
  Vec r = zero_vec(f, v.size());
  for (size_t o = 0; o < outer; ++o)
    for (size_t c = 0; c < pair; ++c) {
      const size_t base_in = (o * pair + c) * inner;
      for (size_t in = 0; in < inner; ++in) {
        const Scalar& x = v[base_in + in];
        if (x.is_zero()) continue;
        for (const auto& [rr, e] : op.cols[c]) r[(o * pair + rr) * inner + in].add_mul(e, x);
      }
    }
  return r;
}

// Applies a (d x d) operator to strand i (1-based).
inline Vec apply_single(const Matrix& op, size_t d, size_t n, size_t i, const Vec& v) {
  const size_t inner = int_pow(d, n - i), outer = int_pow(d, i - 1);
  Vec r = zero_vec(op.field(), v.size());
  for (size_t o = 0; o < outer; ++o)
    for (size_t c = 0; c < d; ++c)
      for (size_t in = 0; in < inner; ++in) {
        const Scalar& x = v[(o * d + c) * inner + in];
        if (x.is_zero()) continue;
        for (size_t rr = 0; rr < d; ++rr)
          if (!op(rr, c).is_zero()) r[(o * d + rr) * inner + in].add_mul(op(rr, c), x);
      }
  return r;
}

}  // namespace detail

// An endomorphism of M^{(x) n}: either a braid word applied letter by letter
// (first letter first) or an explicit matrix.
class BraidedOperator {
 public:
  static constexpr size_t kMaterializeLimit = 256;

  BraidedOperator(Field f, size_t d, size_t n, const Matrix& c, const Matrix& c_inv, std::vector<int> letters)
      : field_(f), d_(d), n_(n), letters_(std::move(letters)), c_(c), c_inv_(c_inv) {
    if (dim() <= kMaterializeLimit) matrix();
  }
  BraidedOperator(size_t d, size_t n, Matrix m) : field_(m.field()), d_(d), n_(n), c_(Matrix()), c_inv_(Matrix()) {
    if (m.rows() != int_pow(d, n) || m.cols() != m.rows()) fail(ErrorKind::DimensionMismatch, "operator shape");
    cache_ = std::move(m);
  }

  size_t local_dim() const { return d_; }
  size_t strands() const { return n_; }
  size_t dim() const { return int_pow(d_, n_); }
  Field field() const { return field_; }
  bool materialized() const { return cache_.has_value(); }

  Vec apply(const Vec& v) const {
    if (cache_) return *cache_ * v;
    Vec cur = v;
    for (int l : letters_) {
      size_t i = static_cast<size_t>(std::abs(l));
      cur = detail::apply_pair(l > 0 ? c_ : c_inv_, d_, n_, i, cur, field_);
    }
    return cur;
  }

  Vec column(size_t j) const {
    if (cache_) return cache_->column(j);
    return apply(unit_vec(field_, dim(), j));
  }

  const Matrix& matrix() const {
    if (!cache_) {
      Matrix m(field_, dim(), dim());
      for (size_t j = 0; j < dim(); ++j) m.set_column(j, column(j));
      cache_ = std::move(m);
    }
    return *cache_;
  }

 private:
  Field field_;
  size_t d_, n_;
  std::vector<int> letters_;
  detail::SparseOp c_, c_inv_;
  mutable std::optional<Matrix> cache_;
};

inline BraidedOperator braid_operator(const Braiding& B, const Module& M, const BraidWord& b) {
  check_letters(b);
  Matrix c = braiding_map(B, M, M);
  Matrix ci = braiding_inverse_map(B, M, M);
  return BraidedOperator(B.H->field, M.dim, b.strands, c, ci, b.letters);
}

// Contraction weights of a partial trace on X.
//  left:  w = c^{-1}_{X*,X}(sum e_i (x) e_i*) in X* (x) X, stored as w(a, b) for e_a* (x) e_b;
//  right: w(k, i) = e_X(c_{X,X*}(e_k (x) e_i*)).
inline Matrix trace_weights(const Braiding& B, const Module& X, Side side) {
  const size_t d = X.dim;
  Module Xs = dual_module(X);
  Matrix w(B.H->field, d, d);
  if (side == Side::Left) {
    Matrix ci = braiding_inverse_map(B, Xs, X);  // X (x) X* -> X* (x) X
    for (size_t a = 0; a < d; ++a)
      for (size_t b = 0; b < d; ++b)
        for (size_t i = 0; i < d; ++i) w(a, b) += ci(a * d + b, i * d + i);
  } else {
    Matrix c = braiding_map(B, X, Xs);  // X (x) X* -> X* (x) X
    for (size_t k = 0; k < d; ++k)
      for (size_t i = 0; i < d; ++i)
        for (size_t a = 0; a < d; ++a) w(k, i) += c(a * d + a, k * d + i);
  }
  return w;
}

// Partial trace of f : X (x) Y -> X (x) Z (left) or Y (x) X -> Z (x) X (right)
// given column access to f. Returns the (dz x dy) matrix.
template <class ColumnFn>
Matrix partial_trace(const Matrix& w, size_t dx, size_t dy, size_t dz, Side side, ColumnFn&& column) {
  const Field f = w.field();
  Matrix out(f, dz, dy);
  if (side == Side::Left) {
    // out(z, y) = sum_{a,b} w(a,b) f((a,z),(b,y))
    for (size_t b = 0; b < dx; ++b)
      for (size_t y = 0; y < dy; ++y) {
        bool any = false;
        for (size_t a = 0; a < dx && !any; ++a) any = !w(a, b).is_zero();
        if (!any) continue;
        Vec col = column(b * dy + y);
        for (size_t a = 0; a < dx; ++a) {
          if (w(a, b).is_zero()) continue;
          for (size_t z = 0; z < dz; ++z)
            if (!col[a * dz + z].is_zero()) out(z, y).add_mul(w(a, b), col[a * dz + z]);
        }
      }
  } else {
    // out(z, y) = sum_{k,i} w(k,i) f((z,k),(y,i))
    for (size_t y = 0; y < dy; ++y)
      for (size_t i = 0; i < dx; ++i) {
        bool any = false;
        for (size_t k = 0; k < dx && !any; ++k) any = !w(k, i).is_zero();
        if (!any) continue;
        Vec col = column(y * dx + i);
        for (size_t z = 0; z < dz; ++z)
          for (size_t k = 0; k < dx; ++k)
            if (!w(k, i).is_zero() && !col[z * dx + k].is_zero()) out(z, y).add_mul(w(k, i), col[z * dx + k]);
      }
  }
  return out;
}

inline Matrix partial_trace(const Matrix& w, size_t dx, const Matrix& f, Side side) {
  size_t dy = f.cols() / dx, dz = f.rows() / dx;
  if (dy * dx != f.cols() || dz * dx != f.rows()) fail(ErrorKind::DimensionMismatch, "partial trace shape");
  return partial_trace(w, dx, dy, dz, side, [&](size_t j) { return f.column(j); });
}

// One step of the iterated trace: traces the first (left) or last (right) strand.
inline BraidedOperator partial_trace_step(const Braiding& B, const Module& M, const BraidedOperator& f, Side side) {
  if (f.strands() < 1) fail(ErrorKind::DimensionMismatch, "nothing left to trace");
  const size_t d = M.dim, rest = int_pow(d, f.strands() - 1);
  Matrix w = trace_weights(B, M, side);
  Matrix out = partial_trace(w, d, rest, rest, side, [&](size_t j) { return f.column(j); });
  return BraidedOperator(d, f.strands() - 1, std::move(out));
}

// Tr(U^{(x) n} o f) for the action matrix U of an element.
inline Scalar twisted_trace(const Matrix& U, const BraidedOperator& f) {
  const size_t d = f.local_dim(), n = f.strands();
  Scalar t(f.field());
  for (size_t x = 0; x < f.dim(); ++x) {
    Vec v = f.column(x);
    for (size_t i = 1; i <= n; ++i) v = detail::apply_single(U, d, n, i, v);
    t += v[x];
  }
  return t;
}

struct BraidedDimension {
  Scalar categorical;
  Scalar closed_form;
};

// The braided dimension as the iterated categorical trace, checked against
// Tr((u^{-1})^{(x) n} rho(b)) (left) or Tr(u^{(x) n} rho(b)) (right).
inline BraidedDimension braided_dim_detail(const Braiding& B, const Module& M, const BraidWord& b, Side side) {
  BraidedOperator f = braid_operator(B, M, b);
  Matrix U = act(M, side == Side::Left ? B.u_inv : B.u);
  Scalar closed = twisted_trace(U, f);
  Matrix w = trace_weights(B, M, side);
  const size_t d = M.dim;
  BraidedOperator cur = f;
  for (size_t k = b.strands; k >= 1; --k) {
    size_t rest = int_pow(d, k - 1);
    Matrix out = partial_trace(w, d, rest, rest, side, [&](size_t j) { return cur.column(j); });
    cur = BraidedOperator(d, k - 1, std::move(out));
  }
  return {cur.matrix()(0, 0), closed};
}

inline Scalar braided_dim(const Braiding& B, const Module& M, const BraidWord& b, Side side) {
  BraidedDimension r = braided_dim_detail(B, M, b, side);
  if (r.categorical != r.closed_form)
    fail(ErrorKind::ClosedFormMismatch, "categorical trace " + r.categorical.str() + " != closed form " +
                                            r.closed_form.str() + " for " + b.str() + " " + to_string(side));
  return r.categorical;
}

inline Scalar braided_dim(const QuasitriangularData& Q, const Module& M, const BraidWord& b, Side side,
                          Orientation o = Orientation::Standard) {
  return braided_dim(make_braiding(Q, o), M, b, side);
}

namespace detail {

inline Vec element_power(const HopfAlgebra& H, const Vec& u, const Vec& u_inv, int64_t e) {
  return e >= 0 ? power(H, u, e) : power(H, u_inv, -e);
}

}  // namespace detail

// Closed forms for t_{2,q}: with m = floor(q/2) and k = m - 1 (left) or
// m + 1 (right), even q gives sum Tr(u^k (u^{-m})_1) Tr(u^k (u^{-m})_2), odd q
// gives Tr((u^k (x) u^k) Delta(u^{-m}) R_21 o T).
inline Scalar t2q_closed_form(const Braiding& B, const Module& M, int q, Side side) {
  if (q < 0) fail(ErrorKind::BadParameter, "t_{2,q} closed form needs q >= 0");
  const HopfAlgebra& H = *B.H;
  const int64_t m = q / 2, k = side == Side::Left ? m - 1 : m + 1;
  Vec uk = detail::element_power(H, B.u, B.u_inv, k);
  Vec umm = detail::element_power(H, B.u, B.u_inv, -m);
  TensorElem e = tensor_multiply(H, tensor_of({uk, uk}), comultiply(H, umm));
  Scalar total(H.field);
  if (q % 2 == 0) {
    for (const auto& [legs, c] : e) total += c * M.action[legs[0]].trace() * M.action[legs[1]].trace();
    return total;
  }
  TensorElem r21;
  for (const auto& [a, b] : B.R)
    for (const auto& [legs, c] : tensor_of({b, a})) tensor_add(r21, legs, c);
  e = tensor_multiply(H, e, r21);
  // Tr((X (x) Y) o T) = Tr(X Y)
  for (const auto& [legs, c] : e) total += c * (M.action[legs[0]] * M.action[legs[1]]).trace();
  return total;
}

}  // namespace schrod
