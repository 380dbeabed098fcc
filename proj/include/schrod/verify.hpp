#pragma once

// Named verification checks grouped into suites. Each check recomputes its
// quantities from scratch and reports the observed values alongside a verdict.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "schrod/braid.hpp"
#include "schrod/oracle.hpp"
#include "schrod/zoo.hpp"

namespace schrod {

struct CheckResult {
  std::string id;
  std::string slug;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

namespace verify {

struct Named {
  std::string label;
  HopfPtr A;
};

inline std::vector<Named> builtin_five() {
  FiniteGroup s3 = symmetric_group(3);
  return {{"kZ2", group_algebra(cyclic_group(2))},
          {"kS3", group_algebra(s3)},
          {"k^S3", dual_group_algebra(s3)},
          {"sweedler", sweedler()},
          {"taft3", taft(3, Scalar::zeta(Field::cyclotomic(3)))}};
}

// Doubles are reused across checks within one run.
inline QtPtr double_of(const HopfPtr& A) {
  static std::map<const HopfAlgebra*, std::pair<HopfPtr, QtPtr>> cache;
  auto it = cache.find(A.get());
  if (it != cache.end()) return it->second.second;
  QtPtr Q = build_double(A);
  cache.emplace(A.get(), std::make_pair(A, Q));
  return Q;
}

// Every braided dimension computed by the checks passes through here, so the
// categorical/closed-form agreement is recorded for all of them.
struct TraceLedger {
  size_t evaluations = 0;
  size_t mismatches = 0;
  std::string first_mismatch;
};

inline TraceLedger& trace_ledger() {
  static TraceLedger l;
  return l;
}

inline Scalar bdim(const Braiding& B, const Module& M, const BraidWord& b, Side s) {
  BraidedDimension r = braided_dim_detail(B, M, b, s);
  TraceLedger& l = trace_ledger();
  ++l.evaluations;
  if (r.categorical != r.closed_form) {
    if (l.mismatches++ == 0)
      l.first_mismatch = M.name + " " + b.str() + " " + to_string(s) + ": " + r.categorical.str() +
                         " vs " + r.closed_form.str();
  }
  return r.categorical;
}

inline Scalar bdim(const QuasitriangularData& Q, const Module& M, const BraidWord& b, Side s,
                   Orientation o = Orientation::Standard) {
  return bdim(make_braiding(Q, o), M, b, s);
}

inline std::vector<BraidWord> braid_suite() {
  std::vector<BraidWord> out;
  for (const char* w : {"1:", "2: 1", "2: -1", "2: 1 1", "2: 1 1 1", "3: 1 -2"}) out.push_back(parse_braid(w));
  return out;
}

inline std::vector<BraidWord> random_braids(uint32_t seed, size_t count, size_t max_strands, size_t max_letters) {
  std::mt19937 rng(seed);
  std::vector<BraidWord> out;
  for (size_t t = 0; t < count; ++t) {
    BraidWord b;
    b.strands = 1 + rng() % max_strands;
    if (b.strands > 1) {
      size_t len = rng() % (max_letters + 1);
      for (size_t k = 0; k < len; ++k) {
        int l = 1 + static_cast<int>(rng() % (b.strands - 1));
        b.letters.push_back(rng() % 2 ? l : -l);
      }
    }
    out.push_back(b);
  }
  return out;
}

// alpha^{-1} = alpha o S for the distinguished grouplike alpha of A*.
inline Vec alpha_inverse(const HopfAlgebra& A) {
  Integrals in = integrals(A);
  Vec ai = zero_vec(A.field, A.dim);
  for (size_t c = 0; c < A.dim; ++c)
    for (size_t k = 0; k < A.dim; ++k) ai[c].add_mul(A.antipode(k, c), in.modular_function[k]);
  return ai;
}

// a -> sum S^2(a1) <alpha^{-1}, a2>
inline Matrix u_action_formula(const HopfAlgebra& A) {
  Vec ai = alpha_inverse(A);
  Matrix s2 = A.antipode * A.antipode;
  Matrix m(A.field, A.dim, A.dim);
  for (size_t a = 0; a < A.dim; ++a)
    for (const auto& t : A.comult[a]) {
      Scalar w = t.coef * ai[t.right];
      if (w.is_zero()) continue;
      for (size_t r = 0; r < A.dim; ++r)
        if (!s2(r, t.left).is_zero()) m(r, a).add_mul(w, s2(r, t.left));
    }
  return m;
}

// a -> sum a1 <alpha^{-1}, a2>
inline Matrix z_action_formula(const HopfAlgebra& A) {
  Vec ai = alpha_inverse(A);
  Matrix m(A.field, A.dim, A.dim);
  for (size_t a = 0; a < A.dim; ++a)
    for (const auto& t : A.comult[a]) m(t.left, a).add_mul(t.coef, ai[t.right]);
  return m;
}

// R_21 R = Delta(u^{-1}) (u (x) u)
inline bool r21r_identity(const QuasitriangularData& Q) {
  const HopfAlgebra& H = *Q.H;
  TensorElem r = r_tensor(Q.R), r21;
  for (const auto& [a, b] : Q.R)
    for (const auto& [legs, c] : tensor_of({b, a})) tensor_add(r21, legs, c);
  TensorElem lhs = tensor_multiply(H, r21, r);
  TensorElem rhs = tensor_multiply(H, comultiply(H, Q.u_inv), tensor_of({Q.u, Q.u}));
  return lhs == rhs;
}

class Recorder {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed_ = false;
      if (failures_.size() < 4) failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  bool passed() const { return passed_; }
  std::string detail() const {
    std::string d = notes_;
    for (const auto& f : failures_) d += (d.empty() ? "FAILED " : "; FAILED ") + f;
    return d;
  }

 private:
  bool passed_ = true;
  std::string notes_;
  std::vector<std::string> failures_;
};

// ---------------------------------------------------------------------------
// The checks

inline void quantum_dimensions(Recorder& r) {
  std::map<std::string, int> expected = {{"kZ2", 2}, {"kS3", 6}, {"k^S3", 6}, {"sweedler", 0}, {"taft3", 0}};
  for (const auto& [label, A] : builtin_five()) {
    QtPtr Q = double_of(A);
    Scalar v = bdim(*Q, schrodinger(*Q), parse_braid("1:"), Side::Right);
    r.expect(v == trace_s_squared(*A), label + ": 1-dim^r != Tr S^2");
    r.expect(v == Scalar(A->field, expected[label]), label + ": expected " + std::to_string(expected[label]));
    r.note(label + "=" + v.str());
  }
}

inline void t22_group_algebras(Recorder& r) {
  std::vector<std::pair<std::string, int>> groups = {{"C2", 4},  {"C3", 9},  {"C4", 16}, {"C2xC2", 16},
                                                     {"S3", 18}, {"D4", 40}, {"Q8", 40}};
  for (const auto& [g, want] : groups) {
    FiniteGroup G = parse_group(g);
    HopfPtr A = group_algebra(G);
    QtPtr Q = double_of(A);
    Module M = schrodinger(*Q);
    Scalar target(A->field, static_cast<int64_t>(G.order * conjugacy_class_count(G)));
    for (Side s : {Side::Left, Side::Right}) {
      Scalar v = bdim(*Q, M, torus_braid(2, 2), s);
      r.expect(v == target && v == Scalar(A->field, want), g + " " + to_string(s) + " gave " + v.str());
    }
    r.note(g + "=" + target.str());
  }
}

inline void oracle_equivalence(Recorder& r) {
  std::vector<BraidWord> braids = random_braids(20240611, 20, 3, 6);
  for (const char* g : {"C2", "S3"}) {
    FiniteGroup G = parse_group(g);
    QtPtr Q = double_of(group_algebra(G));
    Module M = schrodinger(*Q);
    size_t agree = 0;
    for (const BraidWord& b : braids) {
      Scalar oracle(Q->H->field, static_cast<int64_t>(fy_fixed_points(G, b)));
      bool ok = true;
      for (Side s : {Side::Left, Side::Right}) {
        Scalar v = bdim(*Q, M, b, s);
        if (v != oracle) {
          ok = false;
          r.expect(false, std::string(g) + " " + b.str() + " " + to_string(s) + ": " + v.str() + " vs oracle " + oracle.str());
        }
      }
      agree += ok;
    }
    r.note(std::string(g) + " " + std::to_string(agree) + "/" + std::to_string(braids.size()));
  }
}

inline void dual_group_algebra_t22(Recorder& r) {
  FiniteGroup s3 = symmetric_group(3);
  QtPtr Qd = double_of(dual_group_algebra(s3));
  QtPtr Qg = double_of(group_algebra(s3));
  for (Side s : {Side::Left, Side::Right}) {
    Scalar dual = bdim(*Qd, schrodinger(*Qd), torus_braid(2, 2), s);
    Scalar grp = bdim(*Qg, schrodinger(*Qg), torus_braid(2, 2), s);
    r.expect(dual == Scalar(Qd->H->field, 36), "k^S3 " + to_string(s) + " gave " + dual.str());
    r.expect(dual != grp, "k^S3 and kS3 not separated");
    r.note(to_string(s) + ": k^S3=" + dual.str() + " kS3=" + grp.str());
  }
}

inline void non_cosemisimple_vanishing(Recorder& r) {
  size_t count = 0;
  for (const auto& [label, A] : builtin_five()) {
    if (label != "sweedler" && label != "taft3") continue;
    QtPtr Q = double_of(A);
    Module M = schrodinger(*Q);
    for (Orientation o : {Orientation::Standard, Orientation::Reversed}) {
      Braiding B = make_braiding(*Q, o);
      for (const BraidWord& b : braid_suite())
        for (Side s : {Side::Left, Side::Right}) {
          Scalar v = bdim(B, M, b, s);
          ++count;
          r.expect(v.is_zero(), label + " " + b.str() + " " + to_string(s) + " " + to_string(o) + " = " + v.str());
        }
    }
  }
  r.note(std::to_string(count) + " evaluations");
}

inline void z_action(Recorder& r) {
  HopfPtr sw = sweedler();
  QtPtr Q = double_of(sw);
  Matrix z = act(schrodinger(*Q), Q->z);
  r.expect(z == z_action_formula(*sw), "sweedler z action differs from a1<alpha^-1,a2>");
  r.expect(!z.is_identity(), "sweedler z acts as identity");
  HopfPtr ks3 = group_algebra(symmetric_group(3));
  QtPtr Q3 = double_of(ks3);
  r.expect(act(schrodinger(*Q3), Q3->z).is_identity(), "kS3 z is not the identity");
  r.expect(z_action_formula(*ks3).is_identity(), "kS3 formula is not the identity");
  r.note(std::string("sweedler z ") + (z.is_identity() ? "= id" : "!= id") + ", kS3 z = id");
}

inline void u_actions(Recorder& r) {
  for (const auto& [label, A] : builtin_five()) {
    QtPtr Q = double_of(A);
    Module M = schrodinger(*Q);
    r.expect(act(M, Q->u) == u_action_formula(*A), label + ": u action");
    r.expect(act(M, Q->s_u) == A->s_inv() * A->s_inv(), label + ": S(u) action");
  }
  r.note("u and S(u) checked on 5 algebras");
}

inline void torus_closed_forms(Recorder& r) {
  for (const HopfPtr& A : {sweedler(), group_algebra(cyclic_group(3))}) {
    QtPtr Q = double_of(A);
    Module M = schrodinger(*Q);
    Braiding B = make_braiding(*Q);
    std::string vals;
    for (int q = 0; q <= 5; ++q)
      for (Side s : {Side::Left, Side::Right}) {
        Scalar closed = t2q_closed_form(B, M, q, s);
        Scalar generic = bdim(B, M, torus_braid(2, q), s);
        r.expect(closed == generic, A->name + " q=" + std::to_string(q) + " " + to_string(s) + ": " +
                                        closed.str() + " vs " + generic.str());
        if (s == Side::Left) vals += (vals.empty() ? "" : ",") + generic.str();
      }
    r.note(A->name + " left q=0..5: " + vals);
  }
}

inline void structural_isomorphisms(Recorder& r) {
  auto check = [&](bool ok, const std::string& label, const std::string& what) { r.expect(ok, label + ": " + what); };
  std::vector<Named> full = {{"sweedler", sweedler()}, {"kZ2", group_algebra(cyclic_group(2))}};
  for (const auto& [label, A] : full) {
    QtPtr Q = double_of(A);
    Module S = schrodinger(*Q), D = dual_schrodinger(*Q);
    check(is_isomorphism(schrodinger_to_induced(*A), S, induced_module(*Q, trivial_module(A))), label, "Schr = I_A(k)");
    check(is_isomorphism(dual_schrodinger_to_dual_coinduced(*A), D, dual_module(coinduced_trivial(*Q))), label,
          "dual Schr = I^A(k)*");
    QtPtr Qs = double_of(dual(*A));
    Module pulled = pullback(phi_iso(*A, *Qs->H), Q->H, dual_schrodinger(*Qs));
    check(is_isomorphism(A->antipode, pulled, S), label, "S intertwines the phi pullback");
    Module pulled_back = pullback(invert(phi_iso(*A, *Qs->H)), Qs->H, D);
    check(find_iso(schrodinger(*Qs), pulled_back).status == IsoSearch::Found, label,
          "Schr(A*) = pullback of dual Schr(A)");
    for (const Module& V : {trivial_module(A), regular_module(A)}) {
      Module lhs = tensor(induced_module(*Q, V), S);
      Module rhs = induced_module(*Q, tensor(V, restrict_to_base(*Q, S)));
      check(is_isomorphism(induced_tensor_map(*Q, V.dim, S), lhs, rhs), label, "induced tensor map, V=" + V.name);
    }
    for (const Comodule& N : {trivial_comodule(A), regular_comodule(A)}) {
      Module lhs = coinduced_module(*Q, tensor_comodule(N, comodule_of(*Q, S)));
      Module rhs = tensor(coinduced_module(*Q, N), S);
      check(is_isomorphism(coinduced_tensor_map(*Q, N.dim, S), lhs, rhs), label, "coinduced tensor map, N=" + N.name);
    }
    Matrix sq = induced_tensor_map(*Q, 1, S) * kron(schrodinger_to_induced(*A), Matrix::identity(A->field, A->dim));
    check(is_isomorphism(sq, tensor(S, S), induced_module(*Q, tensor(trivial_module(A), adjoint_module(A)))), label,
          "Schr (x) Schr = I_A(A_ad)");
    IsoResult reg = find_iso(tensor(S, D), regular_module(Q->H));
    check(reg.status == IsoSearch::Found, label, "Schr (x) dual Schr = D(A): " + to_string(reg.status));
  }
  HopfPtr ks3 = group_algebra(symmetric_group(3));
  QtPtr Q3 = double_of(ks3);
  check(is_isomorphism(schrodinger_to_induced(*ks3), schrodinger(*Q3), induced_module(*Q3, trivial_module(ks3))),
        "kS3", "Schr = I_A(k)");
  check(is_isomorphism(dual_schrodinger_to_dual_coinduced(*ks3), dual_schrodinger(*Q3),
                       dual_module(coinduced_trivial(*Q3))),
        "kS3", "dual Schr = I^A(k)*");
  r.note("sweedler, kZ2: 10 maps each; kS3: 2 maps");
}

inline void algebra_axioms(Recorder& r) {
  size_t n = 0;
  for (const auto& [label, A] : builtin_five()) {
    QtPtr Q = double_of(A);
    ValidationReport ha = validate_hopf(*A), hd = validate_hopf(*Q->H), qt = validate_qt(*Q);
    r.expect(ha.ok(), label + " Hopf axioms: " + ha.summary());
    r.expect(hd.ok(), "D(" + label + ") Hopf axioms: " + hd.summary());
    r.expect(qt.ok(), "D(" + label + ") quasitriangularity: " + qt.summary());
    r.expect(multiply(*Q->H, Q->u, Q->u_inv) == Q->H->unit, label + ": u u^-1 != 1");
    r.expect(r21r_identity(*Q), label + ": R21 R != Delta(u^-1)(u (x) u)");
    n += ha.checks.size() + hd.checks.size() + qt.checks.size() + 2;
  }
  r.note(std::to_string(n) + " axiom checks");
}

inline void trace_guard(Recorder& r) {
  const TraceLedger& l = trace_ledger();
  r.expect(l.mismatches == 0, std::to_string(l.mismatches) + " closed-form mismatches, first " + l.first_mismatch);
  r.note(std::to_string(l.evaluations) + " braided dims matched their closed form");
}

inline void duality_transpose(Recorder& r) {
  QtPtr Q = double_of(sweedler());
  Module M = schrodinger(*Q);
  Module Ms = dual_module(M);
  const size_t d = M.dim;
  Braiding B = make_braiding(*Q), Bbar = make_braiding(*Q, Orientation::Reversed);
  std::vector<BraidWord> braids = random_braids(4242, 12, 2, 6);
  for (const BraidWord& b : braids) {
    Scalar lhs = bdim(B, Ms, b, Side::Right), rhs = bdim(Bbar, M, b, Side::Left);
    r.expect(lhs == rhs, "dual module right vs reversed left " + b.str() + ": " + lhs.str() + " vs " + rhs.str());
  }
  Matrix wl_bar = trace_weights(Bbar, M, Side::Left);
  Matrix wr_dual = trace_weights(B, Ms, Side::Right);
  Matrix P(Q->H->field, d * d, d * d);
  for (size_t x = 0; x < d; ++x)
    for (size_t y = 0; y < d; ++y) P(x * d + y, y * d + x) = Scalar::one(Q->H->field);
  size_t ops = 0;
  for (const BraidWord& b0 : braids) {
    BraidWord b{2, {}};
    for (int l : b0.letters) b.letters.push_back(l > 0 ? 1 : -1);
    Matrix f = braid_operator(B, M, b).matrix();
    Matrix lhs = partial_trace(wr_dual, d, P.transpose() * f.transpose() * P, Side::Right);
    Matrix rhs = partial_trace(wl_bar, d, f, Side::Left).transpose();
    r.expect(lhs == rhs, "transpose of left partial trace " + b.str());
    ++ops;
  }
  r.note(std::to_string(braids.size()) + " dual-module dims, " + std::to_string(ops) + " operator identities");
}

inline void isomorphism_invariance(Recorder& r) {
  FiniteGroup c6 = cyclic_group(6), prod = parse_group("C2xC3");
  uint32_t h = 0;
  for (uint32_t k = 0; k < prod.order; ++k)
    if (prod.element_order(k) == 6) h = k;
  std::vector<uint32_t> img(6);
  for (uint32_t k = 0; k < 6; ++k) img[k] = prod.pow(h, k);
  HopfPtr A = group_algebra(c6), Bg = group_algebra(prod);
  QtPtr QA = double_of(A), QB = double_of(Bg);
  Matrix Df = double_of_iso(group_algebra_map(c6, prod, img), *A, *Bg);
  Module SA = schrodinger(*QA), SB = schrodinger(*QB);
  Module pulled = pullback(Df, QA->H, SB);
  IsoResult iso = find_iso(SA, pulled);
  r.expect(iso.status == IsoSearch::Found, "Schr(kC6) vs pulled Schr(kC2xC3): " + to_string(iso.status));
  size_t n = 0;
  for (const BraidWord& b : braid_suite())
    for (Side s : {Side::Left, Side::Right}) {
      Scalar a = bdim(*QA, SA, b, s), c = bdim(*QB, SB, b, s), p = bdim(*QA, pulled, b, s);
      r.expect(a == c && a == p, b.str() + " " + to_string(s) + ": " + a.str() + ", " + c.str() + ", " + p.str());
      ++n;
    }
  r.note(std::to_string(n) + " invariants compared");
}

// ---------------------------------------------------------------------------

struct CheckDef {
  std::string id;
  std::string slug;
  std::string title;
  std::vector<std::string> suites;
  std::function<void(Recorder&)> run;
};

inline const std::vector<CheckDef>& checks() {
  static const std::vector<CheckDef> defs = {
      {"1", "quantum-dimension", "quantum dimension of Schr(A) equals Tr S^2", {"theorems", "traces"}, quantum_dimensions},
      {"2", "t22-group-algebras", "t22-dim of Schr(kG) equals |G| #Conj(G)", {"theorems"}, t22_group_algebras},
      {"3", "fixed-point-oracle", "braided dims of Schr(kG) equal Freyd-Yetter fixed points", {"theorems"}, oracle_equivalence},
      {"4", "t22-dual-group-algebra", "t22-dim of Schr(k^S3) is 36 and separates it from kS3", {"theorems"}, dual_group_algebra_t22},
      {"5", "non-cosemisimple-vanishing", "braided dims vanish for non-cosemisimple A", {"theorems"}, non_cosemisimple_vanishing},
      {"6", "z-detects-unimodularity", "z = u S(u) on Schr detects unimodularity", {"schrodinger"}, z_action},
      {"7", "u-action-closed-form", "u and S(u) act on Schr by their closed forms", {"schrodinger"}, u_actions},
      {"8", "torus-closed-forms", "t_{2,q} closed forms match the braid pipeline", {"traces"}, torus_closed_forms},
      {"9", "structural-isomorphisms", "structural isomorphisms of Schrodinger modules", {"schrodinger"}, structural_isomorphisms},
      {"10", "axioms-and-trace-guard", "Hopf, quasitriangular and trace-guard axioms", {"axioms"},
       [](Recorder& r) {
         algebra_axioms(r);
         trace_guard(r);
       }},
      {"11", "dual-transpose-traces", "dual-module and transpose trace identities", {"traces"}, duality_transpose},
      {"12", "isomorphism-invariance", "isomorphic algebras give equal braided dims", {"theorems"}, isomorphism_invariance},
  };
  return defs;
}

inline CheckResult run_check(const CheckDef& def) {
  auto t0 = std::chrono::steady_clock::now();
  Recorder r;
  try {
    def.run(r);
  } catch (const std::exception& e) {
    r.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {def.id, def.slug, def.title, r.passed(), r.detail(), secs};
}

inline bool known_suite(const std::string& s) {
  return s == "all" || s == "axioms" || s == "schrodinger" || s == "traces" || s == "theorems";
}

// Runs the checks of a suite in id order; the axiom check (which also reports
// the trace guard) always runs after the others so the guard sees every
// evaluation made in this run.
inline std::vector<CheckResult> run_suite(const std::string& suite) {
  if (!known_suite(suite)) fail(ErrorKind::BadParameter, "unknown suite " + suite);
  std::vector<const CheckDef*> chosen;
  for (const auto& d : checks())
    if (suite == "all" || std::find(d.suites.begin(), d.suites.end(), suite) != d.suites.end()) chosen.push_back(&d);
  std::vector<CheckResult> out(chosen.size());
  std::vector<size_t> order;
  for (size_t i = 0; i < chosen.size(); ++i)
    if (chosen[i]->id != "10") order.push_back(i);
  for (size_t i = 0; i < chosen.size(); ++i)
    if (chosen[i]->id == "10") order.push_back(i);
  for (size_t i : order) out[i] = run_check(*chosen[i]);
  return out;
}

}  // namespace verify
}  // namespace schrod
