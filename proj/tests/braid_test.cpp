#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "schrod/braid.hpp"
#include "schrod/zoo.hpp"

using namespace schrod;

namespace {

HopfPtr taft3() { return taft(3, Scalar::zeta(Field::cyclotomic(3))); }

Scalar num(const HopfAlgebra& H, int v) { return Scalar(H.field, v); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::SchemaError;  // sentinel: nothing thrown
}

BraidWord random_braid(std::mt19937& rng, size_t max_strands, size_t max_letters) {
  BraidWord b;
  b.strands = 1 + rng() % max_strands;
  if (b.strands == 1) return b;
  size_t len = rng() % (max_letters + 1);
  for (size_t i = 0; i < len; ++i) {
    int l = 1 + static_cast<int>(rng() % (b.strands - 1));
    b.letters.push_back(rng() % 2 ? l : -l);
  }
  return b;
}

}  // namespace

TEST(BraidWords, Parsing) {
  EXPECT_EQ(parse_braid("2: 1 1"), (BraidWord{2, {1, 1}}));
  EXPECT_EQ(parse_braid("3: 1 -2 1"), (BraidWord{3, {1, -2, 1}}));
  EXPECT_EQ(parse_braid("3:1,-2"), (BraidWord{3, {1, -2}}));
  EXPECT_EQ(parse_braid("1:"), (BraidWord{1, {}}));
  EXPECT_EQ(kind_of([] { parse_braid("2: 2"); }), ErrorKind::LetterOutOfRange);
  EXPECT_EQ(kind_of([] { parse_braid("2: 0"); }), ErrorKind::ZeroLetter);
  EXPECT_EQ(kind_of([] { parse_braid("2 1 1"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_braid("x: 1"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_braid("2: 1a"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_braid("0:"); }), ErrorKind::ParseError);
}

TEST(BraidWords, TorusBraids) {
  EXPECT_EQ(torus_braid(2, 2).str(), "2: 1 1");
  EXPECT_EQ(torus_braid(2, 3).str(), "2: 1 1 1");
  EXPECT_EQ(torus_braid(3, 1).str(), "3: 1 2");
  EXPECT_EQ(torus_braid(3, -1).str(), "3: -2 -1");
  EXPECT_EQ(torus_braid(2, 0).str(), "2:");
  EXPECT_THROW(torus_braid(1, 2), Error);
}

TEST(Braiding, TrivialModulesBraidByFlip) {
  QtPtr Q = build_double(sweedler());
  Module T = trivial_module(Q->H);
  Braiding B = make_braiding(*Q);
  EXPECT_TRUE(braiding_map(B, T, T).is_identity());
  Module T2 = tensor(T, T);
  Matrix c = braiding_map(B, T2, T);
  EXPECT_TRUE(c.is_identity());
}

TEST(Braiding, AbelianSchrodingerBraidingIsAnInvolution) {
  QtPtr Q = build_double(group_algebra(cyclic_group(2)));
  Module M = schrodinger(*Q);
  Matrix c = braiding_map(make_braiding(*Q), M, M);
  EXPECT_TRUE((c * c).is_identity());
}

TEST(Braiding, YangBaxterOnSweedlerCube) {
  QtPtr Q = build_double(sweedler());
  Module M = schrodinger(*Q);
  for (Orientation o : {Orientation::Standard, Orientation::Reversed}) {
    Braiding B = make_braiding(*Q, o);
    Matrix s1 = braid_operator(B, M, parse_braid("3: 1 2 1")).matrix();
    Matrix s2 = braid_operator(B, M, parse_braid("3: 2 1 2")).matrix();
    EXPECT_EQ(s1, s2);
  }
}

TEST(Braiding, RelationsAndInverses) {
  std::vector<HopfPtr> algebras = {group_algebra(symmetric_group(3)), sweedler(), taft3()};
  for (const auto& A : algebras) {
    QtPtr Q = build_double(A);
    Module M = schrodinger(*Q);
    Braiding B = make_braiding(*Q);
    EXPECT_TRUE(braid_operator(B, M, parse_braid("2: 1 -1")).matrix().is_identity()) << A->name;
    BraidedOperator x = braid_operator(B, M, parse_braid("3: 1 2 1"));
    BraidedOperator y = braid_operator(B, M, parse_braid("3: 2 1 2"));
    for (size_t j = 0; j < x.dim(); j += 7) EXPECT_EQ(x.column(j), y.column(j)) << A->name << " col " << j;
  }
}

TEST(Braiding, FarCommutationOnFourStrands) {
  QtPtr Q = build_double(sweedler());
  Module M = schrodinger(*Q);
  Braiding B = make_braiding(*Q);
  Matrix a = braid_operator(B, M, parse_braid("4: 1 3")).matrix();
  Matrix b = braid_operator(B, M, parse_braid("4: 3 1")).matrix();
  EXPECT_EQ(a, b);
}

TEST(Braiding, BraidOperatorIsAnIntertwiner) {
  QtPtr Q = build_double(sweedler());
  Module M = schrodinger(*Q);
  Module M3 = tensor(tensor(M, M), M);
  Matrix f = braid_operator(make_braiding(*Q), M, parse_braid("3: 1 -2 1")).matrix();
  EXPECT_TRUE(is_intertwiner(f, M3, M3));
}

TEST(Braiding, InverseMatchesMatrixInverse) {
  QtPtr Q = build_double(taft3());
  Module M = schrodinger(*Q);
  Module D = dual_schrodinger(*Q);
  Braiding B = make_braiding(*Q);
  EXPECT_EQ(braiding_inverse_map(B, M, D), invert(braiding_map(B, M, D)));
  // the reverse braiding is c-bar_{X,Y} = c_{Y,X}^{-1}
  Braiding Bb = make_braiding(*Q, Orientation::Reversed);
  EXPECT_EQ(braiding_map(Bb, M, D), invert(braiding_map(B, D, M)));
}

TEST(BraidedDims, QuantumDimensionOfSchrodinger) {
  std::vector<HopfPtr> algebras = {group_algebra(cyclic_group(2)), group_algebra(symmetric_group(3)),
                                   dual_group_algebra(symmetric_group(3)), sweedler(), taft3()};
  for (const auto& A : algebras) {
    QtPtr Q = build_double(A);
    Scalar right = braided_dim(*Q, schrodinger(*Q), parse_braid("1:"), Side::Right);
    EXPECT_EQ(right, trace_s_squared(*A)) << A->name;
  }
  QtPtr Q = build_double(group_algebra(symmetric_group(3)));
  EXPECT_EQ(braided_dim(*Q, schrodinger(*Q), parse_braid("1:"), Side::Right), num(*Q->H, 6));
  QtPtr S = build_double(sweedler());
  EXPECT_EQ(braided_dim(*S, schrodinger(*S), parse_braid("1:"), Side::Left), num(*S->H, 0));
}

TEST(BraidedDims, GroupAlgebraTorusValues) {
  QtPtr Q = build_double(group_algebra(symmetric_group(3)));
  Module M = schrodinger(*Q);
  EXPECT_EQ(braided_dim(*Q, M, torus_braid(2, 2), Side::Left), num(*Q->H, 18));
  EXPECT_EQ(braided_dim(*Q, M, torus_braid(2, 2), Side::Right), num(*Q->H, 18));
  EXPECT_EQ(braided_dim(*Q, M, torus_braid(2, 3), Side::Right), num(*Q->H, 12));
  QtPtr C3 = build_double(group_algebra(cyclic_group(3)));
  EXPECT_EQ(braided_dim(*C3, schrodinger(*C3), torus_braid(2, 2), Side::Left), num(*C3->H, 9));
}

TEST(BraidedDims, InvolutoryUnimodularSidesAgreeWithPlainTrace) {
  for (const char* g : {"C2", "S3"}) {
    QtPtr Q = build_double(group_algebra(parse_group(g)));
    Module M = schrodinger(*Q);
    Braiding B = make_braiding(*Q);
    for (const char* w : {"2: 1", "2: 1 1", "3: 1 -2", "3: 1 2 1 2"}) {
      BraidWord b = parse_braid(w);
      Scalar plain = braid_operator(B, M, b).matrix().trace();
      EXPECT_EQ(braided_dim(B, M, b, Side::Left), plain) << g << " " << w;
      EXPECT_EQ(braided_dim(B, M, b, Side::Right), plain) << g << " " << w;
    }
  }
}

TEST(BraidedDims, TorusClosedForms) {
  for (const HopfPtr& A : {sweedler(), group_algebra(cyclic_group(3))}) {
    QtPtr Q = build_double(A);
    Module M = schrodinger(*Q);
    Braiding B = make_braiding(*Q);
    for (int q = 0; q <= 5; ++q)
      for (Side s : {Side::Left, Side::Right})
        EXPECT_EQ(t2q_closed_form(B, M, q, s), braided_dim(B, M, torus_braid(2, q), s))
            << A->name << " q=" << q << " " << to_string(s);
  }
  QtPtr Q = build_double(group_algebra(cyclic_group(2)));
  Module M = schrodinger(*Q);
  Scalar qd = braided_dim(*Q, M, parse_braid("1:"), Side::Right);
  EXPECT_EQ(t2q_closed_form(make_braiding(*Q), M, 0, Side::Right), qd * qd);
}

TEST(BraidedDims, NonCosemisimpleGivesZero) {
  for (const HopfPtr& A : {sweedler(), taft3()}) {
    QtPtr Q = build_double(A);
    Module M = schrodinger(*Q);
    for (Orientation o : {Orientation::Standard, Orientation::Reversed}) {
      Braiding B = make_braiding(*Q, o);
      for (const char* w : {"1:", "2: 1", "2: -1", "2: 1 1", "2: 1 1 1", "3: 1 -2"})
        for (Side s : {Side::Left, Side::Right})
          EXPECT_TRUE(braided_dim(B, M, parse_braid(w), s).is_zero()) << A->name << " " << w;
    }
  }
}

TEST(BraidedDims, DualModuleSwapsSideAndOrientation) {
  std::mt19937 rng(7);
  QtPtr Q = build_double(sweedler());
  Module M = schrodinger(*Q);
  Module Ms = dual_module(M);
  for (int t = 0; t < 12; ++t) {
    BraidWord b = random_braid(rng, 2, 5);
    EXPECT_EQ(braided_dim(*Q, Ms, b, Side::Right, Orientation::Standard),
              braided_dim(*Q, M, b, Side::Left, Orientation::Reversed))
        << b.str();
  }
}

TEST(PartialTraces, TransposeRelation) {
  std::mt19937 rng(11);
  QtPtr Q = build_double(sweedler());
  Module M = schrodinger(*Q);
  const size_t d = M.dim;
  Braiding B = make_braiding(*Q), Bbar = make_braiding(*Q, Orientation::Reversed);
  Matrix wl_bar = trace_weights(Bbar, M, Side::Left);
  Matrix wr_dual = trace_weights(B, dual_module(M), Side::Right);
  // j : Y* (x) X* -> (X (x) Y)*, e_y* (x) e_x* -> (e_x (x) e_y)*
  Matrix P(Q->H->field, d * d, d * d);
  for (size_t x = 0; x < d; ++x)
    for (size_t y = 0; y < d; ++y) P(x * d + y, y * d + x) = Scalar::one(Q->H->field);
  for (int t = 0; t < 8; ++t) {
    BraidWord b{2, {}};
    for (int k = 0, len = static_cast<int>(rng() % 5); k < len; ++k) b.letters.push_back(rng() % 2 ? 1 : -1);
    Matrix f = braid_operator(B, M, b).matrix();
    Matrix lhs = partial_trace(wr_dual, d, P.transpose() * f.transpose() * P, Side::Right);
    Matrix rhs = partial_trace(wl_bar, d, f, Side::Left).transpose();
    EXPECT_EQ(lhs, rhs) << b.str();
  }
}

TEST(PartialTraces, Naturality) {
  QtPtr Q = build_double(sweedler());
  Module M = schrodinger(*Q);
  const size_t d = M.dim;
  Braiding B = make_braiding(*Q);
  Matrix f = braid_operator(B, M, parse_braid("2: 1 1 -1 1")).matrix();
  // module endomorphisms of M used as g and h
  std::vector<Matrix> ends = hom_basis(M, M);
  ASSERT_FALSE(ends.empty());
  Matrix g = ends.front(), h = ends.back();
  Matrix id = Matrix::identity(Q->H->field, d);
  for (Side s : {Side::Left, Side::Right}) {
    Matrix w = trace_weights(B, M, s);
    Matrix wrapped = s == Side::Left ? kron(id, h) * f * kron(id, g) : kron(h, id) * f * kron(g, id);
    EXPECT_EQ(partial_trace(w, d, wrapped, s), h * partial_trace(w, d, f, s) * g);
  }
}

TEST(PartialTraces, DualSchrodingerOfDualMatchesSchrodinger) {
  for (const HopfPtr& A : {group_algebra(cyclic_group(2)), sweedler()}) {
    QtPtr DA = build_double(A), DAs = build_double(dual(*A));
    Module S = schrodinger(*DA), T = dual_schrodinger(*DAs);
    for (const char* w : {"1:", "2: 1", "2: 1 1", "3: 1 -2"})
      for (Side s : {Side::Left, Side::Right})
        EXPECT_EQ(braided_dim(*DA, S, parse_braid(w), s), braided_dim(*DAs, T, parse_braid(w), s)) << A->name << w;
  }
}

TEST(DrinfeldActions, UAndSuOnSchrodinger) {
  for (const HopfPtr& A : {sweedler(), taft3(), group_algebra(symmetric_group(3))}) {
    QtPtr Q = build_double(A);
    Module M = schrodinger(*Q);
    const size_t d = A->dim;
    Integrals in = integrals(*A);
    Vec alpha_inv = zero_vec(A->field, d);
    for (size_t c = 0; c < d; ++c)
      for (size_t k = 0; k < d; ++k) alpha_inv[c].add_mul(A->antipode(k, c), in.modular_function[k]);
    Matrix s2 = A->antipode * A->antipode;
    Matrix u_formula(A->field, d, d), z_formula(A->field, d, d);
    for (size_t a = 0; a < d; ++a)
      for (const auto& t : A->comult[a]) {
        Scalar w = t.coef * alpha_inv[t.right];
        for (size_t r = 0; r < d; ++r) u_formula(r, a).add_mul(w, s2(r, t.left));
        z_formula(t.left, a) += w;
      }
    EXPECT_EQ(act(M, Q->u), u_formula) << A->name;
    EXPECT_EQ(act(M, Q->s_u), A->s_inv() * A->s_inv()) << A->name;
    EXPECT_EQ(act(M, Q->z), z_formula) << A->name;
    EXPECT_EQ(act(M, Q->z).is_identity(), is_unimodular(*A)) << A->name;
  }
}
