#include <gtest/gtest.h>

#include <chrono>
#include <string>
#include <vector>

#include "schrod/double.hpp"
#include "schrod/zoo.hpp"

using namespace schrod;

namespace {

HopfPtr taft3() { return taft(3, Scalar::zeta(Field::cyclotomic(3))); }

TensorElem push_r(const Matrix& f, const RFactors& R) {
  TensorElem t;
  for (const auto& [a, b] : R)
    for (const auto& [k, c] : tensor_of({f * a, f * b})) tensor_add(t, k, c);
  return t;
}

TensorElem flipped(const RFactors& R) {
  RFactors s;
  for (const auto& [a, b] : R) s.emplace_back(b, a);
  return r_tensor(s);
}

}  // namespace

TEST(Double, AbelianDoubleIsCommutativeAndCocommutative) {
  QtPtr Q = build_double(group_algebra(cyclic_group(2)));
  const HopfAlgebra& H = *Q->H;
  ASSERT_EQ(H.dim, 4u);
  for (size_t i = 0; i < 4; ++i) {
    for (size_t j = 0; j < 4; ++j)
      EXPECT_EQ(to_dense(H.field, 4, H.product(i, j)), to_dense(H.field, 4, H.product(j, i)));
    TensorElem dx = comultiply(H, basis_vec(H, i));
    TensorElem sw;
    for (const auto& [k, c] : dx) tensor_add(sw, {k[1], k[0]}, c);
    EXPECT_EQ(dx, sw);
  }
}

TEST(Double, UnitIsEpsilonHashOne) {
  HopfPtr A = sweedler();
  QtPtr Q = build_double(A);
  // eps = 1* + g* and 1 = e_0, so eps # 1 has entries at (0,0) and (1,0)
  Vec expected = zero_vec(A->field, 16);
  expected[double_index(4, 0, 0)] = Scalar::one(A->field);
  expected[double_index(4, 1, 0)] = Scalar::one(A->field);
  EXPECT_EQ(Q->H->unit, expected);
}

TEST(Double, DoublesOfBuiltinsAreQuasitriangularHopfAlgebras) {
  std::vector<HopfPtr> algebras = {group_algebra(cyclic_group(2)), group_algebra(cyclic_group(3)), sweedler(),
                                   group_algebra(symmetric_group(3)), dual_group_algebra(symmetric_group(3)), taft3()};
  for (const auto& A : algebras) {
    auto t0 = std::chrono::steady_clock::now();
    QtPtr Q = build_double(A);
    ValidationReport h = validate_hopf(*Q->H);
    ValidationReport q = validate_qt(*Q);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_TRUE(h.ok()) << A->name << "\n" << h.summary();
    EXPECT_TRUE(q.ok()) << A->name << "\n" << q.summary();
    EXPECT_EQ(Q->H->dim, A->dim * A->dim);
    EXPECT_TRUE(ribbon_identity_holds(*Q->H, Q->R, drinfeld_elements(*Q->H, Q->R))) << A->name;
    RecordProperty(A->name + "_seconds", std::to_string(secs));
  }
}

TEST(Double, DroppedFactorBreaksQuasitriangularity) {
  QtPtr Q = build_double(sweedler());
  RFactors broken = Q->R;
  broken.pop_back();
  ValidationReport rep = validate_qt(*Q->H, broken);
  ASSERT_NE(rep.find("Delta^cop(x) R = R Delta(x)"), nullptr);
  EXPECT_FALSE(rep.find("Delta^cop(x) R = R Delta(x)")->passed);
}

TEST(Double, DrinfeldElementOfSweedlerDouble) {
  QtPtr Q = build_double(sweedler());
  const HopfAlgebra& H = *Q->H;
  EXPECT_NE(Q->u, H.unit);
  EXPECT_EQ(multiply(H, Q->u, Q->u_inv), H.unit);
  EXPECT_EQ(multiply(H, Q->u_inv, Q->u), H.unit);
  // S^2(x) = u x u^{-1}
  Matrix s2 = H.antipode * H.antipode;
  for (size_t i = 0; i < H.dim; ++i)
    EXPECT_EQ(s2 * basis_vec(H, i), multiply(H, multiply(H, Q->u, basis_vec(H, i)), Q->u_inv));
}

TEST(Double, PhiIsAnIsomorphismOntoCoopositeDualDouble) {
  for (const HopfPtr& A : {group_algebra(cyclic_group(2)), sweedler(), group_algebra(symmetric_group(3))}) {
    HopfPtr As = dual(*A);
    QtPtr DA = build_double(A), DAs = build_double(As);
    Matrix phi = phi_iso(*A, *DAs->H);
    EXPECT_TRUE(is_invertible(phi)) << A->name;
    EXPECT_NO_THROW(verify_phi_iso(phi, *DA->H, *DAs->H)) << A->name;
    // phi_{A*} o phi_A = D(iota_A), which is the identity on indices
    QtPtr DAss = build_double(dual(*As));
    Matrix phi2 = phi_iso(*As, *DAss->H);
    EXPECT_TRUE((phi2 * phi).is_identity()) << A->name;
    // (phi (x) phi)(R) = R'_21
    EXPECT_EQ(push_r(phi, DA->R), flipped(DAs->R)) << A->name;
  }
}

TEST(Double, DoubleOfIdentityIsIdentity) {
  HopfPtr A = sweedler();
  Matrix Df = double_of_iso(Matrix::identity(A->field, 4), *A, *A);
  EXPECT_TRUE(Df.is_identity());
}

TEST(Double, DoubleOfGroupIsomorphism) {
  FiniteGroup c6 = cyclic_group(6), prod = parse_group("C2xC3");
  uint32_t h = 0;
  for (uint32_t k = 0; k < prod.order; ++k)
    if (prod.element_order(k) == 6) h = k;
  std::vector<uint32_t> img(6);
  for (uint32_t k = 0; k < 6; ++k) img[k] = prod.pow(h, k);
  HopfPtr A = group_algebra(c6), B = group_algebra(prod);
  Matrix f = group_algebra_map(c6, prod, img);
  Matrix Df = double_of_iso(f, *A, *B);
  QtPtr DA = build_double(A), DB = build_double(B);
  EXPECT_TRUE(check_hopf_map(Df, *DA->H, *DB->H).ok());
  EXPECT_EQ(push_r(Df, DA->R), r_tensor(DB->R));
  std::swap(img[1], img[2]);
  try {
    double_of_iso(group_algebra_map(c6, prod, img), *A, *B);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHopfMap);
  }
}

TEST(Double, DoubleOfAntipodeOnZ2) {
  HopfPtr A = group_algebra(cyclic_group(2));
  Matrix Df = double_of_iso(A->antipode, *A, *A);
  QtPtr DA = build_double(A);
  EXPECT_TRUE(check_hopf_map(Df, *DA->H, *DA->H).ok());
}
