#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "schrod/module.hpp"
#include "schrod/zoo.hpp"

using namespace schrod;

namespace {

struct Case {
  std::string label;
  HopfPtr A;
};

std::vector<Case> small_cases() {
  return {{"kC2", group_algebra(cyclic_group(2))},
          {"sweedler", sweedler()},
          {"kS3", group_algebra(symmetric_group(3))},
          {"taft3", taft(3, Scalar::zeta(Field::cyclotomic(3)))}};
}

void expect_valid(const Module& M, const std::string& label) {
  ValidationReport rep = validate_module(M);
  EXPECT_TRUE(rep.ok()) << label << " " << M.name << "\n" << rep.summary();
}

}  // namespace

TEST(Modules, CanonicalAndSchrodingerModulesAreModules) {
  for (const auto& [label, A] : small_cases()) {
    QtPtr Q = build_double(A);
    expect_valid(trivial_module(A), label);
    expect_valid(regular_module(A), label);
    expect_valid(adjoint_module(A), label);
    expect_valid(schrodinger(*Q), label);
    expect_valid(dual_schrodinger(*Q), label);
    expect_valid(induced_module(*Q, trivial_module(A)), label);
    expect_valid(coinduced_trivial(*Q), label);
    expect_valid(dual_module(schrodinger(*Q)), label);
  }
}

TEST(Modules, InductionOfLargerModules) {
  for (const auto& [label, A] : small_cases()) {
    if (A->dim > 4) continue;
    QtPtr Q = build_double(A);
    expect_valid(induced_module(*Q, regular_module(A)), label);
    EXPECT_TRUE(validate_comodule(regular_comodule(A)).ok()) << label;
    expect_valid(coinduced_module(*Q, regular_comodule(A)), label);
    expect_valid(tensor(schrodinger(*Q), dual_schrodinger(*Q)), label);
  }
}

TEST(Modules, CorruptedActionIsCaught) {
  QtPtr Q = build_double(sweedler());
  Module M = schrodinger(*Q);
  M.action[5](0, 1) += Scalar::one(M.algebra->field);
  EXPECT_FALSE(validate_module(M).ok());
}

TEST(Modules, ComoduleOfDoubleModuleIsComodule) {
  for (const auto& [label, A] : small_cases()) {
    QtPtr Q = build_double(A);
    Comodule C = comodule_of(*Q, schrodinger(*Q));
    EXPECT_TRUE(validate_comodule(C).ok()) << label;
    Comodule T = tensor_comodule(regular_comodule(A), C);
    EXPECT_TRUE(validate_comodule(T).ok()) << label;
  }
}

TEST(Modules, RestrictionOfSchrodingerIsAdjoint) {
  for (const auto& [label, A] : small_cases()) {
    QtPtr Q = build_double(A);
    Module R = restrict_to_base(*Q, schrodinger(*Q));
    Module ad = adjoint_module(A);
    for (size_t i = 0; i < A->dim; ++i) EXPECT_EQ(R.action[i], ad.action[i]) << label << " " << i;
  }
}

TEST(StructuralIsos, SchrodingerIsInducedTrivial) {
  for (const auto& [label, A] : small_cases()) {
    QtPtr Q = build_double(A);
    Matrix phi = schrodinger_to_induced(*A);
    EXPECT_TRUE(is_isomorphism(phi, schrodinger(*Q), induced_module(*Q, trivial_module(A)))) << label;
  }
}

TEST(StructuralIsos, DualSchrodingerIsDualOfCoinducedTrivial) {
  for (const auto& [label, A] : small_cases()) {
    QtPtr Q = build_double(A);
    Matrix phi = dual_schrodinger_to_dual_coinduced(*A);
    EXPECT_TRUE(is_isomorphism(phi, dual_schrodinger(*Q), dual_module(coinduced_trivial(*Q)))) << label;
  }
}

TEST(StructuralIsos, InducedTensorMap) {
  for (const auto& [label, A] : small_cases()) {
    if (A->dim > 4) continue;
    QtPtr Q = build_double(A);
    Module M = schrodinger(*Q);
    for (const Module& V : {trivial_module(A), regular_module(A)}) {
      Module lhs = tensor(induced_module(*Q, V), M);
      Module rhs = induced_module(*Q, tensor(V, restrict_to_base(*Q, M)));
      Matrix phi = induced_tensor_map(*Q, V.dim, M);
      EXPECT_TRUE(is_isomorphism(phi, lhs, rhs)) << label << " V=" << V.name;
    }
  }
}

TEST(StructuralIsos, CoinducedTensorMap) {
  for (const auto& [label, A] : small_cases()) {
    if (A->dim > 4) continue;
    QtPtr Q = build_double(A);
    Module M = schrodinger(*Q);
    for (const Comodule& N : {trivial_comodule(A), regular_comodule(A)}) {
      Module lhs = coinduced_module(*Q, tensor_comodule(N, comodule_of(*Q, M)));
      Module rhs = tensor(coinduced_module(*Q, N), M);
      Matrix psi = coinduced_tensor_map(*Q, N.dim, M);
      EXPECT_TRUE(is_isomorphism(psi, lhs, rhs)) << label << " N=" << N.name;
    }
  }
}

TEST(StructuralIsos, SquareOfSchrodingerIsInducedAdjoint) {
  for (const auto& [label, A] : small_cases()) {
    if (A->dim > 4) continue;
    QtPtr Q = build_double(A);
    Module S = schrodinger(*Q);
    Matrix step1 = kron(schrodinger_to_induced(*A), Matrix::identity(A->field, A->dim));
    Matrix step2 = induced_tensor_map(*Q, 1, S);
    Module target = induced_module(*Q, tensor(trivial_module(A), adjoint_module(A)));
    EXPECT_TRUE(is_isomorphism(step2 * step1, tensor(S, S), target)) << label;
  }
}

TEST(StructuralIsos, SchrodingerTimesDualIsRegular) {
  for (const auto& [label, A] : small_cases()) {
    if (A->dim > 4) continue;
    QtPtr Q = build_double(A);
    IsoResult r = find_iso(tensor(schrodinger(*Q), dual_schrodinger(*Q)), regular_module(Q->H));
    EXPECT_EQ(r.status, IsoSearch::Found) << label << " hom dim " << r.hom_dim;
  }
}

TEST(StructuralIsos, PullbackAlongPhiMatchesSchrodinger) {
  for (const auto& [label, A] : small_cases()) {
    HopfPtr As = dual(*A);
    QtPtr DA = build_double(A), DAs = build_double(As);
    Matrix phi = phi_iso(*A, *DAs->H);
    Module pulled = pullback(phi, DA->H, dual_schrodinger(*DAs));
    EXPECT_TRUE(is_isomorphism(A->antipode, pulled, schrodinger(*DA))) << label;
  }
}

TEST(StructuralIsos, SchrodingerOfDualIsPullbackAlongInversePhi) {
  for (const auto& [label, A] : small_cases()) {
    HopfPtr As = dual(*A);
    QtPtr DA = build_double(A), DAs = build_double(As);
    Matrix phi_inv = invert(phi_iso(*A, *DAs->H));
    Module pulled = pullback(phi_inv, DAs->H, dual_schrodinger(*DA));
    IsoResult r = find_iso(schrodinger(*DAs), pulled);
    EXPECT_EQ(r.status, IsoSearch::Found) << label;
  }
}

TEST(HomSpaces, RegularEndomorphismsAndMismatches) {
  HopfPtr A = sweedler();
  // End_A(A) is A^op acting by right multiplication
  EXPECT_EQ(hom_basis(regular_module(A), regular_module(A)).size(), 4u);
  QtPtr Q = build_double(A);
  IsoResult r = find_iso(schrodinger(*Q), regular_module(Q->H));
  EXPECT_EQ(r.status, IsoSearch::DimensionMismatch);
  IsoResult t = find_iso(trivial_module(Q->H), schrodinger(*Q));
  EXPECT_NE(t.status, IsoSearch::Found);
  try {
    find_iso(trivial_module(A), trivial_module(Q->H));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AlgebraMismatch);
  }
  Matrix bad = Matrix::identity(A->field, 16);
  bad(0, 1) = Scalar::one(A->field);
  EXPECT_THROW(pullback(bad, Q->H, schrodinger(*Q)), Error);
}

TEST(HomSpaces, SemisimpleMultiplicities) {
  FiniteGroup s3 = symmetric_group(3);
  HopfPtr A = group_algebra(s3);
  // dim End(kS3 regular) = 6; adjoint module has 3 conjugacy classes so
  // Hom(trivial, adjoint) has dimension 3
  EXPECT_EQ(hom_basis(regular_module(A), regular_module(A)).size(), 6u);
  EXPECT_EQ(hom_basis(trivial_module(A), adjoint_module(A)).size(), 3u);
}
