#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "schrod/braid.hpp"
#include "schrod/io.hpp"
#include "schrod/zoo.hpp"

using namespace schrod;

namespace {

const std::string kSamples = SCHROD_SAMPLES_DIR;

bool same_tensors(const HopfAlgebra& a, const HopfAlgebra& b) {
  if (a.dim != b.dim || a.field != b.field || a.basis != b.basis) return false;
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j)
      if (to_dense(a.field, a.dim, a.product(i, j)) != to_dense(b.field, b.dim, b.product(i, j))) return false;
  for (size_t i = 0; i < a.dim; ++i)
    if (comultiply(a, basis_vec(a, i)) != comultiply(b, basis_vec(b, i))) return false;
  return a.unit == b.unit && a.counit == b.counit && a.antipode == b.antipode;
}

std::string schema_message(const nlohmann::json& j) {
  try {
    hopf_from_json(j);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SchemaError);
    return e.what();
  }
  return "";
}

}  // namespace

TEST(HopfJson, RoundTripOfBuiltins) {
  for (const HopfPtr& A : {sweedler(), group_algebra(symmetric_group(3)), dual_group_algebra(cyclic_group(3)),
                           taft(3, Scalar::zeta(Field::cyclotomic(3)))}) {
    nlohmann::json j = hopf_to_json(*A);
    HopfPtr B = hopf_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_TRUE(same_tensors(*A, *B)) << A->name;
    EXPECT_EQ(hopf_to_json(*B), j) << A->name;
  }
}

TEST(HopfJson, FileRoundTrip) {
  auto path = std::filesystem::temp_directory_path() / "schrod_io_test_sweedler.json";
  save_hopf_json(*sweedler(), path.string());
  HopfPtr B = load_hopf_json(path.string());
  EXPECT_TRUE(same_tensors(*sweedler(), *B));
  std::filesystem::remove(path);
}

TEST(HopfJson, HandwrittenSamples) {
  HopfPtr z2 = load_hopf_json(kSamples + "/kz2.json");
  EXPECT_TRUE(validate_hopf(*z2).ok());
  EXPECT_EQ(z2->unit, unit_vec(z2->field, 2, 0));  // solved for, not given
  HopfPtr sw5 = load_hopf_json(kSamples + "/sweedler_gf5.json");
  ValidationReport rep = validate_hopf(*sw5);
  EXPECT_TRUE(rep.ok()) << rep.summary();
  EXPECT_EQ(sw5->field.str(), "GF(5)");
  // over GF(5) the Sweedler algebra still has Tr S^2 = 0 and vanishing braided dimensions
  QtPtr Q = build_double(sw5);
  EXPECT_TRUE(braided_dim(*Q, schrodinger(*Q), torus_braid(2, 2), Side::Left).is_zero());
}

TEST(HopfJson, BrokenSampleFailsValidation) {
  HopfPtr A = load_hopf_json(kSamples + "/broken_coassoc.json");
  ValidationReport rep = validate_hopf(*A);
  EXPECT_FALSE(rep.ok());
  ASSERT_NE(rep.find("coassociativity"), nullptr);
  EXPECT_FALSE(rep.find("coassociativity")->passed);
}

TEST(HopfJson, SchemaErrorsCarryLocations) {
  try {
    load_hopf_json(kSamples + "/missing_antipode.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SchemaError);
    EXPECT_NE(std::string(e.what()).find("/antipode"), std::string::npos) << e.what();
  }
  nlohmann::json good = hopf_to_json(*sweedler());
  nlohmann::json j = good;
  j["mult"][3][2] = 9;
  EXPECT_NE(schema_message(j).find("/mult/3/2"), std::string::npos);
  j = good;
  j["comult"][0][3] = "1/0";
  EXPECT_NE(schema_message(j).find("/comult/0/3"), std::string::npos);
  j = good;
  j["field"] = {{"type", "GF"}, {"p", 6}};
  EXPECT_NE(schema_message(j).find("/field"), std::string::npos);
  j = good;
  j["basis"] = {"1"};
  EXPECT_NE(schema_message(j).find("/basis"), std::string::npos);
  j = good;
  j["counit"][0] = {0};
  EXPECT_NE(schema_message(j).find("/counit/0"), std::string::npos);
  EXPECT_THROW(load_hopf_json(kSamples + "/does_not_exist.json"), Error);
}
