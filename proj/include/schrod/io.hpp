#pragma once

// JSON serialization of Hopf algebras given by structure constants.
//
//   { "name": str, "field": {"type":"Q"} | {"type":"GF","p":int} | {"type":"Cyc","m":int},
//     "dim": int, "basis": [str], "unit": [[i,c]] (optional),
//     "mult": [[i,j,k,c]]      e_i e_j has coefficient c at e_k
//     "comult": [[i,j,k,c]]    Delta(e_i) has coefficient c at e_j (x) e_k
//     "counit": [[i,c]], "antipode": [[i,j,c]]   S(e_j) has coefficient c at e_i }
//
// Coefficients are scalar text ("3", "-1/2", "5" in GF(p), "[0,1]" in Cyc(m))
// or JSON integers. Omitted entries are zero; repeated entries add up. When
// "unit" is absent it is solved for from the multiplication table.

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "schrod/hopf.hpp"

namespace schrod {

namespace detail {

using json = nlohmann::json;

[[noreturn]] inline void schema_error(const std::string& pointer, const std::string& what) {
  fail(ErrorKind::SchemaError, "at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

inline const json& require(const json& obj, const std::string& key, const std::string& ptr) {
  if (!obj.is_object()) schema_error(ptr, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(ptr + "/" + key, "missing key");
  return *it;
}

inline size_t read_index(const json& v, size_t dim, const std::string& ptr) {
  if (!v.is_number_integer()) schema_error(ptr, "expected an integer index");
  auto i = v.get<int64_t>();
  if (i < 0 || static_cast<size_t>(i) >= dim) schema_error(ptr, "index " + std::to_string(i) + " out of range");
  return static_cast<size_t>(i);
}

inline Scalar read_coef(Field f, const json& v, const std::string& ptr) {
  try {
    if (v.is_number_integer()) return Scalar(f, v.get<int64_t>());
    if (v.is_string()) return Scalar::parse(f, v.get<std::string>());
  } catch (const Error& e) {
    schema_error(ptr, e.what());
  }
  schema_error(ptr, "expected a coefficient string or integer");
}

inline const json& entry_list(const json& root, const std::string& key, size_t arity) {
  const json& arr = require(root, key, "");
  if (!arr.is_array()) schema_error("/" + key, "expected an array");
  for (size_t n = 0; n < arr.size(); ++n)
    if (!arr[n].is_array() || arr[n].size() != arity)
      schema_error("/" + key + "/" + std::to_string(n), "expected an array of length " + std::to_string(arity));
  return arr;
}

inline Field read_field(const json& root) {
  const json& fj = require(root, "field", "");
  const json& type = require(fj, "type", "/field");
  if (!type.is_string()) schema_error("/field/type", "expected a string");
  std::string t = type.get<std::string>();
  auto param = [&](const char* key) {
    const json& p = require(fj, key, "/field");
    if (!p.is_number_integer()) schema_error(std::string("/field/") + key, "expected an integer");
    return p.get<int64_t>();
  };
  try {
    if (t == "Q") return Field::rationals();
    if (t == "GF") return Field::prime(param("p"));
    if (t == "Cyc") return Field::cyclotomic(param("m"));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SchemaError) throw;
    schema_error("/field", e.what());
  }
  schema_error("/field/type", "unknown field type \"" + t + "\"");
}

inline Vec solve_unit(const HopfAlgebra& A) {
  // u e_j = e_j and e_j u = e_j for every j, linear in u
  const size_t d = A.dim;
  Matrix sys(A.field, 2 * d * d, d);
  Vec rhs = zero_vec(A.field, 2 * d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      for (const auto& t : A.product(i, j)) sys(j * d + t.index, i) += t.coef;
      for (const auto& t : A.product(j, i)) sys(d * d + j * d + t.index, i) += t.coef;
    }
  for (size_t j = 0; j < d; ++j) {
    rhs[j * d + j] = Scalar::one(A.field);
    rhs[d * d + j * d + j] = Scalar::one(A.field);
  }
  Vec u;
  if (!solve(sys, rhs, u)) schema_error("/mult", "multiplication has no two-sided unit");
  return u;
}

}  // namespace detail

inline HopfPtr hopf_from_json(const nlohmann::json& root) {
  using detail::schema_error;
  if (!root.is_object()) schema_error("", "expected an object");
  HopfAlgebra A;
  const auto& name = detail::require(root, "name", "");
  if (!name.is_string()) schema_error("/name", "expected a string");
  A.name = name.get<std::string>();
  A.field = detail::read_field(root);
  const auto& dim = detail::require(root, "dim", "");
  if (!dim.is_number_integer() || dim.get<int64_t>() < 1) schema_error("/dim", "expected a positive integer");
  A.dim = static_cast<size_t>(dim.get<int64_t>());
  const size_t d = A.dim;
  const Field f = A.field;
  const auto& basis = detail::require(root, "basis", "");
  if (!basis.is_array() || basis.size() != d) schema_error("/basis", "expected " + std::to_string(d) + " labels");
  for (size_t i = 0; i < d; ++i) {
    if (!basis[i].is_string()) schema_error("/basis/" + std::to_string(i), "expected a string");
    A.basis.push_back(basis[i].get<std::string>());
  }

  std::vector<Vec> mult(d * d, zero_vec(f, d));
  const auto& mj = detail::entry_list(root, "mult", 4);
  for (size_t n = 0; n < mj.size(); ++n) {
    std::string p = "/mult/" + std::to_string(n);
    size_t i = detail::read_index(mj[n][0], d, p + "/0"), j = detail::read_index(mj[n][1], d, p + "/1"),
           k = detail::read_index(mj[n][2], d, p + "/2");
    mult[i * d + j][k] += detail::read_coef(f, mj[n][3], p + "/3");
  }
  for (const Vec& v : mult) A.mult.push_back(to_sparse(v));

  A.comult.assign(d, {});
  std::vector<Matrix> co(d, Matrix(f, d, d));
  const auto& cj = detail::entry_list(root, "comult", 4);
  for (size_t n = 0; n < cj.size(); ++n) {
    std::string p = "/comult/" + std::to_string(n);
    size_t i = detail::read_index(cj[n][0], d, p + "/0"), j = detail::read_index(cj[n][1], d, p + "/1"),
           k = detail::read_index(cj[n][2], d, p + "/2");
    co[i](j, k) += detail::read_coef(f, cj[n][3], p + "/3");
  }
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k)
        if (!co[i](j, k).is_zero())
          A.comult[i].push_back({static_cast<uint32_t>(j), static_cast<uint32_t>(k), co[i](j, k)});

  A.counit = zero_vec(f, d);
  const auto& ej = detail::entry_list(root, "counit", 2);
  for (size_t n = 0; n < ej.size(); ++n) {
    std::string p = "/counit/" + std::to_string(n);
    A.counit[detail::read_index(ej[n][0], d, p + "/0")] += detail::read_coef(f, ej[n][1], p + "/1");
  }

  A.antipode = Matrix(f, d, d);
  const auto& sj = detail::entry_list(root, "antipode", 3);
  for (size_t n = 0; n < sj.size(); ++n) {
    std::string p = "/antipode/" + std::to_string(n);
    size_t i = detail::read_index(sj[n][0], d, p + "/0"), j = detail::read_index(sj[n][1], d, p + "/1");
    A.antipode(i, j) += detail::read_coef(f, sj[n][2], p + "/2");
  }

  if (root.contains("unit")) {
    A.unit = zero_vec(f, d);
    const auto& uj = detail::entry_list(root, "unit", 2);
    for (size_t n = 0; n < uj.size(); ++n) {
      std::string p = "/unit/" + std::to_string(n);
      A.unit[detail::read_index(uj[n][0], d, p + "/0")] += detail::read_coef(f, uj[n][1], p + "/1");
    }
  } else {
    A.unit = detail::solve_unit(A);
  }
  return finalize(std::move(A));
}

inline nlohmann::json hopf_to_json(const HopfAlgebra& A) {
  using nlohmann::json;
  json root;
  root["name"] = A.name;
  switch (A.field.kind()) {
    case FieldKind::Rationals: root["field"] = {{"type", "Q"}}; break;
    case FieldKind::Prime: root["field"] = {{"type", "GF"}, {"p", A.field.parameter()}}; break;
    case FieldKind::Cyclotomic: root["field"] = {{"type", "Cyc"}, {"m", A.field.parameter()}}; break;
  }
  root["dim"] = A.dim;
  root["basis"] = A.basis;
  json unit = json::array(), mult = json::array(), comult = json::array(), counit = json::array(),
       antipode = json::array();
  for (size_t i = 0; i < A.dim; ++i)
    if (!A.unit[i].is_zero()) unit.push_back({i, A.unit[i].str()});
  for (size_t i = 0; i < A.dim; ++i)
    for (size_t j = 0; j < A.dim; ++j)
      for (const auto& t : A.product(i, j)) mult.push_back({i, j, t.index, t.coef.str()});
  for (size_t i = 0; i < A.dim; ++i)
    for (const auto& t : A.comult[i]) comult.push_back({i, t.left, t.right, t.coef.str()});
  for (size_t i = 0; i < A.dim; ++i)
    if (!A.counit[i].is_zero()) counit.push_back({i, A.counit[i].str()});
  for (size_t j = 0; j < A.dim; ++j)
    for (size_t i = 0; i < A.dim; ++i)
      if (!A.antipode(i, j).is_zero()) antipode.push_back({i, j, A.antipode(i, j).str()});
  root["unit"] = unit;
  root["mult"] = mult;
  root["comult"] = comult;
  root["counit"] = counit;
  root["antipode"] = antipode;
  return root;
}

inline HopfPtr load_hopf_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::SchemaError, "cannot open " + path);
  nlohmann::json root;
  try {
    in >> root;
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::SchemaError, "at /: " + std::string(e.what()));
  }
  return hopf_from_json(root);
}

inline void save_hopf_json(const HopfAlgebra& A, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::SchemaError, "cannot write " + path);
  out << hopf_to_json(A).dump(1) << "\n";
}

}  // namespace schrod
