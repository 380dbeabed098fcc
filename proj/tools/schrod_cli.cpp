// schrod: command-line access to the Hopf algebra zoo, Drinfeld doubles and
// braided dimensions of their Schrodinger modules.
//
// Exit codes: 0 success, 1 failing verification checks, 2 usage or parse
// error, 3 algebra failed validation, 4 resource guard.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "schrod/braid.hpp"
#include "schrod/io.hpp"
#include "schrod/oracle.hpp"
#include "schrod/verify.hpp"
#include "schrod/zoo.hpp"

using namespace schrod;
using nlohmann::json;

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitGuard = 4;
constexpr double kTensorEntryLimit = 1e6;

struct ExitWith {
  int code;
};

HopfPtr resolve_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "sweedler" && arg.empty()) return sweedler();
  if (kind == "group" && !arg.empty()) return group_algebra(parse_group(arg));
  if (kind == "dualgroup" && !arg.empty()) return dual_group_algebra(parse_group(arg));
  if (kind == "file" && !arg.empty()) return load_hopf_json(arg);
  if (kind == "taft" && !arg.empty()) {
    int n = 0;
    try {
      size_t used = 0;
      n = std::stoi(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      fail(ErrorKind::UnsupportedSpec, "taft order must be an integer, got \"" + arg + "\"");
    }
    if (n < 2) fail(ErrorKind::UnsupportedSpec, "taft order must be at least 2");
    return taft(static_cast<size_t>(n), Scalar::zeta(Field::cyclotomic(n)));
  }
  fail(ErrorKind::UnsupportedSpec, "cannot resolve algebra spec \"" + spec + "\"");
}

// Resolves and validates; a failing axiom ends the command with exit 3.
HopfPtr load_valid(const std::string& spec) {
  HopfPtr A = resolve_spec(spec);
  ValidationReport rep = validate_hopf(*A);
  if (!rep.ok()) {
    std::cerr << "algebra " << A->name << " fails validation\n" << rep.summary();
    throw ExitWith{kExitInvalid};
  }
  return A;
}

json scalar_list(const Vec& v) {
  json out = json::array();
  for (const Scalar& s : v) out.push_back(s.str());
  return out;
}

int cmd_describe(const std::string& spec, bool as_json) {
  HopfPtr A = load_valid(spec);
  Integrals in = integrals(*A);
  json j;
  j["name"] = A->name;
  j["field"] = A->field.str();
  j["dim"] = A->dim;
  j["basis"] = A->basis;
  j["trace_s2"] = trace_s_squared(*A).str();
  j["left_integral"] = elem_str(*A, in.left_integral);
  j["modular_function"] = scalar_list(in.modular_function);
  j["semisimple"] = is_semisimple(*A);
  j["cosemisimple"] = is_cosemisimple(*A);
  j["unimodular"] = is_unimodular(*A);
  j["double_dim"] = A->dim * A->dim;
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "name           " << A->name << "\n"
            << "field          " << A->field.str() << "\n"
            << "dim            " << A->dim << "\n"
            << "TrS2           " << j["trace_s2"].get<std::string>() << "\n"
            << "left integral  " << j["left_integral"].get<std::string>() << "\n"
            << "alpha          " << j["modular_function"].dump() << "\n"
            << "semisimple     " << std::boolalpha << is_semisimple(*A) << "\n"
            << "cosemisimple   " << is_cosemisimple(*A) << "\n"
            << "unimodular     " << is_unimodular(*A) << "\n"
            << "double dim     " << A->dim * A->dim << "\n";
  return 0;
}

struct BdimArgs {
  std::string spec;
  std::string module = "schrodinger";
  std::string braid;
  std::vector<int> torus;
  std::string side = "left";
  bool reversed = false;
  bool as_json = false;
};

int cmd_bdim(const BdimArgs& a) {
  if (a.braid.empty() == a.torus.empty()) {
    std::cerr << "exactly one of --braid and --torus is required\n";
    return kExitUsage;
  }
  BraidWord b = a.torus.empty() ? parse_braid(a.braid) : torus_braid(a.torus[0], a.torus[1]);
  Side side = a.side == "left" ? Side::Left : Side::Right;
  HopfPtr A = load_valid(a.spec);
  size_t mdim = a.module == "regular" ? A->dim * A->dim : A->dim;
  // The braid acts on M^{(x) n}; the guard bounds the entries of that operator.
  double power_dim = std::pow(static_cast<double>(mdim), static_cast<double>(b.strands));
  double entries = power_dim * power_dim;
  if (entries > kTensorEntryLimit) {
    std::cerr << "resource guard: module dimension " << mdim << " on " << b.strands << " strands gives an operator with "
              << entries << " entries (limit " << kTensorEntryLimit << ")\n";
    return kExitGuard;
  }
  QtPtr Q = build_double(A);
  Module M = a.module == "schrodinger"        ? schrodinger(*Q)
             : a.module == "dual-schrodinger" ? dual_schrodinger(*Q)
                                              : regular_module(Q->H);
  Orientation o = a.reversed ? Orientation::Reversed : Orientation::Standard;
  std::string value = braided_dim(*Q, M, b, side, o).str();
  if (a.as_json) {
    json j = {{"algebra", A->name}, {"module", a.module},      {"braid", b.str()},
              {"side", a.side},     {"orientation", to_string(o)}, {"value", value}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << value << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite) {
  auto results = verify::run_suite(suite);
  size_t failed = 0;
  for (const auto& r : results) {
    failed += !r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.slug << "  " << r.title << "  (" << r.detail << ")\n";
  }
  std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed ? kExitChecksFailed : 0;
}

int cmd_oracle(const std::string& group, const std::string& braid) {
  FiniteGroup G = parse_group(group);
  std::cout << fy_fixed_points(G, parse_braid(braid)) << "\n";
  return 0;
}

int cmd_export(const std::string& spec, const std::string& path) {
  HopfPtr A = load_valid(spec);
  save_hopf_json(*A, path);
  return 0;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::EnumerationTooLarge: return kExitGuard;
    case ErrorKind::InvalidAlgebra:
    case ErrorKind::IntegralSpaceNotOneDimensional:
    case ErrorKind::InverseCheckFailed: return kExitInvalid;
    default: return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Drinfeld doubles and Schrodinger modules"};
  app.require_subcommand(1);

  std::string spec;
  bool as_json = false;
  auto* describe = app.add_subcommand("describe", "structure data of a Hopf algebra");
  describe->add_option("spec", spec, "group:<G> | dualgroup:<G> | sweedler | taft:<n> | file:<path>")->required();
  describe->add_flag("--json", as_json, "print JSON");

  BdimArgs bd;
  auto* bdim = app.add_subcommand("bdim", "braided dimension of a module over the double");
  bdim->add_option("spec", bd.spec, "algebra spec")->required();
  bdim->add_option("--module", bd.module, "module over D(A)")
      ->check(CLI::IsMember({"schrodinger", "dual-schrodinger", "regular"}));
  auto* braid_opt = bdim->add_option("--braid", bd.braid, "braid word such as \"3: 1 -2\"");
  auto* torus_opt = bdim->add_option("--torus", bd.torus, "torus braid t(p,q)")->expected(2);
  braid_opt->excludes(torus_opt);
  bdim->add_option("--side", bd.side, "left or right trace")->check(CLI::IsMember({"left", "right"}));
  bdim->add_flag("--reversed", bd.reversed, "use the reverse braiding");
  bdim->add_flag("--json", bd.as_json, "print JSON");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run the built-in verification checks");
  verify->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember({"axioms", "schrodinger", "traces", "theorems", "all"}));

  std::string group, braid;
  auto* oracle = app.add_subcommand("oracle", "count fixed points of the braid action on G^n");
  oracle->add_option("--group", group, "group name")->required();
  oracle->add_option("--braid", braid, "braid word")->required();

  std::string out_path;
  auto* exp = app.add_subcommand("export", "write a Hopf algebra as JSON");
  exp->add_option("spec", spec, "algebra spec")->required();
  exp->add_option("path", out_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*describe) return cmd_describe(spec, as_json);
    if (*bdim) return cmd_bdim(bd);
    if (*verify) return cmd_verify(suite);
    if (*oracle) return cmd_oracle(group, braid);
    if (*exp) return cmd_export(spec, out_path);
  } catch (const ExitWith& e) {
    return e.code;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}
