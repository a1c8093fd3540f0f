#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "compiler.hpp"
#include "emit_etr.hpp"
#include "errors.hpp"
#include "verifier.hpp"
#include "witness.hpp"

using namespace armred;

namespace {

std::map<std::string, Rat> entry_vars(const RatMatrix& x) {
  std::map<std::string, Rat> out;
  for (uint32_t i = 0; i < x.rows(); ++i)
    for (uint32_t j = 0; j < x.cols(); ++j)
      out["X_" + std::to_string(i) + "_" + std::to_string(j)] = x.at(i, j);
  return out;
}

std::map<std::string, Rat> factor_vars(const Witness& w) {
  std::map<std::string, Rat> out;
  for (uint32_t i = 0; i < w.u.rows(); ++i)
    for (uint32_t t = 0; t < 3; ++t)
      out["U_" + std::to_string(i) + "_" + std::to_string(t)] = w.u.at(i, t);
  for (uint32_t t = 0; t < 3; ++t)
    for (uint32_t j = 0; j < w.v.cols(); ++j)
      out["V_" + std::to_string(t) + "_" + std::to_string(j)] = w.v.at(t, j);
  return out;
}

}  // namespace

TEST_CASE("factored emission of the gauge-only instance") {
  const ArmInstance inst = compile_circuit(Circuit{});
  const std::vector<Poly> system = factored_system(inst);
  CHECK(system.size() == 9);  // one bilinear equality per pin

  std::set<std::string> vars;
  for (const Poly& p : system) p.collect_vars(vars);
  CHECK(vars.size() == 18);  // 3*(m+n) = 18 for the 3x3 instance

  for (const Poly& p : system) CHECK(p.degree() == 2);
}

TEST_CASE("factored emission has exactly one equality per constraint") {
  const ArmInstance inst = compile_formula("x*y - 6 = 0");
  CHECK(factored_system(inst).size() == inst.constraints.size());
}

TEST_CASE("canonical witness factors satisfy the factored system") {
  const ArmInstance inst = compile_formula("x - 2 = 0");
  const Witness w = build_witness(inst, extend_assignment(inst, {{"x", 2}}));
  const auto env = factor_vars(w);
  for (const Poly& eq : factored_system(inst)) CHECK(eq.eval(env) == 0);
}

TEST_CASE("factored emission re-parses and re-compiles") {
  const ArmInstance inst = compile_circuit(Circuit{});
  const std::string text = emit_factored(inst);
  const Formula f = parse_formula(text);
  REQUIRE(f.kind == Formula::Kind::conj);
  CHECK(f.children.size() == 9);

  const ArmInstance relooped = compile_formula(text);
  CHECK(relooped.k == 3);
  CHECK_NOTHROW(validate_instance(relooped));
}

TEST_CASE("minor counts follow the binomials") {
  ArmInstance small = compile_circuit(Circuit{});
  CHECK(minor_count(small) == 0);  // 3x3 has no 4x4 submatrix

  const ArmInstance one_carrier = compile_formula("x = 0");  // 4x4
  CHECK(minor_count(one_carrier) == 1);
  CHECK(minors_system(one_carrier).size() == one_carrier.constraints.size() + 1);

  // pad to 5x5 by hand: C(5,4)^2 = 25
  ArmInstance five = compile_formula("x = 0");
  five.m = 5;
  five.n = 5;
  CHECK(minor_count(five) == 25);

  const ArmInstance six = compile_formula("x - 2 = 0");  // 6x6
  CHECK(minor_count(six) == 225);
}

TEST_CASE("the minors cap reports the exact count") {
  const ArmInstance big = compile_formula("x*y - 6 = 0 /\\ x + y - 5 = 0");  // 15x15
  try {
    minors_system(big);
    FAIL_CHECK("expected too-large");
  } catch (const error& e) {
    CHECK(e.code() == errc::too_large);
    CHECK(std::string(e.what()).find("1863225") != std::string::npos);  // C(15,4)^2
  }

  // a cap just below the count of a small instance also trips
  const ArmInstance six = compile_formula("x - 2 = 0");  // 225 minors
  CHECK_THROWS_AS(minors_system(six, 224), error);
  CHECK(minors_system(six, 225).size() == six.constraints.size() + 225);
}

TEST_CASE("accepted matrices satisfy the minor system, tampered ones do not") {
  const ArmInstance inst = compile_formula("x - 2 = 0");
  const Witness w = build_witness(inst, extend_assignment(inst, {{"x", 2}}));
  const std::vector<Poly> system = minors_system(inst);

  const auto env = entry_vars(w.x);
  for (const Poly& eq : system) CHECK(eq.eval(env) == 0);

  // bumping one carrier entry makes some 4x4 minor nonzero
  RatMatrix tampered = w.x;
  const CarrierInfo& cx = inst.carriers.at("var:x");
  tampered.set(cx.row, cx.col, tampered.at(cx.row, cx.col) + 1);
  REQUIRE(exact_rank(tampered) == 4);
  const auto bad_env = entry_vars(tampered);
  bool falsified = false;
  for (const Poly& eq : system) falsified = falsified || eq.eval(bad_env) != 0;
  CHECK(falsified);
}

TEST_CASE("denominator clearing preserves the zero set") {
  const ArmInstance inst = compile_formula("3/2*x - 3 = 0");
  const Witness w = build_witness(inst, extend_assignment(inst, {{"x", 2}}));
  const std::vector<Poly> system = minors_system(inst);

  // affine part must have integer coefficients
  for (size_t i = 0; i < inst.constraints.size(); ++i) {
    for (const auto& [mono, coeff] : system[i].terms()) CHECK(rat_den(coeff) == 1);
  }
  const auto env = entry_vars(w.x);
  for (const Poly& eq : system) CHECK(eq.eval(env) == 0);
}

TEST_CASE("minors text re-parses") {
  const ArmInstance inst = compile_formula("x = 0");
  const Formula f = parse_formula(emit_minors(inst));
  CHECK(f.kind == Formula::Kind::conj);
}
