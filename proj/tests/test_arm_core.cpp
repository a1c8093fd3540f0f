#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arm_instance.hpp"
#include "compiler.hpp"
#include "errors.hpp"
#include "witness.hpp"

#include <json.hpp>

using namespace armred;

namespace {

ArmInstance gauge_only() {
  return compile_circuit(Circuit{});
}

}  // namespace

TEST_CASE("add_constraint merges, drops zeros, and range-checks") {
  ArmInstance inst = gauge_only();
  inst.m = 10;
  inst.n = 10;

  add_constraint(inst, {{5, 7, 1}}, 1, "pin");
  CHECK(inst.constraints.back().terms == std::vector<AffineTerm>{{5, 7, 1}});
  CHECK(inst.constraints.back().rhs == 1);

  add_constraint(inst, {{5, 7, 1}, {9, 2, -1}}, 0, "equate");
  CHECK(inst.constraints.back().terms.size() == 2);

  // duplicate positions merge by summation; exact cancellation disappears
  add_constraint(inst, {{4, 4, 1}, {4, 4, -1}, {3, 3, Rat(1, 2)}, {3, 3, Rat(1, 2)}}, 0, "merge");
  CHECK(inst.constraints.back().terms == std::vector<AffineTerm>{{3, 3, 1}});

  CHECK_THROWS_AS(add_constraint(inst, {{10, 0, 1}}, 0, "oob"), error);
}

TEST_CASE("three-term relation constraint") {
  ArmInstance inst = gauge_only();
  inst.m = 12;
  inst.n = 12;
  add_constraint(inst, {{5, 5, 1}, {3, 3, -1}, {4, 4, -1}}, 0, "add:z");
  const AffineConstraint& c = inst.constraints.back();
  REQUIRE(c.terms.size() == 3);
  for (const AffineTerm& t : c.terms) CHECK((t.coeff == 1 || t.coeff == -1));
  CHECK(c.rhs == 0);
}

TEST_CASE("gauge-only instance has exactly the nine pins") {
  ArmInstance inst = gauge_only();
  CHECK(inst.m == 3);
  CHECK(inst.n == 3);
  CHECK(stats(inst).q == 9);
  for (const AffineConstraint& c : inst.constraints) CHECK(c.tag == "gauge");
  CHECK_NOTHROW(validate_instance(inst));
}

TEST_CASE("instance serialization round trip is lossless and byte-stable") {
  for (const char* text : {"x - 5 = 0", "x*y - 6 = 0 /\\ x + y - 5 = 0", "x >= 0"}) {
    const ArmInstance inst = compile_formula(text);
    const std::string bytes = serialize_instance(inst);
    const ArmInstance back = deserialize_instance(bytes);
    CHECK(back == inst);
    CHECK(serialize_instance(back) == bytes);
  }
}

TEST_CASE("compiling the same formula twice is byte-identical") {
  const std::string a = serialize_instance(compile_formula("x*y - 6 = 0 /\\ x + y - 5 = 0"));
  const std::string b = serialize_instance(compile_formula("x*y - 6 = 0 /\\ x + y - 5 = 0"));
  CHECK(a == b);
}

TEST_CASE("constraint count for one mul gate matches stats") {
  // gates: in(x), in(y), mul, const(-6), add; constraints: 9 gauge + 12 mul
  // + 1 const + 1 add + 1 output pin = 24.
  const ArmInstance inst = compile_formula("x*y - 6 = 0");
  CHECK(inst.circuit.gates.size() == 5);
  CHECK(inst.mul_gadgets.size() == 1);
  CHECK(stats(inst).q == 24);
}

TEST_CASE("deserializer rejects schema violations with paths") {
  const ArmInstance inst = compile_formula("x - 1 = 0");
  const nlohmann::json good = nlohmann::json::parse(serialize_instance(inst));

  const auto expect_fail = [](const std::string& mutated, const char* needle) {
    try {
      deserialize_instance(mutated);
      FAIL_CHECK("expected a format error for ", needle);
    } catch (const error& e) {
      CHECK(e.code() == errc::format);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_fail("{ not json", "not valid JSON");

  nlohmann::json wrong_format = good;
  wrong_format["format"] = "arm-instance/9";
  expect_fail(wrong_format.dump(), "unsupported format");

  nlohmann::json missing = good;
  missing.erase("constraints");
  expect_fail(missing.dump(), "constraints");

  nlohmann::json unreduced = good;
  unreduced["constraints"][0]["rhs"] = "2/4";
  expect_fail(unreduced.dump(), "non-canonical");

  nlohmann::json bad_term = good;
  bad_term["constraints"][0]["terms"][0] = {0, 0};
  expect_fail(bad_term.dump(), "terms[0]");

  nlohmann::json singular = good;
  singular["gauge"]["block"][0] = {"0", "0", "0"};
  expect_fail(singular.dump(), "gauge");
}

TEST_CASE("validate_instance enforces carrier injectivity") {
  ArmInstance inst = compile_formula("x - 1 = 0");
  inst.carriers["clone"] = inst.carriers.at("var:x");
  CHECK_THROWS_AS(validate_instance(inst), error);

  ArmInstance overlap = compile_formula("x - 1 = 0");
  overlap.carriers.at("var:x").row = 0;  // inside the gauge block
  CHECK_THROWS_AS(validate_instance(overlap), error);
}

TEST_CASE("constraint count grows exactly affinely along a gate-chain family") {
  // Squaring chains x^(2^k) = c add the same gate pattern per step, so the
  // first difference of q in the gate count is constant.
  std::vector<long> qs, gates;
  Rat c = 2;
  for (int k = 1; k <= 5; ++k) {
    c = c * c;
    const ArmInstance inst =
        compile_formula("x^" + std::to_string(1 << k) + " - " + rat_str(c) + " = 0");
    qs.push_back(static_cast<long>(stats(inst).q));
    gates.push_back(static_cast<long>(inst.circuit.gates.size()));
  }
  for (size_t i = 2; i < qs.size(); ++i) {
    const long dq1 = qs[i] - qs[i - 1];
    const long dq0 = qs[i - 1] - qs[i - 2];
    const long dg1 = gates[i] - gates[i - 1];
    const long dg0 = gates[i - 1] - gates[i - 2];
    CHECK(dq1 == dq0);
    CHECK(dg1 == dg0);
  }
}

TEST_CASE("validate_instance requires the gauge pins") {
  ArmInstance inst = gauge_only();
  inst.constraints.erase(inst.constraints.begin());
  CHECK_THROWS_AS(validate_instance(inst), error);
}

TEST_CASE("stats counts bits of all constraint data") {
  ArmInstance inst = gauge_only();
  const uint64_t base = stats(inst).total_bits;
  add_constraint(inst, {{0, 0, 1}}, Rat(255), "big");  // 8 bits + 1 bit den + coeff 2 bits
  CHECK(stats(inst).total_bits == base + 2 + 9);
}

TEST_CASE("witness serialization round trip") {
  const ArmInstance inst = compile_formula("x - 5 = 0");
  const Witness w = build_witness(inst, extend_assignment(inst, {{"x", 5}}));

  const std::string bytes = serialize_witness(w);
  const Witness back = deserialize_witness(bytes);
  CHECK(back == w);
  CHECK(serialize_witness(back) == bytes);

  const std::string with_x = serialize_witness(w, true);
  CHECK(deserialize_witness(with_x) == w);

  // an X block inconsistent with U*V is rejected
  std::string lying = with_x;
  const size_t xpos = lying.find("\"X\"");
  REQUIRE(xpos != std::string::npos);
  const size_t five = lying.find("\"5\"", xpos);
  REQUIRE(five != std::string::npos);
  lying.replace(five, 3, "\"6\"");
  CHECK_THROWS_AS(deserialize_witness(lying), error);

  CHECK_THROWS_AS(deserialize_witness("{\"format\":\"arm-witness/1\",\"U\":[],\"V\":[]}"), error);
}
