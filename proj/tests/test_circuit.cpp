#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circuit.hpp"
#include "errors.hpp"
#include "oracles.hpp"

#include <random>

using namespace armred;

namespace {

Circuit lower_text(const char* text) {
  return lower_system(to_equality_form(push_negations(parse_formula(text))));
}

}  // namespace

TEST_CASE("lowering a linear equality") {
  Circuit c = lower_text("x + y - 5 = 0");
  REQUIRE(c.gates.size() == 5);
  CHECK(c.gates[0].kind == Gate::Kind::input);
  CHECK(c.gates[0].var == "x");
  CHECK(c.gates[1].kind == Gate::Kind::input);
  CHECK(c.gates[1].var == "y");
  CHECK(c.gates[2].kind == Gate::Kind::add);
  CHECK(c.gates[2].lhs == 0);
  CHECK(c.gates[2].rhs == 1);
  CHECK(c.gates[3].kind == Gate::Kind::constant);
  CHECK(c.gates[3].value == -5);
  CHECK(c.gates[4].kind == Gate::Kind::add);
  CHECK(c.outputs == std::vector<uint32_t>{4});
  validate_circuit(c);
}

TEST_CASE("lowering squares uses one multiplication") {
  Circuit c = lower_text("x^2 - 2 = 0");
  REQUIRE(c.gates.size() == 4);
  CHECK(c.gates[1].kind == Gate::Kind::mul);
  CHECK(c.gates[1].lhs == 0);
  CHECK(c.gates[1].rhs == 0);
  CHECK(c.gates[2].kind == Gate::Kind::constant);
  CHECK(c.gates[2].value == -2);
  CHECK(c.gates[3].kind == Gate::Kind::add);
}

TEST_CASE("input gates are shared across equalities") {
  Circuit c = lower_text("x*y - 6 = 0 /\\ x + y - 5 = 0");
  size_t inputs = 0;
  for (const Gate& g : c.gates) {
    if (g.kind == Gate::Kind::input) ++inputs;
  }
  CHECK(inputs == 2);
  CHECK(c.outputs.size() == 2);

  const CircuitValues values = evaluate_circuit(c, {{"x", 2}, {"y", 3}});
  CHECK(values.output_values[0] == 0);
  CHECK(values.output_values[1] == 0);
}

TEST_CASE("square-and-multiply power chains") {
  Circuit c = lower_text("x^8 - 256 = 0");
  size_t muls = 0;
  for (const Gate& g : c.gates) {
    if (g.kind == Gate::Kind::mul) ++muls;
  }
  CHECK(muls == 3);  // x^2, x^4, x^8
  CHECK(evaluate_circuit(c, {{"x", 2}}).output_values[0] == 0);

  Circuit c2 = lower_text("x^5*x - 64 = 0");  // exponents merge to x^6
  CHECK(evaluate_circuit(c2, {{"x", 2}}).output_values[0] == 0);
}

TEST_CASE("negated monomial lowers through a neg gate") {
  Circuit c = lower_text("-x + 3 = 0");
  bool has_neg = false;
  for (const Gate& g : c.gates) has_neg |= g.kind == Gate::Kind::neg;
  CHECK(has_neg);
  CHECK(evaluate_circuit(c, {{"x", 3}}).output_values[0] == 0);
}

TEST_CASE("evaluation matches direct polynomial evaluation") {
  const char* samples[] = {
      "x*y - 6 = 0 /\\ x + y - 5 = 0",
      "x^2 + y^2 - 25 = 0",
      "3/2*x^3*y - 7*z + 1/5 = 0",
      "x^4 - 16 = 0 /\\ -x^2*y + 8 = 0",
  };
  std::mt19937_64 rng(13);
  for (const char* text : samples) {
    Formula f = push_negations(parse_formula(text));
    EqualitySystem sys = to_equality_form(f);
    Circuit c = lower_system(sys);
    for (int i = 0; i < 100; ++i) {
      std::map<std::string, Rat> point;
      for (const std::string& v : sys.variables) point[v] = oracles::random_rat(rng, 9, 4);
      const CircuitValues values = evaluate_circuit(c, point);
      for (size_t e = 0; e < sys.equalities.size(); ++e) {
        CHECK(values.output_values[e] == sys.equalities[e].poly.eval(point));
      }
    }
  }
}

TEST_CASE("all-zero inputs agree with the polynomial oracle") {
  Circuit c = lower_text("x*y + 3*x - 2 = 0");
  EqualitySystem sys = to_equality_form(parse_formula("x*y + 3*x - 2 = 0"));
  std::map<std::string, Rat> zeros{{"x", 0}, {"y", 0}};
  CHECK(evaluate_circuit(c, zeros).output_values[0] == sys.equalities[0].poly.eval(zeros));
}

TEST_CASE("evaluation reports missing variables by name") {
  Circuit c = lower_text("x + y = 0");
  try {
    evaluate_circuit(c, {{"x", 1}});
    FAIL("expected an error");
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid);
    CHECK(std::string(e.what()).find("'y'") != std::string::npos);
  }
}

TEST_CASE("gate equations take the expected shapes") {
  Circuit c = lower_text("x + y - 5 = 0");
  const std::vector<Poly> eqs = gate_equations(c);
  REQUIRE(eqs.size() == c.gates.size() + 1);
  CHECK(eqs[0] == Poly::variable("$z0") - Poly::variable("x"));
  CHECK(eqs[2] == Poly::variable("$z2") - Poly::variable("$z0") - Poly::variable("$z1"));
  CHECK(eqs[3] == Poly::variable("$z3") - Poly::constant(-5));
  CHECK(eqs.back() == Poly::variable("$z4"));

  Circuit n = lower_text("-x = 0");
  const std::vector<Poly> neqs = gate_equations(n);
  CHECK(neqs[1] == Poly::variable("$z1") + Poly::variable("$z0"));

  // gate equations vanish exactly on honest evaluations
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    std::map<std::string, Rat> point{{"x", oracles::random_rat(rng)}, {"y", oracles::random_rat(rng)}};
    const CircuitValues values = evaluate_circuit(c, point);
    std::map<std::string, Rat> env = point;
    for (uint32_t id = 0; id < c.gates.size(); ++id) env[gate_var(id)] = values.gate_values[id];
    for (size_t k = 0; k + 1 < eqs.size(); ++k) CHECK(eqs[k].eval(env) == 0);
  }
}

TEST_CASE("circuit dump is stable") {
  Circuit c = lower_text("x + y - 5 = 0");
  CHECK(circuit_dump(c) ==
        "g0 = input(x)\n"
        "g1 = input(y)\n"
        "g2 = add(g0, g1)\n"
        "g3 = const(-5)\n"
        "g4 = add(g2, g3)\n"
        "output g4\n");
  CHECK(circuit_hash(c) == circuit_hash(c));
  Circuit c2 = lower_text("x + y - 4 = 0");
  CHECK(circuit_hash(c) != circuit_hash(c2));
}

TEST_CASE("gate count stays linear in the sparse encoding size") {
  const char* samples[] = {
      "x*y - 6 = 0 /\\ x + y - 5 = 0",
      "x^9*y^7 - 1 = 0",
      "x^2 + y^2 + z^2 - 14 = 0",
      "x*y*z*w - 24 = 0",
  };
  for (const char* text : samples) {
    EqualitySystem sys = to_equality_form(parse_formula(text));
    Circuit c = lower_system(sys);
    size_t budget = 0;
    for (const TaggedEq& eq : sys.equalities) {
      for (const auto& [mono, coeff] : eq.poly.terms()) {
        size_t mono_bits = 1;
        for (const auto& [var, exp] : mono) {
          mono_bits += 1 + static_cast<size_t>(std::log2(exp + 1));
        }
        budget += mono_bits;
      }
    }
    CHECK(c.gates.size() <= 8 * budget + sys.variables.size());
  }
}

TEST_CASE("validate_circuit rejects broken structures") {
  Circuit c = lower_text("x = 0");
  Circuit broken = c;
  broken.outputs.push_back(99);
  CHECK_THROWS_AS(validate_circuit(broken), error);

  Circuit cyclic = c;
  cyclic.gates.push_back({Gate::Kind::add, "", 0, 5, 5});
  CHECK_THROWS_AS(validate_circuit(cyclic), error);

  Circuit mismatched = c;
  mismatched.input_vars.push_back("ghost");
  CHECK_THROWS_AS(validate_circuit(mismatched), error);
}
