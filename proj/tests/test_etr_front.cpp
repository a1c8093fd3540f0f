#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equality_form.hpp"
#include "errors.hpp"
#include "formula.hpp"
#include "oracles.hpp"

#include <random>

using namespace armred;

namespace {

std::map<std::string, Rat> random_point(const std::vector<std::string>& vars, std::mt19937_64& rng) {
  std::map<std::string, Rat> point;
  for (const std::string& v : vars) point[v] = oracles::random_rat(rng, 9, 4);
  return point;
}

}  // namespace

TEST_CASE("parsing the running example") {
  Formula f = parse_formula("x*y - 6 = 0 /\\ x + y - 5 = 0");
  REQUIRE(f.kind == Formula::Kind::conj);
  REQUIRE(f.children.size() == 2);
  const Atom& a0 = f.children[0].atom;
  CHECK(a0.rel == Rel::eq);
  CHECK(a0.poly == Poly::variable("x") * Poly::variable("y") - Poly::constant(6));
  const Atom& a1 = f.children[1].atom;
  CHECK(a1.poly == Poly::variable("x") + Poly::variable("y") - Poly::constant(5));
}

TEST_CASE("parsing negation and powers") {
  Formula f = parse_formula("!(x >= 0)");
  REQUIRE(f.kind == Formula::Kind::neg);
  CHECK(f.children[0].atom.rel == Rel::ge);

  Formula g = parse_formula("x^2 - 2 = 0");
  CHECK(g.atom.poly == Poly::variable("x") * Poly::variable("x") - Poly::constant(2));
}

TEST_CASE("parser accepts rational coefficients and signs") {
  Formula f = parse_formula("-3/2*x + 1 > 0");
  CHECK(f.atom.rel == Rel::gt);
  CHECK(f.atom.poly == Poly::term(Rat(-3, 2), {{"x", 1}}) + Poly::constant(1));
  CHECK(parse_formula("2*3*x = 0").atom.poly == Poly::term(6, {{"x", 1}}));
  CHECK(parse_formula("x^0 = 0").atom.poly == Poly::constant(1));
  CHECK(parse_formula("0 = 0").atom.poly == Poly());
}

TEST_CASE("parser rejects malformed input with positions") {
  for (const char* bad : {"x >", "x = 1", "x + = 0", "x ** y = 0", "(x = 0", "x @ 0",
                          "x = 0 /\\", "2x = 0", "x \\ y = 0"}) {
    CHECK_THROWS_AS(parse_formula(bad), error);
  }
  try {
    parse_formula("x = 0 /\\\n  y <> 0");
  } catch (const error& e) {
    CHECK(e.code() == errc::parse);
    CHECK(std::string(e.what()).find("2:") != std::string::npos);
  }
}

TEST_CASE("print/parse round trip") {
  const char* samples[] = {
      "x*y - 6 = 0 /\\ x + y - 5 = 0",
      "!(x >= 0)",
      "x^2 - 2 = 0",
      "(x - 1 = 0 \\/ x - 2 = 0) /\\ y > 0",
      "x != 0 \\/ !(y - 1 > 0) \\/ x + y >= 0",
      "3/2*x^3*y - 7*z + 1/5 = 0",
      "!!(x = 0)",
      "-x + 3 = 0",
  };
  for (const char* text : samples) {
    Formula f = parse_formula(text);
    Formula g = parse_formula(formula_str(f));
    CHECK(f == g);
  }
}

TEST_CASE("push_negations flips atoms and applies De Morgan") {
  Formula f = push_negations(parse_formula("!(x = 0)"));
  CHECK(f == parse_formula("x != 0"));

  Formula g = push_negations(parse_formula("!(x = 0 /\\ y >= 0)"));
  REQUIRE(g.kind == Formula::Kind::disj);
  CHECK(g.children[0] == parse_formula("x != 0"));
  CHECK(g.children[1] == parse_formula("-y > 0"));

  Formula h = push_negations(parse_formula("!(x > 0)"));
  CHECK(h == parse_formula("-x >= 0"));

  CHECK(push_negations(parse_formula("!!(x = 0)")) == parse_formula("x = 0"));
}

TEST_CASE("push_negations preserves the predicate on random points") {
  const char* samples[] = {
      "!(x = 0 /\\ y >= 0)",
      "!(x - 1 = 0 \\/ !(y > 0))",
      "!(x*y - 1 != 0) \\/ !(x + y >= 0 /\\ x - y > 0)",
      "!!(x^2 - y = 0)",
  };
  std::mt19937_64 rng(5);
  for (const char* text : samples) {
    Formula f = parse_formula(text);
    Formula g = push_negations(f);
    CHECK(!has_negation(g));
    const auto vars = formula_vars(f);
    for (int i = 0; i < 100; ++i) {
      const auto point = random_point(vars, rng);
      CHECK(eval_formula(f, point) == eval_formula(g, point));
    }
  }
}

TEST_CASE("equality form of a weak inequality") {
  EqualitySystem sys = to_equality_form(parse_formula("x >= 0"));
  REQUIRE(sys.equalities.size() == 1);
  const Poly u = Poly::variable("$slack_0");
  CHECK(sys.equalities[0].poly == Poly::variable("x") - u * u);
  CHECK(sys.equalities[0].tag == EqTag::slack);
  CHECK(sys.variables == std::vector<std::string>{"x", "$slack_0"});
}

TEST_CASE("equality form of a disjunction") {
  EqualitySystem sys = to_equality_form(parse_formula("x - 1 = 0 \\/ x - 2 = 0"));
  const Poly s1 = Poly::variable("$sel_0");
  const Poly s2 = Poly::variable("$sel_1");
  const Poly x = Poly::variable("x");
  const Poly one = Poly::constant(1);
  REQUIRE(sys.equalities.size() == 5);
  CHECK(sys.equalities[0].poly == s1 + s2 - one);
  CHECK(sys.equalities[0].tag == EqTag::selector);
  CHECK(sys.equalities[1].poly == s1 * (one - s1));
  CHECK(sys.equalities[2].poly == s2 * (one - s2));
  CHECK(sys.equalities[3].poly == s1 * (x - one));
  CHECK(sys.equalities[3].tag == EqTag::guard);
  CHECK(sys.equalities[4].poly == s2 * (x - Poly::constant(2)));
}

TEST_CASE("equality form leaves plain conjunctions alone") {
  EqualitySystem sys = to_equality_form(parse_formula("x*y - 6 = 0 /\\ x + y - 5 = 0"));
  CHECK(sys.equalities.size() == 2);
  CHECK(sys.variables == std::vector<std::string>{"x", "y"});
  for (const TaggedEq& eq : sys.equalities) CHECK(eq.tag == EqTag::atom);
}

TEST_CASE("equality form rejects negations") {
  CHECK_THROWS_AS(to_equality_form(parse_formula("!(x = 0)")), error);
}

TEST_CASE("strict atoms add degree-2 equalities only") {
  EqualitySystem sys = to_equality_form(parse_formula("x > 0 /\\ x*y != 0"));
  // p - u^2, u*v - 1, p*v' - 1: all degree <= 2 beyond guard products
  for (const TaggedEq& eq : sys.equalities) {
    CHECK(eq.tag != EqTag::guard);
    bool aux_degree_ok = true;
    for (const auto& [mono, coeff] : eq.poly.terms()) {
      uint32_t aux_deg = 0;
      for (const auto& [var, exp] : mono) {
        if (var.starts_with("$")) aux_deg += exp;
      }
      if (aux_deg > 2) aux_degree_ok = false;
    }
    CHECK(aux_degree_ok);
  }
}

TEST_CASE("nested disjunction guards multiply through") {
  // or( atom(x-1), and( or(atom(y-1), atom(y-2)), atom(x-3) ) )
  EqualitySystem sys =
      to_equality_form(parse_formula("x - 1 = 0 \\/ ((y - 1 = 0 \\/ y - 2 = 0) /\\ x - 3 = 0)"));
  // outer selectors $sel_0,$sel_1; inner $sel_2,$sel_3. Every equality from the
  // inner disjunction (selector bookkeeping included) carries the outer guard.
  const Poly s1 = Poly::variable("$sel_1");
  bool found_guarded_inner_sum = false;
  for (const TaggedEq& eq : sys.equalities) {
    const Poly expect =
        s1 * (Poly::variable("$sel_2") + Poly::variable("$sel_3") - Poly::constant(1));
    if (eq.poly == expect) found_guarded_inner_sum = eq.tag == EqTag::guard;
  }
  CHECK(found_guarded_inner_sum);
}

TEST_CASE("equality system zero sets match the formula") {
  struct Case {
    const char* text;
    std::map<std::string, Rat> sat;    // satisfying source assignment
    std::map<std::string, Rat> unsat;  // violating source assignment
  };
  const Case cases[] = {
      {"x*y - 6 = 0 /\\ x + y - 5 = 0", {{"x", 2}, {"y", 3}}, {{"x", 1}, {"y", 1}}},
      {"x >= 0", {{"x", Rat(9, 4)}}, {{"x", -1}}},
      {"x - 1 = 0 \\/ x - 2 = 0", {{"x", 2}}, {{"x", 5}}},
      {"x != 0", {{"x", 7}}, {{"x", 0}}},
      {"x > 0 /\\ x^2 - 16 = 0", {{"x", 4}}, {{"x", -4}}},
  };
  for (const Case& c : cases) {
    Formula f = push_negations(parse_formula(c.text));
    EqualitySystem sys = to_equality_form(f);
    CHECK(eval_formula(f, c.sat));
    CHECK(!eval_formula(f, c.unsat));

    // A valid auxiliary extension of the satisfying assignment zeroes every
    // equality; with auxiliaries zeroed, the violating assignment leaves at
    // least one equality nonzero. Automatic extension is exercised end to end
    // in the witness tests; the values here were worked out by hand.
    std::map<std::string, Rat> full = c.sat;
    if (std::string(c.text) == "x >= 0") full["$slack_0"] = Rat(3, 2);
    if (std::string(c.text) == "x - 1 = 0 \\/ x - 2 = 0") {
      full["$sel_0"] = 0;
      full["$sel_1"] = 1;
    }
    if (std::string(c.text) == "x != 0") full["$inv_0"] = Rat(1, 7);
    if (std::string(c.text) == "x > 0 /\\ x^2 - 16 = 0") {
      full["$slack_0"] = 2;
      full["$inv_0"] = Rat(1, 2);
    }
    for (const TaggedEq& eq : sys.equalities) CHECK(eq.poly.eval(full) == 0);

    std::map<std::string, Rat> bad = c.unsat;
    for (const std::string& v : sys.variables) {
      if (v.starts_with("$")) bad[v] = 0;
    }
    bool some_nonzero = false;
    for (const TaggedEq& eq : sys.equalities) {
      if (eq.poly.eval(bad) != 0) some_nonzero = true;
    }
    CHECK(some_nonzero);
  }
}
