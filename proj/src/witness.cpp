#include "witness.hpp"

#include "errors.hpp"

#include <charconv>

namespace armred {

std::map<std::string, Rat> parse_assignment(const std::string& text) {
  std::map<std::string, Rat> out;
  size_t pos = 0;
  const auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t");
    const auto b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string part = trim(text.substr(pos, comma - pos));
    pos = comma + 1;
    if (part.empty()) {
      if (pos > text.size()) break;
      fail(errc::invalid, "empty assignment entry");
    }
    const size_t eq = part.find('=');
    if (eq == std::string::npos) fail(errc::invalid, "assignment entry '" + part + "' lacks '='");
    const std::string name = trim(part.substr(0, eq));
    const std::string value = trim(part.substr(eq + 1));
    if (name.empty()) fail(errc::invalid, "assignment entry '" + part + "' lacks a variable name");
    if (out.count(name)) fail(errc::invalid, "variable '" + name + "' assigned twice");
    out[name] = parse_rat(value);
    if (comma == text.size()) break;
  }
  return out;
}

namespace {

class Extender {
public:
  Extender(const EqualitySystem& sys, const std::map<std::string, Rat>& source)
      : sys_(sys), values_(source) {}

  std::map<std::string, Rat> run(const Formula& f) {
    walk(f, true);
    return std::move(values_);
  }

private:
  void set_aux(const std::string& name, const Rat& value) { values_[name] = value; }

  void walk(const Formula& f, bool active) {
    const uint32_t idx = next_index_++;
    switch (f.kind) {
      case Formula::Kind::neg:
        fail(errc::invalid, "witness extension requires a negation-free formula");
      case Formula::Kind::atom: {
        auto it = sys_.atom_aux.find(idx);
        if (it == sys_.atom_aux.end()) return;  // plain equality, no auxiliaries
        const EqualitySystem::AtomAux& aux = it->second;
        if (!active) {
          if (!aux.slack.empty()) set_aux(aux.slack, 0);
          if (!aux.inverse.empty()) set_aux(aux.inverse, 0);
          return;
        }
        const Rat p = f.atom.poly.eval(values_);
        switch (f.atom.rel) {
          case Rel::ge: {
            set_aux(aux.slack, sqrt_or_fail(f, p));
            break;
          }
          case Rel::gt: {
            if (p == 0) {
              fail(errc::witness, "division-by-zero: strict inequality '" + f.atom.poly.str() +
                                      " > 0' holds with value 0");
            }
            const Rat root = sqrt_or_fail(f, p);
            set_aux(aux.slack, root);
            set_aux(aux.inverse, Rat(1) / root);
            break;
          }
          case Rel::neq: {
            if (p == 0) {
              fail(errc::witness,
                   "division-by-zero: '" + f.atom.poly.str() + " != 0' fails, no inverse exists");
            }
            set_aux(aux.inverse, Rat(1) / p);
            break;
          }
          case Rel::eq: break;
        }
        return;
      }
      case Formula::Kind::conj:
        for (const Formula& child : f.children) walk(child, active);
        return;
      case Formula::Kind::disj: {
        const std::vector<std::string>& selectors = sys_.or_selectors.at(idx);
        size_t chosen = f.children.size();
        if (active) {
          for (size_t j = 0; j < f.children.size(); ++j) {
            if (eval_formula(f.children[j], values_)) {
              chosen = j;
              break;
            }
          }
          if (chosen == f.children.size()) {
            fail(errc::witness, "unsatisfied: no disjunct of '" + formula_str(f) +
                                    "' holds under the assignment");
          }
        }
        for (size_t j = 0; j < f.children.size(); ++j) {
          set_aux(selectors[j], active && j == chosen ? 1 : 0);
        }
        for (size_t j = 0; j < f.children.size(); ++j) {
          walk(f.children[j], active && j == chosen);
        }
        return;
      }
    }
  }

  Rat sqrt_or_fail(const Formula& f, const Rat& p) {
    Rat root;
    switch (rational_sqrt(p, root)) {
      case sqrt_status::exact: return root;
      case sqrt_status::negative:
        fail(errc::witness, "unsatisfied: '" + f.atom.poly.str() + " " + rel_str(f.atom.rel) +
                                " 0' fails (value " + rat_str(p) + ")");
      case sqrt_status::irrational:
        fail(errc::witness, "irrational-witness: slack for '" + f.atom.poly.str() + " " +
                                rel_str(f.atom.rel) + " 0' needs sqrt(" + rat_str(p) +
                                ") which is not rational");
    }
    fail(errc::internal, "unreachable");
  }

  const EqualitySystem& sys_;
  std::map<std::string, Rat> values_;
  uint32_t next_index_ = 0;
};

void check_coverage(const Circuit& circuit, const std::map<std::string, Rat>& vars) {
  std::set<std::string> known(circuit.input_vars.begin(), circuit.input_vars.end());
  for (const auto& [name, value] : vars) {
    if (!known.count(name)) fail(errc::invalid, "unknown variable '" + name + "'");
  }
  for (const std::string& name : circuit.input_vars) {
    if (!vars.count(name)) fail(errc::invalid, "missing variable '" + name + "'");
  }
}

}  // namespace

FullAssignment extend_assignment(const Formula& normalized, const EqualitySystem& sys,
                                 const Circuit& circuit,
                                 const std::map<std::string, Rat>& source) {
  FullAssignment full;
  full.vars = Extender(sys, source).run(normalized);
  check_coverage(circuit, full.vars);
  full.gate_values = evaluate_circuit(circuit, full.vars).gate_values;
  return full;
}

FullAssignment extend_assignment(const ArmInstance& inst,
                                 const std::map<std::string, Rat>& source) {
  if (inst.source.empty()) {
    FullAssignment full;
    full.vars = source;
    check_coverage(inst.circuit, full.vars);
    full.gate_values = evaluate_circuit(inst.circuit, full.vars).gate_values;
    return full;
  }
  const Formula normalized = parse_formula(inst.source);
  const EqualitySystem sys = to_equality_form(normalized);
  return extend_assignment(normalized, sys, inst.circuit, source);
}

namespace {

// Value carried by an occurrence: primary carriers read their gate/variable,
// ":use<k>" copies read the value of their base occurrence.
Rat occ_value(const std::string& occ, const FullAssignment& full) {
  std::string base = occ;
  if (const size_t use = base.find(":use"); use != std::string::npos) base = base.substr(0, use);
  if (base.starts_with("var:")) {
    const std::string name = base.substr(4);
    auto it = full.vars.find(name);
    if (it == full.vars.end()) fail(errc::invalid, "missing variable '" + name + "'");
    return it->second;
  }
  if (base.starts_with("gate:")) {
    const std::string digits = base.substr(5);
    uint32_t id = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || id >= full.gate_values.size()) {
      fail(errc::invalid, "carrier '" + occ + "' does not name a circuit gate");
    }
    return full.gate_values[id];
  }
  fail(errc::invalid, "carrier '" + occ + "' has an unrecognized occurrence id");
}

void check_gates(const ArmInstance& inst, const FullAssignment& full) {
  const Circuit& c = inst.circuit;
  if (full.gate_values.size() != c.gates.size()) {
    fail(errc::invalid, "assignment covers " + std::to_string(full.gate_values.size()) +
                            " gates, circuit has " + std::to_string(c.gates.size()));
  }
  const auto violation = [](uint32_t id, const std::string& what) {
    fail(errc::witness, "gate-violation: g" + std::to_string(id) + " " + what);
  };
  for (uint32_t id = 0; id < c.gates.size(); ++id) {
    const Gate& g = c.gates[id];
    const Rat& z = full.gate_values[id];
    switch (g.kind) {
      case Gate::Kind::input: {
        auto it = full.vars.find(g.var);
        if (it == full.vars.end()) fail(errc::invalid, "missing variable '" + g.var + "'");
        if (z != it->second) violation(id, "input '" + g.var + "' mismatch");
        break;
      }
      case Gate::Kind::constant:
        if (z != g.value) violation(id, "constant mismatch");
        break;
      case Gate::Kind::add:
        if (z != full.gate_values[g.lhs] + full.gate_values[g.rhs]) violation(id, "sum mismatch");
        break;
      case Gate::Kind::mul:
        if (z != full.gate_values[g.lhs] * full.gate_values[g.rhs]) {
          violation(id, rat_str(z) + " != " + rat_str(full.gate_values[g.lhs]) + " * " +
                            rat_str(full.gate_values[g.rhs]));
        }
        break;
      case Gate::Kind::neg:
        if (z != -full.gate_values[g.lhs]) violation(id, "negation mismatch");
        break;
    }
  }
  for (uint32_t id : c.outputs) {
    if (full.gate_values[id] != 0) {
      violation(id, "output value " + rat_str(full.gate_values[id]) + " != 0");
    }
  }
}

}  // namespace

Witness build_witness(const ArmInstance& inst, const FullAssignment& full) {
  check_gates(inst, full);

  RatMatrix u(inst.m, 3);
  RatMatrix v(3, inst.n);
  for (uint32_t i = 0; i < 3; ++i) {
    u.set(inst.gauge_rows[i], i, 1);
    for (uint32_t j = 0; j < 3; ++j) v.set(i, inst.gauge_cols[j], inst.gauge_block.at(i, j));
  }

  for (const auto& [occ, info] : inst.carriers) {
    u.set(info.row, 2, occ_value(occ, full));
    v.set(2, info.col, 1);
  }
  for (const MulGadgetInfo& g : inst.mul_gadgets) {
    u.set(g.rows[0], 2, 1);
    u.set(g.rows[1], 2, occ_value(g.y_occ, full));
    v.set(2, g.cols[0], 1);
    v.set(2, g.cols[1], occ_value(g.x_occ, full));
  }

  Witness w;
  w.u = std::move(u);
  w.v = std::move(v);
  w.x = mat_mul(w.u, w.v);

  for (const AffineConstraint& c : inst.constraints) {
    Rat lhs = 0;
    for (const AffineTerm& t : c.terms) lhs += t.coeff * w.x.at(t.row, t.col);
    if (lhs != c.rhs) {
      fail(errc::internal, "constructed witness violates constraint '" + c.tag + "'");
    }
  }
  return w;
}

}  // namespace armred
