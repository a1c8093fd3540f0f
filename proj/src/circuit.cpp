#include "circuit.hpp"

#include "errors.hpp"

#include <cstdio>

namespace armred {

std::string gate_kind_str(Gate::Kind kind) {
  switch (kind) {
    case Gate::Kind::input: return "input";
    case Gate::Kind::constant: return "const";
    case Gate::Kind::add: return "add";
    case Gate::Kind::mul: return "mul";
    case Gate::Kind::neg: return "neg";
  }
  return "?";
}

namespace {

class Lowerer {
public:
  explicit Lowerer(const EqualitySystem& sys) : sys_(sys) {}

  Circuit run() {
    for (const std::string& var : sys_.variables) {
      input_gate_[var] = add_gate({Gate::Kind::input, var, 0, 0, 0});
      circuit_.input_vars.push_back(var);
    }
    for (const TaggedEq& eq : sys_.equalities) {
      circuit_.outputs.push_back(lower_poly(eq.poly));
    }
    return std::move(circuit_);
  }

private:
  uint32_t add_gate(Gate g) {
    circuit_.gates.push_back(std::move(g));
    return static_cast<uint32_t>(circuit_.gates.size() - 1);
  }

  uint32_t constant(const Rat& c) { return add_gate({Gate::Kind::constant, "", c, 0, 0}); }
  uint32_t add(uint32_t a, uint32_t b) { return add_gate({Gate::Kind::add, "", 0, a, b}); }
  uint32_t mul(uint32_t a, uint32_t b) { return add_gate({Gate::Kind::mul, "", 0, a, b}); }
  uint32_t neg(uint32_t a) { return add_gate({Gate::Kind::neg, "", 0, a, 0}); }

  // Square-and-multiply with a per-equality cache of repeated powers.
  uint32_t power(const std::string& var, uint32_t exp,
                 std::map<std::pair<std::string, uint32_t>, uint32_t>& cache) {
    if (exp == 1) return input_gate_.at(var);
    if (auto it = cache.find({var, exp}); it != cache.end()) return it->second;
    uint32_t result;
    if (exp % 2 == 0) {
      const uint32_t half = power(var, exp / 2, cache);
      result = mul(half, half);
    } else {
      const uint32_t rest = power(var, exp - 1, cache);
      result = mul(rest, input_gate_.at(var));
    }
    cache.emplace(std::make_pair(var, exp), result);
    return result;
  }

  uint32_t lower_poly(const Poly& poly) {
    if (poly.is_zero()) return constant(0);
    std::map<std::pair<std::string, uint32_t>, uint32_t> cache;
    bool have_sum = false;
    uint32_t sum = 0;
    const auto accumulate = [&](uint32_t term) {
      sum = have_sum ? add(sum, term) : term;
      have_sum = true;
    };
    const Rat* constant_coeff = nullptr;
    for (const auto& [mono, coeff] : poly.terms()) {
      if (mono.empty()) {
        constant_coeff = &coeff;  // constant term lowered last
        continue;
      }
      bool have_prod = false;
      uint32_t prod = 0;
      for (const auto& [var, exp] : mono) {
        const uint32_t p = power(var, exp, cache);
        prod = have_prod ? mul(prod, p) : p;
        have_prod = true;
      }
      if (coeff == -1) {
        prod = neg(prod);
      } else if (coeff != 1) {
        prod = mul(constant(coeff), prod);
      }
      accumulate(prod);
    }
    if (constant_coeff) accumulate(constant(*constant_coeff));
    return sum;
  }

  const EqualitySystem& sys_;
  Circuit circuit_;
  std::map<std::string, uint32_t> input_gate_;
};

}  // namespace

Circuit lower_system(const EqualitySystem& sys) { return Lowerer(sys).run(); }

CircuitValues evaluate_circuit(const Circuit& c, const std::map<std::string, Rat>& assignment) {
  CircuitValues out;
  out.gate_values.reserve(c.gates.size());
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::input: {
        auto it = assignment.find(g.var);
        if (it == assignment.end()) fail(errc::invalid, "missing variable '" + g.var + "'");
        out.gate_values.push_back(it->second);
        break;
      }
      case Gate::Kind::constant: out.gate_values.push_back(g.value); break;
      case Gate::Kind::add: out.gate_values.push_back(out.gate_values[g.lhs] + out.gate_values[g.rhs]); break;
      case Gate::Kind::mul: out.gate_values.push_back(out.gate_values[g.lhs] * out.gate_values[g.rhs]); break;
      case Gate::Kind::neg: out.gate_values.push_back(-out.gate_values[g.lhs]); break;
    }
  }
  for (uint32_t id : c.outputs) out.output_values.push_back(out.gate_values[id]);
  return out;
}

std::string gate_var(uint32_t id) { return "$z" + std::to_string(id); }

std::vector<Poly> gate_equations(const Circuit& c) {
  std::vector<Poly> eqs;
  eqs.reserve(c.gates.size() + c.outputs.size());
  for (uint32_t id = 0; id < c.gates.size(); ++id) {
    const Gate& g = c.gates[id];
    const Poly z = Poly::variable(gate_var(id));
    switch (g.kind) {
      case Gate::Kind::input: eqs.push_back(z - Poly::variable(g.var)); break;
      case Gate::Kind::constant: eqs.push_back(z - Poly::constant(g.value)); break;
      case Gate::Kind::add:
        eqs.push_back(z - Poly::variable(gate_var(g.lhs)) - Poly::variable(gate_var(g.rhs)));
        break;
      case Gate::Kind::mul:
        eqs.push_back(z - Poly::variable(gate_var(g.lhs)) * Poly::variable(gate_var(g.rhs)));
        break;
      case Gate::Kind::neg: eqs.push_back(z + Poly::variable(gate_var(g.lhs))); break;
    }
  }
  for (uint32_t id : c.outputs) eqs.push_back(Poly::variable(gate_var(id)));
  return eqs;
}

std::string circuit_dump(const Circuit& c) {
  std::string out;
  for (uint32_t id = 0; id < c.gates.size(); ++id) {
    const Gate& g = c.gates[id];
    out += "g" + std::to_string(id) + " = " + gate_kind_str(g.kind) + "(";
    switch (g.kind) {
      case Gate::Kind::input: out += g.var; break;
      case Gate::Kind::constant: out += rat_str(g.value); break;
      case Gate::Kind::add:
      case Gate::Kind::mul:
        out += "g" + std::to_string(g.lhs) + ", g" + std::to_string(g.rhs);
        break;
      case Gate::Kind::neg: out += "g" + std::to_string(g.lhs); break;
    }
    out += ")\n";
  }
  for (uint32_t id : c.outputs) out += "output g" + std::to_string(id) + "\n";
  return out;
}

std::string circuit_hash(const Circuit& c) {
  const std::string dump = circuit_dump(c);
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char byte : dump) {
    h ^= byte;
    h *= 0x100000001b3ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

void validate_circuit(const Circuit& c) {
  std::vector<std::string> seen_inputs;
  for (uint32_t id = 0; id < c.gates.size(); ++id) {
    const Gate& g = c.gates[id];
    switch (g.kind) {
      case Gate::Kind::input:
        if (g.var.empty()) fail(errc::format, "circuit: input gate g" + std::to_string(id) + " unnamed");
        seen_inputs.push_back(g.var);
        break;
      case Gate::Kind::add:
      case Gate::Kind::mul:
        if (g.lhs >= id || g.rhs >= id)
          fail(errc::format, "circuit: gate g" + std::to_string(id) + " breaks topological order");
        break;
      case Gate::Kind::neg:
        if (g.lhs >= id)
          fail(errc::format, "circuit: gate g" + std::to_string(id) + " breaks topological order");
        break;
      case Gate::Kind::constant: break;
    }
  }
  for (uint32_t id : c.outputs) {
    if (id >= c.gates.size()) fail(errc::format, "circuit: output g" + std::to_string(id) + " out of range");
  }
  if (seen_inputs != c.input_vars) fail(errc::format, "circuit: input gates do not match input_vars");
}

}  // namespace armred
