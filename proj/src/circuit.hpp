#pragma once

#include "equality_form.hpp"
#include "poly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace armred {

struct Gate {
  enum class Kind { input, constant, add, mul, neg };

  Kind kind = Kind::input;
  std::string var;   // input
  Rat value;         // constant
  uint32_t lhs = 0;  // add/mul/neg operand (neg uses lhs only)
  uint32_t rhs = 0;  // add/mul operand

  bool operator==(const Gate&) const = default;
};

std::string gate_kind_str(Gate::Kind kind);

// Arithmetic-circuit DAG stored in topological order: operand ids are always
// strictly smaller than the gate's own id.
struct Circuit {
  std::vector<Gate> gates;
  std::vector<uint32_t> outputs;         // gate ids asserted = 0
  std::vector<std::string> input_vars;   // creation order, one input gate each

  bool operator==(const Circuit&) const = default;
};

// One circuit computing every equality's polynomial; input gates are shared
// across equalities, repeated powers are shared within one equality
// (square-and-multiply). Each equality contributes one output id.
Circuit lower_system(const EqualitySystem& sys);

struct CircuitValues {
  std::vector<Rat> gate_values;
  std::vector<Rat> output_values;
};

// Topological evaluation; throws errc::invalid naming any missing variable.
CircuitValues evaluate_circuit(const Circuit& c, const std::map<std::string, Rat>& assignment);

// The defining equality of each gate over gate variables "$z<id>" (inputs
// additionally mention their source variable), followed by one "$z<out>"
// equality per output. All asserted = 0.
std::vector<Poly> gate_equations(const Circuit& c);

std::string gate_var(uint32_t id);

// Stable text form, one gate per line ("g<id> = kind(args)"), outputs last.
std::string circuit_dump(const Circuit& c);

// FNV-1a over the dump; used to pair instances with their circuits.
std::string circuit_hash(const Circuit& c);

// Structural invariants: topological order, output ids valid, input gates in
// bijection with input_vars. Throws errc::format on violation.
void validate_circuit(const Circuit& c);

}  // namespace armred
