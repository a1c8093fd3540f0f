#pragma once

#include "arm_instance.hpp"
#include "equality_form.hpp"

#include <map>
#include <string>

namespace armred {

// Values for every circuit input variable (source + auxiliaries) plus the
// derived value of every gate.
struct FullAssignment {
  std::map<std::string, Rat> vars;
  std::vector<Rat> gate_values;
};

// "name=p/q,name2=r" with optional whitespace around separators.
std::map<std::string, Rat> parse_assignment(const std::string& text);

// Extends a source-variable assignment to all auxiliaries by re-walking the
// negation-free formula with the same preorder numbering used during
// conversion: slacks get exact square roots, inverses get reciprocals,
// selectors pick the first satisfied disjunct, and every auxiliary inside an
// inactive disjunct is set to 0. Gate values come from circuit evaluation.
//
// Errors (errc::witness): "irrational-witness" when a slack needs an
// irrational root, "unsatisfied" when an inequality fails or no disjunct of a
// disjunction holds, "division-by-zero" when an inverse of 0 is required.
FullAssignment extend_assignment(const Formula& normalized, const EqualitySystem& sys,
                                 const Circuit& circuit,
                                 const std::map<std::string, Rat>& source);

// Instance-level wrapper: re-derives the conversion from the embedded source
// text; without source text the assignment must already cover every circuit
// input variable.
FullAssignment extend_assignment(const ArmInstance& inst,
                                 const std::map<std::string, Rat>& source);

// Canonical-gauge rank-3 witness: U[I0,:] = I3 and V[:,J0] = B; every carrier
// value t rides its own row as (0,0,t) against a unit column; each mul gadget
// contributes rows (0,0,1),(0,0,b) and columns (0,0,1)^T,(0,0,a)^T. Checks
// every gate equation and output pin first ("gate-violation" otherwise) and
// re-verifies all instance constraints on the assembled X before returning.
Witness build_witness(const ArmInstance& inst, const FullAssignment& full);

}  // namespace armred
