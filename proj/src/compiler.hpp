#pragma once

#include "arm_instance.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>

namespace armred {

// Sequential row/column allocator. Indices 0..2 are the gauge block; every
// gadget and carrier draws fresh indices from 3 upward, so allocations are
// pairwise disjoint by construction. The ledger records which indices each
// gadget owns.
struct Allocator {
  uint32_t next_row = 3;
  uint32_t next_col = 3;
  std::map<std::string, std::pair<std::set<uint32_t>, std::set<uint32_t>>> ledger;

  uint32_t fresh_row(const std::string& gadget_id);
  uint32_t fresh_col(const std::string& gadget_id);
};

// Pins X[I0,J0] = B entrywise (nine constraints tagged "gauge").
void emit_gauge(ArmInstance& inst);

// Allocates one fresh row and one fresh column for an occurrence; the entry
// value stays free until a constraint relates it to something.
std::pair<uint32_t, uint32_t> emit_carrier(Allocator& alloc, ArmInstance& inst,
                                           const std::string& occ, const std::string& role);

// Linear gadgets: one affine constraint each.
void emit_const(ArmInstance& inst, const std::string& occ, const Rat& value);
void emit_copy(ArmInstance& inst, const std::string& dst_occ, const std::string& src_occ);
void emit_add(ArmInstance& inst, const std::string& z_occ, const std::string& x_occ,
              const std::string& y_occ);
void emit_neg(ArmInstance& inst, const std::string& z_occ, const std::string& x_occ);

// Multiplication gadget: allocates rows {r1,r2} and columns {c1,c2}, pins
// X[r1,c1]=1, pins the eight cross entries against the first two gauge rows
// and columns to 0, and copies the carriers of x,y,z into (r1,c2), (r2,c1),
// (r2,c2). Exactly 12 constraints. Together with the gauge block this makes
// the 4x4 submatrix on rows {I0[0],I0[1],r1,r2} x cols {J0[0],J0[1],c1,c2}
// have determinant z - x*y, so the rank bound enforces the product.
MulGadgetInfo emit_mul(Allocator& alloc, ArmInstance& inst, uint32_t gate_id,
                       const std::string& x_occ, const std::string& y_occ, const std::string& z_occ);

// Full compilation: gauge, one carrier per gate output plus one per extra
// operand use (linked by copies), linear gates as affine constraints,
// multiplications as gadgets, and a zero pin on every output carrier.
ArmInstance compile_circuit(const Circuit& circuit);

// parse -> push_negations -> equality form -> lower -> compile; records the
// normalized formula text in the instance so witnesses can be built from the
// instance file alone.
ArmInstance compile_formula(const std::string& text);

}  // namespace armred
