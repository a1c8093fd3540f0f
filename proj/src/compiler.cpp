#include "compiler.hpp"

#include "errors.hpp"

namespace armred {

namespace {

const CarrierInfo& carrier_or_fail(const ArmInstance& inst, const std::string& occ) {
  auto it = inst.carriers.find(occ);
  if (it == inst.carriers.end()) fail(errc::invalid, "unknown carrier '" + occ + "'");
  return it->second;
}

}  // namespace

uint32_t Allocator::fresh_row(const std::string& gadget_id) {
  const uint32_t row = next_row++;
  ledger[gadget_id].first.insert(row);
  return row;
}

uint32_t Allocator::fresh_col(const std::string& gadget_id) {
  const uint32_t col = next_col++;
  ledger[gadget_id].second.insert(col);
  return col;
}

void emit_gauge(ArmInstance& inst) {
  for (uint32_t i = 0; i < 3; ++i) {
    for (uint32_t j = 0; j < 3; ++j) {
      add_constraint(inst, {{inst.gauge_rows[i], inst.gauge_cols[j], 1}},
                     inst.gauge_block.at(i, j), "gauge");
    }
  }
}

std::pair<uint32_t, uint32_t> emit_carrier(Allocator& alloc, ArmInstance& inst,
                                           const std::string& occ, const std::string& role) {
  if (inst.carriers.count(occ)) fail(errc::invalid, "duplicate carrier '" + occ + "'");
  const uint32_t row = alloc.fresh_row(occ);
  const uint32_t col = alloc.fresh_col(occ);
  inst.m = std::max(inst.m, alloc.next_row);
  inst.n = std::max(inst.n, alloc.next_col);
  inst.carriers.emplace(occ, CarrierInfo{row, col, role});
  return {row, col};
}

void emit_const(ArmInstance& inst, const std::string& occ, const Rat& value) {
  const CarrierInfo& c = carrier_or_fail(inst, occ);
  add_constraint(inst, {{c.row, c.col, 1}}, value, "const:" + occ);
}

void emit_copy(ArmInstance& inst, const std::string& dst_occ, const std::string& src_occ) {
  const CarrierInfo& dst = carrier_or_fail(inst, dst_occ);
  const CarrierInfo& src = carrier_or_fail(inst, src_occ);
  add_constraint(inst, {{dst.row, dst.col, 1}, {src.row, src.col, -1}}, 0,
                 "copy:" + dst_occ + ":" + src_occ);
}

void emit_add(ArmInstance& inst, const std::string& z_occ, const std::string& x_occ,
              const std::string& y_occ) {
  const CarrierInfo& z = carrier_or_fail(inst, z_occ);
  const CarrierInfo& x = carrier_or_fail(inst, x_occ);
  const CarrierInfo& y = carrier_or_fail(inst, y_occ);
  add_constraint(inst, {{z.row, z.col, 1}, {x.row, x.col, -1}, {y.row, y.col, -1}}, 0,
                 "add:" + z_occ);
}

void emit_neg(ArmInstance& inst, const std::string& z_occ, const std::string& x_occ) {
  const CarrierInfo& z = carrier_or_fail(inst, z_occ);
  const CarrierInfo& x = carrier_or_fail(inst, x_occ);
  add_constraint(inst, {{z.row, z.col, 1}, {x.row, x.col, 1}}, 0, "neg:" + z_occ);
}

MulGadgetInfo emit_mul(Allocator& alloc, ArmInstance& inst, uint32_t gate_id,
                       const std::string& x_occ, const std::string& y_occ,
                       const std::string& z_occ) {
  const CarrierInfo x = carrier_or_fail(inst, x_occ);
  const CarrierInfo y = carrier_or_fail(inst, y_occ);
  const CarrierInfo z = carrier_or_fail(inst, z_occ);

  const std::string gid = "mul:g" + std::to_string(gate_id);
  MulGadgetInfo g;
  g.gate = gate_id;
  g.rows = {alloc.fresh_row(gid), alloc.fresh_row(gid)};
  g.cols = {alloc.fresh_col(gid), alloc.fresh_col(gid)};
  g.x_occ = x_occ;
  g.y_occ = y_occ;
  g.z_occ = z_occ;
  inst.m = std::max(inst.m, alloc.next_row);
  inst.n = std::max(inst.n, alloc.next_col);

  const uint32_t r1 = g.rows[0], r2 = g.rows[1];
  const uint32_t c1 = g.cols[0], c2 = g.cols[1];

  add_constraint(inst, {{r1, c1, 1}}, 1, gid + ":pin11");

  // Cross pins against the first two gauge rows/columns only; the third gauge
  // direction stays free so the rank-3 completion (third factor coordinate)
  // can carry the gadget values.
  uint32_t idx = 0;
  for (uint32_t gadget_row : {r1, r2}) {
    for (uint32_t gauge_col : {inst.gauge_cols[0], inst.gauge_cols[1]}) {
      add_constraint(inst, {{gadget_row, gauge_col, 1}}, 0, gid + ":cross" + std::to_string(idx++));
    }
  }
  for (uint32_t gauge_row : {inst.gauge_rows[0], inst.gauge_rows[1]}) {
    for (uint32_t gadget_col : {c1, c2}) {
      add_constraint(inst, {{gauge_row, gadget_col, 1}}, 0, gid + ":cross" + std::to_string(idx++));
    }
  }

  add_constraint(inst, {{r1, c2, 1}, {x.row, x.col, -1}}, 0, gid + ":a");
  add_constraint(inst, {{r2, c1, 1}, {y.row, y.col, -1}}, 0, gid + ":b");
  add_constraint(inst, {{r2, c2, 1}, {z.row, z.col, -1}}, 0, gid + ":c");

  inst.mul_gadgets.push_back(g);
  return g;
}

namespace {

std::string role_for_input(const std::string& var) {
  if (var.starts_with("$slack_")) return "slack";
  if (var.starts_with("$inv_")) return "inverse";
  if (var.starts_with("$sel_")) return "selector";
  return "input";
}

class CircuitCompiler {
public:
  explicit CircuitCompiler(const Circuit& circuit) : circuit_(circuit) {}

  ArmInstance run() {
    validate_circuit(circuit_);
    emit_gauge(inst_);

    for (uint32_t id = 0; id < circuit_.gates.size(); ++id) {
      const Gate& gate = circuit_.gates[id];
      switch (gate.kind) {
        case Gate::Kind::input:
          emit_carrier(alloc_, inst_, primary_occ(id), role_for_input(gate.var));
          break;
        case Gate::Kind::constant: {
          const std::string occ = primary_occ(id);
          emit_carrier(alloc_, inst_, occ, "gate:const");
          emit_const(inst_, occ, gate.value);
          break;
        }
        case Gate::Kind::add: {
          const std::string x = resolve_use(gate.lhs);
          const std::string y = resolve_use(gate.rhs);
          const std::string z = primary_occ(id);
          emit_carrier(alloc_, inst_, z, "gate:add");
          emit_add(inst_, z, x, y);
          break;
        }
        case Gate::Kind::mul: {
          const std::string x = resolve_use(gate.lhs);
          const std::string y = resolve_use(gate.rhs);
          const std::string z = primary_occ(id);
          emit_carrier(alloc_, inst_, z, "gate:mul");
          emit_mul(alloc_, inst_, id, x, y, z);
          break;
        }
        case Gate::Kind::neg: {
          const std::string x = resolve_use(gate.lhs);
          const std::string z = primary_occ(id);
          emit_carrier(alloc_, inst_, z, "gate:neg");
          emit_neg(inst_, z, x);
          break;
        }
      }
    }

    for (uint32_t id : circuit_.outputs) {
      const std::string occ = primary_occ(id);
      add_pin_zero(occ);
      inst_.output_carriers.push_back(occ);
    }

    inst_.circuit = circuit_;
    inst_.circuit_hash_hex = circuit_hash(circuit_);
    return std::move(inst_);
  }

private:
  std::string primary_occ(uint32_t id) const {
    const Gate& gate = circuit_.gates[id];
    if (gate.kind == Gate::Kind::input) return "var:" + gate.var;
    return "gate:" + std::to_string(id);
  }

  // First operand use reads the defining carrier; each further use gets a
  // fresh occurrence carrier tied back by a copy constraint.
  std::string resolve_use(uint32_t id) {
    const uint32_t count = use_count_[id]++;
    const std::string primary = primary_occ(id);
    if (count == 0) return primary;
    const std::string occ = primary + ":use" + std::to_string(count);
    emit_carrier(alloc_, inst_, occ, "copy");
    emit_copy(inst_, occ, primary);
    return occ;
  }

  void add_pin_zero(const std::string& occ) {
    const CarrierInfo& c = inst_.carriers.at(occ);
    add_constraint(inst_, {{c.row, c.col, 1}}, 0, "output:" + occ);
  }

  const Circuit& circuit_;
  ArmInstance inst_;
  Allocator alloc_;
  std::map<uint32_t, uint32_t> use_count_;
};

}  // namespace

ArmInstance compile_circuit(const Circuit& circuit) { return CircuitCompiler(circuit).run(); }

ArmInstance compile_formula(const std::string& text) {
  const Formula normalized = push_negations(parse_formula(text));
  const EqualitySystem sys = to_equality_form(normalized);
  const Circuit circuit = lower_system(sys);
  ArmInstance inst = compile_circuit(circuit);
  inst.source = formula_str(normalized);
  return inst;
}

}  // namespace armred
