#include "arm_instance.hpp"

#include "errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace armred {

using nlohmann::json;

void add_constraint(ArmInstance& inst, std::vector<AffineTerm> terms, Rat rhs, std::string tag) {
  std::map<std::pair<uint32_t, uint32_t>, Rat> merged;
  for (const AffineTerm& t : terms) {
    if (t.row >= inst.m || t.col >= inst.n) {
      fail(errc::invalid, "constraint '" + tag + "' references (" + std::to_string(t.row) + "," +
                              std::to_string(t.col) + ") outside " + std::to_string(inst.m) + "x" +
                              std::to_string(inst.n));
    }
    merged[{t.row, t.col}] += t.coeff;
  }
  AffineConstraint c;
  c.rhs = std::move(rhs);
  c.tag = std::move(tag);
  for (auto& [pos, coeff] : merged) {
    if (coeff != 0) c.terms.push_back({pos.first, pos.second, std::move(coeff)});
  }
  inst.constraints.push_back(std::move(c));
}

InstanceStats stats(const ArmInstance& inst) {
  InstanceStats s;
  s.m = inst.m;
  s.n = inst.n;
  s.q = static_cast<uint32_t>(inst.constraints.size());
  for (const AffineConstraint& c : inst.constraints) {
    for (const AffineTerm& t : c.terms) s.total_bits += rat_bits(t.coeff);
    s.total_bits += rat_bits(c.rhs);
  }
  return s;
}

void validate_instance(const ArmInstance& inst) {
  const auto check = [](bool ok, const std::string& msg) {
    if (!ok) fail(errc::format, "instance: " + msg);
  };
  check(inst.k >= 1, "rank bound must be positive");
  for (uint32_t i = 0; i < 3; ++i) {
    check(inst.gauge_rows[i] < inst.m, "gauge row out of range");
    check(inst.gauge_cols[i] < inst.n, "gauge column out of range");
    for (uint32_t j = i + 1; j < 3; ++j) {
      check(inst.gauge_rows[i] != inst.gauge_rows[j], "gauge rows not distinct");
      check(inst.gauge_cols[i] != inst.gauge_cols[j], "gauge columns not distinct");
    }
  }
  check(inst.gauge_block.rows() == 3 && inst.gauge_block.cols() == 3, "gauge block must be 3x3");
  check(det_bareiss(inst.gauge_block) != 0, "gauge block is singular");

  // the nine pin constraints X[I0,J0] = B must be present
  for (uint32_t i = 0; i < 3; ++i) {
    for (uint32_t j = 0; j < 3; ++j) {
      const bool found = std::any_of(
          inst.constraints.begin(), inst.constraints.end(), [&](const AffineConstraint& c) {
            return c.terms.size() == 1 && c.terms[0].row == inst.gauge_rows[i] &&
                   c.terms[0].col == inst.gauge_cols[j] && c.terms[0].coeff == 1 &&
                   c.rhs == inst.gauge_block.at(i, j);
          });
      check(found, "missing gauge pin at (" + std::to_string(inst.gauge_rows[i]) + "," +
                       std::to_string(inst.gauge_cols[j]) + ")");
    }
  }

  for (const AffineConstraint& c : inst.constraints) {
    for (const AffineTerm& t : c.terms) {
      check(t.row < inst.m && t.col < inst.n, "constraint '" + c.tag + "' index out of range");
      check(t.coeff != 0, "constraint '" + c.tag + "' stores a zero coefficient");
    }
  }

  // Fresh-index discipline: every carrier and every gadget owns its rows and
  // columns exclusively, and none of them touches the gauge block. Witness
  // assembly assigns factor rows/columns per owner and depends on this.
  std::set<uint32_t> used_rows(inst.gauge_rows.begin(), inst.gauge_rows.end());
  std::set<uint32_t> used_cols(inst.gauge_cols.begin(), inst.gauge_cols.end());
  for (const auto& [occ, info] : inst.carriers) {
    check(info.row < inst.m && info.col < inst.n, "carrier '" + occ + "' out of range");
    check(used_rows.insert(info.row).second, "carrier '" + occ + "' row is not fresh");
    check(used_cols.insert(info.col).second, "carrier '" + occ + "' column is not fresh");
  }
  for (const std::string& occ : inst.output_carriers) {
    check(inst.carriers.count(occ) == 1, "output carrier '" + occ + "' unknown");
  }
  for (const MulGadgetInfo& g : inst.mul_gadgets) {
    const std::string id = "gadget for gate g" + std::to_string(g.gate);
    for (uint32_t r : g.rows) {
      check(r < inst.m, id + " row out of range");
      check(used_rows.insert(r).second, id + " row is not fresh");
    }
    for (uint32_t c : g.cols) {
      check(c < inst.n, id + " column out of range");
      check(used_cols.insert(c).second, id + " column is not fresh");
    }
    check(inst.carriers.count(g.x_occ) && inst.carriers.count(g.y_occ) && inst.carriers.count(g.z_occ),
          id + " references unknown carriers");
  }

  validate_circuit(inst.circuit);
  check(circuit_hash(inst.circuit) == inst.circuit_hash_hex, "circuit hash mismatch");
}

namespace {

json rat_json(const Rat& x) { return rat_str(x); }

Rat rat_from_json(const json& j, const std::string& path) {
  if (!j.is_string()) fail(errc::format, "instance: expected rational string at " + path);
  try {
    return parse_rat_strict(j.get<std::string>());
  } catch (const error& e) {
    fail(errc::format, std::string(e.what()) + " at " + path);
  }
}

uint32_t uint_from_json(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(errc::format, "instance: expected unsigned integer at " + path);
  return j.get<uint32_t>();
}

const json& field(const json& j, const char* name, const std::string& path) {
  auto it = j.find(name);
  if (it == j.end()) fail(errc::format, "instance: missing field '" + std::string(name) + "' in " + path);
  return *it;
}

json circuit_json(const Circuit& c) {
  json gates = json::array();
  for (const Gate& g : c.gates) {
    json entry;
    entry["kind"] = gate_kind_str(g.kind);
    switch (g.kind) {
      case Gate::Kind::input: entry["var"] = g.var; break;
      case Gate::Kind::constant: entry["value"] = rat_json(g.value); break;
      case Gate::Kind::add:
      case Gate::Kind::mul:
        entry["lhs"] = g.lhs;
        entry["rhs"] = g.rhs;
        break;
      case Gate::Kind::neg: entry["arg"] = g.lhs; break;
    }
    gates.push_back(std::move(entry));
  }
  json out;
  out["gates"] = std::move(gates);
  out["inputs"] = c.input_vars;
  out["outputs"] = c.outputs;
  return out;
}

Circuit circuit_from_json(const json& j) {
  Circuit c;
  const json& gates = field(j, "gates", "circuit");
  if (!gates.is_array()) fail(errc::format, "instance: circuit.gates must be an array");
  for (size_t i = 0; i < gates.size(); ++i) {
    const std::string path = "circuit.gates[" + std::to_string(i) + "]";
    const json& entry = gates[i];
    const std::string kind = field(entry, "kind", path).get<std::string>();
    Gate g;
    if (kind == "input") {
      g.kind = Gate::Kind::input;
      g.var = field(entry, "var", path).get<std::string>();
    } else if (kind == "const") {
      g.kind = Gate::Kind::constant;
      g.value = rat_from_json(field(entry, "value", path), path + ".value");
    } else if (kind == "add" || kind == "mul") {
      g.kind = kind == "add" ? Gate::Kind::add : Gate::Kind::mul;
      g.lhs = uint_from_json(field(entry, "lhs", path), path + ".lhs");
      g.rhs = uint_from_json(field(entry, "rhs", path), path + ".rhs");
    } else if (kind == "neg") {
      g.kind = Gate::Kind::neg;
      g.lhs = uint_from_json(field(entry, "arg", path), path + ".arg");
    } else {
      fail(errc::format, "instance: unknown gate kind '" + kind + "' in " + path);
    }
    c.gates.push_back(std::move(g));
  }
  for (const json& v : field(j, "inputs", "circuit")) c.input_vars.push_back(v.get<std::string>());
  for (const json& v : field(j, "outputs", "circuit")) {
    c.outputs.push_back(uint_from_json(v, "circuit.outputs"));
  }
  return c;
}

RatMatrix matrix_from_rows(const json& j, uint32_t rows, uint32_t cols, const std::string& path) {
  if (!j.is_array() || j.size() != rows) {
    fail(errc::format, "instance: expected " + std::to_string(rows) + " rows at " + path);
  }
  RatMatrix m(rows, cols);
  for (uint32_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != cols) {
      fail(errc::format, "instance: expected " + std::to_string(cols) + " columns at " + path + "[" +
                             std::to_string(i) + "]");
    }
    for (uint32_t jj = 0; jj < cols; ++jj) {
      m.set(i, jj, rat_from_json(row[jj], path + "[" + std::to_string(i) + "][" + std::to_string(jj) + "]"));
    }
  }
  return m;
}

json matrix_rows_json(const RatMatrix& m) {
  json rows = json::array();
  for (uint32_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (uint32_t j = 0; j < m.cols(); ++j) row.push_back(rat_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string serialize_instance(const ArmInstance& inst) {
  json j;
  j["format"] = "arm-instance/1";
  j["m"] = inst.m;
  j["n"] = inst.n;
  j["k"] = inst.k;

  json gauge;
  gauge["rows"] = inst.gauge_rows;
  gauge["cols"] = inst.gauge_cols;
  gauge["block"] = matrix_rows_json(inst.gauge_block);
  j["gauge"] = std::move(gauge);

  json constraints = json::array();
  for (const AffineConstraint& c : inst.constraints) {
    json terms = json::array();
    for (const AffineTerm& t : c.terms) terms.push_back(json::array({t.row, t.col, rat_json(t.coeff)}));
    json entry;
    entry["terms"] = std::move(terms);
    entry["rhs"] = rat_json(c.rhs);
    entry["tag"] = c.tag;
    constraints.push_back(std::move(entry));
  }
  j["constraints"] = std::move(constraints);

  json carriers = json::object();
  for (const auto& [occ, info] : inst.carriers) {
    json entry;
    entry["row"] = info.row;
    entry["col"] = info.col;
    entry["role"] = info.role;
    carriers[occ] = std::move(entry);
  }
  j["carriers"] = std::move(carriers);
  j["outputs"] = inst.output_carriers;

  json gadgets = json::array();
  for (const MulGadgetInfo& g : inst.mul_gadgets) {
    json entry;
    entry["gate"] = g.gate;
    entry["rows"] = g.rows;
    entry["cols"] = g.cols;
    entry["x"] = g.x_occ;
    entry["y"] = g.y_occ;
    entry["z"] = g.z_occ;
    gadgets.push_back(std::move(entry));
  }
  j["mul_gadgets"] = std::move(gadgets);

  j["circuit"] = circuit_json(inst.circuit);
  j["circuit_hash"] = inst.circuit_hash_hex;
  if (!inst.source.empty()) j["source"] = inst.source;

  return j.dump(1) + "\n";
}

ArmInstance deserialize_instance(const std::string& bytes) {
  json j = json::parse(bytes, nullptr, false);
  if (j.is_discarded()) fail(errc::format, "instance: not valid JSON");
  if (!j.is_object()) fail(errc::format, "instance: top level must be an object");
  if (field(j, "format", "$").get<std::string>() != "arm-instance/1") {
    fail(errc::format, "instance: unsupported format '" + field(j, "format", "$").dump() + "'");
  }

  ArmInstance inst;
  inst.m = uint_from_json(field(j, "m", "$"), "m");
  inst.n = uint_from_json(field(j, "n", "$"), "n");
  inst.k = uint_from_json(field(j, "k", "$"), "k");

  const json& gauge = field(j, "gauge", "$");
  const json& rows = field(gauge, "rows", "gauge");
  const json& cols = field(gauge, "cols", "gauge");
  if (!rows.is_array() || rows.size() != 3 || !cols.is_array() || cols.size() != 3) {
    fail(errc::format, "instance: gauge rows/cols must be index triples");
  }
  for (uint32_t i = 0; i < 3; ++i) {
    inst.gauge_rows[i] = uint_from_json(rows[i], "gauge.rows");
    inst.gauge_cols[i] = uint_from_json(cols[i], "gauge.cols");
  }
  inst.gauge_block = matrix_from_rows(field(gauge, "block", "gauge"), 3, 3, "gauge.block");

  inst.constraints.clear();
  const json& constraints = field(j, "constraints", "$");
  if (!constraints.is_array()) fail(errc::format, "instance: constraints must be an array");
  for (size_t i = 0; i < constraints.size(); ++i) {
    const std::string path = "constraints[" + std::to_string(i) + "]";
    const json& entry = constraints[i];
    AffineConstraint c;
    const json& terms = field(entry, "terms", path);
    if (!terms.is_array()) fail(errc::format, "instance: " + path + ".terms must be an array");
    for (size_t t = 0; t < terms.size(); ++t) {
      const json& term = terms[t];
      const std::string tpath = path + ".terms[" + std::to_string(t) + "]";
      if (!term.is_array() || term.size() != 3) {
        fail(errc::format, "instance: " + tpath + " must be [row, col, coeff]");
      }
      c.terms.push_back({uint_from_json(term[0], tpath), uint_from_json(term[1], tpath),
                         rat_from_json(term[2], tpath)});
    }
    c.rhs = rat_from_json(field(entry, "rhs", path), path + ".rhs");
    c.tag = field(entry, "tag", path).get<std::string>();
    inst.constraints.push_back(std::move(c));
  }

  const json& carriers = field(j, "carriers", "$");
  if (!carriers.is_object()) fail(errc::format, "instance: carriers must be an object");
  for (const auto& [occ, entry] : carriers.items()) {
    const std::string path = "carriers['" + occ + "']";
    CarrierInfo info;
    info.row = uint_from_json(field(entry, "row", path), path + ".row");
    info.col = uint_from_json(field(entry, "col", path), path + ".col");
    info.role = field(entry, "role", path).get<std::string>();
    inst.carriers.emplace(occ, std::move(info));
  }

  for (const json& occ : field(j, "outputs", "$")) {
    inst.output_carriers.push_back(occ.get<std::string>());
  }

  const json& gadgets = field(j, "mul_gadgets", "$");
  if (!gadgets.is_array()) fail(errc::format, "instance: mul_gadgets must be an array");
  for (size_t i = 0; i < gadgets.size(); ++i) {
    const std::string path = "mul_gadgets[" + std::to_string(i) + "]";
    const json& entry = gadgets[i];
    MulGadgetInfo g;
    g.gate = uint_from_json(field(entry, "gate", path), path + ".gate");
    const json& grows = field(entry, "rows", path);
    const json& gcols = field(entry, "cols", path);
    if (!grows.is_array() || grows.size() != 2 || !gcols.is_array() || gcols.size() != 2) {
      fail(errc::format, "instance: " + path + " rows/cols must be index pairs");
    }
    g.rows = {uint_from_json(grows[0], path), uint_from_json(grows[1], path)};
    g.cols = {uint_from_json(gcols[0], path), uint_from_json(gcols[1], path)};
    g.x_occ = field(entry, "x", path).get<std::string>();
    g.y_occ = field(entry, "y", path).get<std::string>();
    g.z_occ = field(entry, "z", path).get<std::string>();
    inst.mul_gadgets.push_back(std::move(g));
  }

  inst.circuit = circuit_from_json(field(j, "circuit", "$"));
  inst.circuit_hash_hex = field(j, "circuit_hash", "$").get<std::string>();
  if (j.contains("source")) inst.source = j["source"].get<std::string>();

  validate_instance(inst);
  return inst;
}

std::string serialize_witness(const Witness& w, bool include_x) {
  json j;
  j["format"] = "arm-witness/1";
  j["U"] = matrix_rows_json(w.u);
  j["V"] = matrix_rows_json(w.v);
  if (include_x) j["X"] = matrix_rows_json(w.x);
  return j.dump(1) + "\n";
}

Witness deserialize_witness(const std::string& bytes) {
  json j = json::parse(bytes, nullptr, false);
  if (j.is_discarded()) fail(errc::format, "witness: not valid JSON");
  if (!j.is_object() || field(j, "format", "$").get<std::string>() != "arm-witness/1") {
    fail(errc::format, "witness: unsupported format");
  }
  const json& u = field(j, "U", "$");
  const json& v = field(j, "V", "$");
  if (!u.is_array() || u.empty()) fail(errc::format, "witness: U must be a nonempty row array");
  if (!v.is_array() || v.size() != 3) fail(errc::format, "witness: V must have exactly 3 rows");
  const json& vrow = v[0];
  if (!vrow.is_array() || vrow.empty()) fail(errc::format, "witness: V rows must be nonempty");

  Witness w;
  w.u = matrix_from_rows(u, static_cast<uint32_t>(u.size()), 3, "U");
  w.v = matrix_from_rows(v, 3, static_cast<uint32_t>(vrow.size()), "V");
  w.x = mat_mul(w.u, w.v);
  if (j.contains("X")) {
    const RatMatrix claimed = matrix_from_rows(j["X"], w.u.rows(), w.v.cols(), "X");
    if (claimed != w.x) fail(errc::format, "witness: X does not equal U*V");
  }
  return w;
}

}  // namespace armred
