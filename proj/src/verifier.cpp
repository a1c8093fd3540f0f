#include "verifier.hpp"

#include "errors.hpp"

#include <json.hpp>

namespace armred {

using nlohmann::json;

namespace {

void check_shape(const ArmInstance& inst, const RatMatrix& x) {
  if (x.rows() != inst.m || x.cols() != inst.n) {
    fail(errc::invalid, "matrix shape " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                            " does not match instance " + std::to_string(inst.m) + "x" +
                            std::to_string(inst.n));
  }
}

}  // namespace

std::vector<std::string> check_affine(const ArmInstance& inst, const RatMatrix& x) {
  check_shape(inst, x);
  std::vector<std::string> violated;
  for (const AffineConstraint& c : inst.constraints) {
    Rat lhs = 0;
    for (const AffineTerm& t : c.terms) lhs += t.coeff * x.at(t.row, t.col);
    if (lhs != c.rhs) violated.push_back(c.tag);
  }
  return violated;
}

RankReport check_rank(const ArmInstance& inst, const RatMatrix& x) {
  check_shape(inst, x);
  RankReport r;
  r.rank = exact_rank(x);
  r.ok = r.rank <= inst.k;
  return r;
}

std::map<std::string, Rat> decode(const ArmInstance& inst, const RatMatrix& x) {
  check_shape(inst, x);
  std::map<std::string, Rat> out;
  for (const auto& [occ, info] : inst.carriers) out[occ] = x.at(info.row, info.col);
  return out;
}

Verdict verify(const ArmInstance& inst, const RatMatrix& x, const Circuit& circuit) {
  if (circuit_hash(circuit) != inst.circuit_hash_hex) {
    fail(errc::invalid, "instance/circuit pairing error: hash mismatch");
  }
  check_shape(inst, x);

  Verdict v;
  v.violations = check_affine(inst, x);
  const RankReport rank = check_rank(inst, x);
  v.rank = rank.rank;
  if (!rank.ok) {
    v.violations.push_back("rank: " + std::to_string(rank.rank) + " > " + std::to_string(inst.k));
  }
  v.decoded = decode(inst, x);

  // Independent gate re-check on the decoded primary carriers.
  std::vector<const Rat*> gate_value(circuit.gates.size(), nullptr);
  for (uint32_t id = 0; id < circuit.gates.size(); ++id) {
    const Gate& g = circuit.gates[id];
    const std::string occ = g.kind == Gate::Kind::input ? "var:" + g.var : "gate:" + std::to_string(id);
    auto it = v.decoded.find(occ);
    if (it == v.decoded.end()) {
      v.violations.push_back("carrier-missing:" + occ);
      continue;
    }
    gate_value[id] = &it->second;
  }
  const auto defined = [&](uint32_t id) { return gate_value[id] != nullptr; };
  for (uint32_t id = 0; id < circuit.gates.size(); ++id) {
    const Gate& g = circuit.gates[id];
    if (!defined(id)) continue;
    const Rat& z = *gate_value[id];
    bool ok = true;
    switch (g.kind) {
      case Gate::Kind::input: break;  // the carrier is the value
      case Gate::Kind::constant: ok = z == g.value; break;
      case Gate::Kind::add:
        ok = defined(g.lhs) && defined(g.rhs) && z == *gate_value[g.lhs] + *gate_value[g.rhs];
        break;
      case Gate::Kind::mul:
        ok = defined(g.lhs) && defined(g.rhs) && z == *gate_value[g.lhs] * *gate_value[g.rhs];
        break;
      case Gate::Kind::neg: ok = defined(g.lhs) && z == -*gate_value[g.lhs]; break;
    }
    if (!ok) v.violations.push_back("gate:g" + std::to_string(id));
  }
  for (uint32_t id : circuit.outputs) {
    if (defined(id) && *gate_value[id] != 0) v.violations.push_back("output:g" + std::to_string(id));
  }

  v.accept = v.violations.empty();
  return v;
}

namespace {

json decoded_to_json(const std::map<std::string, Rat>& decoded, const ArmInstance& inst) {
  json out = json::object();
  for (const auto& [occ, value] : decoded) {
    json entry;
    entry["value"] = rat_str(value);
    if (auto it = inst.carriers.find(occ); it != inst.carriers.end()) entry["role"] = it->second.role;
    out[occ] = std::move(entry);
  }
  return out;
}

}  // namespace

std::string verdict_json(const Verdict& v) {
  json j;
  j["accept"] = v.accept;
  j["violations"] = v.violations;
  j["rank"] = v.rank;
  json decoded = json::object();
  for (const auto& [occ, value] : v.decoded) decoded[occ] = rat_str(value);
  j["decoded"] = std::move(decoded);
  return j.dump(1) + "\n";
}

std::string decoded_json(const std::map<std::string, Rat>& decoded, const ArmInstance& inst) {
  return decoded_to_json(decoded, inst).dump(1) + "\n";
}

}  // namespace armred
