#include "armred.h"

#include "compiler.hpp"
#include "emit_etr.hpp"
#include "errors.hpp"
#include "selftest.hpp"
#include "verifier.hpp"
#include "witness.hpp"

#include <cstring>

struct armred_instance {
  armred::ArmInstance inst;
};

struct armred_witness {
  armred::Witness w;
};

namespace {

thread_local std::string g_last_error;

armred_status status_of(armred::errc code) {
  switch (code) {
    case armred::errc::parse: return ARMRED_ERR_PARSE;
    case armred::errc::format: return ARMRED_ERR_FORMAT;
    case armred::errc::witness: return ARMRED_ERR_WITNESS;
    case armred::errc::invalid: return ARMRED_ERR_INVALID;
    case armred::errc::too_large: return ARMRED_ERR_TOO_LARGE;
    case armred::errc::internal: return ARMRED_ERR_INTERNAL;
  }
  return ARMRED_ERR_INTERNAL;
}

template <typename Fn>
armred_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ARMRED_OK;
  } catch (const armred::error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ARMRED_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

armred_status require(bool ok, const char* what) {
  if (ok) return ARMRED_OK;
  g_last_error = what;
  return ARMRED_ERR_INVALID;
}

}  // namespace

extern "C" {

const char* armred_last_error(void) { return g_last_error.c_str(); }

void armred_string_free(char* s) { std::free(s); }
void armred_instance_free(armred_instance* inst) { delete inst; }
void armred_witness_free(armred_witness* w) { delete w; }

armred_status armred_instance_compile(const char* formula_text, armred_instance** out) {
  if (armred_status st = require(formula_text && out, "null argument")) return st;
  return guarded([&] { *out = new armred_instance{armred::compile_formula(formula_text)}; });
}

armred_status armred_instance_from_json(const char* json_text, armred_instance** out) {
  if (armred_status st = require(json_text && out, "null argument")) return st;
  return guarded([&] { *out = new armred_instance{armred::deserialize_instance(json_text)}; });
}

armred_status armred_instance_to_json(const armred_instance* inst, char** out) {
  if (armred_status st = require(inst && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(armred::serialize_instance(inst->inst)); });
}

armred_status armred_instance_stats(const armred_instance* inst, char** json_out) {
  if (armred_status st = require(inst && json_out, "null argument")) return st;
  return guarded([&] {
    const armred::InstanceStats s = armred::stats(inst->inst);
    std::string json = "{\"m\": " + std::to_string(s.m) + ", \"n\": " + std::to_string(s.n) +
                       ", \"q\": " + std::to_string(s.q) +
                       ", \"total_bits\": " + std::to_string(s.total_bits) + "}\n";
    *json_out = dup_string(json);
  });
}

armred_status armred_instance_circuit_dump(const armred_instance* inst, char** out) {
  if (armred_status st = require(inst && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(armred::circuit_dump(inst->inst.circuit)); });
}

armred_status armred_instance_emit_etr(const armred_instance* inst, int mode, char** out) {
  if (armred_status st = require(inst && out, "null argument")) return st;
  if (armred_status st = require(mode == 0 || mode == 1, "mode must be 0 or 1")) return st;
  return guarded([&] {
    *out = dup_string(mode == 0 ? armred::emit_factored(inst->inst)
                                : armred::emit_minors(inst->inst));
  });
}

armred_status armred_witness_build(const armred_instance* inst, const char* assignment,
                                   armred_witness** out) {
  if (armred_status st = require(inst && assignment && out, "null argument")) return st;
  return guarded([&] {
    const auto source = armred::parse_assignment(assignment);
    const armred::FullAssignment full = armred::extend_assignment(inst->inst, source);
    *out = new armred_witness{armred::build_witness(inst->inst, full)};
  });
}

armred_status armred_witness_from_json(const char* json_text, armred_witness** out) {
  if (armred_status st = require(json_text && out, "null argument")) return st;
  return guarded([&] { *out = new armred_witness{armred::deserialize_witness(json_text)}; });
}

armred_status armred_witness_to_json(const armred_witness* w, char** out) {
  if (armred_status st = require(w && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(armred::serialize_witness(w->w)); });
}

armred_status armred_verify(const armred_instance* inst, const armred_witness* w, int* accept,
                            char** verdict_json_out) {
  if (armred_status st = require(inst && w && accept, "null argument")) return st;
  return guarded([&] {
    const armred::Verdict v = armred::verify(inst->inst, w->w.x, inst->inst.circuit);
    *accept = v.accept ? 1 : 0;
    if (verdict_json_out) *verdict_json_out = dup_string(armred::verdict_json(v));
  });
}

armred_status armred_decode(const armred_instance* inst, const armred_witness* w, char** json_out) {
  if (armred_status st = require(inst && w && json_out, "null argument")) return st;
  return guarded([&] {
    const auto decoded = armred::decode(inst->inst, w->w.x);
    *json_out = dup_string(armred::decoded_json(decoded, inst->inst));
  });
}

int armred_selftest(char** report_out) {
  std::string report;
  const int failures = armred::run_selftest(report);
  if (report_out) *report_out = dup_string(report);
  return failures;
}

}  // extern "C"
