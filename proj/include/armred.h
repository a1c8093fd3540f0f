/*
 * armred - compile real-arithmetic formulas into affine rank-minimization
 * instances, synthesize exact rank-3 witnesses, and verify them bit-exactly.
 *
 * All functions return armred_status; every out-parameter is written only on
 * ARMRED_OK. Strings returned through char** are heap-allocated and must be
 * released with armred_string_free. Handles are opaque and freed with their
 * matching *_free function. armred_last_error() describes the most recent
 * failure on the calling thread.
 */

#ifndef ARMRED_H
#define ARMRED_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum armred_status {
  ARMRED_OK = 0,
  ARMRED_ERR_PARSE = 1,     /* formula text rejected by the grammar */
  ARMRED_ERR_FORMAT = 2,    /* malformed instance/witness JSON */
  ARMRED_ERR_WITNESS = 3,   /* irrational-witness / unsatisfied / division-by-zero / gate-violation */
  ARMRED_ERR_INVALID = 4,   /* bad arguments or mismatched objects */
  ARMRED_ERR_TOO_LARGE = 5, /* minor enumeration above the cap */
  ARMRED_ERR_INTERNAL = 6   /* broken invariant; indicates a bug */
} armred_status;

typedef struct armred_instance armred_instance;
typedef struct armred_witness armred_witness;

/* Most recent error message on this thread; empty string if none. */
const char* armred_last_error(void);

void armred_string_free(char* s);
void armred_instance_free(armred_instance* inst);
void armred_witness_free(armred_witness* w);

/* parse -> normalize -> lower -> compile */
armred_status armred_instance_compile(const char* formula_text, armred_instance** out);

armred_status armred_instance_from_json(const char* json_text, armred_instance** out);
armred_status armred_instance_to_json(const armred_instance* inst, char** out);

/* {"m":..,"n":..,"q":..,"total_bits":..} */
armred_status armred_instance_stats(const armred_instance* inst, char** json_out);

/* Text dump of the embedded circuit, one gate per line. */
armred_status armred_instance_circuit_dump(const armred_instance* inst, char** out);

/* mode 0: factored (U,V) encoding; mode 1: all-minors encoding. */
armred_status armred_instance_emit_etr(const armred_instance* inst, int mode, char** out);

/* assignment: "x=2,y=3/4"; extends to auxiliaries and builds the witness. */
armred_status armred_witness_build(const armred_instance* inst, const char* assignment,
                                   armred_witness** out);

armred_status armred_witness_from_json(const char* json_text, armred_witness** out);
armred_status armred_witness_to_json(const armred_witness* w, char** out);

/* Full verification. *accept is 1/0; *verdict_json_out carries the verdict
 * ({"accept":...,"violations":[...],"rank":...,"decoded":{...}}). A reject is
 * still ARMRED_OK; errors are reserved for malformed inputs. */
armred_status armred_verify(const armred_instance* inst, const armred_witness* w, int* accept,
                            char** verdict_json_out);

/* Decoded carrier values with roles, as JSON. */
armred_status armred_decode(const armred_instance* inst, const armred_witness* w, char** json_out);

/* Built-in desk-scale acceptance suite; returns the number of failed checks
 * and appends one PASS/FAIL line per check to *report_out. */
int armred_selftest(char** report_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ARMRED_H */
