#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <armred.h>

#include <memory>
#include <string>

namespace {

struct StringDeleter {
  void operator()(char* s) const { armred_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

}  // namespace

TEST_CASE("compile, serialize, reload, witness, verify through the C API") {
  armred_instance* inst = nullptr;
  REQUIRE(armred_instance_compile("x*y - 6 = 0 /\\ x + y - 5 = 0", &inst) == ARMRED_OK);

  char* json = nullptr;
  REQUIRE(armred_instance_to_json(inst, &json) == ARMRED_OK);
  CString json_guard(json);

  armred_instance* reloaded = nullptr;
  REQUIRE(armred_instance_from_json(json, &reloaded) == ARMRED_OK);

  char* stats = nullptr;
  REQUIRE(armred_instance_stats(reloaded, &stats) == ARMRED_OK);
  CString stats_guard(stats);
  CHECK(std::string(stats).find("\"q\": 30") != std::string::npos);

  char* dump = nullptr;
  REQUIRE(armred_instance_circuit_dump(inst, &dump) == ARMRED_OK);
  CString dump_guard(dump);
  CHECK(std::string(dump).find("g2 = mul(g0, g1)") != std::string::npos);

  armred_witness* w = nullptr;
  REQUIRE(armred_witness_build(reloaded, "x=2,y=3", &w) == ARMRED_OK);

  char* wjson = nullptr;
  REQUIRE(armred_witness_to_json(w, &wjson) == ARMRED_OK);
  CString wjson_guard(wjson);

  armred_witness* w2 = nullptr;
  REQUIRE(armred_witness_from_json(wjson, &w2) == ARMRED_OK);

  int accept = 0;
  char* verdict = nullptr;
  REQUIRE(armred_verify(reloaded, w2, &accept, &verdict) == ARMRED_OK);
  CString verdict_guard(verdict);
  CHECK(accept == 1);
  CHECK(std::string(verdict).find("\"accept\": true") != std::string::npos);

  char* decoded = nullptr;
  REQUIRE(armred_decode(reloaded, w2, &decoded) == ARMRED_OK);
  CString decoded_guard(decoded);
  CHECK(std::string(decoded).find("var:x") != std::string::npos);

  char* etr = nullptr;
  REQUIRE(armred_instance_emit_etr(inst, 0, &etr) == ARMRED_OK);
  CString etr_guard(etr);
  CHECK(std::string(etr).find("U_0_0*V_0_0") != std::string::npos);

  armred_witness_free(w2);
  armred_witness_free(w);
  armred_instance_free(reloaded);
  armred_instance_free(inst);
}

TEST_CASE("status codes and last_error") {
  armred_instance* inst = nullptr;
  CHECK(armred_instance_compile("x >>> 0", &inst) == ARMRED_ERR_PARSE);
  CHECK(std::string(armred_last_error()).find("syntax error") != std::string::npos);

  CHECK(armred_instance_from_json("{}", &inst) == ARMRED_ERR_FORMAT);

  REQUIRE(armred_instance_compile("x >= 0", &inst) == ARMRED_OK);
  armred_witness* w = nullptr;
  CHECK(armred_witness_build(inst, "x=2", &w) == ARMRED_ERR_WITNESS);
  CHECK(std::string(armred_last_error()).find("irrational-witness") != std::string::npos);

  CHECK(armred_witness_build(inst, "x=9, ghost=1", &w) == ARMRED_ERR_INVALID);

  // minors emission on a large instance trips the cap
  armred_instance* big = nullptr;
  REQUIRE(armred_instance_compile("x*y - 6 = 0 /\\ x + y - 5 = 0", &big) == ARMRED_OK);
  char* out = nullptr;
  CHECK(armred_instance_emit_etr(big, 1, &out) == ARMRED_ERR_TOO_LARGE);
  CHECK(armred_instance_emit_etr(big, 7, &out) == ARMRED_ERR_INVALID);

  CHECK(armred_instance_compile(nullptr, &inst) == ARMRED_ERR_INVALID);

  armred_instance_free(big);
  armred_instance_free(inst);
}

TEST_CASE("witnesses from mismatched instances are rejected cleanly") {
  armred_instance* a = nullptr;
  armred_instance* b = nullptr;
  REQUIRE(armred_instance_compile("x - 1 = 0", &a) == ARMRED_OK);
  REQUIRE(armred_instance_compile("x*y - 6 = 0", &b) == ARMRED_OK);

  armred_witness* w = nullptr;
  REQUIRE(armred_witness_build(a, "x=1", &w) == ARMRED_OK);

  int accept = 0;
  CHECK(armred_verify(b, w, &accept, nullptr) == ARMRED_ERR_INVALID);

  armred_witness_free(w);
  armred_instance_free(a);
  armred_instance_free(b);
}
