// Command-line front end. Talks to the core exclusively through the C API.

#include <armred.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitWitness = 4;

struct StringDeleter {
  void operator()(char* s) const { armred_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct InstanceDeleter {
  void operator()(armred_instance* p) const { armred_instance_free(p); }
};
using Instance = std::unique_ptr<armred_instance, InstanceDeleter>;

struct WitnessDeleter {
  void operator()(armred_witness* p) const { armred_witness_free(p); }
};
using WitnessHandle = std::unique_ptr<armred_witness, WitnessDeleter>;

int exit_code_for(armred_status st) {
  switch (st) {
    case ARMRED_OK: return kExitAccept;
    case ARMRED_ERR_WITNESS: return kExitWitness;
    default: return kExitIo;
  }
}

// Reports the failure and returns the process exit code.
int report_error(armred_status st) {
  std::cerr << "error: " << armred_last_error() << "\n";
  return exit_code_for(st);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return false;
  }
  out << bytes;
  return out.good();
}

int load_instance(const std::string& path, Instance& inst) {
  std::string bytes;
  if (!read_file(path, bytes)) return kExitIo;
  armred_instance* raw = nullptr;
  if (armred_status st = armred_instance_from_json(bytes.c_str(), &raw)) return report_error(st);
  inst.reset(raw);
  return kExitAccept;
}

int load_witness(const std::string& path, WitnessHandle& w) {
  std::string bytes;
  if (!read_file(path, bytes)) return kExitIo;
  armred_witness* raw = nullptr;
  if (armred_status st = armred_witness_from_json(bytes.c_str(), &raw)) return report_error(st);
  w.reset(raw);
  return kExitAccept;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ETR-to-ARM(3) compiler, witness builder, and exact verifier"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("--quiet", quiet, "suppress human-readable progress on stdout");

  std::string formula_path, inst_path, witness_path, out_path, dump_path, assign, mode = "factored";

  CLI::App* cmd_compile = app.add_subcommand("compile", "compile a formula file into an instance");
  cmd_compile->add_option("formula", formula_path, "formula file (.etr)")->required();
  cmd_compile->add_option("-o,--output", out_path, "instance file to write")->required();
  cmd_compile->add_option("--dump-circuit", dump_path, "also write the circuit dump");

  CLI::App* cmd_witness = app.add_subcommand("witness", "build a rank-3 witness from an assignment");
  cmd_witness->add_option("instance", inst_path, "instance file")->required();
  cmd_witness->add_option("--assign", assign, "assignment, e.g. \"x=2,y=3/4\"")->required();
  cmd_witness->add_option("-o,--output", out_path, "witness file to write")->required();

  CLI::App* cmd_verify = app.add_subcommand("verify", "verify a witness against an instance");
  cmd_verify->add_option("instance", inst_path, "instance file")->required();
  cmd_verify->add_option("witness", witness_path, "witness file")->required();

  CLI::App* cmd_decode = app.add_subcommand("decode", "print decoded carrier values");
  cmd_decode->add_option("instance", inst_path, "instance file")->required();
  cmd_decode->add_option("witness", witness_path, "witness file")->required();

  CLI::App* cmd_emit = app.add_subcommand("emit-etr", "emit the membership-direction formula");
  cmd_emit->add_option("instance", inst_path, "instance file")->required();
  cmd_emit->add_option("--mode", mode, "factored|minors")
      ->check(CLI::IsMember({"factored", "minors"}));
  cmd_emit->add_option("-o,--output", out_path, "formula file to write")->required();

  CLI::App* cmd_stats = app.add_subcommand("stats", "print instance statistics");
  cmd_stats->add_option("instance", inst_path, "instance file")->required();

  app.add_subcommand("selftest", "run the built-in acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  if (cmd_compile->parsed()) {
    std::string text;
    if (!read_file(formula_path, text)) return kExitIo;
    armred_instance* raw = nullptr;
    if (armred_status st = armred_instance_compile(text.c_str(), &raw)) return report_error(st);
    Instance inst(raw);
    CString json;
    {
      char* s = nullptr;
      if (armred_status st = armred_instance_to_json(inst.get(), &s)) return report_error(st);
      json.reset(s);
    }
    if (!write_file(out_path, json.get())) return kExitIo;
    if (!dump_path.empty()) {
      char* s = nullptr;
      if (armred_status st = armred_instance_circuit_dump(inst.get(), &s)) return report_error(st);
      CString dump(s);
      if (!write_file(dump_path, dump.get())) return kExitIo;
    }
    if (!quiet) std::cout << "wrote " << out_path << "\n";
    return kExitAccept;
  }

  if (cmd_witness->parsed()) {
    Instance inst;
    if (int rc = load_instance(inst_path, inst)) return rc;
    armred_witness* raw = nullptr;
    if (armred_status st = armred_witness_build(inst.get(), assign.c_str(), &raw)) {
      return report_error(st);
    }
    WitnessHandle w(raw);
    char* s = nullptr;
    if (armred_status st = armred_witness_to_json(w.get(), &s)) return report_error(st);
    CString json(s);
    if (!write_file(out_path, json.get())) return kExitIo;
    if (!quiet) std::cout << "wrote " << out_path << "\n";
    return kExitAccept;
  }

  if (cmd_verify->parsed()) {
    Instance inst;
    if (int rc = load_instance(inst_path, inst)) return rc;
    WitnessHandle w;
    if (int rc = load_witness(witness_path, w)) return rc;
    int accept = 0;
    char* s = nullptr;
    if (armred_status st = armred_verify(inst.get(), w.get(), &accept, &s)) return report_error(st);
    CString verdict(s);
    std::cout << verdict.get();
    return accept ? kExitAccept : kExitReject;
  }

  if (cmd_decode->parsed()) {
    Instance inst;
    if (int rc = load_instance(inst_path, inst)) return rc;
    WitnessHandle w;
    if (int rc = load_witness(witness_path, w)) return rc;
    char* s = nullptr;
    if (armred_status st = armred_decode(inst.get(), w.get(), &s)) return report_error(st);
    CString decoded(s);
    std::cout << decoded.get();
    return kExitAccept;
  }

  if (cmd_emit->parsed()) {
    Instance inst;
    if (int rc = load_instance(inst_path, inst)) return rc;
    char* s = nullptr;
    if (armred_status st = armred_instance_emit_etr(inst.get(), mode == "factored" ? 0 : 1, &s)) {
      return report_error(st);
    }
    CString text(s);
    if (!write_file(out_path, text.get())) return kExitIo;
    if (!quiet) std::cout << "wrote " << out_path << "\n";
    return kExitAccept;
  }

  if (cmd_stats->parsed()) {
    Instance inst;
    if (int rc = load_instance(inst_path, inst)) return rc;
    char* s = nullptr;
    if (armred_status st = armred_instance_stats(inst.get(), &s)) return report_error(st);
    CString stats(s);
    std::cout << stats.get();
    return kExitAccept;
  }

  // selftest
  char* s = nullptr;
  const int failures = armred_selftest(&s);
  CString report(s);
  if (!quiet || failures) std::cout << report.get();
  return failures == 0 ? kExitAccept : kExitReject;
}
