#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace armred {

// Error categories; these map one-to-one onto the status codes of the C API.
enum class errc {
  parse,      // formula text rejected by the grammar
  format,     // malformed instance/witness JSON or numeric literal
  witness,    // irrational-witness, unsatisfied, division-by-zero, gate-violation
  invalid,    // bad arguments: dimension mismatch, unknown carrier, pairing error
  too_large,  // minor enumeration above the configured cap
  internal,   // broken invariant; indicates a bug, not user error
};

class error : public std::runtime_error {
public:
  error(errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace armred
