#pragma once

#include "circuit.hpp"
#include "matrix.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace armred {

struct AffineTerm {
  uint32_t row = 0;
  uint32_t col = 0;
  Rat coeff;

  bool operator==(const AffineTerm&) const = default;
};

// One affine equality sum(coeff * X[row,col]) = rhs. Terms are deduplicated,
// zero-free, and sorted by (row, col).
struct AffineConstraint {
  std::vector<AffineTerm> terms;
  Rat rhs;
  std::string tag;  // provenance: "gauge", "mul:g4:pin11", "copy:...", ...

  bool operator==(const AffineConstraint&) const = default;
};

struct CarrierInfo {
  uint32_t row = 0;
  uint32_t col = 0;
  std::string role;

  bool operator==(const CarrierInfo&) const = default;
};

// Layout of one multiplication gadget: fresh rows r1,r2 and columns c1,c2
// with (r1,c1) pinned to 1 and the factor/product copies at (r1,c2), (r2,c1),
// (r2,c2) tied to the named carriers.
struct MulGadgetInfo {
  uint32_t gate = 0;
  std::array<uint32_t, 2> rows{};
  std::array<uint32_t, 2> cols{};
  std::string x_occ, y_occ, z_occ;

  bool operator==(const MulGadgetInfo&) const = default;
};

struct ArmInstance {
  uint32_t m = 3;
  uint32_t n = 3;
  uint32_t k = 3;
  std::array<uint32_t, 3> gauge_rows{0, 1, 2};
  std::array<uint32_t, 3> gauge_cols{0, 1, 2};
  RatMatrix gauge_block = RatMatrix::identity(3);
  std::vector<AffineConstraint> constraints;
  std::map<std::string, CarrierInfo> carriers;  // occurrence id -> position
  std::vector<std::string> output_carriers;
  std::vector<MulGadgetInfo> mul_gadgets;
  Circuit circuit;
  std::string circuit_hash_hex;
  std::string source;  // normalized formula text; may be empty

  bool operator==(const ArmInstance&) const = default;
};

// Appends a constraint after range-checking indices, merging duplicate
// positions, and dropping zero coefficients.
void add_constraint(ArmInstance& inst, std::vector<AffineTerm> terms, Rat rhs, std::string tag);

struct InstanceStats {
  uint32_t m = 0;
  uint32_t n = 0;
  uint32_t q = 0;
  uint64_t total_bits = 0;  // sum of numerator/denominator bit lengths over all constraint data
};

InstanceStats stats(const ArmInstance& inst);

// Invariants: three distinct gauge rows/cols in range, invertible gauge
// block, the nine gauge pin constraints present, all indices in range,
// injective carrier positions, valid embedded circuit with matching hash.
// Throws errc::format on violation.
void validate_instance(const ArmInstance& inst);

// Canonical JSON ("arm-instance/1"): lossless, byte-deterministic (sorted
// keys, canonical rational strings).
std::string serialize_instance(const ArmInstance& inst);
ArmInstance deserialize_instance(const std::string& bytes);

// Witness files ("arm-witness/1") hold the factor pair; X is recomputed on
// load and checked against the file when present.
struct Witness {
  RatMatrix u;  // m x 3
  RatMatrix v;  // 3 x n
  RatMatrix x;  // u * v

  bool operator==(const Witness&) const = default;
};

std::string serialize_witness(const Witness& w, bool include_x = false);
Witness deserialize_witness(const std::string& bytes);

}  // namespace armred
