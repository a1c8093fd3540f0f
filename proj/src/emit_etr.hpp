#pragma once

#include "arm_instance.hpp"
#include "poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace armred {

// Factored encoding: variables U_<i>_<t> and V_<t>_<j> (k*(m+n) of them),
// one degree-2 equality per affine constraint after substituting
// X[i][j] = sum_t U_i_t * V_t_j.
std::vector<Poly> factored_system(const ArmInstance& inst);

// Minor encoding: variables X_<i>_<j>; the affine equalities with
// denominators cleared to integers, then one degree-(k+1) equality per
// (k+1)x(k+1) minor, expanded by the signed-permutation sum. Throws
// errc::too_large (reporting the exact minor count) above the cap.
std::vector<Poly> minors_system(const ArmInstance& inst, uint64_t minor_cap = 1000000);

// Number of (k+1)x(k+1) minors, C(m,k+1)*C(n,k+1), exactly.
Int minor_count(const ArmInstance& inst);

// Text renderings in the formula grammar, one conjunct per line joined by
// "/\"; output re-parses under parse_formula.
std::string emit_factored(const ArmInstance& inst);
std::string emit_minors(const ArmInstance& inst, uint64_t minor_cap = 1000000);

}  // namespace armred
