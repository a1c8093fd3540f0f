#include "emit_etr.hpp"

#include "errors.hpp"
#include "matrix.hpp"

#include <functional>

namespace armred {

namespace {

std::string u_var(uint32_t i, uint32_t t) { return "U_" + std::to_string(i) + "_" + std::to_string(t); }
std::string v_var(uint32_t t, uint32_t j) { return "V_" + std::to_string(t) + "_" + std::to_string(j); }
std::string x_var(uint32_t i, uint32_t j) { return "X_" + std::to_string(i) + "_" + std::to_string(j); }

Int binomial(uint32_t n, uint32_t k) {
  if (k > n) return 0;
  Int out = 1;
  for (uint32_t i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}

void for_each_combination(uint32_t n, uint32_t k,
                          const std::function<void(const std::vector<uint32_t>&)>& fn) {
  if (k > n) return;
  std::vector<uint32_t> idx(k);
  for (uint32_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    uint32_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (uint32_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string render(const std::vector<Poly>& system) {
  std::string out;
  for (size_t i = 0; i < system.size(); ++i) {
    out += system[i].str() + " = 0";
    if (i + 1 < system.size()) out += " /\\";
    out += "\n";
  }
  return out;
}

}  // namespace

std::vector<Poly> factored_system(const ArmInstance& inst) {
  std::vector<Poly> system;
  system.reserve(inst.constraints.size());
  for (const AffineConstraint& c : inst.constraints) {
    Poly eq;
    for (const AffineTerm& t : c.terms) {
      for (uint32_t r = 0; r < inst.k; ++r) {
        eq += Poly::term(t.coeff, {{u_var(t.row, r), 1}, {v_var(r, t.col), 1}});
      }
    }
    eq += Poly::constant(-c.rhs);
    system.push_back(std::move(eq));
  }
  return system;
}

Int minor_count(const ArmInstance& inst) {
  return binomial(inst.m, inst.k + 1) * binomial(inst.n, inst.k + 1);
}

std::vector<Poly> minors_system(const ArmInstance& inst, uint64_t minor_cap) {
  const Int count = minor_count(inst);
  if (count > minor_cap) {
    fail(errc::too_large, "too-large: " + count.str() + " minor equalities exceed the cap of " +
                              std::to_string(minor_cap));
  }

  std::vector<Poly> system;

  // Affine equalities over X variables, denominators cleared to integers.
  for (const AffineConstraint& c : inst.constraints) {
    Int clear = rat_den(c.rhs);
    for (const AffineTerm& t : c.terms) clear = lcm(clear, rat_den(t.coeff));
    Poly eq;
    for (const AffineTerm& t : c.terms) {
      eq += Poly::term(t.coeff * clear, {{x_var(t.row, t.col), 1}});
    }
    eq += Poly::constant(-c.rhs * clear);
    system.push_back(std::move(eq));
  }

  // One vanishing determinant per (k+1)x(k+1) submatrix, Leibniz-expanded.
  const uint32_t size = inst.k + 1;
  for_each_combination(inst.m, size, [&](const std::vector<uint32_t>& rows) {
    for_each_combination(inst.n, size, [&](const std::vector<uint32_t>& cols) {
      Poly det;
      for_each_permutation(size, [&](const std::vector<uint32_t>& perm, int sign) {
        Monomial mono;
        for (uint32_t t = 0; t < size; ++t) mono[x_var(rows[t], cols[perm[t]])] += 1;
        det += Poly::term(sign, std::move(mono));
      });
      system.push_back(std::move(det));
    });
  });
  return system;
}

std::string emit_factored(const ArmInstance& inst) { return render(factored_system(inst)); }

std::string emit_minors(const ArmInstance& inst, uint64_t minor_cap) {
  return render(minors_system(inst, minor_cap));
}

}  // namespace armred
