#pragma once

#include "rat.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>

namespace armred {

// Exponent vector: variable name -> positive power. The empty monomial is the
// constant term.
using Monomial = std::map<std::string, uint32_t>;

// Sparse polynomial with exact rational coefficients. Zero coefficients and
// zero exponents are never stored.
class Poly {
public:
  Poly() = default;

  static Poly constant(Rat c);
  static Poly variable(const std::string& name);
  static Poly term(Rat coeff, Monomial monomial);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator-() const;

  Poly& operator+=(const Poly& other);

  // Exact evaluation; throws errc::invalid naming the first missing variable.
  Rat eval(const std::map<std::string, Rat>& assignment) const;

  void collect_vars(std::set<std::string>& out) const;

  uint32_t degree() const;

  // Grammar-conformant rendering, e.g. "3/2*x^2*y - x + 1". Non-constant
  // monomials print in map order, the constant term last; the zero
  // polynomial prints as "0".
  std::string str() const;

  bool operator==(const Poly&) const = default;

private:
  void add_term(const Monomial& monomial, const Rat& coeff);

  std::map<Monomial, Rat> terms_;
};

}  // namespace armred
