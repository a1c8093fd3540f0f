#include "poly.hpp"

#include "errors.hpp"

namespace armred {

Poly Poly::constant(Rat c) {
  Poly p;
  p.add_term({}, c);
  return p;
}

Poly Poly::variable(const std::string& name) {
  Poly p;
  p.add_term({{name, 1}}, 1);
  return p;
}

Poly Poly::term(Rat coeff, Monomial monomial) {
  Poly p;
  p.add_term(monomial, coeff);
  return p;
}

void Poly::add_term(const Monomial& monomial, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& other) const {
  Poly out = *this;
  out += other;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
  return *this;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
  return out;
}

Poly Poly::operator*(const Poly& other) const {
  Poly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial mono = ma;
      for (const auto& [var, exp] : mb) mono[var] += exp;
      out.add_term(mono, ca * cb);
    }
  }
  return out;
}

Rat Poly::eval(const std::map<std::string, Rat>& assignment) const {
  Rat total = 0;
  for (const auto& [mono, coeff] : terms_) {
    Rat value = coeff;
    for (const auto& [var, exp] : mono) {
      auto it = assignment.find(var);
      if (it == assignment.end()) fail(errc::invalid, "missing variable '" + var + "'");
      Rat power = 1;
      for (uint32_t e = 0; e < exp; ++e) power *= it->second;
      value *= power;
    }
    total += value;
  }
  return total;
}

void Poly::collect_vars(std::set<std::string>& out) const {
  for (const auto& [mono, coeff] : terms_) {
    for (const auto& [var, exp] : mono) out.insert(var);
  }
}

uint32_t Poly::degree() const {
  uint32_t deg = 0;
  for (const auto& [mono, coeff] : terms_) {
    uint32_t d = 0;
    for (const auto& [var, exp] : mono) d += exp;
    deg = std::max(deg, d);
  }
  return deg;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";

  const auto render = [](const Monomial& mono, const Rat& coeff) {
    std::string body;
    Rat mag = coeff < 0 ? Rat(-coeff) : coeff;
    if (mono.empty() || mag != 1) body = rat_str(mag);
    for (const auto& [var, exp] : mono) {
      if (!body.empty()) body += "*";
      body += var;
      if (exp != 1) body += "^" + std::to_string(exp);
    }
    return body;
  };

  std::string out;
  const auto append = [&](const Monomial& mono, const Rat& coeff) {
    if (out.empty()) {
      out = (coeff < 0 ? "-" : "") + render(mono, coeff);
    } else {
      out += (coeff < 0 ? " - " : " + ") + render(mono, coeff);
    }
  };
  const Rat* constant_term = nullptr;
  for (const auto& [mono, coeff] : terms_) {
    if (mono.empty()) {
      constant_term = &coeff;
      continue;
    }
    append(mono, coeff);
  }
  if (constant_term) append({}, *constant_term);
  return out;
}

}  // namespace armred
