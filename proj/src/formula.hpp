#pragma once

#include "poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace armred {

// Atomic predicate: polynomial compared against zero.
enum class Rel { eq, neq, ge, gt };

std::string rel_str(Rel rel);

struct Atom {
  Poly poly;
  Rel rel = Rel::eq;

  bool operator==(const Atom&) const = default;
};

// Quantifier-free formula tree. Conjunctions and disjunctions are n-ary with
// at least two children; single-child chains collapse during parsing.
struct Formula {
  enum class Kind { atom, conj, disj, neg };

  Kind kind = Kind::atom;
  Atom atom;                       // kind == atom
  std::vector<Formula> children;   // conj/disj: >= 2, neg: exactly 1

  static Formula make_atom(Poly poly, Rel rel);
  static Formula make_conj(std::vector<Formula> children);
  static Formula make_disj(std::vector<Formula> children);
  static Formula make_neg(Formula child);

  bool operator==(const Formula&) const = default;
};

// Recursive-descent parser for the formula grammar:
//   formula := disj ; disj := conj ("\/" conj)* ; conj := unit ("/\" unit)* ;
//   unit := "!" unit | "(" formula ")" | atom ; atom := poly rel "0" ;
//   rel := "=" | "!=" | ">=" | ">" ;
//   poly := signed sum of terms; term := factors joined by "*", each factor a
//   rational coefficient or var("^" natural)?.
// Errors carry line:column positions.
Formula parse_formula(std::string_view text);

// Rendering that re-parses to an identical tree.
std::string formula_str(const Formula& f);

// Equivalent negation-free formula: De Morgan on connectives, relation flips
// on atoms (!(p=0) -> p!=0, !(p>=0) -> -p>0, ...).
Formula push_negations(const Formula& f);

bool has_negation(const Formula& f);

// Exact predicate evaluation at a rational point.
bool eval_formula(const Formula& f, const std::map<std::string, Rat>& assignment);

// Sorted, deduplicated variable names.
std::vector<std::string> formula_vars(const Formula& f);

}  // namespace armred
