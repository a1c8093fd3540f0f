#pragma once

#include "formula.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace armred {

enum class EqTag { atom, slack, selector, guard };

std::string eq_tag_str(EqTag tag);

struct TaggedEq {
  Poly poly;  // asserted = 0
  EqTag tag;

  bool operator==(const TaggedEq&) const = default;
};

// Conjunction of polynomial equalities equisatisfiable with the source
// formula. Auxiliary variables are namespaced "$slack_i", "$inv_i", "$sel_i"
// so they can never collide with grammar identifiers.
//
// The aux maps are keyed by the preorder index of the originating node in the
// negation-free formula; witness extension re-walks the same tree with the
// same numbering to give auxiliaries their values.
struct EqualitySystem {
  std::vector<std::string> variables;  // source vars (sorted) then auxiliaries in creation order
  std::vector<TaggedEq> equalities;

  struct AtomAux {
    std::string slack;    // "" when the atom introduces no slack
    std::string inverse;  // "" when the atom introduces no inverse
  };
  std::map<uint32_t, AtomAux> atom_aux;
  std::map<uint32_t, std::vector<std::string>> or_selectors;
};

// Requires a negation-free formula (run push_negations first).
//
// Encodings: p>=0 adds p-u^2=0; p>0 adds p-u^2=0 and u*v-1=0; p!=0 adds
// p*v-1=0. A disjunction over M branches adds selectors with sum(s_j)-1=0 and
// s_j*(1-s_j)=0, and every equality produced inside branch j (including the
// selector equalities of nested disjunctions) is multiplied by s_j.
EqualitySystem to_equality_form(const Formula& f);

}  // namespace armred
