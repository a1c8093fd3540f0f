#pragma once

#include <string>
#include <vector>

namespace armred {

// Desk-scale regression corpus: formulas paired with rational satisfying
// assignments, covering linear systems, products, perfect-square
// inequalities, strict positivity, disjunctions, and disequalities.
struct CorpusEntry {
  std::string name;
  std::string formula;
  std::string assignment;
};

const std::vector<CorpusEntry>& corpus();

}  // namespace armred
