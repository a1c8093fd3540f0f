#include "corpus.hpp"

namespace armred {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"prod_sum", "x*y - 6 = 0 /\\ x + y - 5 = 0", "x=2,y=3"},
      {"linear_pin", "x - 5 = 0", "x=5"},
      {"linear_system", "x + y - 7 = 0 /\\ x - y - 1 = 0", "x=4,y=3"},
      {"square_nine", "x^2 - 9 = 0", "x=3"},
      {"double_root", "x^2 - 2*x + 1 = 0", "x=1"},
      {"ge_slack", "x >= 0", "x=9/4"},
      {"gt_inverse", "x > 0", "x=4"},
      {"neq_inverse", "x != 0", "x=7"},
      {"disjunction", "x - 1 = 0 \\/ x - 2 = 0", "x=2"},
      {"cube", "x^3 - 8 = 0", "x=2"},
      {"lin_coeffs", "2*x + 3*y - 12 = 0 /\\ x - y - 1 = 0", "x=3,y=2"},
      {"triple_product", "x*y*z - 24 = 0 /\\ x - 2 = 0 /\\ y - 3 = 0", "x=2,y=3,z=4"},
      {"circle_point", "x^2 + y^2 - 25 = 0 /\\ x - 3 = 0", "x=3,y=4"},
      {"parabola", "x^2 - y = 0 /\\ y - 4 = 0", "x=2,y=4"},
      {"or_then_pin", "(x - 1 = 0 \\/ x - 2 = 0) /\\ x - 2 = 0", "x=2"},
      {"ge_difference", "x - y >= 0 /\\ y - 1 = 0", "x=5,y=1"},
      {"gt_quadratic", "x^2 - 5*x + 4 = 0 /\\ x > 0", "x=4"},
      {"neq_shifted", "x - 1 != 0 /\\ x - 3 = 0", "x=3"},
      {"inverse_pair", "x*y - 1 = 0 /\\ x - 4 = 0", "x=4,y=1/4"},
      {"ge_shift", "x + 2 >= 0 /\\ x - 2 = 0", "x=2"},
      {"or_free_var", "x - 1 = 0 \\/ y - 2 = 0", "x=1,y=5"},
      {"or_three_way", "x - 1 = 0 \\/ x - 2 = 0 \\/ x - 3 = 0", "x=3"},
      {"negated_eq", "!(x = 0) /\\ x - 6 = 0", "x=6"},
      {"negated_gt", "!(x > 0) /\\ x + 4 = 0", "x=-4"},
      {"fourth_power", "x^4 - 16 = 0", "x=2"},
      {"rational_coeff", "3/2*x - 3 = 0", "x=2"},
      {"mixed_inequalities", "x >= 0 /\\ y > 0 /\\ x + y - 13/4 = 0", "x=9/4,y=1"},
      {"nested_disjunct_pairs", "(x - 1 = 0 /\\ y - 2 = 0) \\/ (x - 3 = 0 /\\ y - 4 = 0)", "x=3,y=4"},
      {"leading_minus", "-x + 3 = 0", "x=3"},
      {"fanout_heavy", "x^2 - y = 0 /\\ x*y - 8 = 0", "x=2,y=4"},
  };
  return entries;
}

}  // namespace armred
