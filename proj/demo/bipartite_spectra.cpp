// Builds a matrix on K_{3,4} with a prescribed spectrum and prints the
// realization as JSON, then shows a refused target.

#include <iostream>

#include "hollow/hollow.hpp"

using namespace hollow;

int main() {
  auto target = parse_spectrum_literal("-3,-2,0^3,2,3");
  auto res = realize_complete_bipartite(3, 4, target, /*seed=*/1);
  std::cout << to_json(res).dump(2) << "\n";

  try {
    // six nonzero entries exceed twice the smaller side of K_{2,5}
    realize_complete_bipartite(2, 5, parse_spectrum_literal("-3,-2,-1,0,1,2,3"),
                               1);
  } catch (const InfeasibleTarget& e) {
    std::cout << "refused: " << e.what() << "\n";
  }
  return 0;
}
