// Builds a uninorm on a five-element lattice from two closure operators,
// prints the conditions and the table, then checks and classifies it.

#include <iostream>

#include "uninorm/uninorm.hpp"

using namespace uninorm;

int main() {
  // 0 < a < e < 1 and 0 < i < 1
  auto lat = build_lattice({"0", "a", "e", "i", "1"},
                           {{"0", "a"}, {"a", "e"}, {"e", "1"}, {"0", "i"}, {"i", "1"}}, "0", "1");
  const Elem e = lat->find("e");
  const auto id = identity_operator(lat, OperatorKind::closure);
  ConstructionSpec spec(Family::closure, e, join_tconorm(lat, e), id, id);

  const auto hyp = check_hypotheses(spec);
  const auto ch = check_characteristic(spec, hyp);
  for (const auto* r : {&hyp, &ch})
    for (const auto& row : r->rows)
      std::cout << (row.passed ? "pass " : "FAIL ") << row.name << ": " << row.statement << "\n";

  const auto u = construct(spec);
  std::cout << "\n" << render_table(u) << "\n";
  std::cout << "uninorm: " << (validate_uninorm(u).is_uninorm() ? "yes" : "no") << "\n";
  for (const auto& [name, c] : classify(u).entries())
    std::cout << name << ": " << (c->member ? "yes" : "no") << "\n";
}
