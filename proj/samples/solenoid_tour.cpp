// A short tour: classify some solenoids, dualize them, and check the
// characterization of the one with every prime infinitely often.

#include <iostream>

#include "solena/json_io.hpp"

using namespace solena;

int main() {
  PrimeSeqSpec alternating;
  alternating.cycle = std::vector<Int>{Int(2), Int(3)};
  PrimeSeqSpec swapped;
  swapped.prefix = {Int(3)};
  swapped.cycle = std::vector<Int>{Int(2), Int(3)};

  auto a = steinitz(alternating);
  auto b = steinitz(swapped);
  std::cout << "steinitz(2,3,2,3,...)        = " << to_json(a).dump() << "\n";
  std::cout << "steinitz(3,2,3,2,...)        = " << to_json(b).dump() << "\n";
  std::cout << "same solenoid?                 " << (equivalent(a, b) ? "yes" : "no")
            << "\n\n";

  for (const auto& s :
       {Supernatural::universal(),
        Supernatural::from_exponents(false, {{Int(2), std::nullopt}})}) {
    GroupExpr sol = GroupExpr::solenoid(s);
    std::cout << "expr        " << to_json(sol).dump() << "\n";
    std::cout << "dual        " << to_json(dual(sol)).dump() << "\n";
    std::cout << "predicates  " << to_json(predicates(sol)).dump() << "\n";
    std::cout << "classified  "
              << to_json(characterize_universal_solenoid(sol)).dump() << "\n\n";
  }

  std::cout << "dual of Q   " << to_json(dual(GroupExpr::q())).dump() << "\n";
  return 0;
}
