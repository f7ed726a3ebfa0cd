// Emits TSV plot data: certified Hausdorff distances between consecutive
// finite-level solenoid approximants, one line per level.

#include <iostream>

#include "solena/torus.hpp"

using namespace solena;

int main() {
  WindingCircle base({Int(1)});
  const std::vector<Int> primes{Int(2), Int(3), Int(5), Int(2)};
  const Rational mesh = make_rational(1, 1024);

  std::cout << "level\testimate\terror_bound\tbound\n";
  for (std::size_t m = 0; m + 1 <= primes.size(); ++m) {
    std::vector<Int> lower(primes.begin(), primes.begin() + m);
    std::vector<Int> upper(primes.begin(), primes.begin() + m + 1);
    auto lm = project_and_pad(solenoid_approximant(base, lower), 1 + m + 1);
    auto lm1 = solenoid_approximant(base, upper);
    auto e = hausdorff_distance(lm, lm1, mesh);
    Rational bound = make_rational(1, pow_int(2, static_cast<unsigned long>(m)));
    std::cout << m << "\t" << e.estimate.get_str() << "\t"
              << e.error_bound.get_str() << "\t" << bound.get_str() << "\n";
  }
  return 0;
}
